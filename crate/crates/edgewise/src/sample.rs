//! Seeded random poset generation.
//!
//! All randomness flows from one explicit 64-bit seed through a
//! counter-based generator, so independent trials are replayable: trial i
//! always draws from stream i of the same seed, regardless of evaluation
//! order.

use crate::poset::Poset;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based generator: output i of stream s under seed k is a pure
/// function of (k, s, i).
#[derive(Debug, Clone)]
pub struct CounterRng {
    key: u64,
    counter: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> CounterRng {
        CounterRng::stream(seed, 0)
    }

    pub fn stream(seed: u64, stream: u64) -> CounterRng {
        CounterRng {
            key: mix(seed ^ mix(stream.wrapping_mul(GOLDEN))),
            counter: 0,
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let out = mix(self.key.wrapping_add(self.counter.wrapping_mul(GOLDEN)));
        self.counter += 1;
        out
    }

    /// Uniform-enough value in 0..n (n > 0).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// True with probability num/den.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Sampler parameters, recorded in run manifests for replay.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SamplerParams {
    pub max_elements: usize,
    pub cover_probability_num: u64,
    pub cover_probability_den: u64,
}

impl SamplerParams {
    pub fn desk(max_elements: usize) -> SamplerParams {
        SamplerParams {
            max_elements,
            cover_probability_num: 2,
            cover_probability_den: 3,
        }
    }
}

/// A random poset on 1..=max_elements elements: a random relation on an
/// index order, transitively closed, with the covers derived from the
/// closure. Labels are x1, x2, ...
pub fn random_poset(rng: &mut CounterRng, params: &SamplerParams) -> Poset {
    let n = 1 + rng.below(params.max_elements as u64) as usize;
    let mut up: Vec<u64> = (0..n).map(|i| 1 << i).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.chance(params.cover_probability_num, params.cover_probability_den) {
                up[i] |= 1 << j;
            }
        }
    }
    // Transitive closure over the index order.
    for k in 0..n {
        for i in 0..k {
            if up[i] & (1 << k) != 0 {
                up[i] |= up[k];
            }
        }
    }
    let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    Poset::from_order(labels, &up).expect("closure of a relation on an index order")
}

/// A random graded, connected poset: pick a rank vector, include each
/// candidate cover between consecutive levels independently, and retry
/// until the result is graded and connected. Always has at least two
/// levels; level sizes lean toward 2 and 3 so that structured samples
/// (several minimal and maximal elements) are common.
pub fn random_graded_poset(rng: &mut CounterRng, params: &SamplerParams) -> Poset {
    let max = params.max_elements.max(4);
    loop {
        let height = 2 + rng.below(3.min(max as u64 / 2)) as usize;
        let mut sizes = vec![1usize; height];
        let mut total = height;
        for s in sizes.iter_mut() {
            if total < max {
                *s += 1;
                total += 1;
            }
        }
        while total < max && rng.chance(1, 2) {
            sizes[rng.below(height as u64) as usize] += 1;
            total += 1;
        }
        if let Some(p) = try_levels(rng, &sizes, params) {
            return p;
        }
    }
}

/// A random graded rank-one poset (two levels).
pub fn random_rank1_poset(rng: &mut CounterRng, params: &SamplerParams) -> Poset {
    let max = params.max_elements.max(2);
    loop {
        let bottoms = 1 + rng.below((max - 1) as u64) as usize;
        let tops = 1 + rng.below((max - bottoms).max(1) as u64) as usize;
        if let Some(p) = try_levels(rng, &[bottoms, tops], params) {
            return p;
        }
    }
}

fn try_levels(rng: &mut CounterRng, sizes: &[usize], params: &SamplerParams) -> Option<Poset> {
    let total: usize = sizes.iter().sum();
    let mut labels = Vec::with_capacity(total);
    let mut level_of = Vec::with_capacity(total);
    for (level, &size) in sizes.iter().enumerate() {
        for i in 0..size {
            labels.push(format!("x{}", labels.len() + 1));
            let _ = i;
            level_of.push(level);
        }
    }
    let mut covers = Vec::new();
    for a in 0..total {
        for b in 0..total {
            if level_of[b] == level_of[a] + 1
                && rng.chance(params.cover_probability_num, params.cover_probability_den)
            {
                covers.push((a, b));
            }
        }
    }
    let p = Poset::from_cover_indices(labels, covers).ok()?;
    let (graded, rank) = p.grading();
    if graded && rank == Some(sizes.len() - 1) && p.is_hasse_connected() {
        Some(p)
    } else {
        None
    }
}

/// Whether the poset has no three-element closed interval.
pub fn has_no_three_element_interval(p: &Poset) -> bool {
    for a in 0..p.len() {
        for b in 0..p.len() {
            if p.lt(a, b) && (p.up_mask(a) & p.down_mask(b)).count_ones() == 3 {
                return false;
            }
        }
    }
    true
}
