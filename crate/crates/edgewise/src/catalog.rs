//! Deterministic generators for the standard poset and lattice families.
//!
//! Every generator produces canonical labels so that generated posets,
//! reports, and witnesses are reproducible byte for byte.

use std::collections::BTreeSet;
use std::fmt;

use crate::poset::{Poset, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogError {
    UnknownFamily(String),
    BadParams(String),
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::UnknownFamily(name) => write!(f, "unknown family {name:?}"),
            CatalogError::BadParams(msg) => write!(f, "bad parameters: {msg}"),
        }
    }
}

impl std::error::Error for CatalogError {}

/// Dispatch by family name, as exposed by the command line `gen` command.
pub fn generate(name: &str, params: &[u64]) -> Result<Poset, CatalogError> {
    let arity = |want: usize| -> Result<(), CatalogError> {
        if params.len() == want {
            Ok(())
        } else {
            Err(CatalogError::BadParams(format!(
                "family {name:?} takes {want} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "boolean" => {
            arity(1)?;
            let n = params[0] as usize;
            if n == 0 || n > 6 {
                return Err(CatalogError::BadParams("boolean needs 1 <= n <= 6".into()));
            }
            Ok(boolean(n))
        }
        "chain" => {
            arity(1)?;
            let n = params[0] as usize;
            if n == 0 || n > MAX_ELEMENTS {
                return Err(CatalogError::BadParams("chain needs 1 <= n <= 64".into()));
            }
            Ok(chain(n))
        }
        "antichain" => {
            arity(1)?;
            let k = params[0] as usize;
            if k == 0 || k > MAX_ELEMENTS {
                return Err(CatalogError::BadParams("antichain needs 1 <= k <= 64".into()));
            }
            Ok(antichain(k))
        }
        "stacked" | "stacked-antichains" => {
            arity(2)?;
            let (n, k) = (params[0] as usize, params[1] as usize);
            if n == 0 || k == 0 || n > 26 || n * k > MAX_ELEMENTS {
                return Err(CatalogError::BadParams(
                    "stacked-antichains needs n, k >= 1 with n*k <= 64 and n <= 26".into(),
                ));
            }
            Ok(stacked_antichains(n, k))
        }
        "ngon" => {
            arity(1)?;
            let n = params[0] as usize;
            if !(3..=31).contains(&n) {
                return Err(CatalogError::BadParams("ngon needs 3 <= n <= 31".into()));
            }
            Ok(ngon(n))
        }
        "tetrahedron" => {
            arity(0)?;
            Ok(tetrahedron())
        }
        "octahedron" => {
            arity(0)?;
            Ok(octahedron())
        }
        "cube" => {
            arity(0)?;
            Ok(cube())
        }
        "partition" => {
            arity(1)?;
            let n = params[0] as usize;
            if !(1..=5).contains(&n) {
                return Err(CatalogError::BadParams("partition needs 1 <= n <= 5".into()));
            }
            Ok(partition(n))
        }
        "divisor" => {
            arity(1)?;
            let m = params[0];
            if m == 0 {
                return Err(CatalogError::BadParams("divisor needs m >= 1".into()));
            }
            let count = (1..=m).filter(|d| m % d == 0).count();
            if count > MAX_ELEMENTS {
                return Err(CatalogError::BadParams("too many divisors".into()));
            }
            Ok(divisor(m))
        }
        "fig1" => {
            arity(0)?;
            Ok(fig1())
        }
        "fig2-standin" => {
            arity(0)?;
            Ok(fig2_standin())
        }
        "remark36-q" => {
            arity(0)?;
            Ok(remark36_q())
        }
        "sec5-lattice" => {
            arity(0)?;
            Ok(sec5_lattice())
        }
        other => Err(CatalogError::UnknownFamily(other.to_owned())),
    }
}

fn subset_label(mask: u32) -> String {
    if mask == 0 {
        return "∅".to_owned();
    }
    (0..32)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| char::from_digit(i + 1, 10).unwrap())
        .collect()
}

/// The Boolean lattice B_n of all subsets of {1, ..., n}, ordered by
/// inclusion; elements sorted by (cardinality, numeric code).
pub fn boolean(n: usize) -> Poset {
    assert!((1..=6).contains(&n));
    let mut sets: Vec<u32> = (0..(1u32 << n)).collect();
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    let labels: Vec<String> = sets.iter().map(|&s| subset_label(s)).collect();
    let up: Vec<u64> = sets
        .iter()
        .map(|&s| {
            sets.iter()
                .enumerate()
                .filter(|&(_, &t)| s & t == s)
                .fold(0u64, |m, (j, _)| m | (1 << j))
        })
        .collect();
    Poset::from_order(labels, &up).unwrap()
}

/// A chain with n elements c1 < c2 < ... < cn (rank n−1).
pub fn chain(n: usize) -> Poset {
    let labels: Vec<String> = (1..=n).map(|i| format!("c{i}")).collect();
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_cover_indices(labels, covers).unwrap()
}

/// An antichain with k elements a1, ..., ak.
pub fn antichain(k: usize) -> Poset {
    let labels: Vec<String> = (1..=k).map(|i| format!("a{i}")).collect();
    Poset::from_cover_indices(labels, Vec::new()).unwrap()
}

/// The ordinal sum of n copies of the k-element antichain. Level i uses the
/// letter 'a' + i, so the first levels are a1..ak, b1..bk, ...
pub fn stacked_antichains(n: usize, k: usize) -> Poset {
    assert!(n >= 1 && n <= 26 && k >= 1);
    let mut result: Option<Poset> = None;
    for level in 0..n {
        let letter = (b'a' + level as u8) as char;
        let labels: Vec<String> = (1..=k).map(|i| format!("{letter}{i}")).collect();
        let layer = Poset::from_cover_indices(labels, Vec::new()).unwrap();
        result = Some(match result {
            None => layer,
            Some(acc) => acc.ordinal_sum(&layer).unwrap(),
        });
    }
    result.unwrap()
}

/// Face lattice of a complex given by an explicit facet list: the elements
/// are all nonempty intersections of facet subfamilies (plus the facets),
/// ordered by inclusion, with 0̂ = ∅ below everything and a fresh 1̂ on top.
/// For the boundary complex of a polytope this is the polytope's face
/// lattice.
pub fn face_lattice<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Poset, CatalogError> {
    if facets.is_empty() {
        return Err(CatalogError::BadParams("face lattice needs facets".into()));
    }
    let mut vertex_set: BTreeSet<String> = BTreeSet::new();
    for f in facets {
        for v in f {
            vertex_set.insert(v.as_ref().to_owned());
        }
    }
    let vertices: Vec<String> = vertex_set.into_iter().collect();
    if vertices.len() > 64 {
        return Err(CatalogError::BadParams("too many vertices".into()));
    }
    let vpos = |name: &str| vertices.iter().position(|v| v == name).unwrap();
    let facet_masks: Vec<u64> = facets
        .iter()
        .map(|f| f.iter().fold(0u64, |m, v| m | (1 << vpos(v.as_ref()))))
        .collect();

    // Close the facet family under pairwise intersection.
    let mut faces: BTreeSet<u64> = facet_masks.iter().copied().collect();
    faces.remove(&0);
    loop {
        let mut fresh = Vec::new();
        for &f in &faces {
            for &g in &facet_masks {
                let h = f & g;
                if h != 0 && !faces.contains(&h) {
                    fresh.push(h);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        faces.extend(fresh);
    }

    let single_char = vertices.iter().all(|v| v.chars().count() == 1);
    let face_label = |mask: u64| -> String {
        let names: Vec<&str> = crate::poset::bits(mask)
            .map(|v| vertices[v].as_str())
            .collect();
        if single_char {
            names.concat()
        } else {
            names.join(",")
        }
    };

    let mut sorted: Vec<u64> = faces.into_iter().collect();
    sorted.sort_unstable_by_key(|&m| (m.count_ones(), face_label(m)));
    if sorted.len() + 2 > MAX_ELEMENTS {
        return Err(CatalogError::BadParams("face lattice exceeds 64 elements".into()));
    }

    let mut labels = vec!["∅".to_owned()];
    labels.extend(sorted.iter().map(|&m| face_label(m)));
    labels.push("1\u{302}".to_owned());
    let n = labels.len();
    let top = n - 1;
    let mut up = vec![0u64; n];
    // 0̂ is below everything, 1̂ above everything; faces by containment.
    for i in 0..n {
        up[i] |= (1 << i) | (1 << top);
    }
    up[0] = (1u64 << n) - 1;
    up[top] = 1 << top;
    for (i, &f) in sorted.iter().enumerate() {
        for (j, &g) in sorted.iter().enumerate() {
            if f & g == f {
                up[i + 1] |= 1 << (j + 1);
            }
        }
    }
    Poset::from_order(labels, &up).map_err(|e| CatalogError::BadParams(e.to_string()))
}

/// Face lattice of the n-gon: n vertices, n boundary edges.
pub fn ngon(n: usize) -> Poset {
    let facets: Vec<Vec<String>> = (0..n)
        .map(|i| vec![format!("{}", i + 1), format!("{}", (i + 1) % n + 1)])
        .collect();
    face_lattice(&facets).unwrap()
}

/// Face lattice of the boundary of the tetrahedron.
pub fn tetrahedron() -> Poset {
    let facets = vec![
        vec!["1", "2", "3"],
        vec!["1", "2", "4"],
        vec!["1", "3", "4"],
        vec!["2", "3", "4"],
    ];
    face_lattice(&facets).unwrap()
}

/// Face lattice of the boundary of the octahedron; antipodal vertex pairs
/// are (1,2), (3,4), (5,6).
pub fn octahedron() -> Poset {
    let mut facets = Vec::new();
    for a in ["1", "2"] {
        for b in ["3", "4"] {
            for c in ["5", "6"] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    face_lattice(&facets).unwrap()
}

/// Face lattice of the 3-cube; vertex v+1 has coordinate bits of v, and
/// each of the six square facets fixes one coordinate.
pub fn cube() -> Poset {
    let mut facets = Vec::new();
    for axis in 0..3 {
        for side in 0..2 {
            let face: Vec<String> = (0u32..8)
                .filter(|v| (v >> axis) & 1 == side)
                .map(|v| format!("{}", v + 1))
                .collect();
            facets.push(face);
        }
    }
    face_lattice(&facets).unwrap()
}

fn partitions_of(n: usize) -> Vec<Vec<Vec<usize>>> {
    // Every set partition of {1..n}, blocks sorted internally and by
    // minimum element.
    let mut all = vec![Vec::<Vec<usize>>::new()];
    for x in 1..=n {
        let mut next = Vec::new();
        for p in &all {
            for i in 0..p.len() {
                let mut q = p.clone();
                q[i].push(x);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![x]);
            next.push(q);
        }
        all = next;
    }
    all
}

fn partition_label(blocks: &[Vec<usize>]) -> String {
    blocks
        .iter()
        .map(|b| b.iter().map(|x| x.to_string()).collect::<String>())
        .collect::<Vec<_>>()
        .join("|")
}

/// The partition lattice Π_n: set partitions of {1..n} ordered by
/// refinement (finer below coarser).
pub fn partition(n: usize) -> Poset {
    assert!((1..=5).contains(&n));
    let mut parts = partitions_of(n);
    parts.sort_by_key(|p| (n - p.len(), partition_label(p)));
    let labels: Vec<String> = parts.iter().map(|p| partition_label(p)).collect();
    // π ≤ σ iff every block of π is contained in a block of σ.
    let block_of = |p: &[Vec<usize>], x: usize| p.iter().position(|b| b.contains(&x)).unwrap();
    let refines = |p: &[Vec<usize>], q: &[Vec<usize>]| {
        p.iter().all(|b| {
            let target = block_of(q, b[0]);
            b.iter().all(|&x| block_of(q, x) == target)
        })
    };
    let up: Vec<u64> = parts
        .iter()
        .map(|p| {
            parts
                .iter()
                .enumerate()
                .filter(|(_, q)| refines(p, q))
                .fold(0u64, |m, (j, _)| m | (1 << j))
        })
        .collect();
    Poset::from_order(labels, &up).unwrap()
}

/// Divisors of m ordered by divisibility.
pub fn divisor(m: u64) -> Poset {
    let divisors: Vec<u64> = (1..=m).filter(|d| m % d == 0).collect();
    let labels: Vec<String> = divisors.iter().map(|d| d.to_string()).collect();
    let up: Vec<u64> = divisors
        .iter()
        .map(|&d| {
            divisors
                .iter()
                .enumerate()
                .filter(|(_, &e)| e % d == 0)
                .fold(0u64, |m2, (j, _)| m2 | (1 << j))
        })
        .collect();
    Poset::from_order(labels, &up).unwrap()
}

/// Three stacked 2-element antichains: a1,a2 < b1,b2 < c1,c2.
pub fn fig1() -> Poset {
    stacked_antichains(3, 2)
}

/// A rank-one poset whose Hasse diagram is two 4-cycles glued at the
/// minimal apex a: bottoms a, b1, b2 under tops t1..t4. It is
/// 2-edge-connected but a is a cut vertex, which makes it edgewise doubly
/// Cohen-Macaulay without being doubly Cohen-Macaulay. The apex must be
/// minimal: only then do its ordinal sums with antichains above stay
/// edgewise doubly Cohen-Macaulay.
pub fn fig2_standin() -> Poset {
    Poset::new(
        &["a", "b1", "b2", "t1", "t2", "t3", "t4"],
        &[
            ("a", "t1"),
            ("a", "t2"),
            ("a", "t3"),
            ("a", "t4"),
            ("b1", "t1"),
            ("b1", "t2"),
            ("b2", "t3"),
            ("b2", "t4"),
        ],
    )
    .unwrap()
}

/// The ordinal sum of `fig2_standin` and a 2-element antichain (the
/// antichain on top, labeled y1, y2).
pub fn remark36_q() -> Poset {
    let top = Poset::new(&["y1", "y2"], &[]).unwrap();
    fig2_standin().ordinal_sum(&top).unwrap()
}

/// Face lattice of the complex on {a,b,c,d,e} consisting of all proper
/// subsets of {a,b,c,d} and of {b,c,d,e}.
pub fn sec5_lattice() -> Poset {
    let facets = vec![
        vec!["a", "b", "c"],
        vec!["a", "b", "d"],
        vec!["a", "c", "d"],
        vec!["b", "c", "d"],
        vec!["b", "c", "e"],
        vec!["b", "d", "e"],
        vec!["c", "d", "e"],
    ];
    face_lattice(&facets).unwrap()
}

/// The named instances exercised by the test sweeps, with bounded sizes.
pub fn standard_instances() -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = Vec::new();
    for n in 2..=4 {
        out.push((format!("boolean({n})"), boolean(n)));
        out.push((
            format!("boolean({n}) proper"),
            boolean(n).proper_part().unwrap(),
        ));
    }
    for n in 1..=5 {
        out.push((format!("chain({n})"), chain(n)));
    }
    for k in 1..=4 {
        out.push((format!("antichain({k})"), antichain(k)));
    }
    for (n, k) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        out.push((format!("stacked({n},{k})"), stacked_antichains(n, k)));
    }
    for n in [4, 5, 6] {
        out.push((format!("ngon({n}) proper"), ngon(n).proper_part().unwrap()));
    }
    out.push(("tetrahedron proper".into(), tetrahedron().proper_part().unwrap()));
    out.push(("octahedron proper".into(), octahedron().proper_part().unwrap()));
    out.push(("cube proper".into(), cube().proper_part().unwrap()));
    for n in 3..=4 {
        out.push((format!("partition({n})"), partition(n)));
        out.push((
            format!("partition({n}) proper"),
            partition(n).proper_part().unwrap(),
        ));
    }
    out.push(("divisor(12)".into(), divisor(12)));
    out.push(("divisor(12) proper".into(), divisor(12).proper_part().unwrap()));
    out.push(("fig1".into(), fig1()));
    out.push(("fig2-standin".into(), fig2_standin()));
    out.push(("remark36-q".into(), remark36_q()));
    out.push(("sec5 proper".into(), sec5_lattice().proper_part().unwrap()));
    out
}
