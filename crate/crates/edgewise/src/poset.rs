//! Finite posets with validated Hasse diagrams.
//!
//! A [`Poset`] stores its ground set as an ordered list of labels, its cover
//! relations, and the reflexive-transitive closure of the covers as one
//! 64-bit mask per element. Construction rejects anything that is not a
//! Hasse diagram: cycles and redundant covers are hard errors, never
//! silently repaired. All later order queries are table lookups.

use std::collections::BTreeMap;
use std::fmt;

/// Ground sets are capped so subsets fit in a word.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    TooManyElements(usize),
    DuplicateLabel(String),
    UnknownLabel(String),
    CycleDetected,
    /// A declared cover (lo, hi) that is implied by a longer path.
    RedundantCover { lo: String, hi: String },
    NotComparable { lo: String, hi: String },
    NotBounded,
    LabelClash(String),
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::TooManyElements(n) => {
                write!(f, "poset has {n} elements, maximum is {MAX_ELEMENTS}")
            }
            PosetError::DuplicateLabel(l) => write!(f, "duplicate label {l:?}"),
            PosetError::UnknownLabel(l) => write!(f, "unknown label {l:?}"),
            PosetError::CycleDetected => write!(f, "cover relations contain a cycle"),
            PosetError::RedundantCover { lo, hi } => {
                write!(f, "redundant cover ({lo:?}, {hi:?}): a longer path exists")
            }
            PosetError::NotComparable { lo, hi } => {
                write!(f, "{lo:?} is not below {hi:?}")
            }
            PosetError::NotBounded => write!(f, "poset has no minimum or no maximum"),
            PosetError::LabelClash(l) => write!(f, "label {l:?} occurs in both operands"),
        }
    }
}

impl std::error::Error for PosetError {}

/// Interval selector, by element index in the ambient poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    Closed { lo: usize, hi: usize },
    Open { lo: usize, hi: usize },
    UpSet { lo: usize },
    DownSet { hi: usize },
}

/// A finite poset on at most 64 elements.
///
/// Immutable after construction; queries never allocate.
#[derive(Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    /// Cover pairs (a, b) meaning "b covers a", sorted lexicographically.
    covers: Vec<(usize, usize)>,
    /// up[i] = bitmask of all j with i <= j, including i itself.
    up: Vec<u64>,
    /// down[j] = bitmask of all i with i <= j, including j itself.
    down: Vec<u64>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.covers == other.covers
    }
}

impl Eq for Poset {}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("labels", &self.labels)
            .field(
                "covers",
                &self
                    .covers
                    .iter()
                    .map(|&(a, b)| (self.labels[a].as_str(), self.labels[b].as_str()))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Iterate the set bits of a mask as element indices.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    std::iter::successors(
        if mask == 0 { None } else { Some(mask) },
        |&m| {
            let next = m & (m - 1);
            if next == 0 {
                None
            } else {
                Some(next)
            }
        },
    )
    .map(|m| m.trailing_zeros() as usize)
}

impl Poset {
    /// Build a poset from distinct labels and cover pairs.
    ///
    /// The covers must form the Hasse diagram of a partial order: cycles
    /// and covers implied by longer paths are rejected.
    pub fn new<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Poset, PosetError> {
        let owned: Vec<String> = labels.iter().map(|s| s.as_ref().to_owned()).collect();
        let mut index = BTreeMap::new();
        for (i, l) in owned.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(a.as_ref().to_owned()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| PosetError::UnknownLabel(b.as_ref().to_owned()))?;
            pairs.push((ia, ib));
        }
        Poset::from_cover_indices(owned, pairs)
    }

    /// Index-based constructor used by everything that already resolved labels.
    pub fn from_cover_indices(
        labels: Vec<String>,
        mut covers: Vec<(usize, usize)>,
    ) -> Result<Poset, PosetError> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements(n));
        }
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        covers.sort_unstable();
        covers.dedup();
        for &(a, b) in &covers {
            assert!(a < n && b < n, "cover index out of range");
            if a == b {
                return Err(PosetError::CycleDetected);
            }
        }

        // Reflexive-transitive closure by fixpoint over successor masks.
        let mut succ = vec![0u64; n];
        for &(a, b) in &covers {
            succ[a] |= 1 << b;
        }
        let mut up: Vec<u64> = (0..n).map(|i| (1 << i) | succ[i]).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n {
                let mut acc = up[i];
                for j in bits(up[i]) {
                    acc |= up[j];
                }
                if acc != up[i] {
                    up[i] = acc;
                    changed = true;
                }
            }
        }
        // Antisymmetry: i <= j and j <= i forces i == j.
        for i in 0..n {
            for j in bits(up[i]) {
                if j != i && up[j] & (1 << i) != 0 {
                    return Err(PosetError::CycleDetected);
                }
            }
        }
        let mut down = vec![0u64; n];
        for i in 0..n {
            for j in bits(up[i]) {
                down[j] |= 1 << i;
            }
        }
        // Irredundancy: nothing strictly between the ends of a cover.
        for &(a, b) in &covers {
            let between = up[a] & down[b] & !(1 << a) & !(1 << b);
            if between != 0 {
                return Err(PosetError::RedundantCover {
                    lo: labels[a].clone(),
                    hi: labels[b].clone(),
                });
            }
        }
        Ok(Poset {
            labels,
            index,
            covers,
            up,
            down,
        })
    }

    /// Build from a full order relation given as up-set masks. The covers
    /// are derived, then validated through the ordinary constructor.
    pub(crate) fn from_order(labels: Vec<String>, up: &[u64]) -> Result<Poset, PosetError> {
        let n = labels.len();
        assert_eq!(up.len(), n);
        let mut covers = Vec::new();
        for a in 0..n {
            for b in bits(up[a]) {
                if b == a {
                    continue;
                }
                let strictly_between =
                    bits(up[a] & !(1 << a) & !(1 << b)).any(|z| up[z] & (1 << b) != 0);
                if !strictly_between {
                    covers.push((a, b));
                }
            }
        }
        let poset = Poset::from_cover_indices(labels, covers)?;
        debug_assert_eq!(poset.up, up, "input relation was not a partial order");
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// The cover pairs (a, b) with b covering a, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn num_covers(&self) -> usize {
        self.covers.len()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a] & (1 << b) != 0
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn is_cover(&self, a: usize, b: usize) -> bool {
        self.covers.binary_search(&(a, b)).is_ok()
    }

    /// Mask of all elements >= i, including i.
    pub fn up_mask(&self, i: usize) -> u64 {
        self.up[i]
    }

    /// Mask of all elements <= i, including i.
    pub fn down_mask(&self, i: usize) -> u64 {
        self.down[i]
    }

    pub fn full_mask(&self) -> u64 {
        if self.labels.is_empty() {
            0
        } else {
            u64::MAX >> (64 - self.labels.len())
        }
    }

    pub fn minimal_mask(&self) -> u64 {
        let mut m = self.full_mask();
        for &(_, b) in &self.covers {
            m &= !(1 << b);
        }
        m
    }

    pub fn maximal_mask(&self) -> u64 {
        let mut m = self.full_mask();
        for &(a, _) in &self.covers {
            m &= !(1 << a);
        }
        m
    }

    /// Induced subposet on the elements of `mask`, labels kept, covers
    /// recomputed as the covers of the restricted order.
    pub fn induced(&self, mask: u64) -> Poset {
        let kept: Vec<usize> = bits(mask).collect();
        let mut remap = vec![usize::MAX; self.labels.len()];
        for (new, &old) in kept.iter().enumerate() {
            remap[old] = new;
        }
        let labels: Vec<String> = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let up: Vec<u64> = kept
            .iter()
            .map(|&old| {
                let mut m = 0u64;
                for j in bits(self.up[old] & mask) {
                    m |= 1 << remap[j];
                }
                m
            })
            .collect();
        Poset::from_order(labels, &up).expect("restriction of a partial order is a partial order")
    }

    /// Closed/open intervals and principal up/down sets as induced subposets.
    pub fn interval(&self, spec: Interval) -> Result<Poset, PosetError> {
        let mask = self.interval_mask(spec)?;
        Ok(self.induced(mask))
    }

    pub fn interval_mask(&self, spec: Interval) -> Result<u64, PosetError> {
        match spec {
            Interval::Closed { lo, hi } | Interval::Open { lo, hi } => {
                if !self.leq(lo, hi) {
                    return Err(PosetError::NotComparable {
                        lo: self.labels[lo].clone(),
                        hi: self.labels[hi].clone(),
                    });
                }
                let mut m = self.up[lo] & self.down[hi];
                if let Interval::Open { .. } = spec {
                    m &= !(1 << lo) & !(1 << hi);
                }
                Ok(m)
            }
            Interval::UpSet { lo } => Ok(self.up[lo]),
            Interval::DownSet { hi } => Ok(self.down[hi]),
        }
    }

    /// Linear extension (indices in a topological order of the covers).
    pub fn topo_order(&self) -> Vec<usize> {
        let n = self.labels.len();
        let mut indeg = vec![0usize; n];
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            indeg[b] += 1;
            succ[a].push(b);
        }
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        order
    }

    /// Whether all inclusion-maximal chains have the same length, and that
    /// length. The empty poset is graded by convention with no rank.
    pub fn grading(&self) -> (bool, Option<usize>) {
        let n = self.labels.len();
        if n == 0 {
            return (true, None);
        }
        let order = self.topo_order();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            preds[b].push(a);
            succs[a].push(b);
        }
        let mut down_min = vec![0usize; n];
        let mut down_max = vec![0usize; n];
        for &v in &order {
            if !preds[v].is_empty() {
                down_min[v] = preds[v].iter().map(|&p| down_min[p]).min().unwrap() + 1;
                down_max[v] = preds[v].iter().map(|&p| down_max[p]).max().unwrap() + 1;
            }
        }
        let mut up_min = vec![0usize; n];
        let mut up_max = vec![0usize; n];
        for &v in order.iter().rev() {
            if !succs[v].is_empty() {
                up_min[v] = succs[v].iter().map(|&s| up_min[s]).min().unwrap() + 1;
                up_max[v] = succs[v].iter().map(|&s| up_max[s]).max().unwrap() + 1;
            }
        }
        let total = down_max[0] + up_max[0];
        for v in 0..n {
            if down_min[v] != down_max[v]
                || up_min[v] != up_max[v]
                || down_max[v] + up_max[v] != total
            {
                return (false, None);
            }
        }
        (true, Some(total))
    }

    /// Rank of each element when the poset is graded.
    pub fn rank_function(&self) -> Option<Vec<usize>> {
        let (graded, _) = self.grading();
        if !graded {
            return None;
        }
        let n = self.labels.len();
        let order = self.topo_order();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            preds[b].push(a);
        }
        let mut rank = vec![0usize; n];
        for &v in &order {
            if !preds[v].is_empty() {
                rank[v] = rank[preds[v][0]] + 1;
            }
        }
        Some(rank)
    }

    /// Rank of the closed interval [a, b] in a graded poset.
    pub fn interval_rank(&self, rank: &[usize], a: usize, b: usize) -> usize {
        debug_assert!(self.leq(a, b));
        rank[b] - rank[a]
    }

    /// Adjoin a fresh minimum and maximum. The bound labels are made fresh
    /// by appending primes if they clash with existing labels.
    pub fn add_bounds(&self) -> Poset {
        let fresh = |base: &str| {
            let mut s = base.to_owned();
            while self.index.contains_key(&s) {
                s.push('\'');
            }
            s
        };
        let n = self.labels.len();
        let mut labels = self.labels.clone();
        let bot_label = fresh("0\u{302}");
        labels.push(bot_label);
        let top_label = fresh("1\u{302}");
        // The two fresh labels could in principle collide with each other
        // only if the poset contained one of them already; `fresh` already
        // avoided the ground set, and the base strings differ.
        labels.push(top_label);
        let bot = n;
        let top = n + 1;
        let mut covers = self.covers.clone();
        if n == 0 {
            covers.push((bot, top));
        } else {
            for i in bits(self.minimal_mask()) {
                covers.push((bot, i));
            }
            for i in bits(self.maximal_mask()) {
                covers.push((i, top));
            }
        }
        Poset::from_cover_indices(labels, covers).expect("bounding preserves the Hasse property")
    }

    /// Index of the artificial minimum in `add_bounds` output.
    pub fn bound_indices(&self) -> (usize, usize) {
        (self.labels.len(), self.labels.len() + 1)
    }

    /// Remove the minimum and maximum of a bounded poset.
    pub fn proper_part(&self) -> Result<Poset, PosetError> {
        if self.labels.is_empty() {
            return Err(PosetError::NotBounded);
        }
        let minimal = self.minimal_mask();
        let maximal = self.maximal_mask();
        if minimal.count_ones() != 1 || maximal.count_ones() != 1 {
            return Err(PosetError::NotBounded);
        }
        Ok(self.induced(self.full_mask() & !minimal & !maximal))
    }

    /// Every element of `self` below every element of `other`.
    pub fn ordinal_sum(&self, other: &Poset) -> Result<Poset, PosetError> {
        for l in &other.labels {
            if self.index.contains_key(l) {
                return Err(PosetError::LabelClash(l.clone()));
            }
        }
        let n = self.labels.len();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut covers = self.covers.clone();
        covers.extend(other.covers.iter().map(|&(a, b)| (a + n, b + n)));
        for a in bits(self.maximal_mask()) {
            for b in bits(other.minimal_mask()) {
                covers.push((a, b + n));
            }
        }
        Poset::from_cover_indices(labels, covers)
    }

    /// Reverse all covers.
    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::from_cover_indices(self.labels.clone(), covers)
            .expect("the dual of a Hasse diagram is a Hasse diagram")
    }

    /// The poset on the same ground set whose Hasse diagram is obtained by
    /// deleting every edge inside the closed interval [lo, hi].
    ///
    /// The resulting cover set is exactly the remaining edge set: removing
    /// Hasse edges can never make another edge redundant, so the remaining
    /// edges form the Hasse diagram of their own transitive closure.
    pub fn remove_interval_edges(&self, lo: usize, hi: usize) -> Result<Poset, PosetError> {
        let mask = self.interval_mask(Interval::Closed { lo, hi })?;
        let kept: Vec<(usize, usize)> = self
            .covers
            .iter()
            .copied()
            .filter(|&(a, b)| mask & (1 << a) == 0 || mask & (1 << b) == 0)
            .collect();
        let result = Poset::from_cover_indices(self.labels.clone(), kept.clone())?;
        debug_assert_eq!(result.covers, kept);
        Ok(result)
    }

    /// Whether the Hasse diagram, viewed as an undirected graph on the full
    /// ground set, is connected. The empty poset counts as connected.
    pub fn is_hasse_connected(&self) -> bool {
        let n = self.labels.len();
        if n <= 1 {
            return true;
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(labels: &[&str], covers: &[(&str, &str)]) -> Poset {
        Poset::new(labels, covers).unwrap()
    }

    /// Independent Floyd-Warshall closure over the declared covers.
    fn naive_closure(n: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for &(a, b) in covers {
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        leq
    }

    #[test]
    fn two_chain() {
        let c = p(&["a", "b"], &[("a", "b")]);
        assert!(c.leq(0, 1));
        assert!(!c.leq(1, 0));
        assert_eq!(c.num_covers(), 1);
    }

    #[test]
    fn redundant_cover_rejected() {
        let err = Poset::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap_err();
        assert_eq!(
            err,
            PosetError::RedundantCover {
                lo: "a".into(),
                hi: "c".into()
            }
        );
    }

    #[test]
    fn cycle_rejected() {
        let err = Poset::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert_eq!(err, PosetError::CycleDetected);
    }

    #[test]
    fn unknown_label_rejected() {
        let err = Poset::new(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, PosetError::UnknownLabel("z".into()));
    }

    #[test]
    fn duplicate_label_rejected() {
        let err = Poset::new(&["a", "a"], &[]).unwrap_err();
        assert_eq!(err, PosetError::DuplicateLabel("a".into()));
    }

    #[test]
    fn closure_matches_naive_oracle() {
        let q = p(
            &["a1", "a2", "b1", "b2", "c1", "c2"],
            &[
                ("a1", "b1"),
                ("a1", "b2"),
                ("a2", "b1"),
                ("a2", "b2"),
                ("b1", "c1"),
                ("b1", "c2"),
                ("b2", "c1"),
                ("b2", "c2"),
            ],
        );
        let leq = naive_closure(q.len(), q.covers());
        for i in 0..q.len() {
            for j in 0..q.len() {
                assert_eq!(q.leq(i, j), leq[i][j]);
            }
        }
    }

    #[test]
    fn singleton_closed_interval() {
        let q = p(&["a", "b"], &[("a", "b")]);
        let s = q.interval(Interval::Closed { lo: 0, hi: 0 }).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.num_covers(), 0);
    }

    #[test]
    fn open_interval_in_proper_b3_is_empty() {
        // Proper part of B_3 on subsets of {1,2,3}: singletons below pairs.
        let q = p(
            &["1", "2", "3", "12", "13", "23"],
            &[
                ("1", "12"),
                ("1", "13"),
                ("2", "12"),
                ("2", "23"),
                ("3", "13"),
                ("3", "23"),
            ],
        );
        let lo = q.index_of("1").unwrap();
        let hi = q.index_of("12").unwrap();
        let o = q.interval(Interval::Open { lo, hi }).unwrap();
        assert!(o.is_empty());
    }

    #[test]
    fn interval_not_comparable() {
        let q = p(&["a", "b"], &[]);
        let err = q.interval(Interval::Closed { lo: 0, hi: 1 }).unwrap_err();
        assert!(matches!(err, PosetError::NotComparable { .. }));
    }

    #[test]
    fn b3_interval_is_b2() {
        // Full B_3 via explicit subset enumeration (the oracle), then check
        // that [∅, {1,2}] induces a four-element Boolean lattice.
        let names = ["∅", "1", "2", "3", "12", "13", "23", "123"];
        let sets: Vec<u32> = vec![0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];
        let mut covers = Vec::new();
        for (i, &s) in sets.iter().enumerate() {
            for (j, &t) in sets.iter().enumerate() {
                if s & t == s && (t ^ s).count_ones() == 1 {
                    covers.push((names[i], names[j]));
                }
            }
        }
        let b3 = Poset::new(&names, &covers).unwrap();
        let lo = b3.index_of("∅").unwrap();
        let hi = b3.index_of("12").unwrap();
        let iv = b3.interval(Interval::Closed { lo, hi }).unwrap();
        assert_eq!(iv.len(), 4);
        assert_eq!(iv.num_covers(), 4);
        let (graded, rank) = iv.grading();
        assert!(graded);
        assert_eq!(rank, Some(2));
    }

    #[test]
    fn grading_of_chain() {
        let c = p(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]);
        assert_eq!(c.grading(), (true, Some(3)));
    }

    #[test]
    fn grading_detects_unequal_chains() {
        let q = p(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("c", "d")]);
        assert_eq!(q.grading(), (false, None));
    }

    #[test]
    fn empty_poset_graded_without_rank() {
        let e = Poset::new::<&str>(&[], &[]).unwrap();
        assert_eq!(e.grading(), (true, None));
    }

    #[test]
    fn add_bounds_of_antichain_is_diamond() {
        let a = p(&["x", "y"], &[]);
        let d = a.add_bounds();
        assert_eq!(d.len(), 4);
        assert_eq!(d.num_covers(), 4);
        assert_eq!(d.grading(), (true, Some(2)));
    }

    #[test]
    fn bounds_and_proper_part_are_inverse() {
        let fig1 = crate::catalog::fig1();
        let roundtrip = fig1.add_bounds().proper_part().unwrap();
        assert_eq!(roundtrip, fig1);
    }

    #[test]
    fn proper_part_requires_bounds() {
        let a = p(&["x", "y"], &[]);
        assert_eq!(a.proper_part().unwrap_err(), PosetError::NotBounded);
    }

    #[test]
    fn ordinal_sum_of_three_antichains() {
        let a = p(&["a1", "a2"], &[]);
        let b = p(&["b1", "b2"], &[]);
        let c = p(&["c1", "c2"], &[]);
        let s = a.ordinal_sum(&b).unwrap().ordinal_sum(&c).unwrap();
        assert_eq!(s.len(), 6);
        assert_eq!(s.num_covers(), 8);
    }

    #[test]
    fn ordinal_sum_rank_of_two_antichains() {
        let a = p(&["a1", "a2"], &[]);
        let b = p(&["b1", "b2"], &[]);
        let s = a.ordinal_sum(&b).unwrap();
        assert_eq!(s.grading(), (true, Some(1)));
    }

    #[test]
    fn ordinal_sum_label_clash() {
        let a = p(&["x"], &[]);
        let b = p(&["x"], &[]);
        assert_eq!(
            a.ordinal_sum(&b).unwrap_err(),
            PosetError::LabelClash("x".into())
        );
    }

    #[test]
    fn dual_is_involution() {
        let fig1 = crate::catalog::fig1();
        assert_eq!(fig1.dual().dual(), fig1);
    }

    #[test]
    fn remove_rank_zero_interval_is_identity() {
        let fig1 = crate::catalog::fig1();
        for x in 0..fig1.len() {
            assert_eq!(fig1.remove_interval_edges(x, x).unwrap(), fig1);
        }
    }

    #[test]
    fn remove_interval_edges_on_fig1() {
        let fig1 = crate::catalog::fig1();
        let a1 = fig1.index_of("a1").unwrap();
        let b1 = fig1.index_of("b1").unwrap();
        let c1 = fig1.index_of("c1").unwrap();
        let q = fig1.remove_interval_edges(a1, b1).unwrap();
        assert_eq!(q.num_covers(), 7);
        // a1 < c1 still holds, through b2; cross-check with the naive closure.
        assert!(q.lt(a1, c1));
        let leq = naive_closure(q.len(), q.covers());
        for i in 0..q.len() {
            for j in 0..q.len() {
                assert_eq!(q.leq(i, j), leq[i][j]);
            }
        }
    }

    #[test]
    fn remove_interval_edges_in_proper_b3() {
        let b3bar = crate::catalog::boolean(3).proper_part().unwrap();
        let lo = b3bar.index_of("1").unwrap();
        let hi = b3bar.index_of("12").unwrap();
        let q = b3bar.remove_interval_edges(lo, hi).unwrap();
        assert_eq!(q.grading(), (true, Some(1)));
        assert!(q.is_hasse_connected());
    }

    #[test]
    fn interval_elements_pairwise_incomparable_after_removal() {
        let fig1 = crate::catalog::fig1();
        let a1 = fig1.index_of("a1").unwrap();
        let c1 = fig1.index_of("c1").unwrap();
        let q = fig1.remove_interval_edges(a1, c1).unwrap();
        let mask = fig1.interval_mask(Interval::Closed { lo: a1, hi: c1 }).unwrap();
        let members: Vec<usize> = bits(mask).collect();
        for &x in &members {
            for &y in &members {
                if x != y {
                    assert!(!q.comparable(x, y));
                }
            }
        }
    }

    #[test]
    fn round_trip_through_new() {
        let fig1 = crate::catalog::fig1();
        let labels: Vec<&str> = fig1.labels().iter().map(|s| s.as_str()).collect();
        let covers: Vec<(&str, &str)> = fig1
            .covers()
            .iter()
            .map(|&(a, b)| (fig1.label(a), fig1.label(b)))
            .collect();
        let rebuilt = Poset::new(&labels, &covers).unwrap();
        assert_eq!(rebuilt, fig1);
    }
}
