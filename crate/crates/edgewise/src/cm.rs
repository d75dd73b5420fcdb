//! The Cohen-Macaulay family of decision procedures.
//!
//! A poset is Cohen-Macaulay over a field when its order complex is pure
//! and every link has vanishing reduced homology below its dimension;
//! equivalently, when every open interval of the bounded extension has
//! vanishing reduced homology below the dimension of its order complex.
//! Both routes are implemented; `Route::Both` runs the two and treats any
//! disagreement as an implementation bug, never a mathematical outcome.
//!
//! On top of plain Cohen-Macaulayness sit Gorenstein*-ness, k-CM (vertex
//! deletions), the edgewise variants (deleting all Hasse edges of a closed
//! interval), the edgewise Cohen-Macaulay connectivity, and witness replay.
//!
//! Every sweep iterates in a canonical order — faces by (size, mask),
//! vertex sets by (size, lexicographic), intervals by (lower index, upper
//! index) — so the first failing witness is deterministic. Betti vectors
//! are memoized per (complex fingerprint, field) because distinct sweeps
//! share many small interval complexes.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{order_complex, SimplicialComplex};
use crate::homology::{reduced_betti, BettiVector, FieldSpec};
use crate::poset::{bits, Interval, Poset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    LinkCondition,
    IntervalCondition,
    Both,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CmError {
    EmptyPoset,
    InvalidK,
    /// The two Cohen-Macaulay routes disagreed; this is a bug, not math.
    RouteMismatch {
        link: Box<CmVerdict>,
        interval: Box<CmVerdict>,
    },
}

impl fmt::Display for CmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmError::EmptyPoset => write!(f, "the empty poset is not accepted"),
            CmError::InvalidK => write!(f, "k must be at least 1"),
            CmError::RouteMismatch { link, interval } => write!(
                f,
                "link route says {} but interval route says {}",
                link.holds, interval.holds
            ),
        }
    }
}

impl std::error::Error for CmError {}

/// Why a check failed, precise enough to be re-checked in isolation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    /// Two facets of the order complex with different dimensions.
    NotPure {
        small_facet: Vec<String>,
        large_facet: Vec<String>,
    },
    /// A face whose link has nonzero reduced homology below its dimension.
    LinkHomology {
        face: Vec<String>,
        betti_dim: i32,
        betti: u64,
    },
    /// An open interval of the bounded extension with nonzero reduced
    /// homology below the dimension of its order complex. `None` endpoints
    /// are the artificial bounds.
    IntervalHomology {
        lo: Option<String>,
        hi: Option<String>,
        betti_dim: i32,
        betti: u64,
    },
    /// A face whose link does not have top Betti number exactly one.
    TopBettiNotOne {
        face: Vec<String>,
        betti_dim: i32,
        betti: u64,
    },
    /// The poset is graded of too small a rank for the requested level.
    RankTooSmall { required: usize, found: usize },
    /// Deleting this vertex set breaks the property.
    DeletionBreaks {
        removed: Vec<String>,
        cause: Box<Witness>,
    },
    /// Deleting this vertex set leaves nothing.
    EmptyAfterDeletion { removed: Vec<String> },
    /// Removing the Hasse edges of the closed interval [lo, hi] breaks the
    /// property.
    IntervalRemovalBreaks {
        lo: String,
        hi: String,
        cause: Box<Witness>,
    },
    /// Maximal chains of unequal length.
    NotGraded,
    /// Graded, but of the wrong rank.
    RankChanged { expected: usize, found: usize },
    /// An exhaustive facet-ordering search found no shelling.
    NotShellable,
}

/// Outcome of a property check. A false verdict always carries a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmVerdict {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl CmVerdict {
    fn pass(property: impl Into<String>) -> CmVerdict {
        CmVerdict {
            property: property.into(),
            holds: true,
            witness: None,
        }
    }

    fn fail(property: impl Into<String>, witness: Witness) -> CmVerdict {
        CmVerdict {
            property: property.into(),
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Level selector for the edgewise checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgewiseLevel {
    K(u32),
    Strong,
}

impl EdgewiseLevel {
    fn property_name(&self) -> String {
        match self {
            EdgewiseLevel::K(k) => format!("edgewise-{k}-cm"),
            EdgewiseLevel::Strong => "edgewise-strong-cm".to_owned(),
        }
    }
}

type CacheKey = (u16, Vec<u64>);

/// A Cohen-Macaulay analyzer over one fixed coefficient field, with a
/// memoized Betti table shared by every sweep run through it.
pub struct Analyzer {
    field: FieldSpec,
    cache: RefCell<HashMap<CacheKey, BettiVector>>,
}

impl Analyzer {
    pub fn new(field: FieldSpec) -> Analyzer {
        Analyzer {
            field,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Memoized reduced Betti vector. The fingerprint is the facet-mask
    /// family itself; complexes with equal fingerprints are isomorphic.
    pub fn betti(&self, complex: &SimplicialComplex) -> BettiVector {
        let key: CacheKey = (
            complex.vertex_count() as u16,
            complex.facet_masks().to_vec(),
        );
        if let Some(b) = self.cache.borrow().get(&key) {
            return b.clone();
        }
        let b = reduced_betti(complex, &self.field);
        self.cache.borrow_mut().insert(key, b.clone());
        b
    }

    fn purity_witness(&self, delta: &SimplicialComplex) -> Option<Witness> {
        if delta.is_pure() {
            return None;
        }
        let facets = delta.facet_labels();
        let small = facets.iter().min_by_key(|f| f.len()).unwrap();
        let large = facets.iter().max_by_key(|f| f.len()).unwrap();
        Some(Witness::NotPure {
            small_facet: small.iter().map(|s| s.to_string()).collect(),
            large_facet: large.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// Plain Cohen-Macaulayness by the requested route.
    pub fn is_cm(&self, p: &Poset, route: Route) -> Result<CmVerdict, CmError> {
        if p.is_empty() {
            return Err(CmError::EmptyPoset);
        }
        match route {
            Route::LinkCondition => Ok(self.cm_link(p)),
            Route::IntervalCondition => Ok(self.cm_interval(p)),
            Route::Both => {
                let link = self.cm_link(p);
                let interval = self.cm_interval(p);
                if link.holds != interval.holds {
                    return Err(CmError::RouteMismatch {
                        link: Box::new(link),
                        interval: Box::new(interval),
                    });
                }
                Ok(link)
            }
        }
    }

    fn cm_link(&self, p: &Poset) -> CmVerdict {
        let delta = order_complex(p);
        if let Some(w) = self.purity_witness(&delta) {
            return CmVerdict::fail("cm", w);
        }
        for face in delta.all_faces() {
            let link = delta.link_of_mask(face);
            let betti = self.betti(&link);
            if let Some((d, v)) = betti.first_nonzero_below(link.dim()) {
                return CmVerdict::fail(
                    "cm",
                    Witness::LinkHomology {
                        face: bits(face).map(|i| delta.vertices()[i].clone()).collect(),
                        betti_dim: d,
                        betti: v,
                    },
                );
            }
        }
        CmVerdict::pass("cm")
    }

    fn cm_interval(&self, p: &Poset) -> CmVerdict {
        let delta = order_complex(p);
        if let Some(w) = self.purity_witness(&delta) {
            return CmVerdict::fail("cm", w);
        }
        let hat = p.add_bounds();
        let n = p.len();
        let hat_label = |i: usize| -> Option<String> {
            if i < n {
                Some(hat.label(i).to_owned())
            } else {
                None
            }
        };
        for lo in 0..hat.len() {
            for hi in 0..hat.len() {
                if !hat.lt(lo, hi) {
                    continue;
                }
                let sub = hat
                    .interval(Interval::Open { lo, hi })
                    .expect("endpoints are comparable");
                let complex = order_complex(&sub);
                let betti = self.betti(&complex);
                if let Some((d, v)) = betti.first_nonzero_below(complex.dim()) {
                    return CmVerdict::fail(
                        "cm",
                        Witness::IntervalHomology {
                            lo: hat_label(lo),
                            hi: hat_label(hi),
                            betti_dim: d,
                            betti: v,
                        },
                    );
                }
            }
        }
        CmVerdict::pass("cm")
    }

    /// Gorenstein*: Cohen-Macaulay with every link a homology sphere (top
    /// reduced Betti number exactly one).
    pub fn is_gorenstein_star(&self, p: &Poset) -> Result<CmVerdict, CmError> {
        if p.is_empty() {
            return Err(CmError::EmptyPoset);
        }
        let property = "gorenstein*";
        let delta = order_complex(p);
        if let Some(w) = self.purity_witness(&delta) {
            return Ok(CmVerdict::fail(property, w));
        }
        for face in delta.all_faces() {
            let link = delta.link_of_mask(face);
            let betti = self.betti(&link);
            let face_labels = || bits(face).map(|i| delta.vertices()[i].clone()).collect();
            if let Some((d, v)) = betti.first_nonzero_below(link.dim()) {
                return Ok(CmVerdict::fail(
                    property,
                    Witness::LinkHomology {
                        face: face_labels(),
                        betti_dim: d,
                        betti: v,
                    },
                ));
            }
            if betti.top() != 1 {
                return Ok(CmVerdict::fail(
                    property,
                    Witness::TopBettiNotOne {
                        face: face_labels(),
                        betti_dim: link.dim(),
                        betti: betti.top(),
                    },
                ));
            }
        }
        Ok(CmVerdict::pass(property))
    }

    /// k-Cohen-Macaulay: deleting any vertex set of size < k leaves a
    /// Cohen-Macaulay poset of the same order-complex dimension.
    pub fn is_k_cm(&self, p: &Poset, k: u32) -> Result<CmVerdict, CmError> {
        if k == 0 {
            return Err(CmError::InvalidK);
        }
        if p.is_empty() {
            return Err(CmError::EmptyPoset);
        }
        let property = format!("{k}-cm");
        let base = self.is_cm(p, Route::IntervalCondition)?;
        if !base.holds {
            return Ok(CmVerdict::fail(property, base.witness.unwrap()));
        }
        let rank = p.grading().1.expect("Cohen-Macaulay posets are graded");
        let n = p.len();
        for size in 1..k as usize {
            if size > n {
                break;
            }
            for combo in combinations(n, size) {
                let removed: Vec<String> =
                    bits(combo).map(|i| p.label(i).to_owned()).collect();
                let rest = p.full_mask() & !combo;
                if rest == 0 {
                    return Ok(CmVerdict::fail(
                        property,
                        Witness::EmptyAfterDeletion { removed },
                    ));
                }
                let sub = p.induced(rest);
                let inner = self.is_cm(&sub, Route::IntervalCondition)?;
                if !inner.holds {
                    return Ok(CmVerdict::fail(
                        property,
                        Witness::DeletionBreaks {
                            removed,
                            cause: Box::new(inner.witness.unwrap()),
                        },
                    ));
                }
                let sub_rank = sub.grading().1.unwrap();
                if sub_rank != rank {
                    return Ok(CmVerdict::fail(
                        property,
                        Witness::DeletionBreaks {
                            removed,
                            cause: Box::new(Witness::RankChanged {
                                expected: rank,
                                found: sub_rank,
                            }),
                        },
                    ));
                }
            }
        }
        Ok(CmVerdict::pass(property))
    }

    /// Edgewise k-CM (or strongly CM): the poset is Cohen-Macaulay and
    /// removing the Hasse edges of any closed interval of rank < k (any
    /// rank, for strong) leaves a Cohen-Macaulay poset of the same rank.
    /// Rank-zero intervals have no edges and are skipped, so k = 1
    /// degenerates to plain Cohen-Macaulayness.
    pub fn is_edgewise_k_cm(
        &self,
        p: &Poset,
        level: EdgewiseLevel,
    ) -> Result<CmVerdict, CmError> {
        if let EdgewiseLevel::K(0) = level {
            return Err(CmError::InvalidK);
        }
        if p.is_empty() {
            return Err(CmError::EmptyPoset);
        }
        let property = level.property_name();
        let base = self.is_cm(p, Route::IntervalCondition)?;
        if !base.holds {
            return Ok(CmVerdict::fail(property, base.witness.unwrap()));
        }
        let rank = p.grading().1.expect("Cohen-Macaulay posets are graded");
        if let EdgewiseLevel::K(k) = level {
            let required = (k - 1) as usize;
            if rank < required {
                return Ok(CmVerdict::fail(
                    property,
                    Witness::RankTooSmall {
                        required,
                        found: rank,
                    },
                ));
            }
        }
        let max_interval_rank = match level {
            EdgewiseLevel::K(k) => (k - 1) as usize,
            EdgewiseLevel::Strong => rank,
        };
        match self.edgewise_sweep(p, rank, max_interval_rank)? {
            None => Ok(CmVerdict::pass(property)),
            Some(witness) => Ok(CmVerdict::fail(property, witness)),
        }
    }

    /// Check every closed interval of rank 1..=max_interval_rank in
    /// canonical order; return the first failure.
    fn edgewise_sweep(
        &self,
        p: &Poset,
        rank: usize,
        max_interval_rank: usize,
    ) -> Result<Option<Witness>, CmError> {
        let ranks = p.rank_function().expect("graded");
        let n = p.len();
        for lo in 0..n {
            for hi in 0..n {
                if !p.lt(lo, hi) {
                    continue;
                }
                let interval_rank = ranks[hi] - ranks[lo];
                if interval_rank == 0 || interval_rank > max_interval_rank {
                    continue;
                }
                let q = p
                    .remove_interval_edges(lo, hi)
                    .expect("endpoints are comparable");
                let wrap = |cause: Witness| {
                    Some(Witness::IntervalRemovalBreaks {
                        lo: p.label(lo).to_owned(),
                        hi: p.label(hi).to_owned(),
                        cause: Box::new(cause),
                    })
                };
                let (graded, q_rank) = q.grading();
                if !graded {
                    return Ok(wrap(Witness::NotGraded));
                }
                if q_rank != Some(rank) {
                    return Ok(wrap(Witness::RankChanged {
                        expected: rank,
                        found: q_rank.unwrap(),
                    }));
                }
                let inner = self.is_cm(&q, Route::IntervalCondition)?;
                if !inner.holds {
                    return Ok(wrap(inner.witness.unwrap()));
                }
            }
        }
        Ok(None)
    }

    /// The largest k for which the poset is edgewise k-CM; 0 when the poset
    /// is empty or not Cohen-Macaulay. Always at most rank + 1, with
    /// equality exactly for the edgewise strongly Cohen-Macaulay posets.
    pub fn edgewise_connectivity(&self, p: &Poset) -> u32 {
        if p.is_empty() {
            return 0;
        }
        let base = self
            .is_cm(p, Route::IntervalCondition)
            .expect("nonempty poset");
        if !base.holds {
            return 0;
        }
        let rank = p.grading().1.expect("Cohen-Macaulay posets are graded");
        for interval_rank in 1..=rank {
            let failed = self
                .sweep_single_rank(p, rank, interval_rank)
                .expect("nonempty poset");
            if failed {
                return interval_rank as u32;
            }
        }
        (rank + 1) as u32
    }

    fn sweep_single_rank(
        &self,
        p: &Poset,
        rank: usize,
        interval_rank: usize,
    ) -> Result<bool, CmError> {
        let ranks = p.rank_function().expect("graded");
        let n = p.len();
        for lo in 0..n {
            for hi in 0..n {
                if !p.lt(lo, hi) || ranks[hi] - ranks[lo] != interval_rank {
                    continue;
                }
                let q = p.remove_interval_edges(lo, hi).expect("comparable");
                let (graded, q_rank) = q.grading();
                if !graded || q_rank != Some(rank) {
                    return Ok(true);
                }
                if !self.is_cm(&q, Route::IntervalCondition)?.holds {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// All index subsets of {0..n} of the given size, as masks in
/// lexicographic order of the index sets.
fn combinations(n: usize, size: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..=n - left {
            rec(i + 1, n, left - 1, acc | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    if size <= n {
        rec(0, n, size, 0, &mut out);
    }
    out
}

/// Convenience wrappers constructing a one-shot analyzer.
pub fn is_cm(p: &Poset, field: &FieldSpec, route: Route) -> Result<CmVerdict, CmError> {
    Analyzer::new(field.clone()).is_cm(p, route)
}

pub fn is_gorenstein_star(p: &Poset, field: &FieldSpec) -> Result<CmVerdict, CmError> {
    Analyzer::new(field.clone()).is_gorenstein_star(p)
}

pub fn is_k_cm(p: &Poset, k: u32, field: &FieldSpec) -> Result<CmVerdict, CmError> {
    Analyzer::new(field.clone()).is_k_cm(p, k)
}

pub fn is_edgewise_k_cm(
    p: &Poset,
    level: EdgewiseLevel,
    field: &FieldSpec,
) -> Result<CmVerdict, CmError> {
    Analyzer::new(field.clone()).is_edgewise_k_cm(p, level)
}

pub fn edgewise_cm_connectivity(p: &Poset, field: &FieldSpec) -> u32 {
    Analyzer::new(field.clone()).edgewise_connectivity(p)
}

/// Re-check a witness in isolation: true when the recorded failure still
/// occurs on this poset over this field.
pub fn replay_witness(p: &Poset, field: &FieldSpec, witness: &Witness) -> bool {
    let analyzer = Analyzer::new(field.clone());
    match witness {
        Witness::NotPure { .. } => !order_complex(p).is_pure(),
        Witness::LinkHomology {
            face,
            betti_dim,
            betti,
        } => {
            let delta = order_complex(p);
            match delta.link(face) {
                Ok(link) => {
                    *betti != 0
                        && *betti_dim < link.dim()
                        && analyzer.betti(&link).get(*betti_dim) == *betti
                }
                Err(_) => false,
            }
        }
        Witness::TopBettiNotOne { face, .. } => {
            let delta = order_complex(p);
            match delta.link(face) {
                Ok(link) => analyzer.betti(&link).top() != 1,
                Err(_) => false,
            }
        }
        Witness::IntervalHomology {
            lo,
            hi,
            betti_dim,
            betti,
        } => {
            let hat = p.add_bounds();
            let (bot, top) = p.bound_indices();
            let resolve = |end: &Option<String>, fallback: usize| -> Option<usize> {
                match end {
                    Some(label) => hat.index_of(label),
                    None => Some(fallback),
                }
            };
            let (Some(lo_i), Some(hi_i)) = (resolve(lo, bot), resolve(hi, top)) else {
                return false;
            };
            if !hat.lt(lo_i, hi_i) {
                return false;
            }
            let sub = hat
                .interval(Interval::Open { lo: lo_i, hi: hi_i })
                .expect("comparable");
            let complex = order_complex(&sub);
            *betti != 0
                && *betti_dim < complex.dim()
                && analyzer.betti(&complex).get(*betti_dim) == *betti
        }
        Witness::RankTooSmall { required, .. } => {
            let (graded, rank) = p.grading();
            graded && rank.is_some_and(|r| r < *required)
        }
        Witness::DeletionBreaks { removed, cause } => {
            let mut mask = p.full_mask();
            for label in removed {
                match p.index_of(label) {
                    Some(i) => mask &= !(1 << i),
                    None => return false,
                }
            }
            if mask == 0 {
                return false;
            }
            replay_witness(&p.induced(mask), field, cause)
        }
        Witness::EmptyAfterDeletion { removed } => {
            removed.len() == p.len() && removed.iter().all(|l| p.index_of(l).is_some())
        }
        Witness::IntervalRemovalBreaks { lo, hi, cause } => {
            let (Some(lo_i), Some(hi_i)) = (p.index_of(lo), p.index_of(hi)) else {
                return false;
            };
            match p.remove_interval_edges(lo_i, hi_i) {
                Ok(q) => replay_witness(&q, field, cause),
                Err(_) => false,
            }
        }
        Witness::NotGraded => !p.grading().0,
        Witness::RankChanged { expected, found } => {
            let (graded, rank) = p.grading();
            graded && rank == Some(*found) && found != expected
        }
        Witness::NotShellable => {
            matches!(
                crate::shelling::is_shellable(
                    &order_complex(p),
                    crate::shelling::DEFAULT_SHELLING_BUDGET
                ),
                Ok(None)
            )
        }
    }
}
