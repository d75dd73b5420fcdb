//! Brute-force shellability of pure complexes, and the edgewise strong
//! shellability sweep over interval-edge removals.
//!
//! A shelling of a pure complex is an ordering F_1, ..., F_t of its facets
//! such that for j >= 2 the intersection of F_j with the union of the
//! earlier facets is a nonempty pure subcomplex of dimension dim(F_j) − 1.
//! The search is plain backtracking over facet orderings with a node
//! budget; exceeding the budget is an explicit inconclusive outcome, never
//! a "no". A found order is re-checkable by [`verify_shelling`], which is
//! deliberately separate code from the searcher.

use std::fmt;

use crate::cm::{Analyzer, CmVerdict, Route, Witness};
use crate::complex::{order_complex, SimplicialComplex};
use crate::homology::FieldSpec;
use crate::poset::Poset;

pub const DEFAULT_SHELLING_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShellingError {
    NotPure,
    NotGraded,
    /// The backtracking search ran out of nodes; `interval` names the
    /// offending removal during an edgewise sweep.
    BudgetExceeded {
        nodes: u64,
        interval: Option<(String, String)>,
    },
}

impl fmt::Display for ShellingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShellingError::NotPure => write!(f, "shellability is only decided for pure complexes"),
            ShellingError::NotGraded => write!(f, "poset is not graded"),
            ShellingError::BudgetExceeded { nodes, interval } => {
                write!(f, "search budget of {nodes} nodes exceeded")?;
                if let Some((lo, hi)) = interval {
                    write!(f, " on interval [{lo}, {hi}]")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for ShellingError {}

/// Whether `facet` may be attached after the facets in `chosen`: every
/// earlier intersection must lie inside an earlier intersection of
/// codimension one.
fn attachable(facet: u64, chosen: &[u64]) -> bool {
    let want = facet.count_ones() - 1;
    chosen.iter().all(|&g| {
        let cap = facet & g;
        chosen
            .iter()
            .any(|&h| (facet & h).count_ones() == want && cap & !(facet & h) == 0)
    })
}

/// Search for a shelling order. Returns the facet indices of a certificate
/// order, `None` after an exhaustive search found no shelling, or the
/// budget error.
pub fn is_shellable(
    complex: &SimplicialComplex,
    budget: u64,
) -> Result<Option<Vec<usize>>, ShellingError> {
    if !complex.is_pure() {
        return Err(ShellingError::NotPure);
    }
    let facets = complex.facet_masks();
    let t = facets.len();
    if t <= 1 {
        return Ok(Some((0..t).collect()));
    }
    // Pairwise intersection sizes, precomputed for pruning: a facet is only
    // worth trying when some already-chosen facet meets it in codimension
    // one (checked inside `attachable` anyway, but the dense table makes the
    // candidate scan cheap).
    let inter: Vec<Vec<u32>> = (0..t)
        .map(|i| (0..t).map(|j| (facets[i] & facets[j]).count_ones()).collect())
        .collect();
    let codim1 = facets[0].count_ones() - 1;

    struct Search<'a> {
        facets: &'a [u64],
        inter: &'a [Vec<u32>],
        codim1: u32,
        used: Vec<bool>,
        order: Vec<usize>,
        chosen: Vec<u64>,
        nodes: u64,
        budget: u64,
    }

    enum Outcome {
        Found,
        Exhausted,
        OutOfBudget,
    }

    impl Search<'_> {
        fn step(&mut self) -> Outcome {
            if self.order.len() == self.facets.len() {
                return Outcome::Found;
            }
            for candidate in 0..self.facets.len() {
                if self.used[candidate] {
                    continue;
                }
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Outcome::OutOfBudget;
                }
                // Cheap pre-filter from the intersection table.
                let touches = self
                    .order
                    .iter()
                    .any(|&earlier| self.inter[candidate][earlier] == self.codim1);
                if !touches || !attachable(self.facets[candidate], &self.chosen) {
                    continue;
                }
                self.used[candidate] = true;
                self.order.push(candidate);
                self.chosen.push(self.facets[candidate]);
                match self.step() {
                    Outcome::Exhausted => {}
                    other => return other,
                }
                self.used[candidate] = false;
                self.order.pop();
                self.chosen.pop();
            }
            Outcome::Exhausted
        }
    }

    // 0-dimensional pure complexes are shellable in any order.
    if codim1 == 0 {
        return Ok(Some((0..t).collect()));
    }

    let mut nodes_total = 0u64;
    for first in 0..t {
        let mut search = Search {
            facets,
            inter: &inter,
            codim1,
            used: vec![false; t],
            order: vec![first],
            chosen: vec![facets[first]],
            nodes: nodes_total,
            budget,
        };
        search.used[first] = true;
        match search.step() {
            Outcome::Found => return Ok(Some(search.order)),
            Outcome::OutOfBudget => {
                return Err(ShellingError::BudgetExceeded {
                    nodes: budget,
                    interval: None,
                })
            }
            Outcome::Exhausted => nodes_total = search.nodes,
        }
    }
    Ok(None)
}

/// Independent certificate checker: replays the order in linear passes over
/// the definition, sharing no state with the searcher.
pub fn verify_shelling(complex: &SimplicialComplex, order: &[usize]) -> bool {
    let facets = complex.facet_masks();
    if order.len() != facets.len() {
        return false;
    }
    let mut seen = vec![false; facets.len()];
    for &i in order {
        if i >= facets.len() || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    if !complex.is_pure() {
        return false;
    }
    for j in 1..order.len() {
        let facet = facets[order[j]];
        let want = facet.count_ones() as i32 - 1;
        if want < 0 {
            return false;
        }
        // Each earlier intersection must be covered by a codimension-one
        // earlier intersection, and (for positive dimension) at least one
        // such intersection must exist.
        let earlier: Vec<u64> = order[..j].iter().map(|&i| facets[i] & facet).collect();
        let ridges: Vec<u64> = earlier
            .iter()
            .copied()
            .filter(|m| m.count_ones() as i32 == want)
            .collect();
        if want > 0 && ridges.is_empty() {
            return false;
        }
        if !earlier
            .iter()
            .all(|&cap| ridges.iter().any(|&r| cap & !r == 0))
        {
            return false;
        }
    }
    true
}

/// Edgewise strong shellability: removing the Hasse edges of any closed
/// interval leaves a pure shellable complex of the full rank. A removal
/// whose complex is not even Cohen-Macaulay over GF(2) is reported without
/// searching, since shellable complexes are Cohen-Macaulay over every
/// field.
pub fn is_edgewise_strongly_shellable(
    p: &Poset,
    budget: u64,
) -> Result<CmVerdict, ShellingError> {
    let property = "edgewise-strongly-shellable";
    let (graded, rank) = p.grading();
    if !graded {
        return Err(ShellingError::NotGraded);
    }
    let Some(rank) = rank else {
        // Empty poset: nothing to remove, trivially shellable.
        return Ok(CmVerdict {
            property: property.to_owned(),
            holds: true,
            witness: None,
        });
    };
    let analyzer = Analyzer::new(FieldSpec::PrimeField(2));
    let ranks = p.rank_function().expect("graded");

    let check = |q: &Poset,
                     interval: Option<(usize, usize)>|
     -> Result<Option<Witness>, ShellingError> {
        let wrap = |cause: Witness| match interval {
            None => cause,
            Some((lo, hi)) => Witness::IntervalRemovalBreaks {
                lo: p.label(lo).to_owned(),
                hi: p.label(hi).to_owned(),
                cause: Box::new(cause),
            },
        };
        let (q_graded, q_rank) = q.grading();
        if !q_graded {
            return Ok(Some(wrap(Witness::NotGraded)));
        }
        if q_rank != Some(rank) {
            return Ok(Some(wrap(Witness::RankChanged {
                expected: rank,
                found: q_rank.unwrap(),
            })));
        }
        let cm = analyzer
            .is_cm(q, Route::IntervalCondition)
            .expect("nonempty poset");
        if !cm.holds {
            return Ok(Some(wrap(cm.witness.unwrap())));
        }
        let complex = order_complex(q);
        match is_shellable(&complex, budget) {
            Ok(Some(order)) => {
                debug_assert!(verify_shelling(&complex, &order));
                Ok(None)
            }
            Ok(None) => Ok(Some(wrap(Witness::NotShellable))),
            Err(ShellingError::BudgetExceeded { nodes, .. }) => {
                Err(ShellingError::BudgetExceeded {
                    nodes,
                    interval: interval.map(|(lo, hi)| {
                        (p.label(lo).to_owned(), p.label(hi).to_owned())
                    }),
                })
            }
            Err(e) => Err(e),
        }
    };

    // Rank-zero intervals leave the poset unchanged; check it once.
    if let Some(w) = check(p, None)? {
        return Ok(CmVerdict {
            property: property.to_owned(),
            holds: false,
            witness: Some(w),
        });
    }
    for lo in 0..p.len() {
        for hi in 0..p.len() {
            if !p.lt(lo, hi) || ranks[hi] == ranks[lo] {
                continue;
            }
            let q = p.remove_interval_edges(lo, hi).expect("comparable");
            if let Some(w) = check(&q, Some((lo, hi)))? {
                return Ok(CmVerdict {
                    property: property.to_owned(),
                    holds: false,
                    witness: Some(w),
                });
            }
        }
    }
    Ok(CmVerdict {
        property: property.to_owned(),
        holds: true,
        witness: None,
    })
}
