//! Topological combinatorics of finite posets.
//!
//! The crate decides Cohen-Macaulay-type properties of finite partially
//! ordered sets through exact simplicial homology of their order complexes:
//! plain Cohen-Macaulayness (by two independent routes), Gorenstein*-ness,
//! k-Cohen-Macaulayness, the edgewise variants obtained by deleting all
//! Hasse edges inside a closed interval, the resulting edgewise
//! Cohen-Macaulay connectivity, and brute-force shellability.
//!
//! Everything is exact: homology ranks are computed by fraction-free
//! elimination over the rationals or by dense elimination over a prime
//! field, never floating point.
//!
//! The main entry points are:
//! - [`poset::Poset`] — ground sets of at most 64 elements with a cached
//!   order closure and validated Hasse diagrams,
//! - [`complex::order_complex`] and the local operations (link, open star,
//!   contrastar, vertex deletion),
//! - [`homology::reduced_betti`] — reduced Betti vectors over a
//!   [`homology::FieldSpec`],
//! - [`cm::Analyzer`] — the Cohen-Macaulay family of checks with memoized
//!   Betti vectors,
//! - [`shelling::is_shellable`] — backtracking shelling search with an
//!   independent certificate checker,
//! - [`catalog`] — deterministic generators for the standard families
//!   (Boolean lattices, polytope face lattices, partition lattices, ...),
//! - [`sample`] — seeded, counter-based random poset generation.

pub mod catalog;
pub mod cm;
pub mod complex;
pub mod homology;
pub mod lattice;
pub mod poset;
pub mod sample;
pub mod shelling;

pub use cm::{Analyzer, CmVerdict, EdgewiseLevel, Route, Witness};
pub use complex::{order_complex, SimplicialComplex};
pub use homology::{is_acyclic, reduced_betti, BettiVector, FieldSpec};
pub use poset::{Interval, Poset, PosetError};
