//! Command-line frontend for the poset topology toolkit: poset document
//! I/O, property-check reports, DOT export, and the counterexample search
//! harness. The document formats and the certificate replay machinery live
//! here so they can be exercised (and fuzzed) without going through a
//! process boundary.

pub mod commands;
pub mod dot;
pub mod format;
pub mod report;
pub mod search;

pub use commands::{run, EXIT_ASSERT_FAILED, EXIT_BAD_INPUT, EXIT_OK};
