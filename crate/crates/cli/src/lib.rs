//! Shared pieces of the `mvlab` binary: flag parsing helpers and the
//! acceptance suite.

pub mod parse;
pub mod suite;
