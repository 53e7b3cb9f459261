//! Formats, exhaustive verification and randomized property checks for
//! matching complexes, on top of `matchplex-core`.
//!
//! The `matchplex` binary is a thin front end over these modules.

pub mod cli;
pub mod edges;
pub mod enumerate;
pub mod export;
pub mod named;
pub mod props;
pub mod verify;

pub use matchplex_core as core;
