//! Matching complexes of small graphs.
//!
//! Builds the matching complex of a simple graph, computes reduced homology
//! over prime fields, decides the homology-manifold conditions (closed or with
//! boundary), classifies the resulting manifolds, and predicts the answer for
//! the families where a closed form is known.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod bits;
pub mod canon;
pub mod catalog;
pub mod complex;
pub mod graph;
pub mod graph6;
pub mod homology;
pub mod manifold;

pub use bits::SmallSet;
pub use canon::{canonical_form, canonical_form_with_cap, CanonError};
pub use catalog::{predict, BasicGraphKind, Decomposition, ExceptionalEntry, Prediction};
pub use complex::{Complex, ComplexError, FVector};
pub use graph::{Graph, GraphError, Matching};
pub use homology::{betti_reduced, BettiVector, FieldPrime, HomologyError};
pub use manifold::{
    check_manifold, classification, classify, Classification, ManifoldClass, ManifoldStatus,
    ManifoldVerdict,
};
