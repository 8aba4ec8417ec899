//! Tree approximations of filtered posets, metric graphs and finite metric
//! spaces through Reeb poset and Reeb tree quotients.
//!
//! The pipeline: a finite poset with a real filtration induces a path metric
//! `d_f`; collapsing superlevel-set components yields a tree poset whose
//! metric `t_f` approximates `d_f` with error controlled by the poset
//! hyperbolicity and the maximal fence length. Metric graphs enter through
//! the base-point order `<=_p`, finite metric spaces through isometric graph
//! embeddings.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bench;
pub mod dist;
pub mod graph;
pub mod metric;
pub mod poset;
pub mod reeb;

pub use dist::DistanceMatrix;
pub use graph::MetricGraph;
pub use metric::FiniteMetricSpace;
pub use poset::Poset;
pub use reeb::{FilteredPoset, ReebPoset, ReebTree};

/// Absolute tolerance for floating point comparisons in invariant checks.
pub const DEFAULT_TOL: f64 = 1e-9;

pub(crate) fn fabs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}

/// Logarithm base 2, the convention used by every bound in this crate.
pub fn log2(x: f64) -> f64 {
    libm::log2(x)
}
