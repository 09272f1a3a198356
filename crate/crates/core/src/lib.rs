//! Decomposition, kernel-bound, and independent-set machinery for
//! (weighted) bull-free graphs and trigraphs, plus the sparse-SAT
//! hardness-instance pipeline. Every nontrivial detector ships with a
//! desk-scale brute-force oracle so results can be cross-checked.

pub mod alpha;
pub mod bounds;
pub mod error;
pub mod format;
pub mod gen;
pub mod high_girth;
pub mod homogeneous;
pub mod pattern;
pub mod reduction;
pub mod solve;
pub mod t1;
pub mod trigraph;

pub use error::{Error, Result};
pub use trigraph::{Trigraph, VertexId};
