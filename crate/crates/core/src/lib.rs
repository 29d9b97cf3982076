//! Degree-constrained vertex partitions of loopless multigraphs.
//!
//! Given per-vertex budgets `a` and `b`, a partition `(A, B)` of the
//! vertex set is *feasible* when every vertex keeps at least its budget
//! inside its own side: `d_A(v) >= a(v)` on A and `d_B(v) >= b(v)` on B.
//! With `w_G(v)` the largest multiplicity on an edge at `v`, a feasible
//! partition always exists once `delta(G) >= 1` and
//!
//! * `d_G(v) >= a(v) + b(v) + 2 w_G(v) - 1` everywhere
//!   ([`solver::general`]), or
//! * `d_G(v) >= a(v) + b(v) + 2 w_G(v) - 2` everywhere, `a, b >= 1`, and
//!   no edge has two common neighbors ([`solver::k4free`]; this covers
//!   triangle-free graphs in particular).
//!
//! The solvers turn those guarantees into terminating exchange searches
//! and always validate their own output. The [`oracle`] module provides
//! brute-force ground truth at small sizes, including certification of
//! the instance families showing neither bound can be lowered further.

pub mod budgets;
pub mod error;
pub mod format;
pub mod generators;
pub mod multigraph;
pub mod niceness;
pub mod oracle;
pub mod partition_state;
pub mod solver;
pub mod vertex_set;

pub use budgets::DegreeFunction;
pub use error::{Error, Result};
pub use multigraph::{Multigraph, MultigraphBuilder};
pub use partition_state::{is_feasible_partition, PartitionState, SearchTrace};
pub use solver::{PreconditionIssue, PreconditionReport, Solution};
pub use vertex_set::VertexSet;
