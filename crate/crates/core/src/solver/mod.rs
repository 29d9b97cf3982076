//! The two-way partition solvers and the p-way reduction.

pub mod general;
pub mod k4free;
pub mod multiway;

use crate::budgets::DegreeFunction;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::partition_state::{is_feasible_partition, SearchTrace};
use crate::vertex_set::VertexSet;

/// A single failed hypothesis of a solver, with enough detail to name the
/// offending vertices or edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PreconditionIssue {
    /// Vertex of degree zero.
    IsolatedVertex { vertex: usize },
    /// Per-vertex degree bound `d_G(v) >= a(v) + b(v) + 2 w_G(v) - relax`.
    DegreeBound {
        vertex: usize,
        degree: i64,
        required: i64,
    },
    /// An edge whose endpoints have two common neighbors.
    K4MinusSubgraph {
        edge: (usize, usize),
        common: (usize, usize),
    },
    /// Budget below the required pointwise floor.
    BudgetBelowFloor {
        side: char,
        vertex: usize,
        floor: i64,
    },
    /// Instance too small for the solver.
    TooFewVertices { n: usize, minimum: usize },
}

impl std::fmt::Display for PreconditionIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PreconditionIssue::IsolatedVertex { vertex } => {
                write!(f, "vertex {vertex} is isolated")
            }
            PreconditionIssue::DegreeBound {
                vertex,
                degree,
                required,
            } => write!(
                f,
                "degree bound fails at vertex {vertex}: {degree} < {required}"
            ),
            PreconditionIssue::K4MinusSubgraph { edge, common } => write!(
                f,
                "edge ({},{}) has two common neighbors {} and {}",
                edge.0, edge.1, common.0, common.1
            ),
            PreconditionIssue::BudgetBelowFloor {
                side,
                vertex,
                floor,
            } => write!(f, "budget {side}({vertex}) is below the floor {floor}"),
            PreconditionIssue::TooFewVertices { n, minimum } => {
                write!(
                    f,
                    "graph has {n} vertices; this solver needs at least {minimum}"
                )
            }
        }
    }
}

/// Outcome of a precondition check: empty issue list means the instance is
/// admissible.
#[derive(Clone, Debug, Default)]
pub struct PreconditionReport {
    pub issues: Vec<PreconditionIssue>,
}

impl PreconditionReport {
    pub fn ok(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn summary(&self) -> String {
        self.issues
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl std::fmt::Display for PreconditionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok() {
            write!(f, "all preconditions hold")
        } else {
            write!(f, "{}", self.summary())
        }
    }
}

/// A solved two-way instance: the partition plus the exchange log.
#[derive(Clone, Debug)]
pub struct Solution {
    pub a_side: VertexSet,
    pub b_side: VertexSet,
    pub trace: SearchTrace,
}

pub(crate) fn validate_budget_lengths(
    g: &Multigraph,
    a: &DegreeFunction,
    b: &DegreeFunction,
) -> Result<()> {
    let n = g.vertex_count();
    if a.len() != n || b.len() != n {
        return Err(Error::Input(format!(
            "budgets must cover all {n} vertices (got {} and {})",
            a.len(),
            b.len()
        )));
    }
    let ceiling = g.total_edge_multiplicity() as i128
        + a.values().iter().map(|&x| x as i128).sum::<i128>()
        + b.values().iter().map(|&x| x as i128).sum::<i128>();
    if ceiling > i64::MAX as i128 / 4 {
        return Err(Error::Input(
            "budgets too large for exact weight arithmetic".into(),
        ));
    }
    Ok(())
}

/// Final gate on every solver exit path: the output must pass the plain
/// feasibility predicate, independent of how the search got there.
pub(crate) fn ensure_feasible(
    g: &Multigraph,
    a: &DegreeFunction,
    b: &DegreeFunction,
    a_side: &VertexSet,
    b_side: &VertexSet,
) -> Result<()> {
    if is_feasible_partition(g, a, b, a_side, b_side) {
        Ok(())
    } else {
        Err(Error::Invariant(format!(
            "solver produced an infeasible partition: A={:?} B={:?}",
            a_side.to_vec(),
            b_side.to_vec()
        )))
    }
}

/// Rewraps an error from a step whose preconditions were already
/// established; any failure there is a bug, not bad input.
pub(crate) fn to_invariant(e: Error, ctx: &str) -> Error {
    match e {
        Error::Invariant(msg) => Error::Invariant(msg),
        other => Error::Invariant(format!("{ctx}: {other}")),
    }
}
