//! Two-way solver for arbitrary loopless multigraphs.
//!
//! Admissible instances satisfy `delta(G) >= 1` and, at every vertex,
//! `d_G(v) >= a(v) + b(v) + 2 w_G(v) - 1`. Under that bound a feasible
//! partition always exists, and the exchange search below finds one: it
//! starts from an inclusion-minimal a-nice seed and repeatedly moves a
//! budget-violating vertex across, each move raising the partition
//! potential by at least 1, until both sides contain nice subsets that a
//! final extension grows into a partition.

use crate::budgets::DegreeFunction;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::niceness::{maximal_nice_subset, minimal_nice_subset};
use crate::partition_state::{
    extend_feasible_pair, MoveKind, MoveRecord, PartitionState, SearchTrace,
};
use crate::vertex_set::VertexSet;

use super::{
    ensure_feasible, to_invariant, validate_budget_lengths, PreconditionIssue, PreconditionReport,
    Solution,
};

/// Checks `delta(G) >= 1` and the per-vertex bound
/// `d_G(v) >= a(v) + b(v) + 2 w_G(v) - 1`, listing every violation.
pub fn check_general(g: &Multigraph, a: &DegreeFunction, b: &DegreeFunction) -> PreconditionReport {
    debug_assert_eq!(a.len(), g.vertex_count());
    debug_assert_eq!(b.len(), g.vertex_count());
    let mut issues = Vec::new();
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            issues.push(PreconditionIssue::IsolatedVertex { vertex: v });
        }
    }
    if g.vertex_count() < 2 {
        issues.push(PreconditionIssue::TooFewVertices {
            n: g.vertex_count(),
            minimum: 2,
        });
    }
    for v in 0..g.vertex_count() {
        let degree = g.degree(v) as i64;
        let required = a.get(v) + b.get(v) + 2 * g.vertex_weight(v) as i64 - 1;
        if degree < required {
            issues.push(PreconditionIssue::DegreeBound {
                vertex: v,
                degree,
                required,
            });
        }
    }
    PreconditionReport { issues }
}

/// Produces a partition `(A, B)` with `A` a-nice and `B` b-nice.
///
/// Requires [`check_general`] to pass. The search maintains that both
/// sides are meager for their budgets, so a cross-move witness always
/// exists and every move gains at least 1; the potential is bounded by
/// `|E| + sum(a + b)`, which also bounds the move count.
pub fn partition_general(
    g: &Multigraph,
    a: &DegreeFunction,
    b: &DegreeFunction,
) -> Result<Solution> {
    validate_budget_lengths(g, a, b)?;
    let report = check_general(g, a, b);
    if !report.ok() {
        return Err(Error::Precondition(report.summary()));
    }
    let n = g.vertex_count();
    let w = |v: usize| g.vertex_weight(v) as i64;

    // A zero budget makes a singleton side work outright.
    if let Some(v) = (0..n).find(|&v| a.get(v) == 0) {
        let a_side = VertexSet::from_ids(n, &[v])?;
        let b_side = a_side.complement();
        ensure_feasible(g, a, b, &a_side, &b_side)?;
        return Ok(Solution {
            a_side,
            b_side,
            trace: SearchTrace::new(),
        });
    }
    if let Some(v) = (0..n).find(|&v| b.get(v) == 0) {
        let b_side = VertexSet::from_ids(n, &[v])?;
        let a_side = b_side.complement();
        ensure_feasible(g, a, b, &a_side, &b_side)?;
        return Ok(Solution {
            a_side,
            b_side,
            trace: SearchTrace::new(),
        });
    }

    // Seed: an inclusion-minimal a-nice set. It exists because V itself is
    // a-nice under the degree bound, and minimality makes it a-meager.
    let full = VertexSet::full(n);
    let seed = minimal_nice_subset(g, &full, a)
        .ok_or_else(|| Error::Invariant("no a-nice seed under the degree bound".into()))?;
    let rest = seed.complement();
    if rest.is_empty() {
        return Err(Error::Invariant(
            "minimal a-nice seed covered the whole vertex set".into(),
        ));
    }
    let mut state = PartitionState::new(g, a, b, &seed, &rest)?;
    let mut trace = SearchTrace::new();

    let max_weight = g.total_edge_multiplicity() as i64 + a.sum() + b.sum();
    let move_cap = max_weight + 1;
    for _ in 0..=move_cap {
        let side_a = state.side_a();
        let side_b = state.side_b();
        let nice_a = maximal_nice_subset(g, &side_a, a);
        let nice_b = maximal_nice_subset(g, &side_b, b);
        if !nice_a.is_empty() && !nice_b.is_empty() {
            let (a_side, b_side) = extend_feasible_pair(g, &nice_a, &nice_b, a, b)
                .map_err(|e| to_invariant(e, "extending the discovered feasible pair"))?;
            ensure_feasible(g, a, b, &a_side, &b_side)?;
            if trace.move_count() as i64 > max_weight {
                return Err(Error::Invariant(
                    "move count exceeded |E| + sum(a+b)".into(),
                ));
            }
            return Ok(Solution {
                a_side,
                b_side,
                trace,
            });
        }

        let record = if nice_a.is_empty() {
            // A has no a-nice subset, so pulling any vertex in keeps it
            // a-meager; B's meager witness y gains at least 1.
            let y = side_b
                .iter()
                .find(|&y| state.deg_b(y) < b.get(y) + w(y))
                .ok_or_else(|| Error::Invariant("B-side meager witness missing".into()))?;
            let delta = state.delta_to_a(y);
            if delta < 1 {
                return Err(Error::Invariant(format!(
                    "pull of {y} gains {delta}, expected >= 1"
                )));
            }
            let rec = MoveRecord {
                kind: MoveKind::ToA,
                vertices: vec![y],
                weight_before: state.weight(),
                weight_after: state.weight() + delta,
                a_size_before: state.a_size(),
                a_size_after: state.a_size() + 1,
            };
            state = state
                .moved_to_a(y)
                .map_err(|e| to_invariant(e, "exchange move"))?;
            rec
        } else {
            let x = side_a
                .iter()
                .find(|&x| state.deg_a(x) < a.get(x) + w(x))
                .ok_or_else(|| Error::Invariant("A-side meager witness missing".into()))?;
            let delta = state.delta_to_b(x);
            if delta < 1 {
                return Err(Error::Invariant(format!(
                    "push of {x} gains {delta}, expected >= 1"
                )));
            }
            let rec = MoveRecord {
                kind: MoveKind::ToB,
                vertices: vec![x],
                weight_before: state.weight(),
                weight_after: state.weight() + delta,
                a_size_before: state.a_size(),
                a_size_after: state.a_size() - 1,
            };
            state = state
                .moved_to_b(x)
                .map_err(|e| to_invariant(e, "exchange move"))?;
            rec
        };
        trace.records.push(record);

        #[cfg(debug_assertions)]
        {
            use crate::niceness::is_meager;
            debug_assert!(is_meager(g, &state.side_a(), a).unwrap());
            debug_assert!(is_meager(g, &state.side_b(), b).unwrap());
        }
    }
    Err(Error::Invariant(
        "exchange search exceeded its move bound".into(),
    ))
}
