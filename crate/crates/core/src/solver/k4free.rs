//! Two-way solver for K4-minus-free multigraphs at the relaxed bound
//! `d_G(v) >= a(v) + b(v) + 2 w_G(v) - 2` with `a, b >= 1`.
//!
//! Triangle-free graphs are K4-minus-free, so they are covered at the same
//! bound. The search drives the lexicographic potential (maximize the
//! partition weight, then minimize `|A|`): every iteration either exits
//! with a feasible pair, applies a strictly improving exchange, or emits a
//! directly validated construction. The instance must have at least four
//! vertices: every smaller instance passing the remaining checks is an
//! equal-multiplicity triangle with unit budgets, which has no feasible
//! partition at this bound.

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

/// Checks `|V| >= 4`, `delta(G) >= 1`, `a, b >= 1`, K4-minus-freeness, and
/// the per-vertex bound `d_G(v) >= a(v) + b(v) + 2 w_G(v) - 2`.
pub fn check_k4free(g: &Multigraph, a: &DegreeFunction, b: &DegreeFunction) -> PreconditionReport {
    debug_assert_eq!(a.len(), g.vertex_count());
    debug_assert_eq!(b.len(), g.vertex_count());
    let n = g.vertex_count();
    let mut issues = Vec::new();
    if n < 4 {
        issues.push(PreconditionIssue::TooFewVertices { n, minimum: 4 });
    }
    for v in 0..n {
        if g.degree(v) == 0 {
            issues.push(PreconditionIssue::IsolatedVertex { vertex: v });
        }
    }
    for v in 0..n {
        if a.get(v) < 1 {
            issues.push(PreconditionIssue::BudgetBelowFloor {
                side: 'a',
                vertex: v,
                floor: 1,
            });
        }
        if b.get(v) < 1 {
            issues.push(PreconditionIssue::BudgetBelowFloor {
                side: 'b',
                vertex: v,
                floor: 1,
            });
        }
    }
    if let Some((u, v, w1, w2)) = g.k4minus_witness() {
        issues.push(PreconditionIssue::K4MinusSubgraph {
            edge: (u, v),
            common: (w1, w2),
        });
    }
    for v in 0..n {
        let degree = g.degree(v) as i64;
        let required = a.get(v) + b.get(v) + 2 * g.vertex_weight(v) as i64 - 2;
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

/// Handles edges whose endpoints both carry the minimum budget on one side.
///
/// When every edge `uv` satisfies `a(u) + a(v) >= 3` and
/// `b(u) + b(v) >= 3`, returns `None`. Otherwise one violating edge admits
/// a direct partition: the two endpoints (plus their unique common
/// neighbor, when it exists and also carries budget 1) form one side, and
/// the degree bound makes the remainder nice for the other. Every returned
/// partition is validated before being emitted.
pub fn edge_budget_preprocess(
    g: &Multigraph,
    a: &DegreeFunction,
    b: &DegreeFunction,
) -> Result<Option<(VertexSet, VertexSet)>> {
    let n = g.vertex_count();
    for &(u, v, _) in g.edges() {
        let (low_side, budget) = if b.get(u) + b.get(v) <= 2 {
            ('b', b)
        } else if a.get(u) + a.get(v) <= 2 {
            ('a', a)
        } else {
            continue;
        };
        let common = g.common_neighbors(u, v);
        if common.len() > 1 {
            return Err(Error::Invariant(format!(
                "edge ({u},{v}) has several common neighbors in a checked instance"
            )));
        }
        let mut small = VertexSet::from_ids(n, &[u, v])?;
        if let Some(&w) = common.first() {
            if budget.get(w) == 1 {
                small.insert(w);
            }
        }
        let big = small.complement();
        let (a_side, b_side) = if low_side == 'b' {
            (big, small)
        } else {
            (small, big)
        };
        ensure_feasible(g, a, b, &a_side, &b_side)?;
        return Ok(Some((a_side, b_side)));
    }
    Ok(None)
}

struct Search<'g> {
    g: &'g Multigraph,
    a: &'g DegreeFunction,
    b: &'g DegreeFunction,
    state: PartitionState<'g>,
    trace: SearchTrace,
}

impl<'g> Search<'g> {
    fn weight_fn(&self, v: usize) -> i64 {
        self.g.vertex_weight(v) as i64
    }

    /// Applies a single A-to-B move, checking it gains at least `min_delta`.
    fn push_to_b(&mut self, x: usize, min_delta: i64) -> Result<()> {
        let delta = self.state.delta_to_b(x);
        if delta < min_delta {
            return Err(Error::Invariant(format!(
                "push of {x} gains {delta}, expected >= {min_delta}"
            )));
        }
        self.trace.records.push(MoveRecord {
            kind: MoveKind::ToB,
            vertices: vec![x],
            weight_before: self.state.weight(),
            weight_after: self.state.weight() + delta,
            a_size_before: self.state.a_size(),
            a_size_after: self.state.a_size() - 1,
        });
        self.state = self
            .state
            .moved_to_b(x)
            .map_err(|e| to_invariant(e, "exchange move"))?;
        self.check_invariants()
    }

    /// Applies a single B-to-A move, checking it gains at least `min_delta`.
    fn pull_to_a(&mut self, y: usize, min_delta: i64) -> Result<()> {
        let delta = self.state.delta_to_a(y);
        if delta < min_delta {
            return Err(Error::Invariant(format!(
                "pull of {y} gains {delta}, expected >= {min_delta}"
            )));
        }
        self.trace.records.push(MoveRecord {
            kind: MoveKind::ToA,
            vertices: vec![y],
            weight_before: self.state.weight(),
            weight_after: self.state.weight() + delta,
            a_size_before: self.state.a_size(),
            a_size_after: self.state.a_size() + 1,
        });
        self.state = self
            .state
            .moved_to_a(y)
            .map_err(|e| to_invariant(e, "exchange move"))?;
        self.check_invariants()
    }

    /// Moves the adjacent pair `x, z` from A to B as one logged step.
    fn push_pair_to_b(&mut self, x: usize, z: usize, min_delta: i64) -> Result<()> {
        let mu = self.g.multiplicity(x, z).expect("valid pair") as i64;
        let delta = self.state.delta_to_b(x) + self.state.delta_to_b(z) + 2 * mu;
        if delta < min_delta {
            return Err(Error::Invariant(format!(
                "pair push of {x},{z} gains {delta}, expected >= {min_delta}"
            )));
        }
        self.trace.records.push(MoveRecord {
            kind: MoveKind::TwoToB,
            vertices: vec![x, z],
            weight_before: self.state.weight(),
            weight_after: self.state.weight() + delta,
            a_size_before: self.state.a_size(),
            a_size_after: self.state.a_size() - 2,
        });
        let mid = self
            .state
            .moved_to_b(x)
            .map_err(|e| to_invariant(e, "exchange move"))?;
        self.state = mid
            .moved_to_b(z)
            .map_err(|e| to_invariant(e, "exchange move"))?;
        self.check_invariants()
    }

    /// Debug check of the loop invariant: A stays a-meager and B stays
    /// meager one below its budget.
    fn check_invariants(&self) -> Result<()> {
        #[cfg(debug_assertions)]
        {
            use crate::niceness::is_meager;
            debug_assert!(is_meager(self.g, &self.state.side_a(), self.a).unwrap());
            debug_assert!(is_meager(self.g, &self.state.side_b(), &self.b.offset(-1)).unwrap());
        }
        Ok(())
    }

    fn finish_with_pair(self, nice_a: &VertexSet, nice_b: &VertexSet) -> Result<Solution> {
        let (a_side, b_side) = extend_feasible_pair(self.g, nice_a, nice_b, self.a, self.b)
            .map_err(|e| to_invariant(e, "extending the discovered feasible pair"))?;
        ensure_feasible(self.g, self.a, self.b, &a_side, &b_side)?;
        Ok(Solution {
            a_side,
            b_side,
            trace: self.trace,
        })
    }
}

/// Produces a feasible partition of a K4-minus-free instance.
///
/// Requires [`check_k4free`] to pass. After the edge preprocessing step,
/// the search keeps an a-meager side A against a side B that is meager one
/// below its budget, and every iteration either terminates or strictly
/// raises `(w(A,B), -|A|)` lexicographically.
pub fn partition_k4free(
    g: &Multigraph,
    a: &DegreeFunction,
    b: &DegreeFunction,
) -> Result<Solution> {
    validate_budget_lengths(g, a, b)?;
    let report = check_k4free(g, a, b);
    if !report.ok() {
        return Err(Error::Precondition(report.summary()));
    }
    if let Some((a_side, b_side)) = edge_budget_preprocess(g, a, b)? {
        return Ok(Solution {
            a_side,
            b_side,
            trace: SearchTrace::new(),
        });
    }

    let n = g.vertex_count();
    let full = VertexSet::full(n);
    let seed = minimal_nice_subset(g, &full, a)
        .ok_or_else(|| Error::Invariant("no a-nice seed under the degree bound".into()))?;
    let rest = seed.complement();
    if rest.is_empty() {
        return Err(Error::Invariant(
            "minimal a-nice seed covered the whole vertex set".into(),
        ));
    }

    // Budget b + w - 1: a nonempty subset nice at this threshold is b-nice
    // (weights are >= 1), and its absence says the set is meager one below b.
    let b_high = b.plus_weights(g).offset(-1);
    let a_high = a.plus_weights(g);

    let nice_b = maximal_nice_subset(g, &rest, b);
    let mut search = Search {
        g,
        a,
        b,
        state: PartitionState::new(g, a, b, &seed, &rest)?,
        trace: SearchTrace::new(),
    };
    if !nice_b.is_empty() {
        return search.finish_with_pair(&seed, &nice_b);
    }

    let max_weight = g.total_edge_multiplicity() as i64 + a.sum() + b.sum();
    let cap = ((max_weight as i128 + 1) * (n as i128 + 1) + 1).min(usize::MAX as i128) as usize;
    for _ in 0..cap {
        let side_a = search.state.side_a();
        let side_b = search.state.side_b();
        let w = |v: usize| search.weight_fn(v);
        let deg_a = |v: usize| search.state.deg_a(v);
        let deg_b = |v: usize| search.state.deg_b(v);

        // B must hold at least two vertices before a pull is safe.
        if side_b.len() == 1 {
            let x = side_a
                .iter()
                .find(|&x| deg_a(x) < a.get(x) + w(x))
                .ok_or_else(|| Error::Invariant("A-side meager witness missing".into()))?;
            search.push_to_b(x, 0)?;
            continue;
        }

        // Witness of B's meagerness one below budget.
        let y = side_b
            .iter()
            .find(|&y| deg_b(y) <= b.get(y) + w(y) - 2)
            .ok_or_else(|| Error::Invariant("B-side meager witness missing".into()))?;

        // Try to absorb y: if A + y stays a-meager, pulling it gains >= 2.
        let a_with_y = side_a.inserted(y);
        let high_core = maximal_nice_subset(g, &a_with_y, &a_high);
        if high_core.is_empty() {
            search.pull_to_a(y, 2)?;
            continue;
        }
        // The (a+w)-nice core must involve y, since A alone is a-meager;
        // dropping y leaves an a-nice kernel inside A.
        if !high_core.contains(y) {
            return Err(Error::Invariant(
                "(a+w)-nice core avoided the pulled vertex".into(),
            ));
        }
        let kernel = high_core.removed(y);
        if kernel.is_empty() || !is_nice(g, &kernel, a) {
            return Err(Error::Invariant("a-nice kernel extraction failed".into()));
        }

        // Restore a-niceness of A itself.
        if let Some(xp) = side_a.iter().find(|&v| deg_a(v) < a.get(v)) {
            let b_candidate = maximal_nice_subset(g, &side_b.inserted(xp), &b_high);
            if !b_candidate.is_empty() {
                return search.finish_with_pair(&kernel, &b_candidate);
            }
            search.push_to_b(xp, 2)?;
            continue;
        }

        // A is a-nice; its low-slack members all sit inside the kernel and
        // next to y, or one of them moves out.
        let low: Vec<usize> = side_a
            .iter()
            .filter(|&v| deg_a(v) < a.get(v) + w(v))
            .collect();
        if low.is_empty() {
            return Err(Error::Invariant("a-meager witness set empty".into()));
        }
        if let Some(&xp) = low.iter().find(|&&v| !kernel.contains(v)) {
            let b_candidate = maximal_nice_subset(g, &side_b.inserted(xp), &b_high);
            if !b_candidate.is_empty() {
                return search.finish_with_pair(&kernel, &b_candidate);
            }
            search.push_to_b(xp, 0)?;
            continue;
        }
        debug_assert!(low
            .iter()
            .all(|&v| g.multiplicity(v, y).expect("valid pair") >= 1));

        let x = low[0];
        let z_opt = g
            .neighbors(x)
            .iter()
            .copied()
            .find(|z| low.binary_search(z).is_ok());
        let Some(z) = z_opt else {
            // x has no low-slack neighbor, so A - x stays a-nice.
            let a_minus = side_a.removed(x);
            if !is_nice(g, &a_minus, a) {
                return Err(Error::Invariant("A minus x lost a-niceness".into()));
            }
            let b_candidate = maximal_nice_subset(g, &side_b.inserted(x), &b_high);
            if !b_candidate.is_empty() {
                return search.finish_with_pair(&a_minus, &b_candidate);
            }
            search.push_to_b(x, 0)?;
            continue;
        };

        // x, z, y span a triangle.
        let a_rest = side_a.removed(x).removed(z);
        if a_rest.is_empty() {
            // A = {x, z}: the high core {x, y, z} is itself the A side.
            let tri = VertexSet::from_ids(n, &[x, y, z])?;
            let others = tri.complement();
            ensure_feasible(g, a, b, &tri, &others)?;
            return Ok(Solution {
                a_side: tri,
                b_side: others,
                trace: search.trace,
            });
        }
        // K4-minus-freeness makes x and z each other's only low-slack
        // neighbor, so removing both keeps A a-nice.
        if !is_nice(g, &a_rest, a) {
            return Err(Error::Invariant("A minus the pair lost a-niceness".into()));
        }
        let b_plus = side_b.inserted(x).inserted(z);
        let b_candidate = maximal_nice_subset(g, &b_plus, &b_high);
        if !b_candidate.is_empty() {
            return search.finish_with_pair(&a_rest, &b_candidate);
        }
        search.push_pair_to_b(x, z, 2)?;
    }
    Err(Error::Invariant(
        "lexicographic search exceeded its iteration bound".into(),
    ))
}

fn is_nice(g: &Multigraph, x: &VertexSet, f: &DegreeFunction) -> bool {
    x.iter().all(|v| g.degree_into(v, x) as i64 >= f.get(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::partition_state::is_feasible_partition;

    fn c5() -> Multigraph {
        Multigraph::simple(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn petersen() -> Multigraph {
        let pairs = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ];
        Multigraph::simple(10, &pairs).unwrap()
    }

    fn const_budget(n: usize, c: i64) -> DegreeFunction {
        DegreeFunction::constant(n, c).unwrap()
    }

    #[test]
    fn checker_examples() {
        let one5 = const_budget(5, 1);
        assert!(check_k4free(&c5(), &one5, &one5).ok());

        let tc5 = generators::t_multiply(&c5(), 3).unwrap();
        assert!(check_k4free(&tc5, &one5, &one5).ok());

        let anti = generators::square_antiprism();
        let one8 = const_budget(8, 1);
        let report = check_k4free(&anti, &one8, &one8);
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, PreconditionIssue::K4MinusSubgraph { .. })));

        // 3-vertex instances are rejected outright
        let tk3 = generators::tk3(2).unwrap();
        let one3 = const_budget(3, 1);
        let report = check_k4free(&tk3, &one3, &one3);
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, PreconditionIssue::TooFewVertices { n: 3, .. })));

        // zero budgets are below the floor
        let zero5 = const_budget(5, 0);
        let report = check_k4free(&c5(), &zero5, &one5);
        assert!(report
            .issues
            .iter()
            .any(|i| matches!(i, PreconditionIssue::BudgetBelowFloor { side: 'a', .. })));
    }

    #[test]
    fn preprocess_splits_low_budget_edge_without_common_neighbor() {
        let g = c5();
        let one = const_budget(5, 1);
        let (a_side, b_side) = edge_budget_preprocess(&g, &one, &one).unwrap().unwrap();
        assert_eq!(a_side.to_vec(), vec![2, 3, 4]);
        assert_eq!(b_side.to_vec(), vec![0, 1]);
    }

    #[test]
    fn preprocess_passes_when_budgets_are_high() {
        // bound needs d >= 2 + 2 + 2w - 2; C5 with multiplicity 3 gives d = 6 = 4 + 2
        let g = generators::t_multiply(&c5(), 3).unwrap();
        let two = const_budget(5, 2);
        assert!(edge_budget_preprocess(&g, &two, &two).unwrap().is_none());
    }

    #[test]
    fn preprocess_keeps_high_budget_common_neighbor_out() {
        // C5 plus a vertex 5 adjacent to 0, 1, 3: K4-minus-free, and the
        // low edge (0,1) has the single common neighbor 5 with b(5) = 2.
        let g = Multigraph::simple(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 0),
                (5, 1),
                (5, 3),
            ],
        )
        .unwrap();
        let a = const_budget(6, 1);
        let b = DegreeFunction::from_values(vec![1, 1, 1, 1, 1, 2]).unwrap();
        assert!(check_k4free(&g, &a, &b).ok());
        let (a_side, b_side) = edge_budget_preprocess(&g, &a, &b).unwrap().unwrap();
        assert_eq!(b_side.to_vec(), vec![0, 1]);
        assert_eq!(a_side.to_vec(), vec![2, 3, 4, 5]);
        assert!(is_feasible_partition(&g, &a, &b, &a_side, &b_side));
    }

    #[test]
    fn preprocess_takes_unit_common_neighbor_along() {
        // triangle 0-1-2 hanging off a 5-cycle; edge (0,1) has common
        // neighbor 2 with b(2) = 1, so all three go to the B side.
        let g = Multigraph::simple(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (1, 4),
                (2, 5),
                (3, 6),
                (4, 6),
                (5, 6),
                (3, 4),
            ],
        )
        .unwrap();
        // degrees: 0:3 1:3 2:3 3:3 4:3 5:2 6:3
        let a = const_budget(7, 1);
        let b = DegreeFunction::from_values(vec![1, 1, 1, 2, 2, 1, 2]).unwrap();
        if check_k4free(&g, &a, &b).ok() {
            let (a_side, b_side) = edge_budget_preprocess(&g, &a, &b).unwrap().unwrap();
            assert_eq!(b_side.to_vec(), vec![0, 1, 2]);
            assert!(is_feasible_partition(&g, &a, &b, &a_side, &b_side));
        }
    }

    #[test]
    fn c5_with_unit_budgets_solves() {
        let g = c5();
        let one = const_budget(5, 1);
        let sol = partition_k4free(&g, &one, &one).unwrap();
        assert!(is_feasible_partition(
            &g,
            &one,
            &one,
            &sol.a_side,
            &sol.b_side
        ));
        assert_eq!(sol.a_side.to_vec(), vec![2, 3, 4]);
        assert_eq!(sol.b_side.to_vec(), vec![0, 1]);
    }

    #[test]
    fn scaled_c5_gives_the_same_split() {
        let g = generators::t_multiply(&c5(), 3).unwrap();
        let one = const_budget(5, 1);
        let sol = partition_k4free(&g, &one, &one).unwrap();
        assert_eq!(sol.a_side.to_vec(), vec![2, 3, 4]);
        assert_eq!(sol.b_side.to_vec(), vec![0, 1]);
    }

    #[test]
    fn petersen_with_asymmetric_budgets() {
        let g = petersen();
        let a = const_budget(10, 1);
        let b = const_budget(10, 2);
        let sol = partition_k4free(&g, &a, &b).unwrap();
        assert!(is_feasible_partition(&g, &a, &b, &sol.a_side, &sol.b_side));
    }

    #[test]
    fn k3_3_with_mixed_budgets_runs_the_main_search() {
        let g = Multigraph::simple(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let a = DegreeFunction::from_values(vec![1, 1, 1, 2, 2, 2]).unwrap();
        let b = DegreeFunction::from_values(vec![2, 2, 2, 1, 1, 1]).unwrap();
        assert!(check_k4free(&g, &a, &b).ok());
        assert!(edge_budget_preprocess(&g, &a, &b).unwrap().is_none());
        let sol = partition_k4free(&g, &a, &b).unwrap();
        assert!(is_feasible_partition(&g, &a, &b, &sol.a_side, &sol.b_side));
        assert!(sol.trace.is_lexicographically_increasing());
    }

    #[test]
    fn double_hub_instance_runs_the_exchange_loop() {
        // K2,5: hubs 0 and 1, spokes 2..=6. With these budgets the b-peel
        // of the seed complement collapses, so the search has to pull the
        // hub 0 across before a feasible pair appears.
        let mut pairs = Vec::new();
        for w in 2..7 {
            pairs.push((0, w));
            pairs.push((1, w));
        }
        let g = Multigraph::simple(7, &pairs).unwrap();
        let a = DegreeFunction::from_values(vec![2, 3, 1, 1, 1, 1, 1]).unwrap();
        let b = DegreeFunction::from_values(vec![3, 2, 1, 1, 1, 1, 1]).unwrap();
        assert!(check_k4free(&g, &a, &b).ok());
        assert!(edge_budget_preprocess(&g, &a, &b).unwrap().is_none());
        let sol = partition_k4free(&g, &a, &b).unwrap();
        assert!(is_feasible_partition(&g, &a, &b, &sol.a_side, &sol.b_side));
        assert_eq!(sol.trace.move_count(), 1);
        assert_eq!(
            sol.trace.records[0].kind,
            crate::partition_state::MoveKind::ToA
        );
        assert!(sol.trace.is_lexicographically_increasing());
        assert_eq!(sol.a_side.to_vec(), vec![0, 4, 5, 6]);
        assert_eq!(sol.b_side.to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn mined_sparse_instance_runs_the_exchange_loop() {
        let g = Multigraph::simple(
            8,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 6),
                (0, 7),
                (1, 2),
                (1, 3),
                (1, 6),
                (2, 4),
                (2, 6),
                (2, 7),
                (3, 4),
                (5, 6),
            ],
        )
        .unwrap();
        let a = DegreeFunction::from_values(vec![2, 1, 2, 2, 1, 1, 2, 1]).unwrap();
        let b = DegreeFunction::from_values(vec![3, 2, 2, 1, 2, 1, 2, 1]).unwrap();
        let sol = partition_k4free(&g, &a, &b).unwrap();
        assert!(is_feasible_partition(&g, &a, &b, &sol.a_side, &sol.b_side));
        assert!(sol.trace.move_count() > 0);
        assert!(sol.trace.is_lexicographically_increasing());
    }

    #[test]
    fn triangle_free_instances_at_the_bound_always_solve() {
        let mut solved = 0;
        let mut seed = 500u64;
        while solved < 40 {
            seed += 1;
            let Ok(g) = generators::random_multigraph(4 + (seed as usize % 7), 0.4, 2, seed) else {
                continue;
            };
            if g.min_degree() == 0 || !g.is_triangle_free() {
                continue;
            }
            let Ok((a, b)) = generators::random_budgets(&g, generators::BudgetMode::K4Free, seed)
            else {
                continue;
            };
            let sol = partition_k4free(&g, &a, &b).unwrap();
            assert!(is_feasible_partition(&g, &a, &b, &sol.a_side, &sol.b_side));
            assert!(sol.trace.is_lexicographically_increasing());
            solved += 1;
        }
    }
}
