//! Bipartition state with cached side-degrees and the exchange potential.
//!
//! The potential of a partition `(A, B)` is
//! `w(A,B) = |E(A)| + |E(B)| + sum_{v in A} b(v) + sum_{v in B} a(v)`.
//! Moving `x` from `A` to `B` changes it by exactly
//! `d_B(x) - d_A(x) + a(x) - b(x)`, and symmetrically for the other
//! direction; the solvers drive this quantity upward.

use crate::budgets::DegreeFunction;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::vertex_set::VertexSet;

/// Kind of a logged exchange step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    /// Single vertex moved from B to A.
    ToA,
    /// Single vertex moved from A to B.
    ToB,
    /// Two adjacent vertices moved together from A to B.
    TwoToB,
}

impl MoveKind {
    fn label(self) -> &'static str {
        match self {
            MoveKind::ToA => "to-a",
            MoveKind::ToB => "to-b",
            MoveKind::TwoToB => "two-to-b",
        }
    }
}

/// One logged exchange step with the potential and A-side size around it.
#[derive(Clone, Debug)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub vertices: Vec<usize>,
    pub weight_before: i64,
    pub weight_after: i64,
    pub a_size_before: usize,
    pub a_size_after: usize,
}

impl MoveRecord {
    /// Line form: `MOVE <kind> <vertices> w:<before>-><after> |A|:<before>-><after>`.
    pub fn to_line(&self) -> String {
        let verts = self
            .vertices
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!(
            "MOVE {} {} w:{}->{} |A|:{}->{}",
            self.kind.label(),
            verts,
            self.weight_before,
            self.weight_after,
            self.a_size_before,
            self.a_size_after
        )
    }
}

/// Ordered log of the exchange steps a solver performed.
#[derive(Clone, Debug, Default)]
pub struct SearchTrace {
    pub records: Vec<MoveRecord>,
}

impl SearchTrace {
    pub fn new() -> Self {
        SearchTrace::default()
    }

    pub fn move_count(&self) -> usize {
        self.records.len()
    }

    pub fn to_lines(&self) -> Vec<String> {
        self.records.iter().map(MoveRecord::to_line).collect()
    }

    /// True when every logged step strictly raises `(w, -|A|)` in
    /// lexicographic order.
    pub fn is_lexicographically_increasing(&self) -> bool {
        self.records.iter().all(|r| {
            r.weight_after > r.weight_before
                || (r.weight_after == r.weight_before && r.a_size_after < r.a_size_before)
        })
    }

    /// True when consecutive records chain: each step starts from the
    /// weight and A-size the previous one ended with.
    pub fn is_chained(&self) -> bool {
        self.records.windows(2).all(|pair| {
            pair[0].weight_after == pair[1].weight_before
                && pair[0].a_size_after == pair[1].a_size_before
        })
    }
}

/// A bipartition of `V(G)` with cached side-degrees and potential.
#[derive(Clone)]
pub struct PartitionState<'g> {
    g: &'g Multigraph,
    a_budget: &'g DegreeFunction,
    b_budget: &'g DegreeFunction,
    in_a: Vec<bool>,
    a_size: usize,
    /// deg_a[v] = total multiplicity from v into A \ {v}; same for deg_b.
    deg_a: Vec<i64>,
    deg_b: Vec<i64>,
    weight: i64,
}

impl<'g> PartitionState<'g> {
    /// Builds the cached state for a partition `(A, B)` of `V(G)`.
    pub fn new(
        g: &'g Multigraph,
        a_budget: &'g DegreeFunction,
        b_budget: &'g DegreeFunction,
        a: &VertexSet,
        b: &VertexSet,
    ) -> Result<Self> {
        let n = g.vertex_count();
        if a.universe() != n || b.universe() != n {
            return Err(Error::Input("partition sets have wrong universe".into()));
        }
        if a.is_empty() || b.is_empty() {
            return Err(Error::Input("both partition sides must be nonempty".into()));
        }
        if !a.is_disjoint(b) || a.len() + b.len() != n {
            return Err(Error::Input("sets do not partition the vertex set".into()));
        }
        // All weight arithmetic runs in i64; insist the ceiling fits first.
        let ceiling = g.total_edge_multiplicity() as i128
            + a_budget.values().iter().map(|&x| x as i128).sum::<i128>()
            + b_budget.values().iter().map(|&x| x as i128).sum::<i128>();
        if ceiling > i64::MAX as i128 / 4 {
            return Err(Error::Input(
                "budgets too large for exact weight arithmetic".into(),
            ));
        }
        let mut in_a = vec![false; n];
        for v in a.iter() {
            in_a[v] = true;
        }
        let deg_a: Vec<i64> = (0..n).map(|v| g.degree_into(v, a) as i64).collect();
        let deg_b: Vec<i64> = (0..n).map(|v| g.degree_into(v, b) as i64).collect();
        let weight = partition_weight(g, a_budget, b_budget, a, b);
        Ok(PartitionState {
            g,
            a_budget,
            b_budget,
            in_a,
            a_size: a.len(),
            deg_a,
            deg_b,
            weight,
        })
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn a_size(&self) -> usize {
        self.a_size
    }

    pub fn b_size(&self) -> usize {
        self.in_a.len() - self.a_size
    }

    pub fn in_a(&self, v: usize) -> bool {
        self.in_a[v]
    }

    pub fn deg_a(&self, v: usize) -> i64 {
        self.deg_a[v]
    }

    pub fn deg_b(&self, v: usize) -> i64 {
        self.deg_b[v]
    }

    pub fn side_a(&self) -> VertexSet {
        let mut s = VertexSet::empty(self.in_a.len());
        for (v, &p) in self.in_a.iter().enumerate() {
            if p {
                s.insert(v);
            }
        }
        s
    }

    pub fn side_b(&self) -> VertexSet {
        self.side_a().complement()
    }

    /// Closed-form potential change of moving `x` from A to B.
    pub fn delta_to_b(&self, x: usize) -> i64 {
        self.deg_b[x] - self.deg_a[x] + self.a_budget.get(x) - self.b_budget.get(x)
    }

    /// Closed-form potential change of moving `y` from B to A.
    pub fn delta_to_a(&self, y: usize) -> i64 {
        self.deg_a[y] - self.deg_b[y] + self.b_budget.get(y) - self.a_budget.get(y)
    }

    /// State with `x` moved from A to B; the input state is unchanged.
    pub fn moved_to_b(&self, x: usize) -> Result<Self> {
        if !self.in_a.get(x).copied().unwrap_or(false) {
            return Err(Error::Input(format!("vertex {x} is not in side A")));
        }
        if self.a_size < 2 {
            return Err(Error::Input(
                "cannot move the last vertex out of side A".into(),
            ));
        }
        let mut next = self.clone();
        next.weight += self.delta_to_b(x);
        next.in_a[x] = false;
        next.a_size -= 1;
        for &u in self.g.neighbors(x) {
            let k = self.g.multiplicity(u, x).expect("valid pair") as i64;
            next.deg_a[u] -= k;
            next.deg_b[u] += k;
        }
        debug_assert_eq!(next.weight, next.recomputed_weight());
        Ok(next)
    }

    /// State with `y` moved from B to A; the input state is unchanged.
    pub fn moved_to_a(&self, y: usize) -> Result<Self> {
        if self.in_a.get(y).copied().unwrap_or(true) {
            return Err(Error::Input(format!("vertex {y} is not in side B")));
        }
        if self.b_size() < 2 {
            return Err(Error::Input(
                "cannot move the last vertex out of side B".into(),
            ));
        }
        let mut next = self.clone();
        next.weight += self.delta_to_a(y);
        next.in_a[y] = true;
        next.a_size += 1;
        for &u in self.g.neighbors(y) {
            let k = self.g.multiplicity(u, y).expect("valid pair") as i64;
            next.deg_a[u] += k;
            next.deg_b[u] -= k;
        }
        debug_assert_eq!(next.weight, next.recomputed_weight());
        Ok(next)
    }

    /// From-scratch potential of the current partition.
    pub fn recomputed_weight(&self) -> i64 {
        let a = self.side_a();
        let b = a.complement();
        partition_weight(self.g, self.a_budget, self.b_budget, &a, &b)
    }
}

/// The potential `w(A,B)` computed from scratch.
pub fn partition_weight(
    g: &Multigraph,
    a_budget: &DegreeFunction,
    b_budget: &DegreeFunction,
    a: &VertexSet,
    b: &VertexSet,
) -> i64 {
    let edges = g.edges_within(a) as i64 + g.edges_within(b) as i64;
    let cross: i64 = a.iter().map(|v| b_budget.get(v)).sum::<i64>()
        + b.iter().map(|v| a_budget.get(v)).sum::<i64>();
    edges + cross
}

/// Whether `(A, B)` is a partition of `V(G)` with the A side `a`-nice and
/// the B side `b`-nice.
pub fn is_feasible_partition(
    g: &Multigraph,
    a_budget: &DegreeFunction,
    b_budget: &DegreeFunction,
    a: &VertexSet,
    b: &VertexSet,
) -> bool {
    let n = g.vertex_count();
    if a.universe() != n || b.universe() != n {
        return false;
    }
    if a.is_empty() || b.is_empty() || !a.is_disjoint(b) || a.len() + b.len() != n {
        return false;
    }
    a.iter()
        .all(|v| g.degree_into(v, a) as i64 >= a_budget.get(v))
        && b.iter()
            .all(|v| g.degree_into(v, b) as i64 >= b_budget.get(v))
}

/// Grows a feasible pair into a feasible partition.
///
/// Repeatedly scans the unassigned vertices together with the B side for a
/// vertex short of its `b` budget; the degree bound forces such a vertex to
/// clear its `a` budget on the A side, so it moves there (smallest id
/// first). When no vertex is short, the remainder joins B.
///
/// Requires: `A0`, `B0` disjoint and nonempty, `A0` a-nice, `B0` b-nice
/// once the unassigned vertices are added (a standalone b-nice `B0` always
/// qualifies), `delta(G) >= 1`, and
/// `d_G(v) >= a(v) + b(v) + 2 w_G(v) - 3` everywhere.
pub fn extend_feasible_pair(
    g: &Multigraph,
    a0: &VertexSet,
    b0: &VertexSet,
    a_budget: &DegreeFunction,
    b_budget: &DegreeFunction,
) -> Result<(VertexSet, VertexSet)> {
    let n = g.vertex_count();
    if a0.is_empty() || b0.is_empty() {
        return Err(Error::Input("feasible pair sides must be nonempty".into()));
    }
    if !a0.is_disjoint(b0) {
        return Err(Error::Input("feasible pair sides must be disjoint".into()));
    }
    if g.min_degree() < 1 {
        return Err(Error::Input("graph must have minimum degree >= 1".into()));
    }
    for v in 0..n {
        let need = a_budget.get(v) + b_budget.get(v) + 2 * g.vertex_weight(v) as i64 - 3;
        if (g.degree(v) as i64) < need {
            return Err(Error::Input(format!(
                "degree bound fails at vertex {v}: degree {} < {need}",
                g.degree(v)
            )));
        }
    }
    if !a0
        .iter()
        .all(|v| g.degree_into(v, a0) as i64 >= a_budget.get(v))
    {
        return Err(Error::Input("initial A side is not a-nice".into()));
    }

    let mut a = a0.clone();
    let mut rest = a.complement(); // B0 plus the unassigned vertices
    for _ in 0..=n {
        let shortfall = rest
            .iter()
            .find(|&v| (g.degree_into(v, &rest) as i64) < b_budget.get(v));
        match shortfall {
            None => {
                if !is_feasible_partition(g, a_budget, b_budget, &a, &rest) {
                    return Err(Error::Invariant(
                        "extension produced an infeasible partition".into(),
                    ));
                }
                return Ok((a, rest));
            }
            Some(v) => {
                // Members of the b-nice seed never fall short: the scan set
                // always contains B0, so their degrees only exceed the seed
                // degrees. A shortfall there means the seed was not b-nice.
                if b0.contains(v) {
                    return Err(Error::Input(format!(
                        "initial B side cannot reach its budget at vertex {v}"
                    )));
                }
                // d_G(v) >= a + b + 2w - 3 and d_{rest}(v) <= b - 1 force
                // d_A(v) >= a(v) + 2w - 2 >= a(v).
                if (g.degree_into(v, &a) as i64) < a_budget.get(v) {
                    return Err(Error::Invariant(format!(
                        "degree implication failed at vertex {v} during extension"
                    )));
                }
                a.insert(v);
                rest.remove(v);
            }
        }
    }
    Err(Error::Invariant(
        "extension did not terminate within |V| placements".into(),
    ))
}
