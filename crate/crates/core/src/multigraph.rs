//! Immutable loopless multigraph with integer edge multiplicities.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite undirected multigraph: vertices `0..n`, no loops, and a
/// nonnegative integer multiplicity on every vertex pair.
///
/// The structure is immutable after construction; degree, per-vertex weight
/// (the maximum incident multiplicity) and the underlying simple adjacency
/// are cached up front, so all queries are pure and cheap.
#[derive(Clone)]
pub struct Multigraph {
    n: usize,
    /// Multiplicity lookup keyed by `(min(u,v), max(u,v))`; absent means 0.
    mult: HashMap<(usize, usize), u64>,
    /// Sorted pair list `(u, v, k)` with `u < v`, `k >= 1`.
    edges: Vec<(usize, usize, u64)>,
    degree: Vec<u64>,
    weight: Vec<u64>,
    /// Underlying simple adjacency: sorted distinct neighbors per vertex.
    adj: Vec<Vec<usize>>,
}

/// Incremental constructor for [`Multigraph`]; repeated `add_edge` calls on
/// the same pair accumulate multiplicity.
pub struct MultigraphBuilder {
    n: usize,
    mult: HashMap<(usize, usize), u64>,
}

impl MultigraphBuilder {
    pub fn new(n: usize) -> Self {
        MultigraphBuilder {
            n,
            mult: HashMap::new(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, k: u64) -> Result<&mut Self> {
        if u >= self.n || v >= self.n {
            return Err(Error::Input(format!(
                "edge ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Input(format!("loop at vertex {u} not allowed")));
        }
        if k == 0 {
            return Err(Error::Input(format!(
                "edge ({u},{v}) must have multiplicity >= 1"
            )));
        }
        let key = (u.min(v), u.max(v));
        *self.mult.entry(key).or_insert(0) += k;
        Ok(self)
    }

    pub fn build(self) -> Result<Multigraph> {
        let n = self.n;
        let mut edges: Vec<(usize, usize, u64)> =
            self.mult.iter().map(|(&(u, v), &k)| (u, v, k)).collect();
        edges.sort_unstable();

        let mut degree = vec![0u64; n];
        let mut weight = vec![0u64; n];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v, k) in &edges {
            degree[u] += k;
            degree[v] += k;
            weight[u] = weight[u].max(k);
            weight[v] = weight[v].max(k);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        // All downstream arithmetic (weights, budgets, deltas) runs in i64;
        // reject degree sums that could not round-trip.
        let total: u64 = degree.iter().sum();
        if total > i64::MAX as u64 / 4 {
            return Err(Error::Input(
                "total edge multiplicity too large for exact arithmetic".into(),
            ));
        }
        Ok(Multigraph {
            n,
            mult: self.mult,
            edges,
            degree,
            weight,
            adj,
        })
    }
}

impl Multigraph {
    /// Graph from an explicit pair list; repeated pairs accumulate.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let mut b = MultigraphBuilder::new(n);
        for &(u, v, k) in edges {
            b.add_edge(u, v, k)?;
        }
        b.build()
    }

    /// Simple graph (all multiplicities 1) from a pair list.
    pub fn simple(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges: Vec<(usize, usize, u64)> = pairs.iter().map(|&(u, v)| (u, v, 1)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Sorted list of distinct vertex pairs with positive multiplicity.
    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    /// Total edge multiplicity `|E(G)|`.
    pub fn total_edge_multiplicity(&self) -> u64 {
        self.edges.iter().map(|&(_, _, k)| k).sum()
    }

    /// Multiplicity of an unordered pair of distinct, valid vertices.
    pub fn multiplicity(&self, u: usize, v: usize) -> Result<u64> {
        if u >= self.n || v >= self.n {
            return Err(Error::Input(format!(
                "vertex pair ({u},{v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Input(format!(
                "multiplicity is undefined on the diagonal (vertex {u})"
            )));
        }
        Ok(self.mult_unchecked(u, v))
    }

    #[inline]
    fn mult_unchecked(&self, u: usize, v: usize) -> u64 {
        self.mult.get(&(u.min(v), u.max(v))).copied().unwrap_or(0)
    }

    /// Degree `d_G(v)`: total multiplicity incident to `v`.
    pub fn degree(&self, v: usize) -> u64 {
        self.degree[v]
    }

    /// Minimum degree over all vertices; 0 for the empty graph.
    pub fn min_degree(&self) -> u64 {
        self.degree.iter().copied().min().unwrap_or(0)
    }

    /// Maximum multiplicity over all pairs.
    pub fn max_multiplicity(&self) -> u64 {
        self.edges.iter().map(|&(_, _, k)| k).max().unwrap_or(0)
    }

    /// Weight of a vertex: the largest multiplicity among its incident
    /// pairs. Isolated vertices get 0 by convention; callers that need a
    /// positive weight must strip isolated vertices first.
    pub fn vertex_weight(&self, v: usize) -> u64 {
        self.weight[v]
    }

    /// Distinct neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Degree of `v` into a vertex set: total multiplicity from `v` to
    /// members of `X` other than `v` itself (whether or not `v` is in `X`).
    pub fn degree_into(&self, v: usize, x: &VertexSet) -> u64 {
        debug_assert_eq!(x.universe(), self.n, "set universe mismatch");
        self.adj[v]
            .iter()
            .filter(|&&u| x.contains(u))
            .map(|&u| self.mult_unchecked(v, u))
            .sum()
    }

    /// Total multiplicity of pairs with both endpoints in `X`.
    pub fn edges_within(&self, x: &VertexSet) -> u64 {
        debug_assert_eq!(x.universe(), self.n, "set universe mismatch");
        self.edges
            .iter()
            .filter(|&&(u, v, _)| x.contains(u) && x.contains(v))
            .map(|&(_, _, k)| k)
            .sum()
    }

    /// Common neighbors of `u` and `v` in the underlying simple graph,
    /// ascending, excluding the endpoints themselves.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        self.adj[u]
            .iter()
            .copied()
            .filter(|&w| w != v && self.adj[v].binary_search(&w).is_ok())
            .collect()
    }

    /// Some edge of the underlying simple graph whose endpoints have two
    /// or more common neighbors, reported as `(u, v, w1, w2)`.
    pub fn k4minus_witness(&self) -> Option<(usize, usize, usize, usize)> {
        for &(u, v, _) in &self.edges {
            let mut common = self.adj[u]
                .iter()
                .filter(|&&w| w != v && self.adj[v].binary_search(&w).is_ok());
            if let (Some(&w1), Some(&w2)) = (common.next(), common.next()) {
                return Some((u, v, w1, w2));
            }
        }
        None
    }

    /// True iff no edge has two common neighbors (no subgraph is a
    /// four-vertex clique minus one edge). Multiplicities are irrelevant.
    pub fn is_k4minus_free(&self) -> bool {
        self.k4minus_witness().is_none()
    }

    /// Some triangle `(u, v, w)` of the underlying simple graph.
    pub fn triangle_witness(&self) -> Option<(usize, usize, usize)> {
        for &(u, v, _) in &self.edges {
            if let Some(&w) = self.adj[u]
                .iter()
                .find(|&&w| w != v && self.adj[v].binary_search(&w).is_ok())
            {
                return Some((u, v, w));
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangle_witness().is_none()
    }

    /// Induced subgraph on the members of `keep`, relabeled to `0..|keep|`
    /// in ascending order of the original ids. Returns the new graph and
    /// the map from new id to original id.
    pub fn induced(&self, keep: &VertexSet) -> (Multigraph, Vec<usize>) {
        let old_ids: Vec<usize> = keep.to_vec();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut b = MultigraphBuilder::new(old_ids.len());
        for &(u, v, k) in &self.edges {
            if keep.contains(u) && keep.contains(v) {
                b.add_edge(new_id[u], new_id[v], k)
                    .expect("relabeled edge is valid");
            }
        }
        let g = b.build().expect("induced subgraph of a valid graph");
        (g, old_ids)
    }

    /// Drops all isolated vertices. Returns the induced subgraph on the
    /// positive-degree vertices (relabeled ascending) and the removed ids.
    pub fn strip_isolated(&self) -> (Multigraph, Vec<usize>) {
        let mut keep = VertexSet::empty(self.n);
        let mut removed = Vec::new();
        for v in 0..self.n {
            if self.degree[v] > 0 {
                keep.insert(v);
            } else {
                removed.push(v);
            }
        }
        let (g, _) = self.induced(&keep);
        (g, removed)
    }
}

impl std::fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Multigraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn path3() -> Multigraph {
        Multigraph::simple(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn c5() -> Multigraph {
        Multigraph::simple(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn k4() -> Multigraph {
        Multigraph::simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn multiplicity_queries() {
        let g = generators::tk3(3).unwrap();
        assert_eq!(g.multiplicity(0, 1).unwrap(), 3);
        assert_eq!(g.multiplicity(2, 1).unwrap(), 3);
        assert_eq!(k4().multiplicity(1, 3).unwrap(), 1);
        assert_eq!(c5().multiplicity(0, 2).unwrap(), 0);
        assert!(c5().multiplicity(1, 1).is_err());
        assert!(c5().multiplicity(0, 9).is_err());
    }

    #[test]
    fn vertex_weight_is_max_incident_multiplicity() {
        let g = generators::tk3(2).unwrap();
        assert_eq!(g.vertex_weight(0), 2);
        assert_eq!(k4().vertex_weight(2), 1);
        let h = Multigraph::from_edges(3, &[(0, 1, 3), (0, 2, 1)]).unwrap();
        assert_eq!(h.vertex_weight(0), 3);
        assert_eq!(h.vertex_weight(2), 1);
        let iso = Multigraph::simple(3, &[(0, 1)]).unwrap();
        assert_eq!(iso.vertex_weight(2), 0);
    }

    #[test]
    fn degree_into_counts_multiplicity() {
        let g = k4();
        assert_eq!(g.degree_into(0, &VertexSet::empty(4)), 0);
        assert_eq!(g.degree_into(0, &VertexSet::full(4)), g.degree(0));
        let x = VertexSet::from_ids(4, &[1, 2]).unwrap();
        assert_eq!(g.degree_into(0, &x), 2);
        // v inside X does not count itself
        let y = VertexSet::from_ids(4, &[0, 1]).unwrap();
        assert_eq!(g.degree_into(0, &y), 1);
    }

    #[test]
    fn edges_within_counts_pairs() {
        let g = generators::tk3(4).unwrap();
        assert_eq!(g.edges_within(&VertexSet::from_ids(3, &[1]).unwrap()), 0);
        assert_eq!(g.edges_within(&VertexSet::full(3)), 12);
        let h = generators::square_antiprism();
        assert_eq!(h.edges_within(&VertexSet::full(8)), 16);
    }

    #[test]
    fn handshake_identity() {
        for g in [path3(), c5(), k4(), generators::tk3(3).unwrap()] {
            let full = VertexSet::full(g.vertex_count());
            let sum: u64 = (0..g.vertex_count()).map(|v| g.degree_into(v, &full)).sum();
            assert_eq!(sum, 2 * g.edges_within(&full));
        }
    }

    #[test]
    fn pattern_detection() {
        assert!(c5().is_k4minus_free());
        assert!(!k4().is_k4minus_free());
        assert!(c5().is_triangle_free());
        assert!(!generators::tk3(1).unwrap().is_triangle_free());
        assert!(!generators::icosahedron().is_triangle_free());
        // edge (0,4) of the antiprism has two common neighbors, 3 and 5
        let h = generators::square_antiprism();
        let (u, v, w1, w2) = h.k4minus_witness().unwrap();
        assert_eq!((u, v, w1, w2), (0, 4, 3, 5));
        assert!(!h.is_k4minus_free());
    }

    #[test]
    fn triangle_free_implies_k4minus_free() {
        for g in [
            path3(),
            c5(),
            Multigraph::simple(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
        ] {
            if g.is_triangle_free() {
                assert!(g.is_k4minus_free());
            }
        }
    }

    #[test]
    fn strip_isolated_cases() {
        let g = c5();
        let (h, removed) = g.strip_isolated();
        assert_eq!(h.vertex_count(), 5);
        assert!(removed.is_empty());

        let e = Multigraph::from_edges(3, &[]).unwrap();
        let (h, removed) = e.strip_isolated();
        assert_eq!(h.vertex_count(), 0);
        assert_eq!(removed, vec![0, 1, 2]);

        let k2_iso = Multigraph::simple(3, &[(0, 1)]).unwrap();
        let (h, removed) = k2_iso.strip_isolated();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.multiplicity(0, 1).unwrap(), 1);
        assert_eq!(removed, vec![2]);
    }

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = MultigraphBuilder::new(2);
        assert!(b.add_edge(0, 0, 1).is_err());
        assert!(b.add_edge(0, 2, 1).is_err());
        assert!(b.add_edge(0, 1, 0).is_err());
        b.add_edge(0, 1, 2).unwrap();
        b.add_edge(1, 0, 3).unwrap();
        let g = b.build().unwrap();
        assert_eq!(g.multiplicity(0, 1).unwrap(), 5);
    }

    #[test]
    fn deletion_bound_matches_multiplicity() {
        // d_{A \ {v}}(u) = d_A(u) - mult(u, v)
        let g = generators::tk3(2).unwrap();
        let a = VertexSet::full(3);
        for v in 0..3 {
            let without = a.removed(v);
            for u in 0..3 {
                if u == v {
                    continue;
                }
                assert_eq!(
                    g.degree_into(u, &without),
                    g.degree_into(u, &a) - g.multiplicity(u, v).unwrap()
                );
            }
        }
    }

    #[test]
    fn induced_relabels_ascending() {
        let g = k4();
        let keep = VertexSet::from_ids(4, &[1, 3]).unwrap();
        let (h, map) = g.induced(&keep);
        assert_eq!(map, vec![1, 3]);
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.multiplicity(0, 1).unwrap(), 1);
    }
}
