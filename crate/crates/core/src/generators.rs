//! Constructors for the named test graphs and seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budgets::DegreeFunction;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// Triangle on 3 vertices with every pair joined by `t` parallel edges.
pub fn tk3(t: u64) -> Result<Multigraph> {
    if t < 1 {
        return Err(Error::Input(format!(
            "multiplicity t must be >= 1, got {t}"
        )));
    }
    Multigraph::from_edges(3, &[(0, 1, t), (0, 2, t), (1, 2, t)])
}

/// The square antiprism: two 4-cycles (outer 0-1-2-3, inner 4-5-6-7) with
/// each inner vertex joined to two consecutive outer vertices. 8 vertices,
/// 16 edges, 4-regular.
pub fn square_antiprism() -> Multigraph {
    let pairs = [
        // outer cycle
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        // inner cycle
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 4),
        // spokes
        (4, 0),
        (4, 3),
        (5, 0),
        (5, 1),
        (6, 1),
        (6, 2),
        (7, 2),
        (7, 3),
    ];
    Multigraph::simple(8, &pairs).expect("fixed edge list is valid")
}

/// The icosahedron graph: 12 vertices, 30 edges, 5-regular.
pub fn icosahedron() -> Multigraph {
    let pairs = [
        (0, 1),
        (0, 5),
        (0, 7),
        (0, 8),
        (0, 11),
        (1, 2),
        (1, 5),
        (1, 6),
        (1, 8),
        (2, 3),
        (2, 6),
        (2, 8),
        (2, 9),
        (3, 4),
        (3, 6),
        (3, 9),
        (3, 10),
        (4, 5),
        (4, 6),
        (4, 10),
        (4, 11),
        (5, 6),
        (5, 11),
        (7, 8),
        (7, 9),
        (7, 10),
        (7, 11),
        (8, 9),
        (9, 10),
        (10, 11),
    ];
    Multigraph::simple(12, &pairs).expect("fixed edge list is valid")
}

/// Scales every multiplicity by `t`; degrees and vertex weights scale with it.
pub fn t_multiply(g: &Multigraph, t: u64) -> Result<Multigraph> {
    if t < 1 {
        return Err(Error::Input(format!("multiplier t must be >= 1, got {t}")));
    }
    let edges: Vec<(usize, usize, u64)> =
        g.edges().iter().map(|&(u, v, k)| (u, v, k * t)).collect();
    Multigraph::from_edges(g.vertex_count(), &edges)
}

/// Seeded random multigraph: each pair is present with probability
/// `edge_prob`, with multiplicity uniform in `1..=max_mult`.
pub fn random_multigraph(n: usize, edge_prob: f64, max_mult: u64, seed: u64) -> Result<Multigraph> {
    if n < 2 {
        return Err(Error::Input(format!("need n >= 2 vertices, got {n}")));
    }
    if !(edge_prob > 0.0 && edge_prob <= 1.0) {
        return Err(Error::Input(format!(
            "edge probability must be in (0, 1], got {edge_prob}"
        )));
    }
    if max_mult < 1 {
        return Err(Error::Input("max multiplicity must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v, rng.gen_range(1..=max_mult)));
            }
        }
    }
    Multigraph::from_edges(n, &edges)
}

/// Which two-way degree bound a sampled budget pair must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BudgetMode {
    /// `d_G(v) >= a(v) + b(v) + 2 w_G(v) - 1` with `a, b >= 0`.
    General,
    /// `d_G(v) >= a(v) + b(v) + 2 w_G(v) - 2` with `a, b >= 1`.
    K4Free,
}

/// Draws per-vertex budgets uniformly among the pairs admitted by the
/// selected bound, or reports the first vertex where none exists.
pub fn random_budgets(
    g: &Multigraph,
    mode: BudgetMode,
    seed: u64,
) -> Result<(DegreeFunction, DegreeFunction)> {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (floor, relax) = match mode {
        BudgetMode::General => (0i64, 1i64),
        BudgetMode::K4Free => (1i64, 2i64),
    };
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for v in 0..n {
        let d = g.degree(v) as i64;
        let w = g.vertex_weight(v) as i64;
        // a + b <= d - 2w + relax with a, b >= floor
        let slack = d - 2 * w + relax - 2 * floor;
        if slack < 0 {
            return Err(Error::Input(format!(
                "no budget pair exists at vertex {v}: degree {d} < {}",
                2 * w - relax + 2 * floor
            )));
        }
        let (x, y) = uniform_pair_with_sum_at_most(slack, &mut rng);
        a.push(floor + x);
        b.push(floor + y);
    }
    Ok((
        DegreeFunction::from_values(a)?,
        DegreeFunction::from_values(b)?,
    ))
}

/// Uniform draw among pairs `(x, y)` of nonnegative integers with
/// `x + y <= m`.
fn uniform_pair_with_sum_at_most(m: i64, rng: &mut ChaCha8Rng) -> (i64, i64) {
    let count = (m + 1) * (m + 2) / 2;
    let mut idx = rng.gen_range(0..count);
    for x in 0..=m {
        let row = m - x + 1;
        if idx < row {
            return (x, idx);
        }
        idx -= row;
    }
    unreachable!("index within triangular count")
}
