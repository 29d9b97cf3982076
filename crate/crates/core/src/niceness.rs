//! Peeling-based extraction of nice subsets and meagerness tests.
//!
//! A set `X` is *f-nice* when every member keeps at least `f(v)` edges into
//! `X`. Peeling away violators (smallest id first) yields the unique
//! maximal nice subset; the meagerness and degeneracy tests reduce to
//! emptiness of such subsets at shifted budgets.

use std::collections::BTreeSet;

use crate::budgets::DegreeFunction;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::vertex_set::VertexSet;

/// The unique maximal `f`-nice subset of `X`, possibly empty.
///
/// Computed by iterated peeling: while some member has fewer than `f(v)`
/// edges into the current set, delete the smallest such id. The result is
/// order-independent; the fixed order only pins the intermediate states.
pub fn maximal_nice_subset(g: &Multigraph, x: &VertexSet, f: &DegreeFunction) -> VertexSet {
    debug_assert_eq!(x.universe(), g.vertex_count());
    debug_assert_eq!(f.len(), g.vertex_count());
    let mut current = x.clone();
    let mut deg: Vec<i64> = (0..g.vertex_count())
        .map(|v| g.degree_into(v, &current) as i64)
        .collect();
    let mut violators: BTreeSet<usize> = current.iter().filter(|&v| deg[v] < f.get(v)).collect();
    while let Some(&v) = violators.iter().next() {
        violators.remove(&v);
        current.remove(v);
        for &u in g.neighbors(v) {
            if current.contains(u) {
                deg[u] -= g.multiplicity(u, v).expect("valid pair") as i64;
                if deg[u] < f.get(u) {
                    violators.insert(u);
                }
            }
        }
    }
    current
}

/// Whether `X` is `f`-meager: every nonempty subset of `X` has a member
/// with at most `f(v) + w_G(v) - 1` edges into it. Equivalently, `X` has no
/// nonempty `(f + w_G)`-nice subset.
///
/// Members must be non-isolated (the `w_G(v) - 1` term presumes a positive
/// weight); an isolated member is an input error.
pub fn is_meager(g: &Multigraph, x: &VertexSet, f: &DegreeFunction) -> Result<bool> {
    if let Some(v) = x.iter().find(|&v| g.degree(v) == 0) {
        return Err(Error::Input(format!(
            "meagerness is undefined for isolated vertex {v}"
        )));
    }
    Ok(maximal_nice_subset(g, x, &f.plus_weights(g)).is_empty())
}

/// Whether every nonempty subset of `X` has a member with at most `f(v)`
/// edges into it; equivalently, `X` has no nonempty `(f + 1)`-nice subset.
pub fn is_degenerate(g: &Multigraph, x: &VertexSet, f: &DegreeFunction) -> bool {
    maximal_nice_subset(g, x, &f.offset(1)).is_empty()
}

/// An inclusion-minimal nonempty `f`-nice subset of `X`, or `None` when no
/// nonempty `f`-nice subset exists.
///
/// Starting from the maximal nice subset, repeatedly drop a single vertex
/// and re-peel; any nonempty survivor replaces the candidate. Removal
/// attempts go through ids in increasing order, so the result is
/// deterministic. When every member of the result is non-isolated, the
/// result is also `f`-meager.
pub fn minimal_nice_subset(g: &Multigraph, x: &VertexSet, f: &DegreeFunction) -> Option<VertexSet> {
    let mut current = maximal_nice_subset(g, x, f);
    if current.is_empty() {
        return None;
    }
    'shrink: loop {
        for v in current.to_vec() {
            let reduced = maximal_nice_subset(g, &current.removed(v), f);
            if !reduced.is_empty() {
                current = reduced;
                continue 'shrink;
            }
        }
        return Some(current);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn path3() -> Multigraph {
        Multigraph::simple(3, &[(0, 1), (1, 2)]).unwrap()
    }

    /// Peel with a caller-supplied violator order; used to confirm order
    /// independence of the maximal nice subset.
    fn peel_in_order(
        g: &Multigraph,
        x: &VertexSet,
        f: &DegreeFunction,
        rng: &mut ChaCha8Rng,
    ) -> VertexSet {
        let mut current = x.clone();
        loop {
            let mut violators: Vec<usize> = current
                .iter()
                .filter(|&v| (g.degree_into(v, &current) as i64) < f.get(v))
                .collect();
            if violators.is_empty() {
                return current;
            }
            violators.shuffle(rng);
            current.remove(violators[0]);
        }
    }

    #[test]
    fn maximal_nice_subset_examples() {
        let g = path3();
        let full = VertexSet::full(3);
        let zero = DegreeFunction::constant(3, 0).unwrap();
        assert_eq!(maximal_nice_subset(&g, &full, &zero), full);

        let two = DegreeFunction::constant(3, 2).unwrap();
        assert!(maximal_nice_subset(&g, &full, &two).is_empty());

        for t in 1..=3 {
            let tk = generators::tk3(t).unwrap();
            let one = DegreeFunction::constant(3, 1).unwrap();
            assert_eq!(
                maximal_nice_subset(&tk, &VertexSet::full(3), &one),
                VertexSet::full(3)
            );
        }
    }

    #[test]
    fn peel_order_does_not_change_the_result() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for seed in 0..30 {
            let g = generators::random_multigraph(8, 0.5, 2, seed).unwrap();
            let x = VertexSet::full(8);
            let f = DegreeFunction::constant(8, (seed % 4) as i64).unwrap();
            let canonical = maximal_nice_subset(&g, &x, &f);
            for _ in 0..5 {
                assert_eq!(peel_in_order(&g, &x, &f, &mut rng), canonical);
            }
        }
    }

    #[test]
    fn meager_examples() {
        let g = path3();
        let one = DegreeFunction::constant(3, 1).unwrap();
        let singleton = VertexSet::from_ids(3, &[1]).unwrap();
        assert!(is_meager(&g, &singleton, &one).unwrap());
        assert!(is_meager(&g, &VertexSet::full(3), &one).unwrap());

        let k3 = generators::tk3(1).unwrap();
        assert!(!is_meager(&k3, &VertexSet::full(3), &one).unwrap());

        let with_iso = Multigraph::simple(3, &[(0, 1)]).unwrap();
        assert!(is_meager(&with_iso, &VertexSet::full(3), &one).is_err());
    }

    #[test]
    fn meager_is_hereditary() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for seed in 0..40 {
            let g = generators::random_multigraph(7, 0.6, 2, 1000 + seed).unwrap();
            let mut x = VertexSet::empty(7);
            for v in 0..7 {
                if g.degree(v) > 0 {
                    x.insert(v);
                }
            }
            let f = DegreeFunction::constant(7, (seed % 3) as i64).unwrap();
            if !is_meager(&g, &x, &f).unwrap() {
                continue;
            }
            for _ in 0..10 {
                let mut y = VertexSet::empty(7);
                for v in x.iter() {
                    if rng.gen_bool(0.5) {
                        y.insert(v);
                    }
                }
                assert!(is_meager(&g, &y, &f).unwrap());
            }
        }
    }

    #[test]
    fn degenerate_examples() {
        let g = generators::tk3(1).unwrap();
        let big = DegreeFunction::constant(3, 2).unwrap();
        assert!(is_degenerate(&g, &VertexSet::full(3), &big));
        let one = DegreeFunction::constant(3, 1).unwrap();
        assert!(!is_degenerate(&g, &VertexSet::full(3), &one));

        let tree = Multigraph::simple(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let f1 = DegreeFunction::constant(5, 1).unwrap();
        assert!(is_degenerate(&tree, &VertexSet::full(5), &f1));
    }

    #[test]
    fn degenerate_implies_meager_when_weights_positive() {
        for seed in 0..30 {
            let g = generators::random_multigraph(7, 0.5, 3, 2000 + seed).unwrap();
            let mut x = VertexSet::empty(7);
            for v in 0..7 {
                if g.degree(v) > 0 {
                    x.insert(v);
                }
            }
            let f = DegreeFunction::constant(7, (seed % 3) as i64).unwrap();
            if is_degenerate(&g, &x, &f) {
                assert!(is_meager(&g, &x, &f).unwrap());
            }
        }
    }

    #[test]
    fn minimal_nice_subset_examples() {
        // K4 on 0..4 plus a disjoint triangle on 4..7; budget 2 keeps the
        // triangle as the inclusion-minimal survivor.
        let g = Multigraph::simple(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 5),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap();
        let two = DegreeFunction::constant(7, 2).unwrap();
        let a = minimal_nice_subset(&g, &VertexSet::full(7), &two).unwrap();
        assert_eq!(a.to_vec(), vec![4, 5, 6]);

        let p = path3();
        let zero = DegreeFunction::constant(3, 0).unwrap();
        let a = minimal_nice_subset(&p, &VertexSet::full(3), &zero).unwrap();
        assert_eq!(a.len(), 1);

        let twof = DegreeFunction::constant(3, 2).unwrap();
        assert!(minimal_nice_subset(&p, &VertexSet::full(3), &twof).is_none());
    }

    #[test]
    fn minimal_nice_subset_invariants() {
        for seed in 0..60 {
            let g = generators::random_multigraph(8, 0.5, 2, 3000 + seed).unwrap();
            let x = VertexSet::full(8);
            let f = DegreeFunction::constant(8, (seed % 4) as i64).unwrap();
            let Some(a) = minimal_nice_subset(&g, &x, &f) else {
                continue;
            };
            // f-nice
            for v in a.iter() {
                assert!(g.degree_into(v, &a) as i64 >= f.get(v));
            }
            // inclusion-minimal: no single-vertex removal re-peels nonempty
            for v in a.iter() {
                assert!(maximal_nice_subset(&g, &a.removed(v), &f).is_empty());
            }
            // meager whenever all members are non-isolated
            if a.iter().all(|v| g.degree(v) > 0) {
                assert!(is_meager(&g, &a, &f).unwrap());
            }
        }
    }
}
