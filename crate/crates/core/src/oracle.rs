//! Exhaustive ground truth at desk scale: feasible-partition existence,
//! meagerness by direct enumeration, and certification of the sharpness
//! families that pin the degree bounds.

use std::str::FromStr;

use crate::budgets::DegreeFunction;
use crate::error::{Error, Result};
use crate::generators;
use crate::multigraph::Multigraph;
use crate::vertex_set::VertexSet;

/// Default ceiling on the enumerated vertex count.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// Searches all bipartitions for one with the A side a-nice and the B side
/// b-nice. A sides are tried by increasing cardinality, lexicographic
/// within, and the first hit is returned, so witnesses are reproducible.
///
/// Refuses graphs larger than `cap` vertices rather than sampling.
pub fn exists_feasible_partition(
    g: &Multigraph,
    a: &DegreeFunction,
    b: &DegreeFunction,
    cap: usize,
) -> Result<Option<(VertexSet, VertexSet)>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::Precondition(format!(
            "graph has {n} vertices, above the enumeration cap {cap}"
        )));
    }
    if n > 63 {
        return Err(Error::Precondition(
            "enumeration supports at most 63 vertices".into(),
        ));
    }
    if n < 2 {
        return Ok(None);
    }
    // per-vertex incident pairs for the mask-based side degrees
    let incident: Vec<Vec<(usize, i64)>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .map(|&u| (u, g.multiplicity(v, u).expect("valid pair") as i64))
                .collect()
        })
        .collect();

    let feasible = |mask: u64| -> bool {
        for (v, pairs) in incident.iter().enumerate() {
            let in_a = mask >> v & 1 == 1;
            let budget = if in_a { a.get(v) } else { b.get(v) };
            let mut d = 0i64;
            for &(u, k) in pairs {
                if (mask >> u & 1 == 1) == in_a {
                    d += k;
                }
            }
            if d < budget {
                return false;
            }
        }
        true
    };

    for size in 1..n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let mask = combo.iter().fold(0u64, |m, &v| m | 1 << v);
            if feasible(mask) {
                let a_side = VertexSet::from_ids(n, &combo)?;
                let b_side = a_side.complement();
                return Ok(Some((a_side, b_side)));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Advances `combo` to the next k-combination of `0..n` in lexicographic
/// order; false when exhausted.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in (i + 1)..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Decides meagerness straight from the definition: every nonempty subset
/// `Y` of `X` must contain a vertex with `d_Y(v) <= f(v) + w_G(v) - 1`.
pub fn meager_by_enumeration(
    g: &Multigraph,
    x: &VertexSet,
    f: &DegreeFunction,
    cap: usize,
) -> Result<bool> {
    let members = x.to_vec();
    let m = members.len();
    if m > cap {
        return Err(Error::Precondition(format!(
            "set has {m} members, above the enumeration cap {cap}"
        )));
    }
    if m > 63 {
        return Err(Error::Precondition(
            "enumeration supports at most 63 members".into(),
        ));
    }
    let threshold: Vec<i64> = members
        .iter()
        .map(|&v| f.get(v) + g.vertex_weight(v) as i64 - 1)
        .collect();
    for mask in 1u64..(1 << m) {
        let mut has_witness = false;
        for (i, &v) in members.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let mut d = 0i64;
            for (j, &u) in members.iter().enumerate() {
                if j != i && mask >> j & 1 == 1 {
                    d += g.multiplicity(v, u).expect("valid pair") as i64;
                }
            }
            if d <= threshold[i] {
                has_witness = true;
                break;
            }
        }
        if !has_witness {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three instance families that show the two-way degree bounds cannot
/// be relaxed by one more unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SharpnessFamily {
    /// Triangle with all multiplicities `t`; budgets `a = b = 1`.
    Tk3,
    /// Square antiprism scaled by `t`; budgets `a = 1`, `b = 2t + 1`.
    CubeH,
    /// Icosahedron scaled by `t`; budgets `a = 1`, `b = 3t + 1`.
    Icosa,
}

impl SharpnessFamily {
    pub fn name(self) -> &'static str {
        match self {
            SharpnessFamily::Tk3 => "tk3",
            SharpnessFamily::CubeH => "cubeH",
            SharpnessFamily::Icosa => "icosa",
        }
    }
}

impl FromStr for SharpnessFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tk3" => Ok(SharpnessFamily::Tk3),
            "cubeH" => Ok(SharpnessFamily::CubeH),
            "icosa" => Ok(SharpnessFamily::Icosa),
            other => Err(Error::Input(format!(
                "unknown family {other:?}; expected tk3, cubeH, or icosa"
            ))),
        }
    }
}

/// Outcome of a sharpness check: the instance must meet the relaxed bound
/// `d_G(v) >= a(v) + b(v) + 2 w_G(v) - 2` yet admit no feasible partition.
#[derive(Clone, Debug)]
pub struct SharpnessReport {
    pub family: &'static str,
    pub t: u64,
    pub vertex_count: usize,
    pub relaxed_bound_holds: bool,
    pub feasible_partition_exists: bool,
}

impl SharpnessReport {
    pub fn certified(&self) -> bool {
        self.relaxed_bound_holds && !self.feasible_partition_exists
    }
}

/// Builds the family instance at scale `t` and checks both halves of the
/// sharpness claim by enumeration.
pub fn certify_sharpness(family: SharpnessFamily, t: u64) -> Result<SharpnessReport> {
    if t < 1 {
        return Err(Error::Input(format!(
            "family scale t must be >= 1, got {t}"
        )));
    }
    let (g, a, b) = sharpness_instance(family, t)?;
    let n = g.vertex_count();
    let relaxed_bound_holds = (0..n)
        .all(|v| g.degree(v) as i64 >= a.get(v) + b.get(v) + 2 * g.vertex_weight(v) as i64 - 2);
    let witness = exists_feasible_partition(&g, &a, &b, DEFAULT_ENUMERATION_CAP)?;
    Ok(SharpnessReport {
        family: family.name(),
        t,
        vertex_count: n,
        relaxed_bound_holds,
        feasible_partition_exists: witness.is_some(),
    })
}

/// The family instance: graph plus the budgets its argument uses.
pub fn sharpness_instance(
    family: SharpnessFamily,
    t: u64,
) -> Result<(Multigraph, DegreeFunction, DegreeFunction)> {
    let (g, b_value) = match family {
        SharpnessFamily::Tk3 => (generators::tk3(t)?, 1),
        SharpnessFamily::CubeH => (
            generators::t_multiply(&generators::square_antiprism(), t)?,
            2 * t as i64 + 1,
        ),
        SharpnessFamily::Icosa => (
            generators::t_multiply(&generators::icosahedron(), t)?,
            3 * t as i64 + 1,
        ),
    };
    let n = g.vertex_count();
    let a = DegreeFunction::constant(n, 1)?;
    let b = DegreeFunction::constant(n, b_value)?;
    Ok((g, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::niceness::is_meager;

    #[test]
    fn k4_has_a_matching_witness() {
        let g = Multigraph::simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let one = DegreeFunction::constant(4, 1).unwrap();
        let (a_side, b_side) = exists_feasible_partition(&g, &one, &one, 20)
            .unwrap()
            .unwrap();
        assert_eq!(a_side.to_vec(), vec![0, 1]);
        assert_eq!(b_side.to_vec(), vec![2, 3]);
    }

    #[test]
    fn tk3_has_no_unit_partition() {
        for t in 1..=3 {
            let g = generators::tk3(t).unwrap();
            let one = DegreeFunction::constant(3, 1).unwrap();
            assert!(exists_feasible_partition(&g, &one, &one, 20)
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Multigraph::simple(4, &[(0, 1), (2, 3)]).unwrap();
        let one = DegreeFunction::constant(4, 1).unwrap();
        assert!(exists_feasible_partition(&g, &one, &one, 3).is_err());
        assert!(meager_by_enumeration(&g, &VertexSet::full(4), &one, 3).is_err());
    }

    #[test]
    fn meager_enumeration_examples() {
        let g = generators::tk3(1).unwrap();
        let one = DegreeFunction::constant(3, 1).unwrap();
        let singleton = VertexSet::from_ids(3, &[0]).unwrap();
        assert!(meager_by_enumeration(&g, &singleton, &one, 20).unwrap());
        assert!(!meager_by_enumeration(&g, &VertexSet::full(3), &one, 20).unwrap());
    }

    #[test]
    fn enumeration_matches_the_peeling_test() {
        for seed in 0..50 {
            let g = generators::random_multigraph(8, 0.5, 2, 4000 + seed).unwrap();
            let mut x = VertexSet::empty(8);
            for v in 0..8 {
                if g.degree(v) > 0 {
                    x.insert(v);
                }
            }
            let f = DegreeFunction::constant(8, (seed % 3) as i64).unwrap();
            assert_eq!(
                meager_by_enumeration(&g, &x, &f, 20).unwrap(),
                is_meager(&g, &x, &f).unwrap()
            );
        }
    }

    #[test]
    fn sharpness_families_certify() {
        for t in 1..=2 {
            assert!(certify_sharpness(SharpnessFamily::Tk3, t)
                .unwrap()
                .certified());
        }
        assert!(certify_sharpness(SharpnessFamily::CubeH, 1)
            .unwrap()
            .certified());
        assert!(certify_sharpness(SharpnessFamily::Icosa, 1)
            .unwrap()
            .certified());
    }

    #[test]
    fn family_names_parse() {
        assert_eq!(
            "tk3".parse::<SharpnessFamily>().unwrap(),
            SharpnessFamily::Tk3
        );
        assert_eq!(
            "cubeH".parse::<SharpnessFamily>().unwrap(),
            SharpnessFamily::CubeH
        );
        assert!("diamond".parse::<SharpnessFamily>().is_err());
    }
}
