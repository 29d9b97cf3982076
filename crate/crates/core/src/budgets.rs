//! Per-vertex integer degree budgets.

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// A per-vertex degree budget, one value for each vertex `0..n`.
///
/// Public constructors enforce nonnegative values. The arithmetic helpers
/// ([`DegreeFunction::offset`] in particular) may produce negative entries;
/// those are kept exact — the solvers deliberately work with budgets like
/// `b - 1` and the peeling primitives treat a negative budget as "always
/// satisfied".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeFunction {
    values: Vec<i64>,
}

impl DegreeFunction {
    /// Constant budget `c` on a universe of `n` vertices.
    pub fn constant(n: usize, c: i64) -> Result<Self> {
        if c < 0 {
            return Err(Error::Input(format!("budget must be nonnegative, got {c}")));
        }
        Ok(DegreeFunction { values: vec![c; n] })
    }

    /// Budget from explicit values; all must be nonnegative.
    pub fn from_values(values: Vec<i64>) -> Result<Self> {
        if let Some((v, &x)) = values.iter().enumerate().find(|(_, &x)| x < 0) {
            return Err(Error::Input(format!(
                "budget must be nonnegative, got {x} at vertex {v}"
            )));
        }
        Ok(DegreeFunction { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: usize) -> i64 {
        self.values[v]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Pointwise `f + delta`. May produce negative entries; they stay exact.
    pub fn offset(&self, delta: i64) -> Self {
        DegreeFunction {
            values: self.values.iter().map(|&x| x + delta).collect(),
        }
    }

    /// Pointwise sum of two budgets on the same universe.
    pub fn add(&self, other: &DegreeFunction) -> Self {
        assert_eq!(self.len(), other.len(), "universe mismatch");
        DegreeFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&x, &y)| x + y)
                .collect(),
        }
    }

    /// Pointwise `f(v) + w_G(v)`, the threshold budget used by meagerness tests.
    pub fn plus_weights(&self, g: &Multigraph) -> Self {
        assert_eq!(self.len(), g.vertex_count(), "universe mismatch");
        DegreeFunction {
            values: (0..self.len())
                .map(|v| self.values[v] + g.vertex_weight(v) as i64)
                .collect(),
        }
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().sum()
    }

    pub fn min_value(&self) -> Option<i64> {
        self.values.iter().copied().min()
    }

    /// Restriction to a kept-vertex list: entry `i` of the result is the
    /// budget of `kept[i]`.
    pub fn restricted(&self, kept: &[usize]) -> Self {
        DegreeFunction {
            values: kept.iter().map(|&v| self.values[v]).collect(),
        }
    }
}
