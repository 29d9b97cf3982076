//! Vertex subsets over a fixed universe `0..n`.

use crate::error::{Error, Result};

/// A subset of the vertices `0..n` of some graph, with O(1) membership.
///
/// The universe size is part of the value; operations that combine sets or
/// compare them against a graph expect matching universes.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    present: Vec<bool>,
    count: usize,
}

impl VertexSet {
    /// Empty set over universe `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            present: vec![false; n],
            count: 0,
        }
    }

    /// Full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet {
            present: vec![true; n],
            count: n,
        }
    }

    /// Set containing exactly the given ids; ids must be in range.
    pub fn from_ids(n: usize, ids: &[usize]) -> Result<Self> {
        let mut set = VertexSet::empty(n);
        for &v in ids {
            if v >= n {
                return Err(Error::Input(format!(
                    "vertex id {v} out of range for universe 0..{n}"
                )));
            }
            set.insert(v);
        }
        Ok(set)
    }

    pub fn universe(&self) -> usize {
        self.present.len()
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.present.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.present.len(), "vertex id out of range");
        if !self.present[v] {
            self.present[v] = true;
            self.count += 1;
        }
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.present.len(), "vertex id out of range");
        if self.present[v] {
            self.present[v] = false;
            self.count -= 1;
        }
    }

    /// Copy of `self` with `v` added.
    pub fn inserted(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    /// Copy of `self` with `v` removed.
    pub fn removed(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter_map(|(v, &p)| p.then_some(v))
    }

    /// Sorted member list.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let present: Vec<bool> = self.present.iter().map(|&p| !p).collect();
        let count = self.present.len() - self.count;
        VertexSet { present, count }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Union of two sets over the same universe.
    pub fn union(&self, other: &VertexSet) -> Self {
        assert_eq!(self.universe(), other.universe(), "universe mismatch");
        let mut s = self.clone();
        for v in other.iter() {
            s.insert(v);
        }
        s
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
