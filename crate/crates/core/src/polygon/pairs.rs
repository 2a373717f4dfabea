use std::collections::BTreeSet;

use super::Edge;

/// Candidate pool of edge pairs from which the next independent set is
/// drawn. Each pair is stored once, ordered `(min, max)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairSet {
    pairs: BTreeSet<(Edge, Edge)>,
}

impl PairSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts the unordered pair; returns false if it was already present.
    pub fn insert(&mut self, x: Edge, y: Edge) -> bool {
        let pair = if x <= y { (x, y) } else { (y, x) };
        self.pairs.insert(pair)
    }

    /// Drops every pair that mentions `e`.
    pub fn remove_containing(&mut self, e: Edge) {
        self.pairs.retain(|&(x, y)| x != e && y != e);
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, Edge)> + '_ {
        self.pairs.iter().copied()
    }

    /// The union of all edges mentioned by some pair.
    pub fn union(&self) -> BTreeSet<Edge> {
        self.pairs.iter().flat_map(|&(x, y)| [x, y]).collect()
    }
}

impl FromIterator<(Edge, Edge)> for PairSet {
    fn from_iter<I: IntoIterator<Item = (Edge, Edge)>>(iter: I) -> Self {
        let mut s = PairSet::new();
        for (x, y) in iter {
            s.insert(x, y);
        }
        s
    }
}
