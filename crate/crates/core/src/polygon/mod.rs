//! Combinatorial model of a convex polygon and its triangulations.
//!
//! Vertices are labeled `0..m` in counterclockwise hull order. Convexity is
//! implicit: two chords cross exactly when their endpoints interleave.

mod instance;
mod pairs;
mod partition;
pub(crate) mod triangulation;

use std::fmt;

pub use instance::Instance;
pub use pairs::PairSet;
pub use partition::{partition, Side};
pub use triangulation::{
    common_diagonals, free_diagonals, FlipRecord, Quad, Triangle, Triangulation,
};

pub type VertexId = u32;

/// An undirected polygon edge stored in canonical form `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
}

impl Edge {
    /// Builds the canonical edge between `x` and `y`.
    ///
    /// Panics if `x == y`.
    pub fn new(x: VertexId, y: VertexId) -> Self {
        assert_ne!(x, y, "an edge needs two distinct endpoints");
        if x < y {
            Edge { a: x, b: y }
        } else {
            Edge { a: y, b: x }
        }
    }

    pub fn is_hull(&self, m: u32) -> bool {
        self.b - self.a == 1 || (self.a == 0 && self.b == m - 1)
    }

    pub fn is_diagonal(&self, m: u32) -> bool {
        self.b < m && !self.is_hull(m)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// True iff the two chords strictly interleave around the hull.
pub fn crossing(d1: Edge, d2: Edge) -> bool {
    (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) || (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b)
}
