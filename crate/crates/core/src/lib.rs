//! Exact flip distance between triangulations of a convex polygon.
//!
//! Equivalently, the rotation distance between two full binary trees. The
//! solver normalizes the pair, then runs a bounded branch-and-bound over
//! independent sets of diagonals on each remaining part. A breadth-first
//! oracle over the whole flip graph is included for small polygons.
//!
//! ```
//! use flipdist::{exact_distance, Edge, Triangulation};
//!
//! let zig = Triangulation::new(6, [Edge::new(0, 2), Edge::new(2, 4), Edge::new(0, 4)]).unwrap();
//! let zag = Triangulation::new(6, [Edge::new(1, 3), Edge::new(3, 5), Edge::new(1, 5)]).unwrap();
//! let sol = exact_distance(&zig, &zag).unwrap();
//! assert_eq!(sol.distance, 4);
//! assert_eq!(sol.witness.replay().unwrap(), zag);
//! ```

pub mod bench;
pub mod dag;
pub mod dual;
pub mod error;
pub mod generate;
pub mod normalize;
pub mod oracle;
pub mod polygon;
pub mod solver;

pub use error::{Error, Result};
pub use normalize::{is_trivial, normalize, NormalizedSet, Part};
pub use polygon::{Edge, FlipRecord, Instance, PairSet, Triangulation, VertexId};
pub use solver::{
    decide, exact_distance, solve_decision, SearchStats, Solution, Solver, SolverOptions,
};
