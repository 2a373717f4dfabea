use std::fmt;

use rustc_hash::{FxHashMap, FxHashSet};

use super::{Edge, VertexId};
use crate::error::{Error, Result};

/// A triangle as a sorted vertex triple.
pub type Triangle = [VertexId; 3];

/// The quadrilateral formed by the two triangles flanking a diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quad {
    pub diagonal: Edge,
    /// Apex strictly between `diagonal.a` and `diagonal.b`.
    pub inner: VertexId,
    /// Apex on the wrapping side.
    pub outer: VertexId,
}

impl Quad {
    pub fn opposite(&self) -> Edge {
        Edge::new(self.inner, self.outer)
    }
}

/// One performed flip: `underlying` was removed and `created` took its place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FlipRecord {
    pub underlying: Edge,
    pub created: Edge,
}

/// Apexes of the (at most two) triangles on each side of an edge.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Sides {
    inner: Option<VertexId>,
    outer: Option<VertexId>,
}

impl Sides {
    fn is_empty(&self) -> bool {
        self.inner.is_none() && self.outer.is_none()
    }
}

/// A triangulation of a convex `m`-gon.
///
/// Every edge, hull or diagonal, maps to the apexes of its incident
/// triangles, so flips and neighbor queries touch a constant number of
/// hash entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Triangulation {
    m: u32,
    edges: FxHashMap<Edge, Sides>,
}

impl Triangulation {
    /// Validates a diagonal list and builds the incidence structure.
    pub fn new(m: u32, diagonals: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if m < 3 {
            return Err(Error::TooFewVertices(m));
        }
        let mut diags: Vec<Edge> = diagonals.into_iter().collect();
        for &d in &diags {
            if d.b >= m {
                return Err(Error::VertexOutOfRange { vertex: d.b, m });
            }
            if !d.is_diagonal(m) {
                return Err(Error::NotADiagonal(d));
            }
        }
        // Nested intervals come first so the stack holds the enclosing chords.
        diags.sort_unstable_by(|x, y| x.a.cmp(&y.a).then(y.b.cmp(&x.b)));
        if let Some(w) = diags.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateDiagonal(w[0]));
        }
        let mut open: Vec<Edge> = Vec::new();
        for &d in &diags {
            while open.last().is_some_and(|top| top.b <= d.a) {
                open.pop();
            }
            if let Some(&top) = open.last() {
                if d.b > top.b {
                    return Err(Error::Crossing(top, d));
                }
            }
            open.push(d);
        }
        let expected = (m - 3) as usize;
        if diags.len() != expected {
            return Err(Error::DiagonalCount {
                m,
                expected,
                found: diags.len(),
            });
        }

        let mut adjacency: Vec<Vec<VertexId>> = vec![Vec::new(); m as usize];
        for v in 0..m {
            let w = (v + 1) % m;
            adjacency[v as usize].push(w);
            adjacency[w as usize].push(v);
        }
        for d in &diags {
            adjacency[d.a as usize].push(d.b);
            adjacency[d.b as usize].push(d.a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let mut t = Triangulation {
            m,
            edges: FxHashMap::with_capacity_and_hasher(2 * m as usize, Default::default()),
        };
        // Each triangle is found exactly once, from its widest edge (a, b):
        // the apex is the last neighbor of `a` before `b`.
        let widest = diags
            .iter()
            .copied()
            .chain(std::iter::once(Edge::new(0, m - 1)));
        for e in widest {
            let list = &adjacency[e.a as usize];
            let pos = list.partition_point(|&v| v < e.b);
            let apex = list[pos - 1];
            debug_assert!(apex > e.a);
            debug_assert!(adjacency[apex as usize].binary_search(&e.b).is_ok());
            t.add_triangle([e.a, apex, e.b]);
        }
        debug_assert_eq!(t.edges.len(), 2 * m as usize - 3);
        Ok(t)
    }

    /// The fan triangulation with every diagonal incident to `apex`.
    pub fn fan(m: u32, apex: VertexId) -> Result<Self> {
        if apex >= m {
            return Err(Error::VertexOutOfRange { vertex: apex, m });
        }
        let diags = (2..m.saturating_sub(1)).map(|i| Edge::new(apex, (apex + i) % m));
        Triangulation::new(m, diags)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of diagonals, always `m - 3`.
    pub fn phi(&self) -> usize {
        (self.m - 3) as usize
    }

    /// Diagonals in unspecified order.
    pub fn diagonals(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges
            .iter()
            .filter(|(_, s)| s.inner.is_some() && s.outer.is_some())
            .map(|(e, _)| *e)
    }

    /// Diagonals in canonical ascending order. Also the canonical key of the
    /// triangulation.
    pub fn sorted_diagonals(&self) -> Vec<Edge> {
        let mut d: Vec<Edge> = self.diagonals().collect();
        d.sort_unstable();
        d
    }

    pub fn key(&self) -> Vec<Edge> {
        self.sorted_diagonals()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn contains_diagonal(&self, e: Edge) -> bool {
        self.edges
            .get(&e)
            .is_some_and(|s| s.inner.is_some() && s.outer.is_some())
    }

    /// All `m - 2` triangles in ascending order.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut tris: Vec<Triangle> = self
            .edges
            .iter()
            .filter_map(|(e, s)| s.inner.map(|c| [e.a, c, e.b]))
            .collect();
        tris.sort_unstable();
        tris
    }

    /// Apex of the triangle on the inner side of `e` (between its endpoints).
    pub fn inner_apex(&self, e: Edge) -> Option<VertexId> {
        self.edges.get(&e).and_then(|s| s.inner)
    }

    pub fn quad_of(&self, d: Edge) -> Result<Quad> {
        match self.edges.get(&d) {
            Some(&Sides {
                inner: Some(inner),
                outer: Some(outer),
            }) => Ok(Quad {
                diagonal: d,
                inner,
                outer,
            }),
            _ => Err(Error::MissingEdge(d)),
        }
    }

    /// Flips diagonal `d` in place.
    pub fn flip(&mut self, d: Edge) -> Result<FlipRecord> {
        let q = self.quad_of(d)?;
        let (a, b, p, o) = (d.a, d.b, q.inner, q.outer);
        self.remove_triangle([a, p, b]);
        self.remove_triangle(sorted3(a, b, o));
        self.add_triangle(sorted3(a, p, o));
        self.add_triangle(sorted3(p, b, o));
        Ok(FlipRecord {
            underlying: d,
            created: q.opposite(),
        })
    }

    /// Reverts a flip previously returned by [`Triangulation::flip`].
    pub fn unflip(&mut self, record: FlipRecord) {
        let back = self
            .flip(record.created)
            .expect("unflip of a flip that is not current");
        debug_assert_eq!(back.created, record.underlying);
    }

    /// The other edges of the triangle(s) containing `e`.
    pub fn neighbors(&self, e: Edge) -> Result<Vec<Edge>> {
        if !self.contains_edge(e) {
            return Err(Error::MissingEdge(e));
        }
        Ok(self.neighbor_iter(e).collect())
    }

    /// Like [`Triangulation::neighbors`] without allocation; empty when `e`
    /// is absent.
    pub(crate) fn neighbor_iter(&self, e: Edge) -> impl Iterator<Item = Edge> {
        let s = self.edges.get(&e).copied().unwrap_or_default();
        [s.inner, s.outer]
            .into_iter()
            .flatten()
            .flat_map(move |c| [Edge::new(e.a, c), Edge::new(c, e.b)])
    }

    /// Two diagonals are independent when they share no triangle.
    pub fn independent(&self, d1: Edge, d2: Edge) -> bool {
        d1 != d2 && !self.neighbor_iter(d1).any(|n| n == d2)
    }

    /// Whether flipping `d` would create a diagonal of `target`.
    pub fn is_free(&self, d: Edge, target: &Triangulation) -> bool {
        self.quad_of(d)
            .is_ok_and(|q| target.contains_diagonal(q.opposite()))
    }

    /// Smallest free diagonal with respect to `target`, if any.
    pub fn smallest_free(&self, target: &Triangulation) -> Option<Edge> {
        self.edges
            .iter()
            .filter_map(|(e, s)| match (s.inner, s.outer) {
                (Some(p), Some(q)) if target.contains_diagonal(Edge::new(p, q)) => Some(*e),
                _ => None,
            })
            .min()
    }

    /// Smallest diagonal shared with `other`, if any.
    pub fn smallest_common(&self, other: &Triangulation) -> Option<Edge> {
        self.diagonals()
            .filter(|d| other.contains_diagonal(*d))
            .min()
    }

    pub fn common_count(&self, other: &Triangulation) -> usize {
        self.diagonals()
            .filter(|d| other.contains_diagonal(*d))
            .count()
    }

    fn add_triangle(&mut self, [x, y, z]: Triangle) {
        debug_assert!(x < y && y < z);
        self.edges.entry(Edge { a: x, b: y }).or_default().outer = Some(z);
        self.edges.entry(Edge { a: y, b: z }).or_default().outer = Some(x);
        self.edges.entry(Edge { a: x, b: z }).or_default().inner = Some(y);
    }

    fn remove_triangle(&mut self, [x, y, z]: Triangle) {
        self.clear_side(Edge { a: x, b: y }, false);
        self.clear_side(Edge { a: y, b: z }, false);
        self.clear_side(Edge { a: x, b: z }, true);
    }

    fn clear_side(&mut self, e: Edge, inner: bool) {
        let Some(s) = self.edges.get_mut(&e) else {
            return;
        };
        if inner {
            s.inner = None;
        } else {
            s.outer = None;
        }
        if s.is_empty() {
            self.edges.remove(&e);
        }
    }

    /// Checks the structural invariants; used by tests.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let m = self.m;
        let diags = self.sorted_diagonals();
        if diags.len() != self.phi() {
            return Err(format!(
                "{} diagonals, expected {}",
                diags.len(),
                self.phi()
            ));
        }
        for (i, d1) in diags.iter().enumerate() {
            for d2 in &diags[i + 1..] {
                if super::crossing(*d1, *d2) {
                    return Err(format!("{d1} crosses {d2}"));
                }
            }
        }
        for (e, s) in &self.edges {
            let count = s.inner.is_some() as usize + s.outer.is_some() as usize;
            let want = if e.is_hull(m) { 1 } else { 2 };
            if count != want {
                return Err(format!("edge {e} has {count} incident triangles"));
            }
        }
        for v in 0..m {
            if !self.contains_edge(Edge::new(v, (v + 1) % m)) {
                return Err(format!("hull edge at {v} missing"));
            }
        }
        let tris = self.triangles();
        if tris.len() != (m - 2) as usize {
            return Err(format!("{} triangles", tris.len()));
        }
        let distinct: FxHashSet<Triangle> = tris.iter().copied().collect();
        if distinct.len() != tris.len() {
            return Err("duplicate triangle".into());
        }
        Ok(())
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Triangulation")
            .field("m", &self.m)
            .field("diagonals", &self.sorted_diagonals())
            .finish()
    }
}

pub(crate) fn sorted3(x: VertexId, y: VertexId, z: VertexId) -> Triangle {
    let mut t = [x, y, z];
    t.sort_unstable();
    t
}

/// Diagonals of `t1` also present in `t2`, ascending.
pub fn common_diagonals(t1: &Triangulation, t2: &Triangulation) -> Result<Vec<Edge>> {
    same_size(t1, t2)?;
    let mut c: Vec<Edge> = t1
        .diagonals()
        .filter(|d| t2.contains_diagonal(*d))
        .collect();
    c.sort_unstable();
    Ok(c)
}

/// Diagonals of `t1` whose flip creates a diagonal of `t2`, ascending.
pub fn free_diagonals(t1: &Triangulation, t2: &Triangulation) -> Result<Vec<Edge>> {
    same_size(t1, t2)?;
    let mut f: Vec<Edge> = t1.diagonals().filter(|d| t1.is_free(*d, t2)).collect();
    f.sort_unstable();
    Ok(f)
}

pub(crate) fn same_size(t1: &Triangulation, t2: &Triangulation) -> Result<()> {
    if t1.m() != t2.m() {
        return Err(Error::MismatchedSize(t1.m(), t2.m()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tri(m: u32, d: &[(u32, u32)]) -> Triangulation {
        Triangulation::new(m, d.iter().map(|&(a, b)| Edge::new(a, b))).unwrap()
    }

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b)
    }

    #[test]
    fn fan_triangles() {
        let t = tri(6, &[(0, 2), (0, 3), (0, 4)]);
        assert_eq!(
            t.triangles(),
            vec![[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5]]
        );
        assert_eq!(t, Triangulation::fan(6, 0).unwrap());
        t.check_invariants().unwrap();
    }

    #[test]
    fn bare_triangle() {
        let t = tri(3, &[]);
        assert_eq!(t.phi(), 0);
        assert_eq!(t.triangles(), vec![[0, 1, 2]]);
        t.check_invariants().unwrap();
    }

    #[test]
    fn rejects_bad_input() {
        let r = Triangulation::new(5, [e(0, 2), e(1, 3)]);
        assert!(matches!(r, Err(Error::Crossing(..))));
        let r = Triangulation::new(4, [e(0, 2), e(1, 3)]);
        assert!(matches!(
            r,
            Err(Error::Crossing(..)) | Err(Error::DiagonalCount { .. })
        ));
        assert!(matches!(
            Triangulation::new(5, [e(0, 2), e(0, 2)]),
            Err(Error::DuplicateDiagonal(_))
        ));
        assert!(matches!(
            Triangulation::new(5, [e(0, 1), e(0, 2)]),
            Err(Error::NotADiagonal(_))
        ));
        assert!(matches!(
            Triangulation::new(5, [e(0, 7), e(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Triangulation::new(6, [e(0, 2)]),
            Err(Error::DiagonalCount { .. })
        ));
        assert!(matches!(
            Triangulation::new(2, []),
            Err(Error::TooFewVertices(2))
        ));
    }

    #[test]
    fn quads() {
        let fan = Triangulation::fan(6, 0).unwrap();
        let q = fan.quad_of(e(0, 3)).unwrap();
        assert_eq!((q.inner, q.outer, q.opposite()), (2, 4, e(2, 4)));
        let sq = tri(4, &[(0, 2)]);
        assert_eq!(sq.quad_of(e(0, 2)).unwrap().opposite(), e(1, 3));
        let zig = tri(6, &[(0, 2), (2, 4), (0, 4)]);
        let q = zig.quad_of(e(0, 2)).unwrap();
        assert_eq!((q.inner, q.outer), (1, 4));
        assert!(zig.quad_of(e(1, 3)).is_err());
        assert!(zig.quad_of(e(0, 1)).is_err());
    }

    #[test]
    fn flips() {
        let mut sq = tri(4, &[(0, 2)]);
        let r = sq.flip(e(0, 2)).unwrap();
        assert_eq!(r.created, e(1, 3));
        sq.flip(e(1, 3)).unwrap();
        assert_eq!(sq, tri(4, &[(0, 2)]));

        let mut zig = tri(6, &[(0, 2), (2, 4), (0, 4)]);
        assert_eq!(zig.flip(e(0, 2)).unwrap().created, e(1, 4));
        assert_eq!(zig.sorted_diagonals(), vec![e(0, 4), e(1, 4), e(2, 4)]);
        zig.check_invariants().unwrap();

        let mut fan = Triangulation::fan(6, 0).unwrap();
        assert_eq!(fan.flip(e(0, 3)).unwrap().created, e(2, 4));
        assert!(fan.flip(e(0, 3)).is_err());
    }

    #[test]
    fn neighbor_examples() {
        let fan = Triangulation::fan(6, 0).unwrap();
        let mut n = fan.neighbors(e(0, 3)).unwrap();
        n.sort();
        assert_eq!(n, vec![e(0, 2), e(0, 4), e(2, 3), e(3, 4)]);
        assert!(fan.independent(e(0, 2), e(0, 4)));
        assert!(!fan.independent(e(0, 2), e(0, 3)));
        let sq = tri(4, &[(0, 2)]);
        let mut n = sq.neighbors(e(0, 2)).unwrap();
        n.sort();
        assert_eq!(n, vec![e(0, 1), e(0, 3), e(1, 2), e(2, 3)]);
        assert!(sq.neighbors(e(1, 3)).is_err());
    }

    #[test]
    fn common_and_free() {
        let f0 = Triangulation::fan(6, 0).unwrap();
        let f1 = Triangulation::fan(6, 1).unwrap();
        let f3 = Triangulation::fan(6, 3).unwrap();
        assert!(common_diagonals(&f0, &f1).unwrap().is_empty());
        assert_eq!(common_diagonals(&f0, &f0).unwrap().len(), 3);
        assert_eq!(common_diagonals(&f0, &f3).unwrap(), vec![e(0, 3)]);

        let p0 = Triangulation::fan(5, 0).unwrap();
        let p1 = Triangulation::fan(5, 1).unwrap();
        assert_eq!(free_diagonals(&p0, &p1).unwrap(), vec![e(0, 2)]);

        let zig = tri(6, &[(0, 2), (2, 4), (0, 4)]);
        let zag = tri(6, &[(1, 3), (3, 5), (1, 5)]);
        assert!(free_diagonals(&zig, &zag).unwrap().is_empty());
        assert!(free_diagonals(&f0, &f0).unwrap().is_empty());
        assert!(free_diagonals(&f0, &p0).is_err());
    }

    /// Random triangulation by recursive apex choice; independent of the
    /// uniform generator.
    fn arb_triangulation(max_m: u32) -> impl Strategy<Value = Triangulation> {
        (3..=max_m).prop_flat_map(arb_triangulation_of)
    }

    fn arb_triangulation_of(m: u32) -> impl Strategy<Value = Triangulation> {
        proptest::collection::vec(any::<u32>(), 64).prop_map(move |choices| {
            let mut diags = Vec::new();
            let mut stack = vec![(0u32, m - 1)];
            let mut i = 0;
            while let Some((lo, hi)) = stack.pop() {
                if hi - lo < 2 {
                    continue;
                }
                let c = lo + 1 + choices[i % choices.len()] % (hi - lo - 1);
                i += 1;
                for (x, y) in [(lo, c), (c, hi)] {
                    if y - x >= 2 {
                        diags.push(Edge::new(x, y));
                        stack.push((x, y));
                    }
                }
            }
            Triangulation::new(m, diags).unwrap()
        })
    }

    proptest! {
        #[test]
        fn flip_is_an_involution(t in arb_triangulation(14), pick in any::<prop::sample::Index>()) {
            let diags = t.sorted_diagonals();
            prop_assume!(!diags.is_empty());
            let d = diags[pick.index(diags.len())];
            let mut u = t.clone();
            let r = u.flip(d).unwrap();
            prop_assert!(u.check_invariants().is_ok());
            prop_assert!(crate::polygon::crossing(r.underlying, r.created));
            u.unflip(r);
            prop_assert_eq!(u, t);
        }

        #[test]
        fn neighbors_are_symmetric(t in arb_triangulation(12)) {
            let edges: Vec<Edge> = t.edges.keys().copied().collect();
            for &x in &edges {
                for y in t.neighbors(x).unwrap() {
                    prop_assert!(t.neighbors(y).unwrap().contains(&x));
                }
            }
        }

        #[test]
        fn free_diagonals_are_independent(
            (t1, t2) in (3u32..=12).prop_flat_map(|m| (arb_triangulation_of(m), arb_triangulation_of(m)))
        ) {
            let free = free_diagonals(&t1, &t2).unwrap();
            for (i, &x) in free.iter().enumerate() {
                for &y in &free[i + 1..] {
                    prop_assert!(t1.independent(x, y));
                }
            }
        }
    }
}
