use super::{Edge, PairSet, Triangulation, VertexId};
use crate::error::{Error, Result};

/// One side of a pair of triangulations cut along a common diagonal.
#[derive(Debug, Clone)]
pub struct Side {
    pub init: Triangulation,
    pub target: Triangulation,
    pub pairs: PairSet,
    /// `labels[v]` is the parent-polygon vertex that side vertex `v` came from.
    pub labels: Vec<VertexId>,
}

impl Side {
    pub fn phi(&self) -> usize {
        self.init.phi()
    }

    /// Maps a side edge back to parent coordinates.
    pub fn to_parent(&self, e: Edge) -> Edge {
        Edge::new(self.labels[e.a as usize], self.labels[e.b as usize])
    }
}

/// Cuts `(t1, t2)` along the common diagonal `ce`.
///
/// Side A holds vertices `ce.a..=ce.b` relabeled `v - ce.a`; side B holds
/// `ce.b..=ce.a` (wrapping) relabeled `(v - ce.b) mod m`. `ce` becomes a hull
/// edge of both. Pairs go to the side containing both of their edges; pairs
/// straddling `ce` are dropped.
pub fn partition(
    t1: &Triangulation,
    t2: &Triangulation,
    pairs: &PairSet,
    ce: Edge,
) -> Result<(Side, Side)> {
    super::triangulation::same_size(t1, t2)?;
    if !(t1.contains_diagonal(ce) && t2.contains_diagonal(ce)) {
        return Err(Error::NotCommon(ce));
    }
    let m = t1.m();
    let (lo, hi) = (ce.a, ce.b);
    let in_a = |v: VertexId| lo <= v && v <= hi;
    let in_b = |v: VertexId| v <= lo || v >= hi;
    let to_a = |v: VertexId| v - lo;
    let to_b = |v: VertexId| (v + m - hi) % m;

    let m_a = hi - lo + 1;
    let m_b = m - hi + lo + 1;
    let labels_a: Vec<VertexId> = (lo..=hi).collect();
    let labels_b: Vec<VertexId> = (0..m_b).map(|i| (hi + i) % m).collect();

    let split = |t: &Triangulation| -> Result<(Triangulation, Triangulation)> {
        let mut da = Vec::new();
        let mut db = Vec::new();
        for d in t.diagonals().filter(|&d| d != ce) {
            if in_a(d.a) && in_a(d.b) {
                da.push(Edge::new(to_a(d.a), to_a(d.b)));
            } else {
                debug_assert!(in_b(d.a) && in_b(d.b));
                db.push(Edge::new(to_b(d.a), to_b(d.b)));
            }
        }
        Ok((Triangulation::new(m_a, da)?, Triangulation::new(m_b, db)?))
    };
    let (init_a, init_b) = split(t1)?;
    let (target_a, target_b) = split(t2)?;

    let mut pairs_a = PairSet::new();
    let mut pairs_b = PairSet::new();
    for (x, y) in pairs.iter() {
        if in_a(x.a) && in_a(x.b) && in_a(y.a) && in_a(y.b) {
            pairs_a.insert(
                Edge::new(to_a(x.a), to_a(x.b)),
                Edge::new(to_a(y.a), to_a(y.b)),
            );
        } else if in_b(x.a) && in_b(x.b) && in_b(y.a) && in_b(y.b) {
            pairs_b.insert(
                Edge::new(to_b(x.a), to_b(x.b)),
                Edge::new(to_b(y.a), to_b(y.b)),
            );
        }
        // Otherwise the pair's triangle was destroyed by the flip that
        // created `ce`; both its edges are already covered by pairs
        // flanking `ce`, so it is dropped.
    }

    Ok((
        Side {
            init: init_a,
            target: target_a,
            pairs: pairs_a,
            labels: labels_a,
        },
        Side {
            init: init_b,
            target: target_b,
            pairs: pairs_b,
            labels: labels_b,
        },
    ))
}
