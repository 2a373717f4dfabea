//! Reduction of an arbitrary pair to independent parts that share no
//! diagonal and have no free diagonal.
//!
//! A common diagonal is never flipped on a shortest path, so the pair can be
//! cut along it. A free diagonal can always be flipped first, after which it
//! is common.

use std::collections::VecDeque;

use crate::error::Result;
use crate::polygon::{
    partition, triangulation::same_size, Edge, FlipRecord, PairSet, Triangulation, VertexId,
};

/// A sub-instance of the original pair, with its vertices' original labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    pub init: Triangulation,
    pub target: Triangulation,
    /// `labels[v]` is the original polygon vertex behind part vertex `v`.
    pub labels: Vec<VertexId>,
}

impl Part {
    pub fn whole(init: Triangulation, target: Triangulation) -> Self {
        let labels = (0..init.m()).collect();
        Part {
            init,
            target,
            labels,
        }
    }

    pub fn phi(&self) -> usize {
        self.init.phi()
    }

    pub fn edge_to_root(&self, e: Edge) -> Edge {
        Edge::new(self.labels[e.a as usize], self.labels[e.b as usize])
    }

    pub fn flip_to_root(&self, f: FlipRecord) -> FlipRecord {
        FlipRecord {
            underlying: self.edge_to_root(f.underlying),
            created: self.edge_to_root(f.created),
        }
    }

    /// Cuts along the common diagonal `ce`, carrying `pairs` to the sides.
    pub fn split(&self, ce: Edge, pairs: &PairSet) -> Result<((Part, PairSet), (Part, PairSet))> {
        let (a, b) = partition(&self.init, &self.target, pairs, ce)?;
        let lift = |s: crate::polygon::Side| {
            let labels = s.labels.iter().map(|&v| self.labels[v as usize]).collect();
            (
                Part {
                    init: s.init,
                    target: s.target,
                    labels,
                },
                s.pairs,
            )
        };
        Ok((lift(a), lift(b)))
    }
}

/// Result of [`normalize`].
#[derive(Debug, Clone)]
pub struct NormalizedSet {
    /// Free flips performed during the reduction.
    pub base_cost: u32,
    /// Parts with no common and no free diagonal, each with `phi >= 1`.
    pub subs: Vec<Part>,
    /// The free flips, in original labels and in the order performed.
    pub witness_prefix: Vec<FlipRecord>,
}

/// Order in which the trivial test consumes its work list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueueOrder {
    Fifo,
    Lifo,
}

/// Returns `phi(t1) - C(t1, t2)` when the pair can be solved by flipping
/// free diagonals only, which is exactly when that lower bound is tight.
pub fn is_trivial(t1: &Triangulation, t2: &Triangulation) -> Result<Option<u32>> {
    Ok(trivial_sequence(t1, t2, QueueOrder::Fifo)?.map(|s| s.len() as u32))
}

/// The free-flip sequence solving a trivial pair, or `None`.
///
/// Seeds a queue with the free diagonals and, after each flip, looks for
/// new free diagonals only among the neighbors of the created edge.
pub fn trivial_sequence(
    t1: &Triangulation,
    t2: &Triangulation,
    order: QueueOrder,
) -> Result<Option<Vec<FlipRecord>>> {
    same_size(t1, t2)?;
    let needed = t1.phi() - t1.common_count(t2);
    let mut t = t1.clone();
    let mut queue: VecDeque<Edge> = crate::polygon::triangulation::free_diagonals(t1, t2)?.into();
    let mut flips = Vec::with_capacity(needed);
    loop {
        let next = match order {
            QueueOrder::Fifo => queue.pop_front(),
            QueueOrder::Lifo => queue.pop_back(),
        };
        let Some(e) = next else { break };
        // Stale entries: already flipped, or queued twice.
        if !t.is_free(e, t2) {
            continue;
        }
        let rec = t.flip(e)?;
        flips.push(rec);
        for n in t.neighbor_iter(rec.created) {
            if t.contains_diagonal(n) && !t2.contains_diagonal(n) && t.is_free(n, t2) {
                queue.push_back(n);
            }
        }
    }
    Ok((flips.len() == needed).then_some(flips))
}

/// Cuts along common diagonals and flips free diagonals until every
/// remaining part has neither. Free diagonals are taken smallest first.
pub fn normalize(t1: &Triangulation, t2: &Triangulation) -> Result<NormalizedSet> {
    normalize_by(t1, t2, |t, target| t.smallest_free(target))
}

pub(crate) fn normalize_by(
    t1: &Triangulation,
    t2: &Triangulation,
    pick_free: impl Fn(&Triangulation, &Triangulation) -> Option<Edge>,
) -> Result<NormalizedSet> {
    same_size(t1, t2)?;
    let mut out = NormalizedSet {
        base_cost: 0,
        subs: Vec::new(),
        witness_prefix: Vec::new(),
    };
    let mut work = VecDeque::from([Part::whole(t1.clone(), t2.clone())]);
    let none = PairSet::new();
    while let Some(mut part) = work.pop_front() {
        if part.phi() == 0 {
            continue;
        }
        if let Some(ce) = part.init.smallest_common(&part.target) {
            let ((a, _), (b, _)) = part.split(ce, &none)?;
            work.push_front(b);
            work.push_front(a);
            continue;
        }
        if let Some(e) = pick_free(&part.init, &part.target) {
            let rec = part.init.flip(e)?;
            out.witness_prefix.push(part.flip_to_root(rec));
            out.base_cost += 1;
            work.push_front(part);
            continue;
        }
        out.subs.push(part);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{bfs_distance, FlipGraph};

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b)
    }

    fn zigzag() -> (Triangulation, Triangulation) {
        (
            Triangulation::new(6, [e(0, 2), e(2, 4), e(0, 4)]).unwrap(),
            Triangulation::new(6, [e(1, 3), e(3, 5), e(1, 5)]).unwrap(),
        )
    }

    #[test]
    fn trivial_examples() {
        let p0 = Triangulation::fan(5, 0).unwrap();
        let p1 = Triangulation::fan(5, 1).unwrap();
        assert_eq!(is_trivial(&p0, &p1).unwrap(), Some(2));
        let (zig, zag) = zigzag();
        assert_eq!(is_trivial(&zig, &zag).unwrap(), None);
        assert_eq!(is_trivial(&zig, &zig).unwrap(), Some(0));
        assert!(is_trivial(&zig, &p0).is_err());
    }

    #[test]
    fn normalize_examples() {
        let (zig, zag) = zigzag();
        let n = normalize(&zig, &zig).unwrap();
        assert_eq!((n.base_cost, n.subs.len()), (0, 0));

        let p0 = Triangulation::fan(5, 0).unwrap();
        let p1 = Triangulation::fan(5, 1).unwrap();
        let n = normalize(&p0, &p1).unwrap();
        assert_eq!((n.base_cost, n.subs.len()), (2, 0));
        let mut t = p0.clone();
        for f in &n.witness_prefix {
            assert_eq!(t.flip(f.underlying).unwrap().created, f.created);
        }
        assert_eq!(t, p1);

        let n = normalize(&zig, &zag).unwrap();
        assert_eq!(n.base_cost, 0);
        assert_eq!(n.subs, vec![Part::whole(zig, zag)]);
    }

    #[test]
    fn trivial_test_matches_oracle_and_queue_order() {
        for m in 4..=8 {
            let g = FlipGraph::new(m).unwrap();
            for i in 0..g.len() as u32 {
                let dist = g.distances_from(i);
                let t1 = g.triangulation(i);
                for j in 0..g.len() as u32 {
                    let t2 = g.triangulation(j);
                    let lower = (t1.phi() - t1.common_count(&t2)) as u32;
                    let fifo = trivial_sequence(&t1, &t2, QueueOrder::Fifo).unwrap();
                    let lifo = trivial_sequence(&t1, &t2, QueueOrder::Lifo).unwrap();
                    assert_eq!(fifo.is_some(), dist[j as usize] == lower, "{t1:?} {t2:?}");
                    assert_eq!(fifo.is_some(), lifo.is_some());
                    if let Some(seq) = fifo {
                        let mut t = t1.clone();
                        for f in seq {
                            t.flip(f.underlying).unwrap();
                        }
                        assert_eq!(t, t2);
                    }
                }
            }
        }
    }

    fn check_normalize(t1: &Triangulation, t2: &Triangulation, want: u32) {
        let n = normalize(t1, t2).unwrap();
        let largest = normalize_by(t1, t2, |t, target| {
            crate::polygon::triangulation::free_diagonals(t, target)
                .unwrap()
                .pop()
        })
        .unwrap();
        assert_eq!(n.base_cost, largest.base_cost);
        let dists = |s: &NormalizedSet| {
            let mut d: Vec<u32> = s
                .subs
                .iter()
                .map(|p| bfs_distance(&p.init, &p.target).unwrap())
                .collect();
            d.sort();
            d
        };
        let sub_total: u32 = dists(&n).iter().sum();
        assert_eq!(n.base_cost + sub_total, want);
        assert_eq!(dists(&n), dists(&largest));
        for p in &n.subs {
            assert!(p.phi() >= 1);
            assert_eq!(p.init.common_count(&p.target), 0);
            assert!(p.init.smallest_free(&p.target).is_none());
        }
    }

    #[test]
    fn normalize_is_sound_exhaustively() {
        for m in 4..=8 {
            let g = FlipGraph::new(m).unwrap();
            for i in 0..g.len() as u32 {
                let dist = g.distances_from(i);
                let t1 = g.triangulation(i);
                for j in 0..g.len() as u32 {
                    check_normalize(&t1, &g.triangulation(j), dist[j as usize]);
                }
            }
        }
    }

    #[test]
    fn trivial_test_scales_linearly() {
        use std::time::Instant;
        // Fan-to-fan pairs are trivial; time grows linearly with m.
        let time = |m: u32| {
            let t1 = Triangulation::fan(m, 0).unwrap();
            let t2 = Triangulation::fan(m, m / 2).unwrap();
            let start = Instant::now();
            let mut r = None;
            for _ in 0..5 {
                r = is_trivial(&t1, &t2).unwrap();
            }
            assert!(r.is_some());
            start.elapsed().as_secs_f64()
        };
        time(2_000);
        let small = time(20_000);
        let large = time(80_000);
        // A quadratic algorithm would show a ratio near 16.
        assert!(large / small < 8.0, "small {small}, large {large}");
    }
}
