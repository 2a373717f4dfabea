//! Brute-force ground truth over the whole flip graph. Exponential in `m`,
//! so guarded to `m <= MAX_ORACLE_M`.

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use crate::dual::BinTree;
use crate::error::{Error, Result};
use crate::polygon::{Edge, Triangulation};

pub const MAX_ORACLE_M: u32 = 14;

fn guard(m: u32) -> Result<()> {
    if m < 3 {
        return Err(Error::TooFewVertices(m));
    }
    if m > MAX_ORACLE_M {
        return Err(Error::SizeLimit {
            m,
            limit: MAX_ORACLE_M,
        });
    }
    Ok(())
}

/// Canonical keys (sorted diagonal lists) of every triangulation of the
/// `m`-gon, in lexicographic order.
pub fn enumerate_keys(m: u32) -> Result<Vec<Vec<Edge>>> {
    guard(m)?;
    let mut memo: FxHashMap<(u32, u32), Vec<Vec<Edge>>> = FxHashMap::default();
    let mut keys = span(0, m - 1, &mut memo);
    for k in &mut keys {
        k.sort_unstable();
    }
    keys.sort_unstable();
    Ok(keys)
}

/// All diagonal sets triangulating the sub-polygon `lo..=hi` (chord
/// `(lo, hi)` itself excluded).
fn span(lo: u32, hi: u32, memo: &mut FxHashMap<(u32, u32), Vec<Vec<Edge>>>) -> Vec<Vec<Edge>> {
    if hi - lo < 2 {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(&(lo, hi)) {
        return v.clone();
    }
    let mut out = Vec::new();
    for apex in lo + 1..hi {
        let left = span(lo, apex, memo);
        let right = span(apex, hi, memo);
        for l in &left {
            for r in &right {
                let mut d = Vec::with_capacity(l.len() + r.len() + 2);
                d.extend_from_slice(l);
                d.extend_from_slice(r);
                if apex - lo >= 2 {
                    d.push(Edge::new(lo, apex));
                }
                if hi - apex >= 2 {
                    d.push(Edge::new(apex, hi));
                }
                out.push(d);
            }
        }
    }
    memo.insert((lo, hi), out.clone());
    out
}

/// Every triangulation of the `m`-gon exactly once, in canonical order.
pub fn enumerate_triangulations(m: u32) -> Result<Vec<Triangulation>> {
    enumerate_keys(m)?
        .into_iter()
        .map(|k| Triangulation::new(m, k))
        .collect()
}

/// Shortest flip-path length by breadth-first search from `t1`.
pub fn bfs_distance(t1: &Triangulation, t2: &Triangulation) -> Result<u32> {
    if t1.m() != t2.m() {
        return Err(Error::MismatchedSize(t1.m(), t2.m()));
    }
    guard(t1.m())?;
    let goal = t2.key();
    let start = t1.key();
    if start == goal {
        return Ok(0);
    }
    let mut seen: FxHashMap<Vec<Edge>, u32> = FxHashMap::default();
    seen.insert(start, 0);
    let mut queue = VecDeque::from([(t1.clone(), 0u32)]);
    while let Some((mut t, dist)) = queue.pop_front() {
        for d in t.sorted_diagonals() {
            let rec = t.flip(d).expect("diagonal");
            let key = t.key();
            if key == goal {
                return Ok(dist + 1);
            }
            if let std::collections::hash_map::Entry::Vacant(slot) = seen.entry(key) {
                slot.insert(dist + 1);
                queue.push_back((t.clone(), dist + 1));
            }
            t.unflip(rec);
        }
    }
    unreachable!("the flip graph is connected")
}

/// The associahedron skeleton: all triangulations of an `m`-gon with flip
/// adjacency.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    pub m: u32,
    pub vertices: Vec<Vec<Edge>>,
    pub adjacency: Vec<Vec<u32>>,
    index: FxHashMap<Vec<Edge>, u32>,
}

impl FlipGraph {
    pub fn new(m: u32) -> Result<Self> {
        let vertices = enumerate_keys(m)?;
        let index: FxHashMap<Vec<Edge>, u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i as u32))
            .collect();
        let adjacency = vertices
            .iter()
            .map(|k| {
                let mut t = Triangulation::new(m, k.iter().copied()).expect("enumerated");
                let mut adj: Vec<u32> = k
                    .iter()
                    .map(|&d| {
                        let rec = t.flip(d).expect("diagonal");
                        let j = index[&t.key()];
                        t.unflip(rec);
                        j
                    })
                    .collect();
                adj.sort_unstable();
                adj
            })
            .collect();
        Ok(FlipGraph {
            m,
            vertices,
            adjacency,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, t: &Triangulation) -> Option<u32> {
        self.index.get(&t.key()).copied()
    }

    pub fn triangulation(&self, i: u32) -> Triangulation {
        Triangulation::new(self.m, self.vertices[i as usize].iter().copied()).expect("enumerated")
    }

    /// Single-source distances to every vertex (`u32::MAX` if unreachable).
    pub fn distances_from(&self, source: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.len()];
        dist[source as usize] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[v as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Matching counts of a binary tree's internal nodes, split by whether the
/// root is covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchingCount {
    pub without_root: u128,
    pub with_root: u128,
}

impl MatchingCount {
    pub fn total(&self) -> u128 {
        self.without_root + self.with_root
    }
}

/// Counts matchings (empty one included) among the internal nodes of
/// `tree`, using the root-covered / root-uncovered recurrence.
pub fn count_matchings_dp(tree: &BinTree) -> MatchingCount {
    count(tree).unwrap_or(MatchingCount {
        without_root: 1,
        with_root: 0,
    })
}

fn count(tree: &BinTree) -> Option<MatchingCount> {
    let BinTree::Node(l, r) = tree else {
        return None;
    };
    let children: Vec<MatchingCount> = [count(l), count(r)].into_iter().flatten().collect();
    let without_root = children.iter().map(MatchingCount::total).product();
    let with_root = (0..children.len())
        .map(|i| {
            children
                .iter()
                .enumerate()
                .map(|(j, c)| if i == j { c.without_root } else { c.total() })
                .product::<u128>()
        })
        .sum();
    Some(MatchingCount {
        without_root,
        with_root,
    })
}

/// `F_0 = 0, F_1 = F_2 = 1`. Panics past `F_186`, the last that fits in u128.
pub fn fibonacci(n: u32) -> u128 {
    assert!(n <= 186, "F_{n} overflows u128");
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a.wrapping_add(b));
    }
    a
}
