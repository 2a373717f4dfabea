//! Flip sequences and their dependency DAG.
//!
//! Flip `j` depends on an earlier flip `i` when the edge created by `i` is
//! still present and either is the edge `j` removes or shares a triangle
//! with it just before `j` is performed. Any topological order of the
//! resulting DAG replays to the same triangulation.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::polygon::{Edge, FlipRecord, Triangulation};

/// A replayable list of flips from a fixed start triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipSequence {
    pub start: Triangulation,
    pub flips: Vec<FlipRecord>,
}

impl FlipSequence {
    pub fn new(start: Triangulation, flips: Vec<FlipRecord>) -> Self {
        FlipSequence { start, flips }
    }

    pub fn len(&self) -> usize {
        self.flips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flips.is_empty()
    }

    /// Performs every flip, checking that each removes a current diagonal and
    /// creates the recorded edge.
    pub fn replay(&self) -> Result<Triangulation> {
        let mut t = self.start.clone();
        for (step, f) in self.flips.iter().enumerate() {
            match t.flip(f.underlying) {
                Ok(done) if done.created == f.created => {}
                _ => {
                    return Err(Error::NotReplayable {
                        step,
                        edge: f.underlying,
                    })
                }
            }
        }
        Ok(t)
    }

    /// The same flips in the order given by `order` (a permutation of indices).
    pub fn reordered(&self, order: &[usize]) -> FlipSequence {
        FlipSequence::new(
            self.start.clone(),
            order.iter().map(|&i| self.flips[i]).collect(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlipDag {
    pub nodes: Vec<FlipRecord>,
    /// Direct dependencies `(i, j)` with `i < j`; no transitive closure.
    pub arcs: BTreeSet<(usize, usize)>,
}

impl FlipDag {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn sources(&self) -> Vec<usize> {
        let has_pred: BTreeSet<usize> = self.arcs.iter().map(|&(_, j)| j).collect();
        (0..self.len()).filter(|v| !has_pred.contains(v)).collect()
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.len()];
        for &(i, j) in &self.arcs {
            succ[i].push(j);
        }
        succ
    }

    /// Whether a directed path leads from `from` to `to`.
    pub fn has_path(&self, from: usize, to: usize) -> bool {
        let succ = self.successors();
        let mut seen = vec![false; self.len()];
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            if v == to {
                return true;
            }
            for &w in &succ[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    pub fn is_topological(&self, order: &[usize]) -> bool {
        let mut pos = vec![usize::MAX; self.len()];
        for (p, &v) in order.iter().enumerate() {
            if v >= self.len() || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = p;
        }
        order.len() == self.len() && self.arcs.iter().all(|&(i, j)| pos[i] < pos[j])
    }
}

pub fn build_dag(seq: &FlipSequence) -> Result<FlipDag> {
    let mut t = seq.start.clone();
    let mut creator: FxHashMap<Edge, usize> = FxHashMap::default();
    let mut arcs = BTreeSet::new();
    for (j, f) in seq.flips.iter().enumerate() {
        if !t.contains_diagonal(f.underlying) {
            return Err(Error::NotReplayable {
                step: j,
                edge: f.underlying,
            });
        }
        let touched = std::iter::once(f.underlying).chain(t.neighbor_iter(f.underlying));
        for e in touched {
            if let Some(&i) = creator.get(&e) {
                arcs.insert((i, j));
            }
        }
        let done = t.flip(f.underlying)?;
        if done.created != f.created {
            return Err(Error::NotReplayable {
                step: j,
                edge: f.underlying,
            });
        }
        creator.remove(&f.underlying);
        creator.insert(f.created, j);
    }
    Ok(FlipDag {
        nodes: seq.flips.clone(),
        arcs,
    })
}

/// Largest DAG for which topological sorts are sampled exactly uniformly;
/// bigger ones fall back to a random-source Kahn order.
const EXACT_SAMPLING_LIMIT: usize = 18;

/// Draws a topological sort of `dag`. Uniform over all linear extensions
/// when the DAG has at most 18 nodes.
pub fn random_topological_sort<R: Rng>(dag: &FlipDag, rng: &mut R) -> Vec<usize> {
    let n = dag.len();
    let mut preds = vec![0u64; n];
    for &(i, j) in &dag.arcs {
        preds[j] |= 1 << i;
    }
    if n > EXACT_SAMPLING_LIMIT {
        return kahn_random(dag, rng);
    }
    let full: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut memo: FxHashMap<u64, u128> = FxHashMap::default();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while placed != full {
        let ready: Vec<usize> = (0..n)
            .filter(|&v| placed >> v & 1 == 0 && preds[v] & !placed == 0)
            .collect();
        let weights: Vec<u128> = ready
            .iter()
            .map(|&v| extensions(placed | 1 << v, full, &preds, &mut memo))
            .collect();
        let total: u128 = weights.iter().sum();
        let mut pick = rng.random_range(0..total);
        let mut chosen = ready[ready.len() - 1];
        for (&v, &w) in ready.iter().zip(&weights) {
            if pick < w {
                chosen = v;
                break;
            }
            pick -= w;
        }
        order.push(chosen);
        placed |= 1 << chosen;
    }
    order
}

/// Number of ways to finish a topological order once `placed` is placed.
fn extensions(placed: u64, full: u64, preds: &[u64], memo: &mut FxHashMap<u64, u128>) -> u128 {
    if placed == full {
        return 1;
    }
    if let Some(&c) = memo.get(&placed) {
        return c;
    }
    let c = (0..preds.len())
        .filter(|&v| placed >> v & 1 == 0 && preds[v] & !placed == 0)
        .map(|v| extensions(placed | 1 << v, full, preds, memo))
        .sum();
    memo.insert(placed, c);
    c
}

fn kahn_random<R: Rng>(dag: &FlipDag, rng: &mut R) -> Vec<usize> {
    let succ = dag.successors();
    let mut indegree = vec![0usize; dag.len()];
    for &(_, j) in &dag.arcs {
        indegree[j] += 1;
    }
    let mut ready: Vec<usize> = (0..dag.len()).filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::with_capacity(dag.len());
    while !ready.is_empty() {
        let v = ready.swap_remove(rng.random_range(0..ready.len()));
        order.push(v);
        for &w in &succ[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(w);
            }
        }
    }
    order
}

/// Samples `samples` topological sorts of the sequence's DAG and checks that
/// each replays to the same end triangulation and rebuilds the same DAG.
pub fn topo_replay_check(seq: &FlipSequence, samples: usize, seed: u64) -> Result<bool> {
    let end = seq.replay()?;
    let dag = build_dag(seq)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let order = random_topological_sort(&dag, &mut rng);
        debug_assert!(dag.is_topological(&order));
        let permuted = seq.reordered(&order);
        if permuted.replay().ok().as_ref() != Some(&end) {
            return Ok(false);
        }
        let Ok(rebuilt) = build_dag(&permuted) else {
            return Ok(false);
        };
        let arcs: BTreeSet<(usize, usize)> = rebuilt
            .arcs
            .iter()
            .map(|&(p, q)| (order[p], order[q]))
            .collect();
        if arcs != dag.arcs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Graphviz rendering with one node per flip and one line per arc.
pub fn dot_export(dag: &FlipDag) -> String {
    if dag.is_empty() {
        return "digraph D_F { }\n".to_string();
    }
    let mut out = String::from("digraph D_F {\n");
    for (i, f) in dag.nodes.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {i} [label=\"{i}: {}->{}\"];",
            f.underlying, f.created
        );
    }
    for (i, j) in &dag.arcs {
        let _ = writeln!(out, "  {i} -> {j};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b)
    }

    fn pentagon_witness() -> FlipSequence {
        let start = Triangulation::fan(5, 0).unwrap();
        FlipSequence::new(
            start,
            vec![
                FlipRecord {
                    underlying: e(0, 2),
                    created: e(1, 3),
                },
                FlipRecord {
                    underlying: e(0, 3),
                    created: e(1, 4),
                },
            ],
        )
    }

    #[test]
    fn pentagon_dag() {
        let seq = pentagon_witness();
        assert_eq!(seq.replay().unwrap(), Triangulation::fan(5, 1).unwrap());
        let dag = build_dag(&seq).unwrap();
        assert_eq!(dag.arcs.iter().copied().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(topo_replay_check(&seq, 10, 1).unwrap());
        let dot = dot_export(&dag);
        assert!(dot.contains("0 [label=\"0: (0,2)->(1,3)\"]"));
        assert!(dot.contains("  0 -> 1;"));
        assert_eq!(dot.lines().filter(|l| l.contains("label")).count(), 2);
    }

    #[test]
    fn empty_sequence() {
        let seq = FlipSequence::new(Triangulation::fan(6, 0).unwrap(), vec![]);
        let dag = build_dag(&seq).unwrap();
        assert!(dag.is_empty());
        assert_eq!(dot_export(&dag), "digraph D_F { }\n");
        assert!(topo_replay_check(&seq, 3, 0).unwrap());
    }

    #[test]
    fn disjoint_flips_commute() {
        // Two fans far apart on a 12-gon.
        let start = Triangulation::new(
            12,
            [
                e(0, 2),
                e(0, 3),
                e(0, 4),
                e(0, 5),
                e(0, 6),
                e(6, 8),
                e(6, 9),
                e(6, 10),
                e(6, 11),
            ],
        )
        .unwrap();
        let seq = FlipSequence::new(
            start,
            vec![
                FlipRecord {
                    underlying: e(0, 3),
                    created: e(2, 4),
                },
                FlipRecord {
                    underlying: e(6, 9),
                    created: e(8, 10),
                },
            ],
        );
        let dag = build_dag(&seq).unwrap();
        assert!(dag.arcs.is_empty());
        assert!(topo_replay_check(&seq, 20, 4).unwrap());
    }

    #[test]
    fn rejects_non_replayable() {
        let seq = FlipSequence::new(
            Triangulation::fan(5, 0).unwrap(),
            vec![FlipRecord {
                underlying: e(1, 3),
                created: e(0, 2),
            }],
        );
        assert!(matches!(
            build_dag(&seq),
            Err(Error::NotReplayable { step: 0, .. })
        ));
        assert!(seq.replay().is_err());
        let wrong = FlipSequence::new(
            Triangulation::fan(5, 0).unwrap(),
            vec![FlipRecord {
                underlying: e(0, 2),
                created: e(1, 4),
            }],
        );
        assert!(wrong.replay().is_err());
    }

    #[test]
    fn reflipping_a_created_edge_is_a_dependency() {
        let start = Triangulation::fan(4, 0).unwrap();
        let seq = FlipSequence::new(
            start,
            vec![
                FlipRecord {
                    underlying: e(0, 2),
                    created: e(1, 3),
                },
                FlipRecord {
                    underlying: e(1, 3),
                    created: e(0, 2),
                },
            ],
        );
        let dag = build_dag(&seq).unwrap();
        assert!(dag.arcs.contains(&(0, 1)));
        assert!(topo_replay_check(&seq, 5, 0).unwrap());
    }

    #[test]
    fn exact_sampler_is_uniform_on_a_diamond() {
        // 0 -> {1, 2} -> 3 plus an isolated node 4.
        let nodes = vec![
            FlipRecord {
                underlying: e(0, 2),
                created: e(1, 3)
            };
            5
        ];
        let arcs: BTreeSet<(usize, usize)> = [(0, 1), (0, 2), (1, 3), (2, 3)].into_iter().collect();
        let dag = FlipDag { nodes, arcs };
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut counts: FxHashMap<Vec<usize>, usize> = FxHashMap::default();
        for _ in 0..20_000 {
            let o = random_topological_sort(&dag, &mut rng);
            assert!(dag.is_topological(&o));
            *counts.entry(o).or_default() += 1;
        }
        // Linear extensions: 2 orders of the diamond, times 5 slots for node 4.
        assert_eq!(counts.len(), 10);
        for &c in counts.values() {
            assert!((c as f64 - 2000.0).abs() < 200.0, "{counts:?}");
        }
    }

    #[test]
    fn has_path_follows_arcs() {
        let nodes = vec![
            FlipRecord {
                underlying: e(0, 2),
                created: e(1, 3)
            };
            4
        ];
        let dag = FlipDag {
            nodes,
            arcs: [(0, 1), (1, 3)].into_iter().collect(),
        };
        assert!(dag.has_path(0, 3));
        assert!(!dag.has_path(0, 2));
        assert_eq!(dag.sources(), vec![0, 2]);
    }
}
