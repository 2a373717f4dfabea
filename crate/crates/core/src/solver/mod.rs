//! Exact flip distance by bounded search.
//!
//! A pair is first normalized into parts with no common and no free
//! diagonal. Each part is then decided at increasing budgets `k`, starting
//! from its diagonal count, by a branch-and-bound over independent sets of
//! diagonals whose search tree has at most `F(n+1) * 9^(k-n)` leaves.

mod search;
mod stats;
mod subsets;

pub use stats::{leaf_bound, SearchStats};
pub use subsets::IndependentSubsets;

use crate::dag::FlipSequence;
use crate::error::{Error, Result};
use crate::normalize::{normalize, Part};
use crate::polygon::{Edge, FlipRecord, Instance, PairSet, Triangulation};
use search::Search;

/// Top-level decision: can `t1` reach `t2` in at most `k` flips?
///
/// Expects a pair with no common diagonal; see [`decide`] for arbitrary pairs.
pub fn flip_dist_top(
    t1: &Triangulation,
    t2: &Triangulation,
    k: u32,
    stats: &mut SearchStats,
) -> bool {
    run(t1, t2, stats, |s, part| s.top(part, k)).0
}

/// Flips the independent set `set` first, then continues within `k`.
pub fn flip_dist_i(
    t1: &Triangulation,
    t2: &Triangulation,
    k: u32,
    set: &[Edge],
    stats: &mut SearchStats,
) -> bool {
    run(t1, t2, stats, |s, part| s.with_independent(part, k, set)).0
}

/// Continues a search whose next flip must touch an edge of `pairs`.
pub fn flip_dist_s(
    t1: &Triangulation,
    t2: &Triangulation,
    k: u32,
    pairs: PairSet,
    stats: &mut SearchStats,
) -> bool {
    run(t1, t2, stats, |s, part| s.with_pairs(part, k, pairs)).0
}

fn run(
    t1: &Triangulation,
    t2: &Triangulation,
    stats: &mut SearchStats,
    f: impl FnOnce(&mut Search<'_>, &mut Part) -> bool,
) -> (bool, Vec<FlipRecord>) {
    let mut part = Part::whole(t1.clone(), t2.clone());
    let mut search = Search {
        stats,
        witness: Vec::new(),
    };
    let ok = f(&mut search, &mut part);
    debug_assert_eq!(&part.init, t1);
    (ok, search.witness)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverOptions {
    /// Largest budget tried per part. Defaults to twice the part's size,
    /// which always suffices: either triangulation reaches a fan at one
    /// endpoint of a hull edge in at most `n` flips.
    pub max_cap: Option<u32>,
}

/// The accepting search of one normalized part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartReport {
    /// Diagonal count of the part.
    pub n: u32,
    /// Its flip distance.
    pub k: u32,
    /// Counters of the search that succeeded at budget `k`.
    pub accepting: SearchStats,
}

impl PartReport {
    pub fn leaf_bound(&self) -> u128 {
        leaf_bound(self.n, self.k)
    }
}

#[derive(Debug, Clone)]
pub struct Solution {
    pub distance: u32,
    /// One shortest flip sequence from the initial triangulation.
    pub witness: FlipSequence,
    /// Free flips made by normalization.
    pub base_cost: u32,
    pub parts: Vec<PartReport>,
    /// Counters summed over every search, rejected budgets included.
    pub stats: SearchStats,
}

impl Solution {
    /// Total diagonal count of the normalized parts.
    pub fn normalized_n(&self) -> u32 {
        self.parts.iter().map(|p| p.n).sum()
    }

    /// Counters of the accepting searches only.
    pub fn accepting_stats(&self) -> SearchStats {
        let mut s = SearchStats::default();
        for p in &self.parts {
            s += p.accepting;
        }
        s
    }
}

#[derive(Debug, Clone, Default)]
pub struct Solver {
    pub options: SolverOptions,
}

impl Solver {
    pub fn new(options: SolverOptions) -> Self {
        Solver { options }
    }

    /// Exact distance with a witness.
    pub fn solve(&self, t1: &Triangulation, t2: &Triangulation) -> Result<Solution> {
        Ok(self
            .solve_within(t1, t2, u32::MAX)?
            .expect("unbounded search always answers"))
    }

    /// Decides `d(t1, t2) <= k`, returning the exact solution when it holds.
    pub fn decide(
        &self,
        t1: &Triangulation,
        t2: &Triangulation,
        k: u32,
    ) -> Result<Option<Solution>> {
        self.solve_within(t1, t2, k)
    }

    fn solve_within(
        &self,
        t1: &Triangulation,
        t2: &Triangulation,
        k: u32,
    ) -> Result<Option<Solution>> {
        let norm = normalize(t1, t2)?;
        if norm.base_cost > k {
            return Ok(None);
        }
        let mut flips = norm.witness_prefix;
        let mut stats = SearchStats::default();
        let mut parts = Vec::with_capacity(norm.subs.len());
        let mut spent = norm.base_cost;
        let mut pending: u32 = norm.subs.iter().map(|p| p.phi() as u32).sum();
        for mut part in norm.subs {
            let n = part.phi() as u32;
            pending -= n;
            let cap = self.options.max_cap.unwrap_or(2 * n);
            let Some(room) = k.checked_sub(spent).and_then(|r| r.checked_sub(pending)) else {
                return Ok(None);
            };
            let upper = cap.min(room);
            let mut found = None;
            for budget in n..=upper {
                let mut local = SearchStats::default();
                let mut search = Search {
                    stats: &mut local,
                    witness: Vec::new(),
                };
                let ok = search.top(&mut part, budget);
                let witness = std::mem::take(&mut search.witness);
                stats += local;
                if ok {
                    found = Some((budget, local, witness));
                    break;
                }
            }
            match found {
                Some((budget, accepting, witness)) => {
                    debug_assert_eq!(witness.len() as u32, budget);
                    flips.extend(witness);
                    spent += budget;
                    parts.push(PartReport {
                        n,
                        k: budget,
                        accepting,
                    });
                }
                None if upper == room => return Ok(None),
                None => return Err(Error::CapExceeded { cap }),
            }
        }
        Ok(Some(Solution {
            distance: spent,
            witness: FlipSequence::new(t1.clone(), flips),
            base_cost: norm.base_cost,
            parts,
            stats,
        }))
    }
}

/// Exact flip distance between two triangulations of the same polygon.
pub fn exact_distance(t1: &Triangulation, t2: &Triangulation) -> Result<Solution> {
    Solver::default().solve(t1, t2)
}

/// Decides an instance against its budget `k`.
pub fn solve_decision(instance: &Instance) -> Result<bool> {
    let k = instance.k.ok_or(Error::MissingBudget)?;
    Ok(decide(&instance.init, &instance.target, k)?.is_some())
}

pub fn decide(t1: &Triangulation, t2: &Triangulation, k: u32) -> Result<Option<Solution>> {
    Solver::default().decide(t1, t2, k)
}
