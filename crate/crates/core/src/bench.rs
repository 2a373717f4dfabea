//! Seeded benchmark runs and their CSV rows.

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::generate::{uniform, walk};
use crate::solver::{leaf_bound, Solver};

pub const CSV_HEADER: &str = "m,n,k_answer,tree_nodes,tree_leaves,bound,time_ms,seed";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Both triangulations drawn uniformly.
    Uniform,
    /// The target is a random walk of this many flips from the start.
    Walk(u32),
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub m_range: RangeInclusive<u32>,
    pub samples: u32,
    pub seed: u64,
    pub mode: Mode,
    /// Record wall time; when off `time_ms` is 0 and output is reproducible.
    pub timing: bool,
}

/// One solved instance.
///
/// `n` is the diagonal count left after normalization and `bound` is
/// `F(n+1) * 9^(k-n)` with `k` the distance minus the free flips; the tree
/// columns count the accepting searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchRow {
    pub m: u32,
    pub n: u32,
    pub k_answer: u32,
    pub tree_nodes: u64,
    pub tree_leaves: u64,
    pub bound: u128,
    pub time_ms: u64,
    pub seed: u64,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.m,
            self.n,
            self.k_answer,
            self.tree_nodes,
            self.tree_leaves,
            self.bound,
            self.time_ms,
            self.seed
        )
    }
}

/// Solves the instance generated from `seed`.
pub fn bench_one(m: u32, seed: u64, mode: Mode, timing: bool) -> Result<BenchRow> {
    let t1 = uniform(m, seed);
    let t2 = match mode {
        Mode::Uniform => uniform(m, seed ^ 0x9e37_79b9_7f4a_7c15),
        Mode::Walk(steps) => walk(&t1, steps, seed),
    };
    let start = Instant::now();
    let sol = Solver::default().solve(&t1, &t2)?;
    let time_ms = if timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    let acc = sol.accepting_stats();
    let n = sol.normalized_n();
    Ok(BenchRow {
        m,
        n,
        k_answer: sol.distance,
        tree_nodes: acc.tree_nodes,
        tree_leaves: acc.tree_leaves,
        bound: leaf_bound(n, sol.distance - sol.base_cost),
        time_ms,
        seed,
    })
}

/// Runs every configured instance. Per-instance seeds are drawn from `seed`
/// in order, so equal configurations give equal rows.
pub fn run(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rows = Vec::new();
    for m in cfg.m_range.clone() {
        for _ in 0..cfg.samples {
            let seed = rng.random::<u64>();
            rows.push(bench_one(m, seed, cfg.mode, cfg.timing)?);
        }
    }
    Ok(rows)
}

pub fn write_csv<W: Write>(out: &mut W, rows: &[BenchRow]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{}", r.csv())?;
    }
    Ok(())
}
