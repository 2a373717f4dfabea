use std::fmt;
use std::ops::AddAssign;

use crate::oracle::fibonacci;

/// Counters for one run of the branch-and-bound search.
///
/// A node is one invocation of the top-level, independent-set or pair-set
/// procedure; a leaf is a node that made no further invocation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub tree_nodes: u64,
    pub tree_leaves: u64,
    pub flips_performed: u64,
    pub partitions: u64,
    /// Non-empty independent sets tried by the top-level procedure.
    pub subset_count: u64,
}

impl AddAssign for SearchStats {
    fn add_assign(&mut self, o: Self) {
        self.tree_nodes += o.tree_nodes;
        self.tree_leaves += o.tree_leaves;
        self.flips_performed += o.flips_performed;
        self.partitions += o.partitions;
        self.subset_count += o.subset_count;
    }
}

impl fmt::Display for SearchStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tree_nodes={}", self.tree_nodes)?;
        writeln!(f, "tree_leaves={}", self.tree_leaves)?;
        writeln!(f, "flips_performed={}", self.flips_performed)?;
        writeln!(f, "partitions={}", self.partitions)?;
        write!(f, "subset_count={}", self.subset_count)
    }
}

/// Search-tree leaf bound `F(n+1) * 9^(k-n)` for a normalized instance with
/// `n` diagonals at budget `k`. Saturates at `u128::MAX`.
pub fn leaf_bound(n: u32, k: u32) -> u128 {
    let excess = k.saturating_sub(n);
    let fib = fibonacci((n + 1).min(186));
    let mut bound = fib;
    for _ in 0..excess {
        bound = bound.saturating_mul(9);
    }
    if n + 1 > 186 {
        u128::MAX
    } else {
        bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(leaf_bound(3, 4), 3 * 9);
        assert_eq!(leaf_bound(0, 0), 1);
        assert_eq!(leaf_bound(4, 4), 5);
        assert_eq!(leaf_bound(200, 210), u128::MAX);
    }

    #[test]
    fn stats_merge() {
        let mut a = SearchStats {
            tree_nodes: 1,
            tree_leaves: 2,
            flips_performed: 3,
            partitions: 4,
            subset_count: 5,
        };
        a += a;
        assert_eq!(a.tree_leaves, 4);
        assert!(a.to_string().contains("partitions=8"));
    }
}
