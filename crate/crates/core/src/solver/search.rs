use super::stats::SearchStats;
use super::subsets::IndependentSubsets;
use crate::normalize::{trivial_sequence, Part, QueueOrder};
use crate::polygon::{Edge, FlipRecord, PairSet, Triangulation};

/// Mutually recursive decision procedures over one normalized part.
///
/// Every procedure leaves `part.init` as it found it. On success the flips
/// of one solution (in original labels) remain on `witness`; on failure
/// nothing is left behind.
pub(crate) struct Search<'a> {
    pub stats: &'a mut SearchStats,
    pub witness: Vec<FlipRecord>,
}

/// Adds the two pairs of edges flanking `e`, one pair per adjacent triangle.
fn add_flanking(t: &Triangulation, e: Edge, pairs: &mut PairSet) {
    let flank: Vec<Edge> = t.neighbor_iter(e).collect();
    for pair in flank.chunks(2) {
        pairs.insert(pair[0], pair[1]);
    }
}

impl Search<'_> {
    /// Bookkeeping around one search-tree node.
    fn node(&mut self, body: impl FnOnce(&mut Self) -> bool) -> bool {
        self.stats.tree_nodes += 1;
        let before = self.stats.tree_nodes;
        let ok = body(self);
        if self.stats.tree_nodes == before {
            self.stats.tree_leaves += 1;
        }
        ok
    }

    fn push_trivial(&mut self, part: &Part) -> bool {
        match trivial_sequence(&part.init, &part.target, QueueOrder::Fifo)
            .expect("parts share a size")
        {
            Some(seq) => {
                self.witness
                    .extend(seq.into_iter().map(|f| part.flip_to_root(f)));
                true
            }
            None => false,
        }
    }

    pub fn top(&mut self, part: &mut Part, k: u32) -> bool {
        self.node(|s| {
            debug_assert_eq!(part.init.common_count(&part.target), 0);
            if part.phi() as u32 > k {
                return false;
            }
            for set in IndependentSubsets::new(&part.init) {
                if set.is_empty() {
                    continue;
                }
                s.stats.subset_count += 1;
                if s.with_independent(part, k, &set) {
                    return true;
                }
            }
            false
        })
    }

    pub fn with_independent(&mut self, part: &mut Part, k: u32, set: &[Edge]) -> bool {
        self.node(|s| {
            debug_assert_eq!(part.init.common_count(&part.target), 0);
            if part.phi() + set.len() > k as usize {
                return false;
            }
            if part.phi() == 0 {
                return true;
            }
            let mark = s.witness.len();
            let mut pairs = PairSet::new();
            let mut records = Vec::with_capacity(set.len());
            for &e in set {
                let r = part.init.flip(e).expect("independent set of diagonals");
                s.stats.flips_performed += 1;
                s.witness.push(part.flip_to_root(r));
                add_flanking(&part.init, r.created, &mut pairs);
                records.push(r);
            }
            if cfg!(debug_assertions) {
                let covered = pairs.union();
                for r in &records {
                    for n in part.init.neighbor_iter(r.created) {
                        debug_assert!(
                            covered.contains(&n),
                            "neighbor {n} of {} not covered",
                            r.created
                        );
                    }
                }
            }
            let ok = s.with_pairs(part, k - set.len() as u32, pairs);
            for r in records.into_iter().rev() {
                part.init.unflip(r);
            }
            if !ok {
                s.witness.truncate(mark);
            }
            ok
        })
    }

    pub fn with_pairs(&mut self, part: &mut Part, k: u32, mut pairs: PairSet) -> bool {
        self.node(|s| {
            debug_assert_eq!(part.init.common_count(&part.target), 0);
            let n = part.phi() as u32;
            if n > k {
                return false;
            }
            if n == 0 {
                return true;
            }
            if let Some(e) = part.init.smallest_free(&part.target) {
                pairs.remove_containing(e);
                let r = part.init.flip(e).expect("free diagonal");
                s.stats.flips_performed += 1;
                let mark = s.witness.len();
                s.witness.push(part.flip_to_root(r));
                add_flanking(&part.init, r.created, &mut pairs);
                let ((a, pa), (b, pb)) = part
                    .split(r.created, &pairs)
                    .expect("created edge is common");
                s.stats.partitions += 1;
                let ok = s.solve_split(a, pa, b, pb, k);
                part.init.unflip(r);
                if !ok {
                    s.witness.truncate(mark);
                }
                return ok;
            }
            let pairs: Vec<(Edge, Edge)> = pairs.iter().collect();
            s.branch(part, k, &pairs, &mut Vec::new())
        })
    }

    /// Solves side `a` with the least sufficient budget, then side `b` with
    /// what is left of `k - 1`.
    fn solve_split(&mut self, mut a: Part, pa: PairSet, mut b: Part, pb: PairSet, k: u32) -> bool {
        let (n1, n2) = (a.phi() as u32, b.phi() as u32);
        let k1 = if self.push_trivial(&a) {
            n1
        } else {
            let hi = (k - 1 - n2).min(2 * n1);
            match (n1 + 1..=hi).find(|&k1| self.with_pairs(&mut a, k1, pa.clone())) {
                Some(k1) => k1,
                None => return false,
            }
        };
        assert!(
            k - 1 - k1 >= n2,
            "budget left for the second side is below its size"
        );
        if self.push_trivial(&b) {
            return true;
        }
        self.with_pairs(&mut b, k - 1 - k1, pb)
    }

    /// Picks at most one edge per pair, keeping the picks independent.
    fn branch(
        &mut self,
        part: &mut Part,
        k: u32,
        pairs: &[(Edge, Edge)],
        chosen: &mut Vec<Edge>,
    ) -> bool {
        let Some((&(x, y), rest)) = pairs.split_first() else {
            return !chosen.is_empty() && self.with_independent(part, k, chosen);
        };
        if self.branch(part, k, rest, chosen) {
            return true;
        }
        for e in [x, y] {
            if !part.init.contains_diagonal(e)
                || chosen.contains(&e)
                || chosen.iter().any(|&c| !part.init.independent(c, e))
            {
                continue;
            }
            chosen.push(e);
            let ok = self.branch(part, k, rest, chosen);
            chosen.pop();
            if ok {
                return true;
            }
        }
        false
    }
}
