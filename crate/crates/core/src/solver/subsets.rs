use crate::polygon::{Edge, Triangulation};

/// Streams every set of pairwise independent diagonals, the empty set
/// included, one partial set in memory at a time.
///
/// Diagonals are decided in ascending order, exclusion before inclusion, and
/// a diagonal is only included when none of its neighbors already is. Each
/// set is produced exactly once. The iterator snapshots the neighbor
/// structure, so the triangulation may be flipped and restored between
/// items.
#[derive(Debug, Clone)]
pub struct IndependentSubsets {
    diagonals: Vec<Edge>,
    /// Earlier positions sharing a triangle with each position.
    conflicts: Vec<Vec<usize>>,
    decisions: Vec<bool>,
    started: bool,
    done: bool,
}

impl IndependentSubsets {
    pub fn new(t: &Triangulation) -> Self {
        let diagonals = t.sorted_diagonals();
        let conflicts = diagonals
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                t.neighbor_iter(d)
                    .filter_map(|n| diagonals[..i].binary_search(&n).ok())
                    .collect()
            })
            .collect();
        IndependentSubsets {
            decisions: Vec::with_capacity(diagonals.len()),
            diagonals,
            conflicts,
            started: false,
            done: false,
        }
    }

    fn descend(&mut self) {
        while self.decisions.len() < self.diagonals.len() {
            self.decisions.push(false);
        }
    }

    fn current(&self) -> Vec<Edge> {
        self.decisions
            .iter()
            .zip(&self.diagonals)
            .filter(|(inc, _)| **inc)
            .map(|(_, d)| *d)
            .collect()
    }
}

impl Iterator for IndependentSubsets {
    type Item = Vec<Edge>;

    fn next(&mut self) -> Option<Vec<Edge>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(self.current());
        }
        while let Some(included) = self.decisions.pop() {
            let pos = self.decisions.len();
            if !included && self.conflicts[pos].iter().all(|&j| !self.decisions[j]) {
                self.decisions.push(true);
                self.descend();
                return Some(self.current());
            }
        }
        self.done = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::dual_tree;
    use crate::oracle::{count_matchings_dp, enumerate_triangulations, fibonacci};

    #[test]
    fn hexagon_fan() {
        let fan = Triangulation::fan(6, 0).unwrap();
        let mut sets: Vec<Vec<Edge>> = IndependentSubsets::new(&fan).collect();
        sets.sort();
        let e = Edge::new;
        assert_eq!(
            sets,
            vec![
                vec![],
                vec![e(0, 2)],
                vec![e(0, 2), e(0, 4)],
                vec![e(0, 3)],
                vec![e(0, 4)]
            ]
        );
    }

    #[test]
    fn square_and_triangle() {
        let sq = Triangulation::fan(4, 0).unwrap();
        assert_eq!(IndependentSubsets::new(&sq).count(), 2);
        let tri = Triangulation::fan(3, 0).unwrap();
        assert_eq!(
            IndependentSubsets::new(&tri).collect::<Vec<_>>(),
            vec![Vec::<Edge>::new()]
        );
    }

    #[test]
    fn exclusion_first_order() {
        let fan = Triangulation::fan(6, 0).unwrap();
        let first: Vec<Vec<Edge>> = IndependentSubsets::new(&fan).take(2).collect();
        assert_eq!(first, vec![vec![], vec![Edge::new(0, 4)]]);
    }

    #[test]
    fn counts_match_dual_matchings() {
        for m in 3..=9 {
            for t in enumerate_triangulations(m).unwrap() {
                let sets: Vec<Vec<Edge>> = IndependentSubsets::new(&t).collect();
                for s in &sets {
                    for (i, &x) in s.iter().enumerate() {
                        assert!(s[i + 1..].iter().all(|&y| t.independent(x, y)));
                    }
                }
                let distinct: std::collections::BTreeSet<_> = sets.iter().cloned().collect();
                assert_eq!(distinct.len(), sets.len());
                // The dual tree has one node per triangle.
                let nodes = t.m() - 2;
                assert_eq!(
                    sets.len() as u128,
                    count_matchings_dp(&dual_tree(&t).tree).total()
                );
                assert!(sets.len() as u128 <= fibonacci(nodes + 1));
            }
        }
    }
}
