//! Seeded instance generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dual::{tree_to_triangulation, BinTree};
use crate::polygon::Triangulation;

const NONE: usize = usize::MAX;

/// A triangulation of the `m`-gon drawn uniformly from all Catalan(m-2)
/// triangulations. Deterministic per seed.
pub fn uniform(m: u32, seed: u64) -> Triangulation {
    uniform_with(m, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn uniform_with<R: Rng>(m: u32, rng: &mut R) -> Triangulation {
    assert!(m >= 3, "a polygon needs at least 3 vertices");
    let tree = random_tree(m as usize - 2, rng);
    tree_to_triangulation(&tree).expect("generated tree is full")
}

/// Uniform full binary tree with `internal` internal nodes (Rémy's
/// algorithm: graft a new leaf above a uniformly chosen node, on a random
/// side).
pub fn random_tree<R: Rng>(internal: usize, rng: &mut R) -> BinTree {
    let cap = 2 * internal + 1;
    let mut left = Vec::with_capacity(cap);
    let mut right = Vec::with_capacity(cap);
    let mut parent = Vec::with_capacity(cap);
    left.push(NONE);
    right.push(NONE);
    parent.push(NONE);
    let mut root = 0;
    for _ in 0..internal {
        let x = rng.random_range(0..left.len());
        let y = left.len();
        let z = y + 1;
        let p = parent[x];
        if p == NONE {
            root = y;
        } else if left[p] == x {
            left[p] = y;
        } else {
            right[p] = y;
        }
        let (l, r) = if rng.random_bool(0.5) { (x, z) } else { (z, x) };
        left.extend([l, NONE]);
        right.extend([r, NONE]);
        parent.extend([p, y]);
        parent[x] = y;
    }

    fn to_tree(v: usize, left: &[usize], right: &[usize]) -> BinTree {
        if left[v] == NONE {
            BinTree::Leaf
        } else {
            BinTree::node(
                to_tree(left[v], left, right),
                to_tree(right[v], left, right),
            )
        }
    }
    to_tree(root, &left, &right)
}

/// Applies `steps` uniformly random flips to a copy of `t`, so the result is
/// within flip distance `steps` of `t`.
pub fn walk(t: &Triangulation, steps: u32, seed: u64) -> Triangulation {
    walk_with(t, steps, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn walk_with<R: Rng>(t: &Triangulation, steps: u32, rng: &mut R) -> Triangulation {
    let mut out = t.clone();
    if out.phi() == 0 {
        return out;
    }
    for _ in 0..steps {
        let diags = out.sorted_diagonals();
        let d = diags[rng.random_range(0..diags.len())];
        out.flip(d).expect("chosen edge is a diagonal");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_triangulations;
    use rustc_hash::FxHashMap;

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(uniform(12, 7), uniform(12, 7));
        assert_eq!(walk(&uniform(12, 7), 5, 3), walk(&uniform(12, 7), 5, 3));
    }

    #[test]
    fn square_frequencies() {
        let mut zero_two = 0;
        for seed in 0..10_000 {
            if uniform(4, seed).contains_diagonal(crate::polygon::Edge::new(0, 2)) {
                zero_two += 1;
            }
        }
        let freq = zero_two as f64 / 10_000.0;
        assert!((freq - 0.5).abs() <= 0.02, "{freq}");
    }

    #[test]
    fn hexagon_is_uniform() {
        // Chi-square goodness of fit over the 14 hexagon triangulations.
        let all = enumerate_triangulations(6).unwrap();
        let index: FxHashMap<_, _> = all.iter().enumerate().map(|(i, t)| (t.key(), i)).collect();
        let samples = 50_000;
        let mut counts = vec![0u64; all.len()];
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..samples {
            counts[index[&uniform_with(6, &mut rng).key()]] += 1;
        }
        let expected = samples as f64 / all.len() as f64;
        let chi2: f64 = counts
            .iter()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        // 13 degrees of freedom, upper 1% point.
        assert!(chi2 < 27.688, "chi2 = {chi2}, counts = {counts:?}");
    }

    #[test]
    fn walks() {
        let t = uniform(8, 1);
        assert_eq!(walk(&t, 0, 9), t);
        let sq = Triangulation::fan(4, 0).unwrap();
        assert_eq!(walk(&sq, 1, 5), Triangulation::fan(4, 1).unwrap());
        let tri = Triangulation::fan(3, 0).unwrap();
        assert_eq!(walk(&tri, 4, 5), tri);
    }
}
