use proptest::prelude::*;

use flipdist::dag::topo_replay_check;
use flipdist::generate::{uniform, walk};
use flipdist::oracle::bfs_distance;
use flipdist::{decide, exact_distance, Triangulation};

fn pair(max_m: u32) -> impl Strategy<Value = (Triangulation, Triangulation)> {
    (4u32..=max_m, any::<u64>(), any::<u64>()).prop_map(|(m, a, b)| (uniform(m, a), uniform(m, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn witness_replays_and_keeps_common_diagonals((t1, t2) in pair(13)) {
        let sol = exact_distance(&t1, &t2).unwrap();
        prop_assert_eq!(sol.witness.len() as u32, sol.distance);
        prop_assert_eq!(sol.witness.replay().unwrap(), t2.clone());
        for f in &sol.witness.flips {
            prop_assert!(!(t1.contains_diagonal(f.underlying) && t2.contains_diagonal(f.underlying)));
        }
        let lower = (t1.phi() - t1.common_count(&t2)) as u32;
        prop_assert!(sol.distance >= lower);
        prop_assert!(sol.distance <= 2 * lower);
    }

    #[test]
    fn symmetric_and_deterministic((t1, t2) in pair(12)) {
        let a = exact_distance(&t1, &t2).unwrap();
        let b = exact_distance(&t2, &t1).unwrap();
        prop_assert_eq!(a.distance, b.distance);
        let again = exact_distance(&t1, &t2).unwrap();
        prop_assert_eq!(a.witness, again.witness);
        prop_assert_eq!(a.stats, again.stats);
    }

    #[test]
    fn matches_oracle((t1, t2) in pair(10)) {
        prop_assert_eq!(exact_distance(&t1, &t2).unwrap().distance, bfs_distance(&t1, &t2).unwrap());
    }

    #[test]
    fn decision_is_monotone((t1, t2) in pair(12), slack in 0u32..3) {
        let d = exact_distance(&t1, &t2).unwrap().distance;
        prop_assert!(decide(&t1, &t2, d + slack).unwrap().is_some());
        if d > slack {
            prop_assert!(decide(&t1, &t2, d - 1 - slack).unwrap().is_none());
        }
    }

    #[test]
    fn walks_bound_distance(m in 5u32..16, steps in 0u32..8, seed in any::<u64>()) {
        let t1 = uniform(m, seed);
        let t2 = walk(&t1, steps, seed);
        let sol = exact_distance(&t1, &t2).unwrap();
        prop_assert!(sol.distance <= steps);
        prop_assert!(topo_replay_check(&sol.witness, 20, seed).unwrap());
    }
}
