//! Property-based invariants over generated instances.

use proptest::prelude::*;

use reeb_forest_core::bench;
use reeb_forest_core::poset::Poset;
use reeb_forest_core::DEFAULT_TOL;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closure_then_reduction_is_idempotent(seed in any::<u64>()) {
        let mut rng = bench::rng_for(seed);
        let poset = bench::random_poset(&mut rng, 9);
        let rebuilt = Poset::from_covers(&poset.covering_graph(), poset.len()).unwrap();
        prop_assert_eq!(poset.covering_graph(), rebuilt.covering_graph());
        for x in 0..poset.len() {
            for y in 0..poset.len() {
                prop_assert_eq!(poset.leq(x, y), rebuilt.leq(x, y));
            }
        }
    }

    #[test]
    fn path_metric_dominates_value_gap(seed in any::<u64>()) {
        let mut rng = bench::rng_for(seed);
        let rp = bench::random_reeb_poset(&mut rng, 10);
        let d = rp.distance_matrix();
        for x in 0..rp.len() {
            for y in 0..rp.len() {
                let gap = (rp.f(x) - rp.f(y)).abs();
                prop_assert!(d.get(x, y) >= gap - DEFAULT_TOL);
                if rp.poset().comparable(x, y) || x == y {
                    prop_assert!((d.get(x, y) - gap).abs() <= DEFAULT_TOL);
                }
            }
        }
    }

    #[test]
    fn distortion_identity_is_nonnegative_everywhere(seed in any::<u64>()) {
        let mut rng = bench::rng_for(seed);
        let rp = bench::random_reeb_poset(&mut rng, 10);
        let d = rp.distance_matrix();
        let m = rp.filtered().merge_values();
        let (tree, pi) = rp.reeb_tree();
        let t = tree.metric();
        for x in 0..rp.len() {
            for y in 0..rp.len() {
                let dt = d.get(x, y) - t.get(pi.apply(x), pi.apply(y));
                let mg = m.get(x, y) - rp.gromov_product(&d, x, y);
                prop_assert!((dt - 2.0 * mg).abs() <= DEFAULT_TOL);
                prop_assert!(dt >= -DEFAULT_TOL);
            }
        }
    }

    #[test]
    fn regularization_preserves_the_vertex_metric(seed in any::<u64>()) {
        let mut rng = bench::rng_for(seed);
        let g = bench::random_metric_graph(&mut rng, 9);
        let p = (seed % g.len() as u64) as usize;
        let (reg, trace) = g.regularize(p).unwrap();
        let before = g.shortest_paths();
        let after = reg.shortest_paths();
        for x in 0..g.len() {
            for y in 0..g.len() {
                prop_assert!((before.get(x, y) - after.get(x, y)).abs() <= DEFAULT_TOL);
            }
        }
        prop_assert_eq!(reg.len(), g.len() + trace.added.len());
        prop_assert!(reg.check_regular(p, DEFAULT_TOL).is_ok());
    }
}
