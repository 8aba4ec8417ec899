//! Acceptance gate: one test per release criterion, each printing a
//! `criterion N: PASS` line on success.

use std::time::Instant;

use reeb_forest_core::bench::{self, oracle};
use reeb_forest_core::poset::MfMode;
use reeb_forest_core::reeb::{FilteredPoset, ReebPoset};
use reeb_forest_core::{DEFAULT_TOL, FiniteMetricSpace, MetricGraph};

#[test]
fn criterion_1_poset_distortion_bound() {
    let start = Instant::now();
    let mut rng = bench::rng_for(0xACC1);
    for i in 0..1000 {
        let rp = bench::random_reeb_poset(&mut rng, 12);
        let out = rp.approximate(MfMode::Exact).unwrap();
        let slack = out.report.bound - out.report.distortion;
        assert!(
            slack >= -1e-9,
            "instance {i}: distortion {} > bound {}",
            out.report.distortion,
            out.report.bound
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!("criterion 1: PASS (1000 instances in {elapsed:?})");
}

#[test]
fn criterion_2_graph_distortion_bound() {
    let start = Instant::now();
    let mut rng = bench::rng_for(0xACC2);
    for i in 0..500 {
        let g = bench::random_metric_graph(&mut rng, 10);
        for p in 0..g.len() {
            let out = g.tree_approx(p, MfMode::Exact).unwrap();
            let r = &out.report;
            assert!(
                r.distortion_original <= r.bound_graph + 1e-9 && r.ok,
                "instance {i} base {p}: distortion {} > bound {}",
                r.distortion_original,
                r.bound_graph
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}");
    println!("criterion 2: PASS (500 graphs, every base, in {elapsed:?})");
}

#[test]
fn criterion_3_oracle_equivalence() {
    let mut rng = bench::rng_for(0xACC3);
    for i in 0..300 {
        let fp = bench::random_filtered_poset(&mut rng, 10);
        assert!(
            fp.merge_values()
                .linf_distance(&oracle::merge_values_bruteforce(&fp))
                == 0.0,
            "instance {i}: merge values mismatch"
        );
        oracle::check_reeb_tree(&fp).unwrap_or_else(|why| panic!("instance {i}: {why}"));

        let rp = bench::random_reeb_poset(&mut rng, 10);
        assert!(
            rp.distance_matrix().linf_distance(&oracle::df_bruteforce(&rp)) == 0.0,
            "instance {i}: d_f mismatch"
        );
    }
    println!("criterion 3: PASS (300 instances, zero mismatches)");
}

#[test]
fn criterion_4_tree_characterization() {
    let mut rng = bench::rng_for(0xACC4);
    for i in 0..10_000 {
        let poset = bench::random_poset(&mut rng, 8);
        let tree = poset.is_tree();
        let acyclic = poset.betti_covering() == 0;
        let has_min = poset.smallest_element().is_some();
        let f = bench::strict_filtration(&mut rng, &poset);
        let rp = ReebPoset::new(FilteredPoset::new(poset, f).unwrap()).unwrap();
        let hyp = rp.hyperbolicity();
        assert_eq!(tree, hyp <= 1e-9, "instance {i}: hyp {hyp}");
        // trees always have acyclic covering graphs; the converse needs a
        // smallest element (the vee a < b > c is acyclic but not a tree)
        assert!(!tree || acyclic, "instance {i}");
        if has_min {
            assert_eq!(tree, acyclic, "instance {i}");
        }
        if tree {
            assert!(
                rp.distance_matrix().four_point_defect() <= 1e-9,
                "instance {i}: tree metric violates the four point condition"
            );
        }
    }
    println!("criterion 4: PASS (10000 posets with <= 8 elements)");
}

#[test]
fn criterion_5_worst_case_family() {
    let ns: Vec<usize> = (1..=8).collect();
    for &n in &ns {
        let z = bench::make_zn(n, 1.0, 1.0).unwrap();
        assert_eq!(z.graph.len(), 2 * n + 2);
        assert_eq!(1 + z.graph.edges().len() - z.graph.len(), n);
        let rp = z.graph.induce_poset(0).unwrap();
        let fence =
            reeb_forest_core::poset::Fence::new(z.fence_indices(), rp.poset()).unwrap();
        assert_eq!(fence.length(), 2 * n);
    }
    let rows = bench::growth_comparison(&ns, 1.0, 1.0).unwrap();
    for row in &rows {
        assert!(
            (row.ratio - 1.0).abs() <= 1e-9,
            "n={}: phi/upsilon = {}",
            row.n,
            row.ratio
        );
    }
    println!("criterion 5: PASS (fan family n=1..8, ratio phi/upsilon = 1)");
}

#[test]
fn criterion_6_combinatorial_identities() {
    let mut rng = bench::rng_for(0xACC6);
    let mut with_min = 0usize;
    for i in 0..2000 {
        let poset = bench::random_poset(&mut rng, 10);
        let euler = poset.betti_covering();
        if let Some(by_merging) = poset.betti_by_merging() {
            with_min += 1;
            assert_eq!(euler, by_merging, "instance {i}");
            let mf = poset.max_fence_length(MfMode::Exact).unwrap();
            assert!(mf <= 2 * euler + 2, "instance {i}: M_F {mf}, betti {euler}");
        }
    }
    assert!(with_min >= 100, "too few posets with a minimum: {with_min}");
    println!("criterion 6: PASS (2000 posets, {with_min} with a minimum)");
}

#[test]
fn criterion_7_golden_micro_examples() {
    let run = || {
        // the vee a < b > c with f = (0, 2, 1)
        let vee = reeb_forest_core::Poset::from_covers(&[(0, 1), (2, 1)], 3).unwrap();
        let rp =
            ReebPoset::new(FilteredPoset::new(vee, vec![0.0, 2.0, 1.0]).unwrap()).unwrap();
        let poset_out = rp.approximate(MfMode::Exact).unwrap();

        // the unit 4-cycle through its full metric-space pipeline
        let cycle = MetricGraph::new(4, vec![(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])
            .unwrap();
        let space = FiniteMetricSpace::new(cycle.shortest_paths()).unwrap();
        let metric_out = space
            .tree_approx(Some(&cycle), Some(0), MfMode::Exact)
            .unwrap();
        (
            poset_out.report.distortion,
            poset_out.report.bound,
            metric_out.report.distortion,
            metric_out.report.graph.bound_graph,
        )
    };
    let first = run();
    assert_eq!(first, (2.0, 4.0, 2.0, 6.0));
    // bit stability across runs
    assert_eq!(first, run());
    println!("criterion 7: PASS (vee 2 <= 4, unit 4-cycle 2 <= 6, bit-stable)");
}

#[test]
fn full_verification_sweep() {
    let suites = bench::verify_all(bench::VerifyConfig {
        seed: 0xACC0,
        count: 120,
        max_size: 10,
    });
    for suite in &suites {
        assert!(
            suite.passed(),
            "{} failed on {} of {} instances: {:?}",
            suite.name,
            suite.failures.len(),
            suite.instances,
            suite.failures
        );
    }
    assert!(DEFAULT_TOL > 0.0);
    println!(
        "verification sweep: PASS ({} suites)",
        suites.len()
    );
}
