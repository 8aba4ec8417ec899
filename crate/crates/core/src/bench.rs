//! The Z_n worst-case family, seeded random instance generators, and the
//! property-verification harness that re-checks every computable inequality
//! on generated instances.

pub mod oracle;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dist::DistanceMatrix;
use crate::graph::{GraphError, MetricGraph};
use crate::metric::{phi_of_embedding, FiniteMetricSpace};
use crate::poset::{Fence, MfMode, Poset};
use crate::reeb::{FilteredPoset, ReebPoset};
use crate::{fabs, log2, DEFAULT_TOL};

/// Deterministic RNG used by every generator in this module.
pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------------------
// Z_n family
// ---------------------------------------------------------------------------

/// The fan of n "bananas": spokes p-x_i of length `spoke_len` (R) for
/// i = 0..=n, and rungs x_{i-1}-y_i, x_i-y_i of length `rung_len` (r).
/// Its vertex set Z_n has 2n+2 points, the covering-graph Betti number is n,
/// and under <=_p the sequence (x_0, y_1, x_1, ..., x_n) is a fence of
/// length 2n.
#[derive(Clone, Debug)]
pub struct ZnInstance {
    pub n: usize,
    pub spoke_len: f64,
    pub rung_len: f64,
    pub graph: MetricGraph,
}

impl ZnInstance {
    pub fn base(&self) -> usize {
        0
    }

    /// Index of x_i for i in 0..=n.
    pub fn x(&self, i: usize) -> usize {
        1 + i
    }

    /// Index of y_i for i in 1..=n.
    pub fn y(&self, i: usize) -> usize {
        self.n + 1 + i
    }

    /// The fence (x_0, y_1, x_1, ..., x_n) of length 2n.
    pub fn fence_indices(&self) -> Vec<usize> {
        let mut seq = vec![self.x(0)];
        for i in 1..=self.n {
            seq.push(self.y(i));
            seq.push(self.x(i));
        }
        seq
    }
}

pub fn make_zn(n: usize, spoke_len: f64, rung_len: f64) -> Result<ZnInstance, GraphError> {
    assert!(n >= 1, "Z_n needs n >= 1");
    assert!(
        rung_len > 0.0 && spoke_len >= rung_len,
        "Z_n needs R >= r > 0"
    );
    let vertices = 2 * n + 2;
    let mut labels = vec![String::from("p")];
    for i in 0..=n {
        labels.push(format!("x{i}"));
    }
    for i in 1..=n {
        labels.push(format!("y{i}"));
    }
    let mut edges = Vec::with_capacity(3 * n + 1);
    for i in 0..=n {
        edges.push((0, 1 + i, spoke_len));
    }
    for i in 1..=n {
        edges.push((1 + (i - 1), n + 1 + i, rung_len));
        edges.push((1 + i, n + 1 + i, rung_len));
    }
    let graph = MetricGraph::new(vertices, edges)?
        .with_labels(labels)
        .with_base(0);
    let z = ZnInstance {
        n,
        spoke_len,
        rung_len,
        graph,
    };
    // construction postconditions
    assert_eq!(1 + z.graph.edges().len() - z.graph.len(), n);
    let rp = z.graph.induce_poset(0)?;
    let fence = Fence::new(z.fence_indices(), rp.poset()).expect("Z_n fence exists under <=_p");
    assert_eq!(fence.length(), 2 * n);
    Ok(z)
}

/// Outcome of re-running the lower-bound argument on an arbitrary isometric
/// embedding of Z_n.
#[derive(Clone, Debug)]
pub struct LowerBoundReport {
    pub fence_length: usize,
    pub fence_ok: bool,
    pub betti: usize,
    pub betti_ok: bool,
}

impl LowerBoundReport {
    pub fn ok(&self) -> bool {
        self.fence_ok && self.betti_ok
    }
}

/// Checks that any graph isometrically containing Z_n (as its first 2n+2
/// vertices, in Z_n order) still exhibits the fence of length 2n under <=_p
/// after regularization, and that its Betti number is at least n - 1.
pub fn verify_lower_bound_argument(
    z: &ZnInstance,
    g: &MetricGraph,
) -> Result<LowerBoundReport, crate::metric::MetricError> {
    let space = FiniteMetricSpace::new(restrict(&z.graph.shortest_paths(), z.graph.len()))?;
    space.check_isometric(g, DEFAULT_TOL)?;
    let (reg, _) = g.regularize(z.base())?;
    let rp = reg.induce_poset(z.base())?;
    let fence = Fence::new(z.fence_indices(), rp.poset());
    let (fence_length, fence_ok) = match fence {
        Ok(f) => (f.length(), f.length() == 2 * z.n),
        Err(_) => (0, false),
    };
    let betti = 1 + reg.edges().len() - reg.len();
    Ok(LowerBoundReport {
        fence_length,
        fence_ok,
        betti,
        betti_ok: betti + 1 >= z.n,
    })
}

fn restrict(d: &DistanceMatrix, n: usize) -> DistanceMatrix {
    let mut out = DistanceMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, d.get(i, j));
        }
    }
    out
}

/// One row of the growth-rate comparison table.
#[derive(Clone, Debug)]
pub struct GrowthRow {
    pub n: usize,
    pub hyp: f64,
    pub upsilon: f64,
    pub phi: f64,
    pub distortion: f64,
    /// phi / upsilon; exactly 1 when R = r.
    pub ratio: f64,
}

/// Compares the cardinality bound with the Betti bound on the Z_n family.
pub fn growth_comparison(
    ns: &[usize],
    spoke_len: f64,
    rung_len: f64,
) -> Result<Vec<GrowthRow>, GraphError> {
    let mut rows = Vec::with_capacity(ns.len());
    for &n in ns {
        let z = make_zn(n, spoke_len, rung_len)?;
        let d = z.graph.shortest_paths();
        let hyp = d.hyp();
        let points = z.graph.len() as f64;
        let upsilon = 2.0 * hyp * log2(2.0 * points);
        let phi = phi_of_embedding(&z.graph)?;
        let out = z.graph.tree_approx(z.base(), MfMode::Exact)?;
        let distortion = out.report.distortion_original;
        let ratio = if upsilon == 0.0 { f64::NAN } else { phi / upsilon };
        // the Betti bound can undercut the cardinality bound by at most the
        // log2(4n) / log2(4n + 4) factor
        debug_assert!(2.0 * log2(4.0 * n as f64) * hyp <= phi + DEFAULT_TOL);
        rows.push(GrowthRow {
            n,
            hyp,
            upsilon,
            phi,
            distortion,
            ratio,
        });
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Random instance generators (deterministic per seed)
// ---------------------------------------------------------------------------

/// Random connected poset on 1..=max_n elements. Cover pairs respect the
/// index order, so indices form a linear extension.
pub fn random_poset(rng: &mut impl Rng, max_n: usize) -> Poset {
    let n = rng.gen_range(1..=max_n.max(1));
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.3) {
                pairs.push((i, j));
            }
        }
    }
    // stitch comparability components together
    let mut comp: Vec<usize> = (0..n).collect();
    fn root(comp: &mut [usize], mut x: usize) -> usize {
        while comp[x] != x {
            comp[x] = comp[comp[x]];
            x = comp[x];
        }
        x
    }
    for &(a, b) in &pairs {
        let (ra, rb) = (root(&mut comp, a), root(&mut comp, b));
        if ra != rb {
            comp[ra.max(rb)] = ra.min(rb);
        }
    }
    for x in 1..n {
        let (rx, r0) = (root(&mut comp, x), root(&mut comp, 0));
        if rx != r0 {
            let (a, b) = (r0.min(rx), r0.max(rx));
            pairs.push((a, b));
            comp[b] = a;
        }
    }
    Poset::from_covers(&pairs, n).expect("generated relation is a connected poset")
}

/// Strictly order preserving filtration: chain depth plus a dyadic jitter
/// smaller than the depth gap. All values are exact in binary.
pub fn strict_filtration(rng: &mut impl Rng, poset: &Poset) -> Vec<f64> {
    let n = poset.len();
    let mut depth = vec![0usize; n];
    // relax until fixed; posets here are small
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..n {
            for &c in poset.up_covers(x) {
                if depth[c] < depth[x] + 1 {
                    depth[c] = depth[x] + 1;
                    changed = true;
                }
            }
        }
    }
    (0..n)
        .map(|x| depth[x] as f64 + rng.gen_range(0..=3) as f64 / 8.0)
        .collect()
}

/// Order preserving (possibly non-strict) filtration with plateaus:
/// f(x) = max of a random integer seed value over the down-set of x.
pub fn plateau_filtration(rng: &mut impl Rng, poset: &Poset) -> Vec<f64> {
    let n = poset.len();
    let seeds: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
    (0..n)
        .map(|x| {
            (0..n)
                .filter(|&z| poset.leq(z, x))
                .map(|z| seeds[z])
                .max()
                .unwrap() as f64
        })
        .collect()
}

pub fn random_filtered_poset(rng: &mut impl Rng, max_n: usize) -> FilteredPoset {
    let poset = random_poset(rng, max_n);
    let f = plateau_filtration(rng, &poset);
    FilteredPoset::new(poset, f).expect("plateau filtration is order preserving")
}

pub fn random_reeb_poset(rng: &mut impl Rng, max_n: usize) -> ReebPoset {
    let poset = random_poset(rng, max_n);
    let f = strict_filtration(rng, &poset);
    ReebPoset::new(FilteredPoset::new(poset, f).expect("order preserving"))
        .expect("depth filtration is strict")
}

/// Random connected weighted graph: a random tree plus a few extra edges.
/// Edge lengths are multiples of 1/4 so all derived distances are exact.
pub fn random_metric_graph(rng: &mut impl Rng, max_n: usize) -> MetricGraph {
    let n = rng.gen_range(2..=max_n.max(2));
    let mut present = vec![false; n * n];
    let mut edges = Vec::new();
    let push = |edges: &mut Vec<(usize, usize, f64)>,
                    present: &mut Vec<bool>,
                    rng: &mut dyn rand::RngCore,
                    a: usize,
                    b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        if a != b && !present[a * n + b] {
            present[a * n + b] = true;
            let w = rand::Rng::gen_range(rng, 1..=12) as f64 / 4.0;
            edges.push((a, b, w));
        }
    };
    for i in 1..n {
        let j = rng.gen_range(0..i);
        push(&mut edges, &mut present, rng, i, j);
    }
    let extras = rng.gen_range(0..=n / 2);
    for _ in 0..extras {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        push(&mut edges, &mut present, rng, a, b);
    }
    MetricGraph::new(n, edges).expect("tree plus extras is connected")
}

/// Random finite metric: the shortest-path metric of a random graph, so the
/// triangle inequality holds by construction.
pub fn random_metric(rng: &mut impl Rng, max_n: usize) -> FiniteMetricSpace {
    let g = random_metric_graph(rng, max_n);
    FiniteMetricSpace::new(g.shortest_paths()).expect("shortest paths form a metric")
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            instances: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        (n - 1).ilog2() + 1
    }
}

/// Distortion bound 2 * log2(2 M_F) * hyp on random Reeb posets, plus the
/// proof identity and the merge-value/Gromov-product comparison.
pub fn suite_distortion_bound(seed: u64, count: usize, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(seed ^ 0x5eeb);
    let mut res = SuiteResult::new("poset-distortion-bound");
    for i in 0..count {
        res.instances += 1;
        let rp = random_reeb_poset(&mut rng, max_n.min(12));
        match rp.approximate(MfMode::Exact) {
            Ok(out) => {
                let r = &out.report;
                if !r.ok {
                    res.failures.push(format!(
                        "instance {i}: distortion {} exceeds bound {} at pair {:?}",
                        r.distortion, r.bound, r.worst_pair
                    ));
                }
                if r.identity_max_dev > DEFAULT_TOL {
                    res.failures.push(format!(
                        "instance {i}: identity d - t = 2(m - g) off by {}",
                        r.identity_max_dev
                    ));
                }
                // merge value dominates the Gromov product
                let d = rp.distance_matrix();
                let m = rp.filtered().merge_values();
                for x in 0..rp.len() {
                    for y in 0..rp.len() {
                        if m.get(x, y) < rp.gromov_product(&d, x, y) - DEFAULT_TOL {
                            res.failures
                                .push(format!("instance {i}: m < g at ({x},{y})"));
                        }
                    }
                }
            }
            Err(e) => res.failures.push(format!("instance {i}: {e}")),
        }
    }
    res
}

/// Graph pipeline bound 2 * log2(4 betti + 4) * hyp over every base point,
/// plus the identities d_f = d_l and hyp_f = hyp_p.
pub fn suite_graph_bound(seed: u64, count: usize, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(seed ^ 0x9aaf);
    let mut res = SuiteResult::new("graph-distortion-bound");
    for i in 0..count {
        res.instances += 1;
        let g = random_metric_graph(&mut rng, max_n.min(10));
        for p in 0..g.len() {
            match g.tree_approx(p, MfMode::Exact) {
                Ok(out) => {
                    if !out.report.ok {
                        res.failures
                            .push(format!("instance {i} base {p}: bound violated"));
                    }
                    let d_l = out.regularized.shortest_paths();
                    let d_f = out.reeb.distance_matrix();
                    if d_f.linf_distance(&d_l) > DEFAULT_TOL {
                        res.failures
                            .push(format!("instance {i} base {p}: d_f differs from d_l"));
                    }
                    let hyp_f = out.reeb.hyperbolicity();
                    if fabs(hyp_f - out.report.hyp_base) > DEFAULT_TOL {
                        res.failures
                            .push(format!("instance {i} base {p}: hyp_f != hyp_p"));
                    }
                }
                Err(e) => res
                    .failures
                    .push(format!("instance {i} base {p}: {e}")),
            }
        }
    }
    res
}

/// Union-find constructions against the definition-level brute force.
pub fn suite_oracles(seed: u64, count: usize, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(seed ^ 0x0aac);
    let mut res = SuiteResult::new("oracle-equivalence");
    let cap = max_n.min(10);
    for i in 0..count {
        res.instances += 1;
        let fp = random_filtered_poset(&mut rng, cap);
        let m = fp.merge_values();
        let m_bf = oracle::merge_values_bruteforce(&fp);
        if m.linf_distance(&m_bf) > DEFAULT_TOL {
            res.failures
                .push(format!("instance {i}: merge values differ from brute force"));
        }
        if let Err(why) = oracle::check_reeb_tree(&fp) {
            res.failures.push(format!("instance {i}: {why}"));
        }

        let rp = random_reeb_poset(&mut rng, cap);
        let d = rp.distance_matrix();
        let d_bf = oracle::df_bruteforce(&rp);
        if d.linf_distance(&d_bf) > DEFAULT_TOL {
            res.failures
                .push(format!("instance {i}: d_f differs from brute force"));
        }
        let d_fence = oracle::df_bruteforce_fences(&rp);
        if d.linf_distance(&d_fence) > DEFAULT_TOL {
            res.failures
                .push(format!("instance {i}: d_f not realized by fences"));
        }
    }
    res
}

/// is_tree <=> acyclic covering graph <=> zero hyperbolicity (any strict f),
/// and tree metrics satisfy the four point condition exactly.
pub fn suite_tree_characterization(seed: u64, count: usize, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(seed ^ 0x7ee5);
    let mut res = SuiteResult::new("tree-characterization");
    for i in 0..count {
        res.instances += 1;
        let poset = random_poset(&mut rng, max_n.min(8));
        let by_merging = poset.is_tree();
        let by_betti = poset.betti_covering() == 0;
        let has_min = poset.smallest_element().is_some();
        let f = strict_filtration(&mut rng, &poset);
        let rp = ReebPoset::new(FilteredPoset::new(poset, f).unwrap()).unwrap();
        let hyp = rp.hyperbolicity();
        let by_hyp = hyp <= DEFAULT_TOL;
        if by_merging != by_hyp {
            res.failures.push(format!(
                "instance {i}: merging {by_merging} but hyp {hyp}"
            ));
        }
        // acyclicity characterizes trees only given a smallest element;
        // trees always imply acyclicity
        if (has_min && by_merging != by_betti) || (by_merging && !by_betti) {
            res.failures.push(format!(
                "instance {i}: merging {by_merging} betti0 {by_betti} min {has_min}"
            ));
        }
        if !by_merging && hyp < 1e-6 {
            res.failures
                .push(format!("instance {i}: non-tree with degenerate hyp {hyp}"));
        }
        if by_merging {
            // a tree has a unique minimal element
            if rp.poset().smallest_element().is_none() {
                res.failures
                    .push(format!("instance {i}: tree without smallest element"));
            }
            let defect = rp.distance_matrix().four_point_defect();
            if defect > DEFAULT_TOL {
                res.failures
                    .push(format!("instance {i}: tree metric defect {defect}"));
            }
        }
    }
    res
}

/// Integer identities: Euler Betti equals the merging-point sum on posets
/// with a minimum; exact M_F respects the 2 betti + 2 cap; a fence of
/// length l forces floor((l-1)/2) merging points.
pub fn suite_combinatorial(seed: u64, count: usize, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(seed ^ 0xc0b1);
    let mut res = SuiteResult::new("combinatorial-identities");
    for i in 0..count {
        res.instances += 1;
        let poset = random_poset(&mut rng, max_n.min(10));
        let euler = poset.betti_covering();
        if let Some(by_merging) = poset.betti_by_merging() {
            if euler != by_merging {
                res.failures
                    .push(format!("instance {i}: betti {euler} != merging {by_merging}"));
            }
        }
        let mf = poset
            .max_fence_length(MfMode::Exact)
            .expect("within budget");
        if poset.smallest_element().is_some() && mf > 2 * euler + 2 {
            res.failures
                .push(format!("instance {i}: M_F {mf} exceeds 2b+2 {}", 2 * euler + 2));
        }
        let forced = mf.saturating_sub(1) / 2;
        if poset.merging_points().len() < forced {
            res.failures.push(format!(
                "instance {i}: fence of length {mf} but only {} merging points",
                poset.merging_points().len()
            ));
        }
    }
    res
}

/// Chained Gromov product inequality along random comparability paths:
/// g(x_0, x_n) >= min_i g(x_i, x_{i+1}) - ceil(log2 n) * hyp.
pub fn suite_chain_inequality(seed: u64, count: usize, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(seed ^ 0xc4a1);
    let mut res = SuiteResult::new("chained-product-inequality");
    for i in 0..count {
        res.instances += 1;
        let rp = random_reeb_poset(&mut rng, max_n.min(12));
        if rp.len() < 2 {
            continue;
        }
        let d = rp.distance_matrix();
        let hyp = rp.hyperbolicity_with(&d);
        for _ in 0..4 {
            let steps = rng.gen_range(1..=8);
            let mut path = vec![rng.gen_range(0..rp.len())];
            for _ in 0..steps {
                let nbrs = rp.poset().comparability_neighbors(*path.last().unwrap());
                if nbrs.is_empty() {
                    break;
                }
                path.push(nbrs[rng.gen_range(0..nbrs.len())]);
            }
            let n = path.len() - 1;
            if n == 0 {
                continue;
            }
            let min_step = (0..n)
                .map(|k| rp.gromov_product(&d, path[k], path[k + 1]))
                .fold(f64::INFINITY, f64::min);
            let lhs = rp.gromov_product(&d, path[0], path[n]);
            if lhs < min_step - ceil_log2(n) as f64 * hyp - DEFAULT_TOL {
                res.failures
                    .push(format!("instance {i}: chain inequality fails on {path:?}"));
            }
        }
    }
    res
}

/// hyp_p <= 2 hyp_q for all base points of a finite metric.
pub fn suite_base_change(seed: u64, count: usize, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(seed ^ 0xbaec);
    let mut res = SuiteResult::new("base-point-comparison");
    for i in 0..count {
        res.instances += 1;
        let space = random_metric(&mut rng, max_n.min(10));
        let hyps: Vec<f64> = (0..space.len()).map(|p| space.hyp_base(p)).collect();
        for (p, &hp) in hyps.iter().enumerate() {
            for (q, &hq) in hyps.iter().enumerate() {
                if hp > 2.0 * hq + DEFAULT_TOL {
                    res.failures
                        .push(format!("instance {i}: hyp_{p} > 2 hyp_{q}"));
                }
            }
        }
    }
    res
}

/// Quotient laws: R_f is idempotent, T_f fixes trees, and T_f factors
/// through R_f.
pub fn suite_quotient_laws(seed: u64, count: usize, max_n: usize) -> SuiteResult {
    let mut rng = rng_for(seed ^ 0x4007);
    let mut res = SuiteResult::new("quotient-laws");
    for i in 0..count {
        res.instances += 1;
        let fp = random_filtered_poset(&mut rng, max_n.min(12));
        let (rp, pi1) = fp.reeb_poset();
        let (rp2, pi2) = rp.filtered().reeb_poset();
        if !pi2.is_identity() || rp2.len() != rp.len() {
            res.failures
                .push(format!("instance {i}: R_f not idempotent"));
        }
        let (tree, pi_t) = fp.reeb_tree();
        let (tree_fix, pi_fix) = tree.reeb().filtered().reeb_tree();
        if !pi_fix.is_identity() || tree_fix.len() != tree.len() {
            res.failures
                .push(format!("instance {i}: T_f does not fix its own tree"));
        }
        // factorization T_f(X) = T_f(R_f(X)) through the composed projection
        let (tree_r, pi_r) = rp.filtered().reeb_tree();
        if tree_r.len() != tree.len() {
            res.failures
                .push(format!("instance {i}: T_f(R_f) has different size"));
        } else {
            for x in 0..fp.len() {
                for y in 0..fp.len() {
                    let (a, b) = (pi_t.apply(x), pi_t.apply(y));
                    let (c, d) = (pi_r.apply(pi1.apply(x)), pi_r.apply(pi1.apply(y)));
                    if (a == b) != (c == d)
                        || tree.poset().leq(a, b) != tree_r.poset().leq(c, d)
                        || fabs(tree.f(a) - tree_r.f(c)) > DEFAULT_TOL
                    {
                        res.failures
                            .push(format!("instance {i}: T_f(R_f) differs at ({x},{y})"));
                    }
                }
            }
        }
    }
    res
}

/// Configuration for [`verify_all`].
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub count: usize,
    pub max_size: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 7,
            count: 200,
            max_size: 10,
        }
    }
}

/// Runs every verification suite with the same seed and budget.
pub fn verify_all(cfg: VerifyConfig) -> Vec<SuiteResult> {
    vec![
        suite_distortion_bound(cfg.seed, cfg.count, cfg.max_size.max(2)),
        suite_graph_bound(cfg.seed, cfg.count / 2 + 1, cfg.max_size),
        suite_oracles(cfg.seed, cfg.count, cfg.max_size),
        suite_tree_characterization(cfg.seed, cfg.count, cfg.max_size),
        suite_combinatorial(cfg.seed, cfg.count, cfg.max_size),
        suite_chain_inequality(cfg.seed, cfg.count, cfg.max_size),
        suite_base_change(cfg.seed, cfg.count / 2 + 1, cfg.max_size),
        suite_quotient_laws(cfg.seed, cfg.count, cfg.max_size),
    ]
}
