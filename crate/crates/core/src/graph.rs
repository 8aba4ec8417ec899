//! Finite metric graphs: shortest-path metrics, base-point regularization,
//! the induced order `x <=_p y iff d(p,y) - d(p,x) = d(x,y)` and the graph
//! tree-approximation pipeline with its 2 * log2(4*betti + 4) * hyp bound.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dist::DistanceMatrix;
use crate::poset::{MfMode, Poset};
use crate::reeb::{FilteredPoset, PosetApproxReport, Projection, ReebError, ReebPoset, ReebTree};
use crate::{fabs, log2, DEFAULT_TOL};

#[derive(Clone, Debug, PartialEq)]
pub enum GraphError {
    Empty,
    SelfLoop { v: usize },
    DuplicateEdge { u: usize, v: usize },
    NonPositiveLength { u: usize, v: usize },
    Disconnected,
    IndexOutOfRange { index: usize, n: usize },
    /// The graph violates p-regularity; `clause` is 1 (edge length must equal
    /// both the distance and the |d(p,.)| difference) or 2 (edge must be the
    /// unique geodesic between its endpoints).
    NotRegular { clause: u8, u: usize, v: usize },
    Reeb(ReebError),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Empty => write!(f, "graph has no vertices"),
            GraphError::SelfLoop { v } => write!(f, "self loop at vertex {v}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::NonPositiveLength { u, v } => {
                write!(f, "edge ({u}, {v}) has non-positive length")
            }
            GraphError::Disconnected => write!(f, "graph is not connected"),
            GraphError::IndexOutOfRange { index, n } => {
                write!(f, "vertex index {index} out of range for {n} vertices")
            }
            GraphError::NotRegular { clause, u, v } => match clause {
                1 => write!(
                    f,
                    "not p-regular: edge ({u}, {v}) length differs from the distance or the |d(p,.)| difference (clause i)"
                ),
                _ => write!(
                    f,
                    "not p-regular: edge ({u}, {v}) is not the unique geodesic between its endpoints (clause ii)"
                ),
            },
            GraphError::Reeb(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for GraphError {}

impl From<ReebError> for GraphError {
    fn from(e: ReebError) -> Self {
        GraphError::Reeb(e)
    }
}

/// Finite connected simple graph with positive edge lengths.
#[derive(Clone, Debug)]
pub struct MetricGraph {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
    adj: Vec<Vec<(usize, f64)>>,
    labels: Vec<String>,
    base: Option<usize>,
}

impl MetricGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<MetricGraph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = vec![false; n * n];
        let mut norm = Vec::with_capacity(edges.len());
        for (u, v, len) in edges {
            for &i in &[u, v] {
                if i >= n {
                    return Err(GraphError::IndexOutOfRange { index: i, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            let (a, b) = (u.min(v), u.max(v));
            if seen[a * n + b] {
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
            seen[a * n + b] = true;
            if !(len > 0.0) || !len.is_finite() {
                return Err(GraphError::NonPositiveLength { u: a, v: b });
            }
            adj[a].push((b, len));
            adj[b].push((a, len));
            norm.push((a, b, len));
        }
        let g = MetricGraph {
            n,
            edges: norm,
            adj,
            labels: (0..n).map(|i| format!("v{i}")).collect(),
            base: None,
        };
        if !g.connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> MetricGraph {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    pub fn with_base(mut self, base: usize) -> MetricGraph {
        assert!(base < self.n);
        self.base = Some(base);
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn base(&self) -> Option<usize> {
        self.base
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Single-source shortest paths; `skip` removes one undirected edge.
    fn dijkstra(&self, src: usize, skip: Option<(usize, usize)>) -> Vec<f64> {
        let mut dist = vec![f64::INFINITY; self.n];
        let mut done = vec![false; self.n];
        dist[src] = 0.0;
        for _ in 0..self.n {
            let mut cur = usize::MAX;
            let mut best = f64::INFINITY;
            for v in 0..self.n {
                if !done[v] && dist[v] < best {
                    best = dist[v];
                    cur = v;
                }
            }
            if cur == usize::MAX {
                break;
            }
            done[cur] = true;
            for &(w, len) in &self.adj[cur] {
                if let Some((a, b)) = skip {
                    if (cur == a && w == b) || (cur == b && w == a) {
                        continue;
                    }
                }
                let cand = dist[cur] + len;
                if cand < dist[w] {
                    dist[w] = cand;
                }
            }
        }
        dist
    }

    /// Exact all-pairs shortest-path distances d_l.
    pub fn shortest_paths(&self) -> DistanceMatrix {
        let mut d = DistanceMatrix::zeros(self.n);
        for src in 0..self.n {
            let row = self.dijkstra(src, None);
            for (v, &x) in row.iter().enumerate() {
                d.set(src, v, x);
            }
        }
        d
    }

    /// Shortest u-v distance avoiding the edge {u, v} itself.
    pub fn detour_distance(&self, u: usize, v: usize) -> f64 {
        self.dijkstra(u, Some((u, v)))[v]
    }

    /// Checks p-regularity within `tol`.
    pub fn check_regular(&self, p: usize, tol: f64) -> Result<(), GraphError> {
        if p >= self.n {
            return Err(GraphError::IndexOutOfRange { index: p, n: self.n });
        }
        let d = self.shortest_paths();
        for &(u, v, len) in &self.edges {
            let diff = fabs(d.get(p, u) - d.get(p, v));
            if fabs(len - d.get(u, v)) > tol || fabs(len - diff) > tol {
                return Err(GraphError::NotRegular { clause: 1, u, v });
            }
            if self.detour_distance(u, v) <= len + tol {
                return Err(GraphError::NotRegular { clause: 2, u, v });
            }
        }
        Ok(())
    }

    /// Subdivides edges until the graph is p-regular: first an apex vertex at
    /// the interior maximum of d(p,.) on each edge, then a midpoint on each
    /// edge that is not the unique geodesic between its endpoints. The metric
    /// restricted to the original vertices is unchanged.
    pub fn regularize(&self, p: usize) -> Result<(MetricGraph, RegularizationTrace), GraphError> {
        self.regularize_with_tol(p, DEFAULT_TOL)
    }

    pub fn regularize_with_tol(
        &self,
        p: usize,
        tol: f64,
    ) -> Result<(MetricGraph, RegularizationTrace), GraphError> {
        if p >= self.n {
            return Err(GraphError::IndexOutOfRange { index: p, n: self.n });
        }
        let mut trace = RegularizationTrace {
            original_len: self.n,
            added: Vec::new(),
        };

        // apex pass: d(p, .) on the edge {v, w} peaks at offset
        // s = (len + d(p,w) - d(p,v)) / 2 from v; subdivide interior peaks
        let dp = self.dijkstra(p, None);
        let mut n2 = self.n;
        let mut edges2: Vec<(usize, usize, f64)> = Vec::new();
        let mut labels2 = self.labels.clone();
        for &(u, v, len) in &self.edges {
            let s = (len + dp[v] - dp[u]) / 2.0;
            if s > tol && s < len - tol {
                let apex = n2;
                n2 += 1;
                labels2.push(format!("{}^{}", self.labels[u], self.labels[v]));
                edges2.push((u, apex, s));
                edges2.push((apex, v, len - s));
                trace.added.push(AddedVertex {
                    vertex: apex,
                    host: (u, v),
                    offset: s,
                    reason: AddedReason::Apex,
                });
            } else {
                edges2.push((u, v, len));
            }
        }
        let stage = MetricGraph::new(n2, edges2.clone())?.with_labels(labels2.clone());

        // midpoint pass: split edges that are not the unique geodesic
        let mut n3 = n2;
        let mut edges3: Vec<(usize, usize, f64)> = Vec::new();
        for &(u, v, len) in stage.edges() {
            if stage.detour_distance(u, v) <= len + tol {
                let mid = n3;
                n3 += 1;
                labels2.push(format!("{}~{}", stage.labels[u], stage.labels[v]));
                edges3.push((u, mid, len / 2.0));
                edges3.push((mid, v, len / 2.0));
                trace.added.push(AddedVertex {
                    vertex: mid,
                    host: (u, v),
                    offset: len / 2.0,
                    reason: AddedReason::Midpoint,
                });
            } else {
                edges3.push((u, v, len));
            }
        }
        let mut out = MetricGraph::new(n3, edges3)?.with_labels(labels2);
        out.base = Some(p);
        debug_assert!(out.check_regular(p, tol).is_ok());
        Ok((out, trace))
    }

    /// The Reeb poset (V, <=_p, d(p,.)) of a p-regular graph. Errors name the
    /// violated regularity clause if the graph is not p-regular.
    pub fn induce_poset(&self, p: usize) -> Result<ReebPoset, GraphError> {
        self.induce_poset_with_tol(p, DEFAULT_TOL)
    }

    pub fn induce_poset_with_tol(&self, p: usize, tol: f64) -> Result<ReebPoset, GraphError> {
        self.check_regular(p, tol)?;
        let d = self.shortest_paths();
        let n = self.n;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                if fabs(d.get(p, y) - d.get(p, x) - d.get(x, y)) <= tol {
                    leq[x * n + y] = true;
                }
            }
        }
        let poset = Poset::from_leq(leq, n)
            .map_err(ReebError::from)?
            .with_labels(self.labels.clone());
        let f: Vec<f64> = (0..n).map(|x| d.get(p, x)).collect();
        Ok(ReebPoset::new(FilteredPoset::new(poset, f)?)?)
    }

    /// Full pipeline: regularize, induce the poset, take the Reeb tree and
    /// certify the distortion against both the fence bound and the Betti
    /// bound 2 * log2(4*betti + 4) * hyp.
    pub fn tree_approx(&self, p: usize, mf_mode: MfMode) -> Result<GraphApproximation, GraphError> {
        let (regularized, trace) = self.regularize(p)?;
        let reeb = regularized.induce_poset(p)?;
        let d_l = regularized.shortest_paths();
        let approx = reeb.approximate(mf_mode).map_err(GraphError::from)?;

        let nv = regularized.len();
        let betti = 1 + regularized.edges.len() - nv;
        debug_assert_eq!(betti, reeb.poset().betti_covering());

        let mut distortion_original = 0.0;
        for x in 0..self.n {
            for y in x + 1..self.n {
                let dev = fabs(d_l.get(x, y) - approx.pulled_back_metric.get(x, y));
                if dev > distortion_original {
                    distortion_original = dev;
                }
            }
        }
        let hyp_base = d_l.hyp_base(p);
        let hyp_full = d_l.hyp();
        let log_term = log2(4.0 * betti as f64 + 4.0);
        let bound_graph = 2.0 * log_term * hyp_full;
        let bound_graph_base = 2.0 * log_term * hyp_base;
        let ok_graph = approx.report.distortion <= bound_graph + DEFAULT_TOL
            && approx.report.distortion <= bound_graph_base + DEFAULT_TOL;
        let report = GraphApproxReport {
            base: p,
            original_len: self.n,
            regularized_len: nv,
            betti,
            hyp_base,
            hyp_full,
            distortion_original,
            bound_graph,
            bound_graph_base,
            ok_graph,
            ok: ok_graph && approx.report.ok,
            poset: approx.report.clone(),
        };
        Ok(GraphApproximation {
            regularized,
            trace,
            reeb,
            tree: approx.tree,
            projection: approx.projection,
            pulled_back_metric: approx.pulled_back_metric,
            report,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AddedReason {
    Apex,
    Midpoint,
}

impl fmt::Display for AddedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AddedReason::Apex => write!(f, "apex"),
            AddedReason::Midpoint => write!(f, "midpoint"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AddedVertex {
    pub vertex: usize,
    /// Endpoints of the host edge at the time of subdivision.
    pub host: (usize, usize),
    /// Offset of the new vertex along the host edge from `host.0`.
    pub offset: f64,
    pub reason: AddedReason,
}

#[derive(Clone, Debug)]
pub struct RegularizationTrace {
    pub original_len: usize,
    pub added: Vec<AddedVertex>,
}

/// Result of the graph tree-approximation pipeline. Original vertices keep
/// their indices in the regularized graph.
#[derive(Clone, Debug)]
pub struct GraphApproximation {
    pub regularized: MetricGraph,
    pub trace: RegularizationTrace,
    pub reeb: ReebPoset,
    pub tree: ReebTree,
    pub projection: Projection,
    /// t_f pulled back to the regularized vertices.
    pub pulled_back_metric: DistanceMatrix,
    pub report: GraphApproxReport,
}

#[derive(Clone, Debug)]
pub struct GraphApproxReport {
    pub base: usize,
    pub original_len: usize,
    pub regularized_len: usize,
    pub betti: usize,
    pub hyp_base: f64,
    pub hyp_full: f64,
    /// Max deviation over pairs of original vertices only.
    pub distortion_original: f64,
    pub bound_graph: f64,
    pub bound_graph_base: f64,
    pub ok_graph: bool,
    pub ok: bool,
    /// The sharper fence-based certificate on the induced Reeb poset.
    pub poset: PosetApproxReport,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_4cycle() -> MetricGraph {
        let labels = ["p", "a", "b", "c"].iter().map(|s| String::from(*s)).collect();
        MetricGraph::new(4, vec![(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])
            .unwrap()
            .with_labels(labels)
    }

    #[test]
    fn shortest_paths_examples() {
        let single = MetricGraph::new(2, vec![(0, 1, 3.0)]).unwrap();
        assert_eq!(single.shortest_paths().get(0, 1), 3.0);

        let c4 = unit_4cycle();
        let d = c4.shortest_paths();
        assert_eq!(d.get(0, 2), 2.0);
        assert_eq!(d.get(1, 3), 2.0);

        let tri = MetricGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 3.0)]).unwrap();
        assert_eq!(tri.shortest_paths().get(0, 2), 2.0);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(MetricGraph::new(0, vec![]).unwrap_err(), GraphError::Empty);
        assert!(matches!(
            MetricGraph::new(2, vec![(0, 0, 1.0)]).unwrap_err(),
            GraphError::SelfLoop { .. }
        ));
        assert!(matches!(
            MetricGraph::new(2, vec![(0, 1, 1.0), (1, 0, 2.0)]).unwrap_err(),
            GraphError::DuplicateEdge { .. }
        ));
        assert!(matches!(
            MetricGraph::new(2, vec![(0, 1, 0.0)]).unwrap_err(),
            GraphError::NonPositiveLength { .. }
        ));
        assert_eq!(
            MetricGraph::new(3, vec![(0, 1, 1.0)]).unwrap_err(),
            GraphError::Disconnected
        );
    }

    #[test]
    fn unit_4cycle_is_already_regular() {
        let c4 = unit_4cycle();
        let (reg, trace) = c4.regularize(0).unwrap();
        assert_eq!(reg.len(), 4);
        assert!(trace.added.is_empty());
    }

    #[test]
    fn apex_created_on_triangle() {
        // unit triangle, base at vertex 0: the opposite edge peaks at its middle
        let tri = MetricGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let (reg, trace) = tri.regularize(0).unwrap();
        let apexes: Vec<_> = trace
            .added
            .iter()
            .filter(|a| a.reason == AddedReason::Apex)
            .collect();
        assert_eq!(apexes.len(), 1);
        assert_eq!(apexes[0].host, (1, 2));
        assert_eq!(apexes[0].offset, 0.5);
        assert!(reg.check_regular(0, DEFAULT_TOL).is_ok());
    }

    #[test]
    fn midpoint_rule_fires_on_equal_twin_paths() {
        // the direct length-2 edge ties with the two-hop path; d(p, .) is
        // monotone on it, so only the midpoint rule can fix uniqueness
        let g = MetricGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 2.0)]).unwrap();
        let (reg, trace) = g.regularize(0).unwrap();
        assert_eq!(trace.added.len(), 1);
        assert_eq!(trace.added[0].reason, AddedReason::Midpoint);
        assert_eq!(trace.added[0].host, (0, 2));
        assert_eq!(trace.added[0].offset, 1.0);
        assert!(reg.check_regular(0, DEFAULT_TOL).is_ok());
    }

    #[test]
    fn regularization_preserves_metric_and_is_idempotent() {
        let tri = MetricGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let before = tri.shortest_paths();
        let (reg, _) = tri.regularize(0).unwrap();
        let after = reg.shortest_paths();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(before.get(x, y), after.get(x, y));
            }
        }
        let (reg2, trace2) = reg.regularize(0).unwrap();
        assert!(trace2.added.is_empty());
        assert_eq!(reg2.len(), reg.len());
    }

    #[test]
    fn induced_poset_examples() {
        // star with center p: leaves form an antichain above the bottom
        let star = MetricGraph::new(4, vec![(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]).unwrap();
        let rp = star.induce_poset(0).unwrap();
        assert_eq!(rp.poset().covering_graph(), vec![(0, 1), (0, 2), (0, 3)]);

        // unit 4-cycle at p: p < a < b, p < c < b
        let rp = unit_4cycle().induce_poset(0).unwrap();
        assert!(rp.poset().lt(0, 1) && rp.poset().lt(1, 2));
        assert!(rp.poset().lt(0, 3) && rp.poset().lt(3, 2));
        assert!(!rp.poset().comparable(1, 3));

        // path graph: chain
        let path = MetricGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let rp = path.induce_poset(0).unwrap();
        assert!(rp.poset().lt(0, 1) && rp.poset().lt(1, 2) && rp.poset().lt(0, 2));
    }

    #[test]
    fn induce_poset_rejects_irregular_graph() {
        let tri = MetricGraph::new(3, vec![(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        assert!(matches!(
            tri.induce_poset(0),
            Err(GraphError::NotRegular { .. })
        ));
    }

    #[test]
    fn covering_graph_round_trip() {
        let c4 = unit_4cycle();
        let (reg, _) = c4.regularize(0).unwrap();
        let rp = reg.induce_poset(0).unwrap();
        // cover edges with weight |f difference| reproduce the graph edges
        let mut covers: Vec<(usize, usize, f64)> = rp
            .poset()
            .covering_graph()
            .iter()
            .map(|&(x, y)| (x.min(y), x.max(y), fabs(rp.f(x) - rp.f(y))))
            .collect();
        covers.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut edges = reg.edges().to_vec();
        edges.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        assert_eq!(covers.len(), edges.len());
        for (c, e) in covers.iter().zip(edges.iter()) {
            assert_eq!((c.0, c.1), (e.0, e.1));
            assert!(fabs(c.2 - e.2) <= 1e-9);
        }
    }

    #[test]
    fn hyperbolicity_examples() {
        let d = unit_4cycle().shortest_paths();
        for p in 0..4 {
            assert_eq!(d.hyp_base(p), 1.0);
        }
        assert_eq!(d.hyp(), 1.0);

        let two = MetricGraph::new(2, vec![(0, 1, 5.0)]).unwrap().shortest_paths();
        assert_eq!(two.hyp(), 0.0);
    }

    #[test]
    fn tree_approx_on_tree_graph_is_exact() {
        let star = MetricGraph::new(4, vec![(0, 1, 1.0), (0, 2, 2.0), (0, 3, 0.5)]).unwrap();
        let out = star.tree_approx(0, MfMode::Exact).unwrap();
        assert_eq!(out.report.poset.distortion, 0.0);
        assert_eq!(out.report.bound_graph, 0.0);
        assert!(out.report.ok);
    }

    #[test]
    fn tree_approx_unit_4cycle() {
        let out = unit_4cycle().tree_approx(0, MfMode::Exact).unwrap();
        assert_eq!(out.report.distortion_original, 2.0);
        assert_eq!(out.report.betti, 1);
        assert_eq!(out.report.hyp_full, 1.0);
        assert_eq!(out.report.bound_graph, 6.0); // 2 * log2(8) * 1
        assert!(out.report.ok);
        // d_f on the induced poset equals d_l
        let d_f = out.reeb.distance_matrix();
        let d_l = out.regularized.shortest_paths();
        assert!(d_f.linf_distance(&d_l) <= 1e-9);
    }
}
