//! Finite metric spaces: the complete-graph embedding, the cardinality bound
//! 2 * hyp * log2(2|X|), the Betti-based phi of an embedding, and the tree
//! pseudo-metric pipeline over a base-point sweep.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dist::DistanceMatrix;
use crate::graph::{GraphApproxReport, GraphApproximation, GraphError, MetricGraph};
use crate::poset::MfMode;
use crate::{fabs, log2, DEFAULT_TOL};

#[derive(Clone, Debug, PartialEq)]
pub enum MetricError {
    Empty,
    NonZeroDiagonal { i: usize },
    Asymmetric { i: usize, j: usize },
    NonPositive { i: usize, j: usize },
    NotFinite { i: usize, j: usize },
    TriangleViolation { i: usize, j: usize, k: usize },
    /// The supplied embedding does not reproduce d on the pair (x, y).
    NotIsometric { x: usize, y: usize, expected: f64, got: f64 },
    EmbeddingTooSmall { points: usize, vertices: usize },
    Graph(GraphError),
}

impl fmt::Display for MetricError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricError::Empty => write!(f, "metric space has no points"),
            MetricError::NonZeroDiagonal { i } => write!(f, "d({i},{i}) is not zero"),
            MetricError::Asymmetric { i, j } => write!(f, "d({i},{j}) != d({j},{i})"),
            MetricError::NonPositive { i, j } => {
                write!(f, "d({i},{j}) is not positive for distinct points")
            }
            MetricError::NotFinite { i, j } => write!(f, "d({i},{j}) is not finite"),
            MetricError::TriangleViolation { i, j, k } => {
                write!(f, "triangle inequality violated on ({i},{j},{k})")
            }
            MetricError::NotIsometric { x, y, expected, got } => write!(
                f,
                "embedding not isometric on pair ({x},{y}): expected {expected}, got {got}"
            ),
            MetricError::EmbeddingTooSmall { points, vertices } => write!(
                f,
                "embedding has {vertices} vertices but the space has {points} points"
            ),
            MetricError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for MetricError {}

impl From<GraphError> for MetricError {
    fn from(e: GraphError) -> Self {
        MetricError::Graph(e)
    }
}

/// Finite metric space given by a symmetric distance matrix.
#[derive(Clone, Debug)]
pub struct FiniteMetricSpace {
    d: DistanceMatrix,
    labels: Vec<String>,
}

impl FiniteMetricSpace {
    pub fn new(d: DistanceMatrix) -> Result<FiniteMetricSpace, MetricError> {
        Self::with_tol(d, DEFAULT_TOL)
    }

    pub fn with_tol(d: DistanceMatrix, tol: f64) -> Result<FiniteMetricSpace, MetricError> {
        let n = d.len();
        if n == 0 {
            return Err(MetricError::Empty);
        }
        for i in 0..n {
            if d.get(i, i) != 0.0 {
                return Err(MetricError::NonZeroDiagonal { i });
            }
            for j in 0..n {
                let v = d.get(i, j);
                if !v.is_finite() {
                    return Err(MetricError::NotFinite { i, j });
                }
                if fabs(v - d.get(j, i)) > tol {
                    return Err(MetricError::Asymmetric { i, j });
                }
                if i != j && !(v > 0.0) {
                    return Err(MetricError::NonPositive { i, j });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if d.get(i, j) > d.get(i, k) + d.get(k, j) + tol {
                        return Err(MetricError::TriangleViolation { i, j, k });
                    }
                }
            }
        }
        let labels = (0..n).map(|i| alloc::format!("x{i}")).collect();
        Ok(FiniteMetricSpace { d, labels })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> FiniteMetricSpace {
        assert_eq!(labels.len(), self.len());
        self.labels = labels;
        self
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.d
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn hyp(&self) -> f64 {
        self.d.hyp()
    }

    pub fn hyp_base(&self, p: usize) -> f64 {
        self.d.hyp_base(p)
    }

    /// The cardinality bound 2 * hyp(X) * log2(2|X|).
    pub fn upsilon(&self) -> f64 {
        let h = self.hyp();
        if h == 0.0 {
            0.0
        } else {
            2.0 * h * log2(2.0 * self.len() as f64)
        }
    }

    /// The complete graph on the points with edge lengths d(x,y); an
    /// isometric embedding for any metric.
    pub fn complete_graph_embedding(&self) -> MetricGraph {
        let n = self.len();
        let mut edges = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j, self.d.get(i, j)));
            }
        }
        MetricGraph::new(n, edges)
            .expect("complete graph on a metric is valid")
            .with_labels(self.labels.clone())
    }

    /// Verifies that the first |X| vertices of `embedding` carry this metric.
    pub fn check_isometric(&self, embedding: &MetricGraph, tol: f64) -> Result<(), MetricError> {
        let n = self.len();
        if embedding.len() < n {
            return Err(MetricError::EmbeddingTooSmall {
                points: n,
                vertices: embedding.len(),
            });
        }
        let d_g = embedding.shortest_paths();
        for x in 0..n {
            for y in x + 1..n {
                if fabs(d_g.get(x, y) - self.d.get(x, y)) > tol {
                    return Err(MetricError::NotIsometric {
                        x,
                        y,
                        expected: self.d.get(x, y),
                        got: d_g.get(x, y),
                    });
                }
            }
        }
        Ok(())
    }

    /// Tree pseudo-metric via the embedding pipeline. With no embedding the
    /// complete graph is used; with no base every vertex of the embedding is
    /// tried and the one minimizing the certified fence bound is kept
    /// (ties broken by vertex index).
    pub fn tree_approx(
        &self,
        embedding: Option<&MetricGraph>,
        base: Option<usize>,
        mf_mode: MfMode,
    ) -> Result<MetricApproximation, MetricError> {
        let complete;
        let emb = match embedding {
            Some(g) => {
                self.check_isometric(g, DEFAULT_TOL)?;
                g
            }
            None => {
                complete = self.complete_graph_embedding();
                &complete
            }
        };
        let bases: Vec<usize> = match base {
            Some(b) => {
                if b >= emb.len() {
                    return Err(MetricError::Graph(GraphError::IndexOutOfRange {
                        index: b,
                        n: emb.len(),
                    }));
                }
                vec![b]
            }
            None => (0..emb.len()).collect(),
        };
        let mut best: Option<GraphApproximation> = None;
        let mut sweep = Vec::new();
        for &b in &bases {
            let out = emb.tree_approx(b, mf_mode)?;
            sweep.push(BaseSweepEntry {
                base: b,
                bound: out.report.poset.bound,
                distortion: out.report.poset.distortion,
            });
            let better = match &best {
                None => true,
                Some(cur) => out.report.poset.bound < cur.report.poset.bound,
            };
            if better {
                best = Some(out);
            }
        }
        let graph_approx = best.expect("at least one base");

        let n = self.len();
        let mut t_x = DistanceMatrix::zeros(n);
        let mut collapsed_pairs = 0;
        for x in 0..n {
            for y in x + 1..n {
                let t = graph_approx.pulled_back_metric.get(x, y);
                t_x.set(x, y, t);
                if t == 0.0 {
                    collapsed_pairs += 1;
                }
            }
        }
        let mut distortion = 0.0;
        for x in 0..n {
            for y in x + 1..n {
                let dev = fabs(self.d.get(x, y) - t_x.get(x, y));
                if dev > distortion {
                    distortion = dev;
                }
            }
        }
        let four_point_defect = t_x.four_point_defect();
        let upsilon = self.upsilon();
        let phi = phi_of_embedding(emb)?;
        let ok = graph_approx.report.ok
            && four_point_defect <= DEFAULT_TOL
            && distortion <= graph_approx.report.poset.bound + DEFAULT_TOL;
        let report = MetricApproxReport {
            len: n,
            distortion,
            upsilon,
            phi,
            collapsed_pairs,
            four_point_defect,
            ok,
            sweep,
            graph: graph_approx.report.clone(),
        };
        Ok(MetricApproximation {
            tree_metric: t_x,
            graph: graph_approx,
            report,
        })
    }
}

/// phi(G) = 2 * hyp * log2(4*betti + 4), with hyp taken over the vertex set
/// of the regularized graph as a finite proxy for the continuum value (it
/// lower-bounds it). Regularization base: the graph's base point, else
/// vertex 0.
pub fn phi_of_embedding(g: &MetricGraph) -> Result<f64, GraphError> {
    let base = g.base().unwrap_or(0);
    let (reg, _) = g.regularize(base)?;
    let betti = 1 + reg.edges().len() - reg.len();
    let h = reg.shortest_paths().hyp();
    Ok(if h == 0.0 {
        0.0
    } else {
        2.0 * h * log2(4.0 * betti as f64 + 4.0)
    })
}

#[derive(Clone, Debug)]
pub struct BaseSweepEntry {
    pub base: usize,
    pub bound: f64,
    pub distortion: f64,
}

#[derive(Clone, Debug)]
pub struct MetricApproximation {
    /// Tree pseudo-metric on the original points.
    pub tree_metric: DistanceMatrix,
    /// The winning base's full graph pipeline output.
    pub graph: GraphApproximation,
    pub report: MetricApproxReport,
}

#[derive(Clone, Debug)]
pub struct MetricApproxReport {
    pub len: usize,
    pub distortion: f64,
    pub upsilon: f64,
    pub phi: f64,
    pub collapsed_pairs: usize,
    pub four_point_defect: f64,
    pub ok: bool,
    pub sweep: Vec<BaseSweepEntry>,
    pub graph: GraphApproxReport,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_metric() -> FiniteMetricSpace {
        // vertex metric of the unit 4-cycle p-a-b-c
        let rows = vec![
            vec![0.0, 1.0, 2.0, 1.0],
            vec![1.0, 0.0, 1.0, 2.0],
            vec![2.0, 1.0, 0.0, 1.0],
            vec![1.0, 2.0, 1.0, 0.0],
        ];
        FiniteMetricSpace::new(DistanceMatrix::from_rows(&rows)).unwrap()
    }

    fn star_metric() -> FiniteMetricSpace {
        // tree metric: star with unit legs
        let rows = vec![
            vec![0.0, 1.0, 1.0, 1.0],
            vec![1.0, 0.0, 2.0, 2.0],
            vec![1.0, 2.0, 0.0, 2.0],
            vec![1.0, 2.0, 2.0, 0.0],
        ];
        FiniteMetricSpace::new(DistanceMatrix::from_rows(&rows)).unwrap()
    }

    #[test]
    fn validation() {
        let bad = DistanceMatrix::from_rows(&[
            vec![0.0, 1.0, 5.0],
            vec![1.0, 0.0, 1.0],
            vec![5.0, 1.0, 0.0],
        ]);
        assert!(matches!(
            FiniteMetricSpace::new(bad),
            Err(MetricError::TriangleViolation { .. })
        ));
    }

    #[test]
    fn complete_embedding_is_isometric() {
        for space in [cycle_metric(), star_metric()] {
            let g = space.complete_graph_embedding();
            assert!(space.check_isometric(&g, 1e-12).is_ok());
        }
        // two points at distance 5 -> single edge of length 5
        let two =
            FiniteMetricSpace::new(DistanceMatrix::from_rows(&[vec![0.0, 5.0], vec![5.0, 0.0]]))
                .unwrap();
        let g = two.complete_graph_embedding();
        assert_eq!(g.edges(), &[(0, 1, 5.0)]);
    }

    #[test]
    fn upsilon_examples() {
        assert_eq!(star_metric().upsilon(), 0.0);
        assert_eq!(cycle_metric().upsilon(), 6.0); // 2 * 1 * log2(8)
    }

    #[test]
    fn tree_metric_with_tree_embedding_is_recovered_exactly() {
        let space = star_metric();
        let star = MetricGraph::new(4, vec![(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]).unwrap();
        let out = space
            .tree_approx(Some(&star), None, MfMode::Exact)
            .unwrap();
        assert_eq!(out.report.distortion, 0.0);
        assert_eq!(out.report.four_point_defect, 0.0);
        assert!(out.report.ok);
        assert!(out.tree_metric.linf_distance(space.distances()) <= 1e-12);
    }

    #[test]
    fn complete_embedding_of_a_star_merges_the_leaves() {
        // shortcut edges of the complete graph acquire apex points that
        // merge the leaves, so the default embedding distorts a star by 2
        // while still honoring its certified bound
        let space = star_metric();
        let out = space.tree_approx(None, None, MfMode::Exact).unwrap();
        assert_eq!(out.report.distortion, 2.0);
        assert!(out.report.ok);
    }

    #[test]
    fn cycle_with_cycle_embedding() {
        let space = cycle_metric();
        let emb = MetricGraph::new(4, vec![(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])
            .unwrap();
        let out = space.tree_approx(Some(&emb), Some(0), MfMode::Exact).unwrap();
        assert_eq!(out.report.distortion, 2.0);
        assert!(out.report.distortion <= out.report.graph.bound_graph);
        assert_eq!(out.report.graph.bound_graph, 6.0);
        assert!(out.report.ok);
        assert_eq!(out.report.collapsed_pairs, 1); // a and c collapse
    }

    #[test]
    fn non_isometric_embedding_rejected() {
        let space = cycle_metric();
        let emb = MetricGraph::new(4, vec![(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 9.0)])
            .unwrap();
        assert!(matches!(
            space.tree_approx(Some(&emb), Some(0), MfMode::Exact),
            Err(MetricError::NotIsometric { .. })
        ));
    }

    #[test]
    fn base_sweep_picks_minimal_bound(){
        let space = cycle_metric();
        let out = space.tree_approx(None, None, MfMode::Exact).unwrap();
        assert_eq!(out.report.sweep.len(), 4);
        let min = out
            .report
            .sweep
            .iter()
            .map(|e| e.bound)
            .fold(f64::INFINITY, f64::min);
        assert_eq!(out.report.graph.poset.bound, min);
        assert!(out.report.ok);
    }
}
