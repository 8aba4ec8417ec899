//! Dense symmetric distance matrices and exact hyperbolicity scans.

use alloc::vec;
use alloc::vec::Vec;

use crate::fabs;

/// Symmetric matrix of pairwise distances, stored dense.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<f64>,
}

impl DistanceMatrix {
    pub fn zeros(n: usize) -> Self {
        DistanceMatrix {
            n,
            d: vec![0.0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "distance matrix must be square");
            for (j, &v) in row.iter().enumerate() {
                m.d[i * n + j] = v;
            }
        }
        m
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.d[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.d[i * self.n + j] = v;
        self.d[j * self.n + i] = v;
    }

    /// Largest absolute entrywise difference against `other`.
    pub fn linf_distance(&self, other: &DistanceMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        let mut worst = 0.0;
        for (a, b) in self.d.iter().zip(other.d.iter()) {
            let dev = fabs(a - b);
            if dev > worst {
                worst = dev;
            }
        }
        worst
    }

    /// Gromov product g_p(x,y) = (d(p,x) + d(p,y) - d(x,y)) / 2.
    pub fn gromov_product(&self, p: usize, x: usize, y: usize) -> f64 {
        (self.get(p, x) + self.get(p, y) - self.get(x, y)) / 2.0
    }

    /// Exact p-hyperbolicity: the smallest defect over all ordered triples of
    /// the ultrametric-like inequality on Gromov products based at `p`.
    pub fn hyp_base(&self, p: usize) -> f64 {
        let mut worst: f64 = 0.0;
        for x in 0..self.n {
            for y in 0..self.n {
                let gxy = self.gromov_product(p, x, y);
                for z in 0..self.n {
                    let gap = self.gromov_product(p, y, z).min(gxy) - self.gromov_product(p, x, z);
                    if gap > worst {
                        worst = gap;
                    }
                }
            }
        }
        worst
    }

    /// hyp(X) = max over base points of hyp_p(X).
    pub fn hyp(&self) -> f64 {
        (0..self.n).map(|p| self.hyp_base(p)).fold(0.0, f64::max)
    }

    /// Worst violation of the four point condition, zero for tree metrics.
    pub fn four_point_defect(&self) -> f64 {
        self.hyp()
    }
}
