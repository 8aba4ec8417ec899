//! Filtered posets, the Reeb poset and Reeb tree quotients, the induced
//! metrics `d_f` and `t_f`, merge values, Gromov products, poset
//! hyperbolicity and the distortion bound 2 * log2(2 * M_F) * hyp.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dist::DistanceMatrix;
use crate::poset::{MfMode, Poset, PosetError};
use crate::{fabs, log2, DEFAULT_TOL};

#[derive(Clone, Debug, PartialEq)]
pub enum ReebError {
    LengthMismatch { expected: usize, got: usize },
    NotFinite { index: usize },
    /// x <= y but f(x) > f(y).
    NotOrderPreserving { x: usize, y: usize },
    /// x < y but f(x) = f(y); the filtration must be strict on a Reeb poset.
    NotStrict { x: usize, y: usize },
    NotATree,
    Poset(PosetError),
}

impl fmt::Display for ReebError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReebError::LengthMismatch { expected, got } => {
                write!(f, "filtration has {got} values, poset has {expected} elements")
            }
            ReebError::NotFinite { index } => {
                write!(f, "filtration value at element {index} is not finite")
            }
            ReebError::NotOrderPreserving { x, y } => {
                write!(f, "filtration not order preserving on pair ({x}, {y})")
            }
            ReebError::NotStrict { x, y } => {
                write!(f, "filtration not strictly order preserving on pair ({x}, {y})")
            }
            ReebError::NotATree => write!(f, "underlying poset is not a tree"),
            ReebError::Poset(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ReebError {}

impl From<PosetError> for ReebError {
    fn from(e: PosetError) -> Self {
        ReebError::Poset(e)
    }
}

/// Surjective order preserving map from a source poset onto a quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    map: Vec<usize>,
    target_len: usize,
}

impl Projection {
    fn new(map: Vec<usize>, target_len: usize) -> Self {
        Projection { map, target_len }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn source_len(&self) -> usize {
        self.map.len()
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &c)| i == c)
    }

    /// Preimages of each target element, in source index order.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.target_len];
        for (x, &c) in self.map.iter().enumerate() {
            fibers[c].push(x);
        }
        fibers
    }
}

/// A poset with an order preserving real filtration.
#[derive(Clone, Debug)]
pub struct FilteredPoset {
    poset: Poset,
    f: Vec<f64>,
}

/// A poset with a strictly order preserving filtration.
#[derive(Clone, Debug)]
pub struct ReebPoset {
    inner: FilteredPoset,
}

/// A Reeb poset whose order is a tree, with parent links toward the root.
#[derive(Clone, Debug)]
pub struct ReebTree {
    reeb: ReebPoset,
    parent: Vec<Option<usize>>,
    root: usize,
}

impl FilteredPoset {
    pub fn new(poset: Poset, f: Vec<f64>) -> Result<FilteredPoset, ReebError> {
        if f.len() != poset.len() {
            return Err(ReebError::LengthMismatch {
                expected: poset.len(),
                got: f.len(),
            });
        }
        for (i, v) in f.iter().enumerate() {
            if !v.is_finite() {
                return Err(ReebError::NotFinite { index: i });
            }
        }
        for x in 0..poset.len() {
            for y in 0..poset.len() {
                if poset.lt(x, y) && f[x] > f[y] {
                    return Err(ReebError::NotOrderPreserving { x, y });
                }
            }
        }
        Ok(FilteredPoset { poset, f })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn f(&self, x: usize) -> f64 {
        self.f[x]
    }

    pub fn filtration(&self) -> &[f64] {
        &self.f
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Reeb poset quotient: collapse connected components of f-constant
    /// comparable pairs; order classes by reachability along comparable
    /// f-nondecreasing steps. The quotient filtration is strict.
    pub fn reeb_poset(&self) -> (ReebPoset, Projection) {
        let n = self.len();
        let mut dsu = Dsu::new(n);
        for x in 0..n {
            for y in x + 1..n {
                if self.poset.comparable(x, y) && self.f[x] == self.f[y] {
                    dsu.union(x, y);
                }
            }
        }
        let (class_of, k) = dsu.compress();
        let mut leq = vec![false; k * k];
        for c in 0..k {
            leq[c * k + c] = true;
        }
        for x in 0..n {
            for y in 0..n {
                if self.poset.leq(x, y) {
                    leq[class_of[x] * k + class_of[y]] = true;
                }
            }
        }
        // closure: comparable steps compose across classes
        for m in 0..k {
            for i in 0..k {
                if leq[i * k + m] {
                    for j in 0..k {
                        if leq[m * k + j] {
                            leq[i * k + j] = true;
                        }
                    }
                }
            }
        }
        let mut poset = Poset::from_leq(leq, k).expect("Reeb quotient is a connected poset");
        if let Some(labels) = quotient_labels(&self.poset, &class_of, k) {
            poset = poset.with_labels(labels);
        }
        let mut f = vec![0.0; k];
        for x in 0..n {
            f[class_of[x]] = self.f[x];
        }
        let rp = ReebPoset::new(FilteredPoset::new(poset, f).expect("quotient f order preserving"))
            .expect("quotient filtration is strict");
        (rp, Projection::new(class_of, k))
    }

    /// Reeb tree quotient (the merge tree of superlevel sets): classes are
    /// components of {f >= v} marked at their level v; order is ancestry.
    ///
    /// Built by sweeping distinct levels in descending order with a
    /// union-find over comparability edges active at the current level.
    pub fn reeb_tree(&self) -> (ReebTree, Projection) {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            self.f[b]
                .partial_cmp(&self.f[a])
                .unwrap()
                .then(a.cmp(&b))
        });

        let mut dsu = Dsu::new(n);
        let mut active = vec![false; n];
        // open node of each component, valid at the dsu root
        let mut open: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut node_f: Vec<f64> = Vec::new();
        let mut node_parent: Vec<Option<usize>> = Vec::new();
        let mut elem_node = vec![usize::MAX; n];

        let mut i = 0;
        while i < order.len() {
            let level = self.f[order[i]];
            let mut level_pts = Vec::new();
            while i < order.len() && self.f[order[i]] == level {
                level_pts.push(order[i]);
                i += 1;
            }
            for &x in &level_pts {
                active[x] = true;
            }
            for &x in &level_pts {
                for y in self.poset.comparability_neighbors(x) {
                    if active[y] {
                        let (ra, rb) = (dsu.find(x), dsu.find(y));
                        if ra != rb {
                            let r = dsu.link(ra, rb);
                            let mut merged = core::mem::take(&mut open[ra]);
                            merged.append(&mut open[rb]);
                            open[r] = merged;
                        }
                    }
                }
            }
            let mut seen_roots: Vec<usize> = Vec::new();
            for &x in &level_pts {
                let r = dsu.find(x);
                let node = if let Some(pos) = seen_roots.iter().position(|&s| s == r) {
                    // another point of this level, same component
                    let _ = pos;
                    *open[r].first().unwrap()
                } else {
                    let node = node_f.len();
                    node_f.push(level);
                    node_parent.push(None);
                    let mut children = core::mem::take(&mut open[r]);
                    children.sort_unstable();
                    for c in children {
                        node_parent[c] = Some(node);
                    }
                    open[r] = vec![node];
                    seen_roots.push(r);
                    node
                };
                elem_node[x] = node;
            }
        }

        let k = node_f.len();
        // nodes were created top-down, so the last node of the sweep is the
        // unique parentless one
        let root = (0..k)
            .find(|&m| node_parent[m].is_none())
            .expect("connected poset yields one root");
        debug_assert!(node_parent.iter().filter(|p| p.is_none()).count() == 1);

        let mut leq = vec![false; k * k];
        for m in 0..k {
            let mut cur = m;
            leq[m * k + m] = true;
            while let Some(p) = node_parent[cur] {
                leq[p * k + m] = true;
                cur = p;
            }
        }
        let mut poset = Poset::from_leq(leq, k).expect("merge tree is a connected poset");
        if let Some(labels) = quotient_labels(&self.poset, &elem_node, k) {
            poset = poset.with_labels(labels);
        }
        let rp = ReebPoset::new(
            FilteredPoset::new(poset, node_f).expect("tree filtration order preserving"),
        )
        .expect("tree filtration is strict");
        let tree = ReebTree {
            reeb: rp,
            parent: node_parent,
            root,
        };
        debug_assert!(tree.reeb.poset().is_tree());
        (tree, Projection::new(elem_node, k))
    }

    /// Merge value of a single pair; see [`FilteredPoset::merge_values`].
    pub fn merge_value(&self, x: usize, y: usize) -> f64 {
        self.merge_values().get(x, y)
    }

    /// All-pairs merge values m_f(x,y): the maximin of f over comparability
    /// paths, i.e. the highest level at which x and y lie in one superlevel
    /// component. Computed by a descending union-find sweep, independently of
    /// the merge tree.
    pub fn merge_values(&self) -> DistanceMatrix {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            self.f[b]
                .partial_cmp(&self.f[a])
                .unwrap()
                .then(a.cmp(&b))
        });
        let mut m = DistanceMatrix::zeros(n);
        for x in 0..n {
            m.set(x, x, self.f[x]);
        }
        let mut dsu = Dsu::new(n);
        let mut active = vec![false; n];
        let mut members: Vec<Vec<usize>> = (0..n).map(|x| vec![x]).collect();
        let mut i = 0;
        while i < order.len() {
            let level = self.f[order[i]];
            let mut level_pts = Vec::new();
            while i < order.len() && self.f[order[i]] == level {
                level_pts.push(order[i]);
                i += 1;
            }
            for &x in &level_pts {
                active[x] = true;
            }
            for &x in &level_pts {
                for y in self.poset.comparability_neighbors(x) {
                    if !active[y] {
                        continue;
                    }
                    let (ra, rb) = (dsu.find(x), dsu.find(y));
                    if ra == rb {
                        continue;
                    }
                    for &a in &members[ra] {
                        for &b in &members[rb] {
                            m.set(a, b, level);
                        }
                    }
                    let r = dsu.link(ra, rb);
                    let other = if r == ra { rb } else { ra };
                    let mut moved = core::mem::take(&mut members[other]);
                    members[r].append(&mut moved);
                }
            }
        }
        m
    }
}

impl ReebPoset {
    pub fn new(inner: FilteredPoset) -> Result<ReebPoset, ReebError> {
        for x in 0..inner.len() {
            for y in 0..inner.len() {
                if inner.poset.lt(x, y) && inner.f[x] >= inner.f[y] {
                    return Err(ReebError::NotStrict { x, y });
                }
            }
        }
        Ok(ReebPoset { inner })
    }

    pub fn filtered(&self) -> &FilteredPoset {
        &self.inner
    }

    pub fn poset(&self) -> &Poset {
        &self.inner.poset
    }

    pub fn f(&self, x: usize) -> f64 {
        self.inner.f[x]
    }

    pub fn filtration(&self) -> &[f64] {
        &self.inner.f
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    /// The Reeb metric d_f: all-pairs shortest paths in the comparability
    /// graph with edge weight |f(u) - f(v)|.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.len();
        let mut d = DistanceMatrix::zeros(n);
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    let w = if self.poset().comparable(x, y) {
                        fabs(self.f(x) - self.f(y))
                    } else {
                        f64::INFINITY
                    };
                    d.set(x, y, w);
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = d.get(i, k) + d.get(k, j);
                    if via < d.get(i, j) {
                        d.set(i, j, via);
                    }
                }
            }
        }
        d
    }

    /// Gromov product for Reeb posets: (f(x) + f(y) - d_f(x,y)) / 2.
    pub fn gromov_product(&self, d: &DistanceMatrix, x: usize, y: usize) -> f64 {
        (self.f(x) + self.f(y) - d.get(x, y)) / 2.0
    }

    /// Poset hyperbolicity: the minimal eps >= 0 with
    /// g(x,z) >= min(g(x,y), g(y,z)) - eps over all ordered triples.
    pub fn hyperbolicity(&self) -> f64 {
        self.hyperbolicity_with(&self.distance_matrix())
    }

    pub fn hyperbolicity_with(&self, d: &DistanceMatrix) -> f64 {
        let n = self.len();
        let mut worst: f64 = 0.0;
        for x in 0..n {
            for y in 0..n {
                let gxy = self.gromov_product(d, x, y);
                for z in 0..n {
                    let gap =
                        gxy.min(self.gromov_product(d, y, z)) - self.gromov_product(d, x, z);
                    if gap > worst {
                        worst = gap;
                    }
                }
            }
        }
        worst
    }

    pub fn reeb_tree(&self) -> (ReebTree, Projection) {
        self.inner.reeb_tree()
    }

    /// Runs the tree approximation and certifies the distortion against
    /// 2 * log2(2 * M_F) * hyp.
    pub fn approximate(&self, mf_mode: MfMode) -> Result<PosetApproximation, ReebError> {
        let d = self.distance_matrix();
        let (tree, projection) = self.reeb_tree();
        let t_tree = tree.metric();
        let n = self.len();
        let mut pulled = DistanceMatrix::zeros(n);
        for x in 0..n {
            for y in x + 1..n {
                pulled.set(x, y, t_tree.get(projection.apply(x), projection.apply(y)));
            }
        }
        let mut distortion = 0.0;
        let mut worst_pair = (0, 0);
        for x in 0..n {
            for y in x + 1..n {
                let dev = fabs(d.get(x, y) - pulled.get(x, y));
                if dev > distortion {
                    distortion = dev;
                    worst_pair = (x, y);
                }
            }
        }
        // proof identity d_f - t_f = 2 (m_f - g_f), recorded per pair
        let m = self.inner.merge_values();
        let mut identity_max_dev = 0.0;
        for x in 0..n {
            for y in 0..n {
                let lhs = d.get(x, y) - pulled.get(x, y);
                let rhs = 2.0 * (m.get(x, y) - self.gromov_product(&d, x, y));
                let dev = fabs(lhs - rhs);
                if dev > identity_max_dev {
                    identity_max_dev = dev;
                }
            }
        }
        let (mf, mf_mode_used, mf_fell_back) = match self.poset().max_fence_length(mf_mode) {
            Ok(v) => (v, mf_mode, false),
            Err(PosetError::BudgetExceeded { .. }) => {
                (self.poset().max_fence_length(MfMode::Bound)?, MfMode::Bound, true)
            }
            Err(e) => return Err(e.into()),
        };
        let hyp_f = self.hyperbolicity_with(&d);
        let bound = if hyp_f == 0.0 {
            0.0
        } else {
            2.0 * log2(2.0 * mf as f64) * hyp_f
        };
        let ok = distortion <= bound + DEFAULT_TOL;
        Ok(PosetApproximation {
            tree,
            projection,
            pulled_back_metric: pulled,
            report: PosetApproxReport {
                distortion,
                hyp_f,
                mf,
                mf_mode: mf_mode_used,
                mf_fell_back,
                bound,
                ok,
                identity_max_dev,
                worst_pair,
            },
        })
    }
}

/// Result of the Reeb-poset tree approximation pipeline.
#[derive(Clone, Debug)]
pub struct PosetApproximation {
    pub tree: ReebTree,
    pub projection: Projection,
    /// t_f pulled back to the source elements through the projection.
    pub pulled_back_metric: DistanceMatrix,
    pub report: PosetApproxReport,
}

#[derive(Clone, Debug)]
pub struct PosetApproxReport {
    pub distortion: f64,
    pub hyp_f: f64,
    pub mf: usize,
    pub mf_mode: MfMode,
    pub mf_fell_back: bool,
    pub bound: f64,
    pub ok: bool,
    /// Largest deviation of the identity d_f - t_f = 2 (m_f - g_f).
    pub identity_max_dev: f64,
    pub worst_pair: (usize, usize),
}

impl ReebTree {
    /// Wraps a Reeb poset whose order is a tree; derives parent links and
    /// the root from the cover relation.
    pub fn new(reeb: ReebPoset) -> Result<ReebTree, ReebError> {
        if !reeb.poset().is_tree() {
            return Err(ReebError::NotATree);
        }
        let n = reeb.len();
        let mut parent = vec![None; n];
        for x in 0..n {
            match reeb.poset().down_covers(x) {
                [] => {}
                [p] => parent[x] = Some(*p),
                _ => unreachable!("tree poset has no merging point"),
            }
        }
        let root = reeb
            .poset()
            .smallest_element()
            .expect("a tree poset has a smallest element");
        Ok(ReebTree { reeb, parent, root })
    }

    pub fn reeb(&self) -> &ReebPoset {
        &self.reeb
    }

    pub fn poset(&self) -> &Poset {
        self.reeb.poset()
    }

    pub fn f(&self, x: usize) -> f64 {
        self.reeb.f(x)
    }

    pub fn len(&self) -> usize {
        self.reeb.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reeb.is_empty()
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.parent[x]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn children(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.parent[c] == Some(x)).collect()
    }

    /// p_{x,y}: the maximum of the intersection of the down-chains of x and y.
    pub fn lowest_common_lower_bound(&self, x: usize, y: usize) -> usize {
        let n = self.len();
        let mut on_x_chain = vec![false; n];
        let mut cur = x;
        loop {
            on_x_chain[cur] = true;
            match self.parent[cur] {
                Some(p) => cur = p,
                None => break,
            }
        }
        let mut cur = y;
        while !on_x_chain[cur] {
            cur = self.parent[cur].expect("chains meet at the root");
        }
        cur
    }

    /// Tree metric t_f(x,y) = f(x) + f(y) - 2 f(p_{x,y}).
    pub fn metric(&self) -> DistanceMatrix {
        let n = self.len();
        let mut t = DistanceMatrix::zeros(n);
        for x in 0..n {
            for y in x + 1..n {
                let p = self.lowest_common_lower_bound(x, y);
                t.set(x, y, self.f(x) + self.f(y) - 2.0 * self.f(p));
            }
        }
        t
    }
}

fn quotient_labels(source: &Poset, class_of: &[usize], k: usize) -> Option<Vec<String>> {
    let labels = source.labels()?;
    let mut joined: Vec<String> = vec![String::new(); k];
    for (x, &c) in class_of.iter().enumerate() {
        if !joined[c].is_empty() {
            joined[c].push('+');
        }
        joined[c].push_str(&labels[x]);
    }
    Some(joined)
}

/// Union-find with path halving and union by size.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            ra
        } else {
            self.link(ra, rb)
        }
    }

    /// Links two distinct roots, returning the surviving root.
    fn link(&mut self, ra: usize, rb: usize) -> usize {
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        big
    }

    /// Maps every element to a dense class id, ordered by smallest member.
    fn compress(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut class_of = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            let r = self.find(x);
            if class_of[r] == usize::MAX {
                class_of[r] = next;
                next += 1;
            }
            class_of[x] = class_of[r];
        }
        (class_of, next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vee_021() -> FilteredPoset {
        // a < b > c with f = (0, 2, 1)
        let p = Poset::from_covers(&[(0, 1), (2, 1)], 3).unwrap();
        FilteredPoset::new(p, vec![0.0, 2.0, 1.0]).unwrap()
    }

    fn c4_poset() -> ReebPoset {
        // p < a < b, p < c < b with f = d(p, .) = (0, 1, 2, 1)
        let p = Poset::from_covers(&[(0, 1), (1, 2), (0, 3), (3, 2)], 4).unwrap();
        ReebPoset::new(FilteredPoset::new(p, vec![0.0, 1.0, 2.0, 1.0]).unwrap()).unwrap()
    }

    #[test]
    fn strict_filtration_gives_identity_reeb_poset() {
        let fp = vee_021();
        let (rp, proj) = fp.reeb_poset();
        assert!(proj.is_identity());
        assert_eq!(rp.len(), 3);
    }

    #[test]
    fn constant_comparable_pair_collapses() {
        let p = Poset::from_covers(&[(0, 1), (1, 2)], 3).unwrap();
        let fp = FilteredPoset::new(p, vec![0.0, 0.0, 1.0]).unwrap();
        let (rp, proj) = fp.reeb_poset();
        assert_eq!(rp.len(), 2);
        assert_eq!(proj.apply(0), proj.apply(1));
        assert!(rp.poset().lt(proj.apply(0), proj.apply(2)));
    }

    #[test]
    fn constant_top_of_vee_collapses() {
        // a < b > c with f = (0, 1, 1): b and c merge
        let p = Poset::from_covers(&[(0, 1), (2, 1)], 3).unwrap();
        let fp = FilteredPoset::new(p, vec![0.0, 1.0, 1.0]).unwrap();
        let (rp, proj) = fp.reeb_poset();
        assert_eq!(rp.len(), 2);
        assert_eq!(proj.apply(1), proj.apply(2));
        assert!(rp.poset().lt(proj.apply(0), proj.apply(1)));
    }

    #[test]
    fn reeb_poset_idempotent() {
        let p = Poset::from_covers(&[(0, 1), (1, 2)], 3).unwrap();
        let fp = FilteredPoset::new(p, vec![0.0, 0.0, 1.0]).unwrap();
        let (rp, _) = fp.reeb_poset();
        let (rp2, proj2) = rp.filtered().reeb_poset();
        assert!(proj2.is_identity());
        assert_eq!(rp2.len(), rp.len());
    }

    #[test]
    fn df_examples() {
        let fp = vee_021();
        let (rp, _) = fp.reeb_poset();
        let d = rp.distance_matrix();
        assert_eq!(d.get(0, 1), 2.0); // comparable: |f difference|
        assert_eq!(d.get(1, 2), 1.0);
        assert_eq!(d.get(0, 2), 3.0); // only path a-b-c
        assert_eq!(d.get(0, 0), 0.0);
    }

    #[test]
    fn gromov_product_examples() {
        let fp = vee_021();
        let (rp, _) = fp.reeb_poset();
        let d = rp.distance_matrix();
        assert_eq!(rp.gromov_product(&d, 0, 1), 0.0); // comparable: f(x)
        assert_eq!(rp.gromov_product(&d, 0, 0), 0.0);
        assert_eq!(rp.gromov_product(&d, 0, 2), -1.0);
    }

    #[test]
    fn hyperbolicity_examples() {
        let fp = vee_021();
        let (rp, _) = fp.reeb_poset();
        assert_eq!(rp.hyperbolicity(), 1.0);
        assert_eq!(c4_poset().hyperbolicity(), 1.0);
    }

    #[test]
    fn merge_value_examples() {
        let fp = vee_021();
        assert_eq!(fp.merge_value(0, 0), 0.0);
        assert_eq!(fp.merge_value(0, 1), 0.0); // comparable: f of the bottom
        assert_eq!(fp.merge_value(0, 2), 0.0); // min over the only path a,b,c
        assert_eq!(fp.merge_value(1, 2), 1.0);
    }

    #[test]
    fn c4_reeb_tree_is_three_node_chain() {
        let rp = c4_poset();
        let (tree, proj) = rp.reeb_tree();
        assert_eq!(tree.len(), 3);
        assert_eq!(proj.apply(1), proj.apply(3)); // a ~ c at level 1
        let t = tree.metric();
        assert_eq!(t.get(proj.apply(1), proj.apply(3)), 0.0);
        assert!(tree.poset().is_tree());
    }

    #[test]
    fn vee_straightens_into_chain() {
        // a < b > c, f = (0, 2, 1): tree is the chain a < c < b
        let fp = vee_021();
        let (tree, proj) = fp.reeb_tree();
        assert_eq!(tree.len(), 3);
        let (a, b, c) = (proj.apply(0), proj.apply(1), proj.apply(2));
        assert!(tree.poset().lt(a, c));
        assert!(tree.poset().lt(c, b));
        let t = tree.metric();
        assert_eq!(t.get(a, c), 1.0); // t_f = 0 + 1 - 2*0
    }

    #[test]
    fn tree_of_tree_is_identity() {
        let fp = vee_021();
        let (tree, _) = fp.reeb_tree();
        let (tree2, proj2) = tree.reeb().reeb_tree();
        assert!(proj2.is_identity());
        assert_eq!(tree2.len(), tree.len());
    }

    #[test]
    fn approximate_vee() {
        let fp = vee_021();
        let (rp, _) = fp.reeb_poset();
        let approx = rp.approximate(MfMode::Exact).unwrap();
        let r = &approx.report;
        assert_eq!(r.distortion, 2.0);
        assert_eq!(r.mf, 2);
        assert_eq!(r.hyp_f, 1.0);
        assert_eq!(r.bound, 4.0); // 2 * log2(4) * 1
        assert!(r.ok);
        assert!(r.identity_max_dev <= 1e-12);
    }

    #[test]
    fn approximate_c4() {
        let approx = c4_poset().approximate(MfMode::Exact).unwrap();
        assert_eq!(approx.report.distortion, 2.0);
        assert_eq!(approx.report.bound, 4.0);
        assert!(approx.report.ok);
    }

    #[test]
    fn tree_has_zero_hyperbolicity_and_zero_distortion() {
        let fp = vee_021();
        let (tree, _) = fp.reeb_tree();
        assert_eq!(tree.reeb().hyperbolicity(), 0.0);
        let approx = tree.reeb().approximate(MfMode::Exact).unwrap();
        assert_eq!(approx.report.distortion, 0.0);
        assert_eq!(approx.report.bound, 0.0);
        assert!(approx.report.ok);
    }

    #[test]
    fn non_order_preserving_rejected() {
        let p = Poset::from_covers(&[(0, 1)], 2).unwrap();
        assert!(matches!(
            FilteredPoset::new(p, vec![1.0, 0.0]),
            Err(ReebError::NotOrderPreserving { .. })
        ));
    }

    #[test]
    fn non_strict_rejected_for_reeb_poset() {
        let p = Poset::from_covers(&[(0, 1)], 2).unwrap();
        let fp = FilteredPoset::new(p, vec![1.0, 1.0]).unwrap();
        assert!(matches!(
            ReebPoset::new(fp),
            Err(ReebError::NotStrict { .. })
        ));
    }
}
