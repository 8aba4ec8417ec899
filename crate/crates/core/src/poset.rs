//! Finite posets and the order-theoretic invariants the approximation bounds
//! depend on: cover relations, merging points, fences, maximal fence length
//! and the first Betti number of the covering graph.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Default element budget for the exact maximal-fence search. The search is
/// worst-case exponential; larger posets should use the Betti bound.
pub const DEFAULT_MF_BUDGET: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    /// The supplied relation contains a cycle, so it is not a partial order.
    NotPartialOrder,
    /// The comparability graph is disconnected (or the poset is empty).
    NotConnected,
    IndexOutOfRange { index: usize, n: usize },
    /// The element sequence is not a fence.
    InvalidFence(&'static str),
    /// Exact fence search refused: poset larger than the budget.
    BudgetExceeded { n: usize, budget: usize },
    /// The 2*betti + 2 fence bound needs a smallest element.
    BoundUnavailable,
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::NotPartialOrder => write!(f, "not a partial order: relation has a cycle"),
            PosetError::NotConnected => write!(f, "poset not connected"),
            PosetError::IndexOutOfRange { index, n } => {
                write!(f, "element index {index} out of range for {n} elements")
            }
            PosetError::InvalidFence(why) => write!(f, "invalid fence: {why}"),
            PosetError::BudgetExceeded { n, budget } => write!(
                f,
                "exact fence search budget exceeded ({n} > {budget} elements), use bound mode"
            ),
            PosetError::BoundUnavailable => {
                write!(f, "fence bound unavailable: poset has no smallest element")
            }
        }
    }
}

impl core::error::Error for PosetError {}

/// How to obtain the maximal fence length M_F.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MfMode {
    /// Exhaustive search over fences, exact but worst-case exponential.
    Exact,
    /// The combinatorial bound 2*betti + 2 (needs a smallest element).
    Bound,
}

impl fmt::Display for MfMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MfMode::Exact => write!(f, "exact"),
            MfMode::Bound => write!(f, "bound"),
        }
    }
}

/// Finite connected poset with precomputed comparability and cover relations.
///
/// Immutable after construction; all queries are pure.
#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
    /// up_covers[x] = elements covering x.
    up_covers: Vec<Vec<usize>>,
    /// down_covers[x] = elements covered by x.
    down_covers: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Poset {
    /// Builds a poset from cover pairs `(x, y)` meaning `x < y`. The relation
    /// is the reflexive-transitive closure; covers are recomputed as the
    /// transitive reduction, so redundant input pairs are dropped.
    pub fn from_covers(cover_pairs: &[(usize, usize)], n: usize) -> Result<Poset, PosetError> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(x, y) in cover_pairs {
            for &i in &[x, y] {
                if i >= n {
                    return Err(PosetError::IndexOutOfRange { index: i, n });
                }
            }
            if x == y {
                return Err(PosetError::NotPartialOrder);
            }
            leq[x * n + y] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_leq(leq, n)
    }

    /// Builds a poset from a full relation matrix (row-major, `leq[x*n+y]`
    /// means `x <= y`). Validates the partial order axioms and connectivity.
    pub fn from_leq(leq: Vec<bool>, n: usize) -> Result<Poset, PosetError> {
        assert_eq!(leq.len(), n * n);
        if n == 0 {
            return Err(PosetError::NotConnected);
        }
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(PosetError::NotPartialOrder);
            }
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(PosetError::NotPartialOrder);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !leq[i * n + j] {
                    continue;
                }
                for k in 0..n {
                    if leq[j * n + k] && !leq[i * n + k] {
                        return Err(PosetError::NotPartialOrder);
                    }
                }
            }
        }
        // Transitive reduction: y covers x iff x < y with nothing between.
        let mut up_covers = vec![Vec::new(); n];
        let mut down_covers = vec![Vec::new(); n];
        for x in 0..n {
            'pair: for y in 0..n {
                if x == y || !leq[x * n + y] {
                    continue;
                }
                for z in 0..n {
                    if z != x && z != y && leq[x * n + z] && leq[z * n + y] {
                        continue 'pair;
                    }
                }
                up_covers[x].push(y);
                down_covers[y].push(x);
            }
        }
        let poset = Poset {
            n,
            leq,
            up_covers,
            down_covers,
            labels: None,
        };
        if !poset.comparability_connected() {
            return Err(PosetError::NotConnected);
        }
        Ok(poset)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Poset {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[x].as_str())
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Elements covering `x`.
    pub fn up_covers(&self, x: usize) -> &[usize] {
        &self.up_covers[x]
    }

    /// Elements covered by `x`.
    pub fn down_covers(&self, x: usize) -> &[usize] {
        &self.down_covers[x]
    }

    /// iota(x): the number of elements covered by x.
    pub fn iota(&self, x: usize) -> usize {
        self.down_covers[x].len()
    }

    /// Elements covering more than one element.
    pub fn merging_points(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.iota(x) > 1).collect()
    }

    /// A poset is a tree iff it has no merging point. With a smallest
    /// element this is further equivalent to the covering graph being
    /// acyclic; without one the acyclic direction can fail (the vee
    /// a < b > c has Betti number 0 but merges at b).
    pub fn is_tree(&self) -> bool {
        let by_merging = self.merging_points().is_empty();
        if self.smallest_element().is_some() {
            debug_assert_eq!(by_merging, self.betti_covering() == 0);
        } else {
            // a tree always has a smallest element
            debug_assert!(!by_merging || self.n == 0);
        }
        by_merging
    }

    /// Directed cover edges `(x, y)` with y covering x (the Hasse diagram).
    pub fn covering_graph(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for x in 0..self.n {
            for &y in &self.up_covers[x] {
                edges.push((x, y));
            }
        }
        edges
    }

    pub fn smallest_element(&self) -> Option<usize> {
        (0..self.n).find(|&m| (0..self.n).all(|x| self.leq(m, x)))
    }

    /// First Betti number of the covering graph via Euler's formula
    /// 1 - V + E. When a smallest element exists this agrees with the
    /// merging-point sum, which is asserted.
    pub fn betti_covering(&self) -> usize {
        let edges: usize = (0..self.n).map(|x| self.iota(x)).sum();
        let euler = 1 + edges - self.n;
        if self.smallest_element().is_some() {
            let by_merging: usize = (0..self.n)
                .filter(|&x| self.iota(x) >= 1)
                .map(|x| self.iota(x) - 1)
                .sum();
            assert_eq!(euler, by_merging, "Euler and merging-point Betti disagree");
        }
        euler
    }

    /// First Betti number as the merging-point sum; only valid with a
    /// smallest element.
    pub fn betti_by_merging(&self) -> Option<usize> {
        self.smallest_element().map(|_| {
            (0..self.n)
                .filter(|&x| self.iota(x) >= 1)
                .map(|x| self.iota(x) - 1)
                .sum()
        })
    }

    /// Neighbors in the comparability graph.
    pub fn comparability_neighbors(&self, x: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&y| y != x && self.comparable(x, y))
            .collect()
    }

    fn comparability_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in 0..self.n {
                if !seen[y] && y != x && self.comparable(x, y) {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n
    }

    /// Adjoins a virtual bottom element below everything; the new element has
    /// index `n`. Used to make the Betti fence bound applicable to posets
    /// without a smallest element.
    pub fn adjoin_bottom(&self) -> Poset {
        let n = self.n + 1;
        let mut leq = vec![false; n * n];
        for x in 0..self.n {
            for y in 0..self.n {
                leq[x * n + y] = self.leq(x, y);
            }
        }
        for y in 0..n {
            leq[self.n * n + y] = true;
        }
        Poset::from_leq(leq, n).expect("adjoining a bottom preserves the axioms")
    }

    /// Maximal fence length M_F with the default search budget.
    pub fn max_fence_length(&self, mode: MfMode) -> Result<usize, PosetError> {
        self.max_fence_length_with_budget(mode, DEFAULT_MF_BUDGET)
    }

    /// Maximal fence length M_F. Exact mode searches induced paths of the
    /// comparability graph; bound mode returns 2*betti + 2 and needs a
    /// smallest element. Exact never exceeds the bound.
    pub fn max_fence_length_with_budget(
        &self,
        mode: MfMode,
        budget: usize,
    ) -> Result<usize, PosetError> {
        match mode {
            MfMode::Bound => {
                if self.smallest_element().is_none() {
                    return Err(PosetError::BoundUnavailable);
                }
                Ok(2 * self.betti_covering() + 2)
            }
            MfMode::Exact => {
                if self.n > budget {
                    return Err(PosetError::BudgetExceeded { n: self.n, budget });
                }
                Ok(self.longest_fence())
            }
        }
    }

    /// DFS over induced paths of the comparability graph. A fence is exactly
    /// a sequence with consecutive elements comparable and all other pairs
    /// incomparable (the zigzag alternation is forced by transitivity).
    fn longest_fence(&self) -> usize {
        let cap = self
            .smallest_element()
            .map(|_| 2 * self.betti_covering() + 2);
        let mut best = 0;
        let mut path = Vec::with_capacity(self.n);
        let mut in_path = vec![false; self.n];
        for start in 0..self.n {
            path.push(start);
            in_path[start] = true;
            self.fence_dfs(&mut path, &mut in_path, &mut best, cap);
            in_path[start] = false;
            path.pop();
            if Some(best) == cap {
                break;
            }
        }
        best
    }

    fn fence_dfs(
        &self,
        path: &mut Vec<usize>,
        in_path: &mut [bool],
        best: &mut usize,
        cap: Option<usize>,
    ) {
        if Some(*best) == cap {
            return;
        }
        let last = *path.last().unwrap();
        'next: for c in 0..self.n {
            if in_path[c] || !self.comparable(last, c) {
                continue;
            }
            for &earlier in &path[..path.len() - 1] {
                if self.comparable(earlier, c) {
                    continue 'next;
                }
            }
            path.push(c);
            in_path[c] = true;
            if path.len() - 1 > *best {
                *best = path.len() - 1;
            }
            self.fence_dfs(path, in_path, best, cap);
            in_path[c] = false;
            path.pop();
        }
    }
}

/// A fence: a zigzag of distinct elements, consecutive ones comparable and
/// all other pairs incomparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fence {
    elements: Vec<usize>,
}

impl Fence {
    pub fn new(elements: Vec<usize>, poset: &Poset) -> Result<Fence, PosetError> {
        if elements.is_empty() {
            return Err(PosetError::InvalidFence("empty element sequence"));
        }
        for &x in &elements {
            if x >= poset.len() {
                return Err(PosetError::IndexOutOfRange {
                    index: x,
                    n: poset.len(),
                });
            }
        }
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                if elements[i] == elements[j] {
                    return Err(PosetError::InvalidFence("repeated element"));
                }
                let comparable = poset.comparable(elements[i], elements[j]);
                if j == i + 1 && !comparable {
                    return Err(PosetError::InvalidFence("consecutive elements incomparable"));
                }
                if j > i + 1 && comparable {
                    return Err(PosetError::InvalidFence("non-consecutive elements comparable"));
                }
            }
        }
        Ok(Fence { elements })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Element count minus one.
    pub fn length(&self) -> usize {
        self.elements.len() - 1
    }

    /// A fence of length l forces at least floor((l-1)/2) merging points in
    /// the ambient poset.
    pub fn merging_lower_bound(&self) -> usize {
        self.length().saturating_sub(1) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vee() -> Poset {
        // a < b > c
        Poset::from_covers(&[(0, 1), (2, 1)], 3).unwrap()
    }

    fn chain3() -> Poset {
        Poset::from_covers(&[(0, 1), (1, 2)], 3).unwrap()
    }

    /// Poset of the unit 4-cycle p-a-b-c under <=_p: p < a < b, p < c < b.
    fn c4() -> Poset {
        Poset::from_covers(&[(0, 1), (1, 2), (0, 3), (3, 2)], 4).unwrap()
    }

    #[test]
    fn redundant_cover_dropped_by_reduction() {
        let p = Poset::from_covers(&[(0, 1), (1, 2), (0, 2)], 3).unwrap();
        assert_eq!(p.covering_graph(), vec![(0, 1), (1, 2)]);
        assert!(p.lt(0, 2));
    }

    #[test]
    fn two_cycle_rejected() {
        assert_eq!(
            Poset::from_covers(&[(0, 1), (1, 0)], 2).unwrap_err(),
            PosetError::NotPartialOrder
        );
    }

    #[test]
    fn disconnected_rejected() {
        assert_eq!(
            Poset::from_covers(&[(0, 1)], 4).unwrap_err(),
            PosetError::NotConnected
        );
    }

    #[test]
    fn merging_points_examples() {
        assert_eq!(vee().merging_points(), vec![1]);
        assert!(chain3().merging_points().is_empty());
        assert_eq!(c4().merging_points(), vec![2]);
    }

    #[test]
    fn tree_checks() {
        assert!(chain3().is_tree());
        assert!(!vee().is_tree());
        // wedge a > b < c: b is the smallest element, nothing merges
        let wedge = Poset::from_covers(&[(1, 0), (1, 2)], 3).unwrap();
        assert!(wedge.is_tree());
    }

    #[test]
    fn covering_graph_examples() {
        assert_eq!(chain3().covering_graph(), vec![(0, 1), (1, 2)]);
        assert_eq!(vee().covering_graph(), vec![(0, 1), (2, 1)]);
        assert_eq!(c4().covering_graph(), vec![(0, 1), (0, 3), (1, 2), (3, 2)]);
    }

    #[test]
    fn betti_examples() {
        assert_eq!(chain3().betti_covering(), 0);
        assert_eq!(c4().betti_covering(), 1);
        assert_eq!(c4().betti_by_merging(), Some(1));
    }

    #[test]
    fn fence_lengths() {
        // Chains only admit 2-element fences.
        for len in 2..=6 {
            let covers: Vec<_> = (0..len - 1).map(|i| (i, i + 1)).collect();
            let chain = Poset::from_covers(&covers, len).unwrap();
            assert_eq!(chain.max_fence_length(MfMode::Exact).unwrap(), 1);
        }
        assert_eq!(c4().max_fence_length(MfMode::Exact).unwrap(), 2);
        assert_eq!(c4().max_fence_length(MfMode::Bound).unwrap(), 4);
    }

    #[test]
    fn single_element_poset() {
        let p = Poset::from_covers(&[], 1).unwrap();
        assert!(p.is_tree());
        assert_eq!(p.betti_covering(), 0);
        assert_eq!(p.max_fence_length(MfMode::Exact).unwrap(), 0);
    }

    #[test]
    fn bound_unavailable_without_minimum() {
        // the vee a < b > c has two minimal elements
        let vee = Poset::from_covers(&[(0, 1), (2, 1)], 3).unwrap();
        assert_eq!(
            vee.max_fence_length(MfMode::Bound).unwrap_err(),
            PosetError::BoundUnavailable
        );
        let with_bottom = vee.adjoin_bottom();
        assert!(with_bottom.smallest_element().is_some());
        assert!(with_bottom.max_fence_length(MfMode::Bound).is_ok());
    }

    #[test]
    fn fence_validation() {
        let p = c4();
        let f = Fence::new(vec![1, 2, 3], &p).unwrap();
        assert_eq!(f.length(), 2);
        assert_eq!(f.merging_lower_bound(), 0);
        assert!(Fence::new(vec![0, 1, 2], &p).is_err()); // chain, 0 and 2 comparable
        assert!(Fence::new(vec![1, 3], &p).is_err()); // incomparable consecutive
    }

    #[test]
    fn budget_exceeded() {
        let covers: Vec<_> = (0..41).map(|i| (i, i + 1)).collect();
        let chain = Poset::from_covers(&covers, 42).unwrap();
        assert!(matches!(
            chain.max_fence_length(MfMode::Exact),
            Err(PosetError::BudgetExceeded { .. })
        ));
    }
}
