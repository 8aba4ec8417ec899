//! Definition-level brute-force recomputations of the quotient machinery,
//! used to cross-check the production union-find implementations.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::dist::DistanceMatrix;
use crate::poset::Poset;
use crate::reeb::FilteredPoset;
use crate::reeb::ReebPoset;
use crate::{fabs, DEFAULT_TOL};

/// Path metric d_f by exhaustive simple-path search over the comparability
/// graph with step cost |f(a) - f(b)|. A branch is cut only when its prefix
/// cost strictly exceeds the incumbent at its endpoint, which keeps every
/// optimal prefix alive (subpaths of shortest paths are shortest).
pub fn df_bruteforce(rp: &ReebPoset) -> DistanceMatrix {
    let n = rp.len();
    let mut out = DistanceMatrix::zeros(n);
    for s in 0..n {
        let mut best = vec![f64::INFINITY; n];
        best[s] = 0.0;
        let mut visited = vec![false; n];
        visited[s] = true;
        df_walk(rp, s, 0.0, &mut visited, &mut best);
        for t in 0..n {
            out.set(s, t, best[t]);
        }
    }
    out
}

fn df_walk(rp: &ReebPoset, at: usize, cost: f64, visited: &mut [bool], best: &mut [f64]) {
    for next in rp.poset().comparability_neighbors(at) {
        if visited[next] {
            continue;
        }
        let c = cost + fabs(rp.f(at) - rp.f(next));
        if c > best[next] {
            continue;
        }
        best[next] = c;
        visited[next] = true;
        df_walk(rp, next, c, visited, best);
        visited[next] = false;
    }
}

/// d_f restricted to fences: simple comparability paths whose non-consecutive
/// elements are pairwise incomparable. No pruning, since a prefix bound is
/// not sound under the induced-path constraint.
pub fn df_bruteforce_fences(rp: &ReebPoset) -> DistanceMatrix {
    let n = rp.len();
    let mut out = DistanceMatrix::zeros(n);
    for s in 0..n {
        let mut best = vec![f64::INFINITY; n];
        best[s] = 0.0;
        let mut path = vec![s];
        fence_walk(rp, &mut path, 0.0, &mut best);
        for t in 0..n {
            out.set(s, t, best[t]);
        }
    }
    out
}

fn fence_walk(rp: &ReebPoset, path: &mut Vec<usize>, cost: f64, best: &mut [f64]) {
    let at = *path.last().unwrap();
    'next: for next in rp.poset().comparability_neighbors(at) {
        // a fence extension must be incomparable with everything before `at`
        for &seen in path[..path.len() - 1].iter() {
            if next == seen || rp.poset().comparable(next, seen) {
                continue 'next;
            }
        }
        let c = cost + fabs(rp.f(at) - rp.f(next));
        if c < best[next] {
            best[next] = c;
        }
        path.push(next);
        fence_walk(rp, path, c, best);
        path.pop();
    }
}

/// True when x and y land in the same connected component of the comparability
/// graph restricted to { z : f(z) >= level }.
fn connected_at(fp: &FilteredPoset, level: f64, x: usize, y: usize) -> bool {
    let n = fp.len();
    if fp.f(x) < level || fp.f(y) < level {
        return false;
    }
    let mut seen = vec![false; n];
    let mut queue = vec![x];
    seen[x] = true;
    while let Some(v) = queue.pop() {
        if v == y {
            return true;
        }
        for w in fp.poset().comparability_neighbors(v) {
            if !seen[w] && fp.f(w) >= level {
                seen[w] = true;
                queue.push(w);
            }
        }
    }
    false
}

/// Merge values straight from the definition: m(x, y) is the largest
/// filtration value v such that x and y are connected within { f >= v }.
pub fn merge_values_bruteforce(fp: &FilteredPoset) -> DistanceMatrix {
    let n = fp.len();
    let mut levels: Vec<f64> = fp.filtration().to_vec();
    levels.sort_by(|a, b| b.partial_cmp(a).unwrap());
    levels.dedup();
    let mut out = DistanceMatrix::zeros(n);
    for x in 0..n {
        out.set(x, x, fp.f(x));
        for y in x + 1..n {
            let cap = fp.f(x).min(fp.f(y));
            let m = levels
                .iter()
                .copied()
                .filter(|&v| v <= cap)
                .find(|&v| connected_at(fp, v, x, y))
                .expect("comparability graph is connected");
            out.set(x, y, m);
        }
    }
    out
}

/// Recomputes the merge-tree quotient from its definition (points are
/// superlevel components at each value, ordered by component containment as
/// the level decreases) and compares it pairwise with `reeb_tree`.
pub fn check_reeb_tree(fp: &FilteredPoset) -> Result<(), String> {
    let (tree, pi) = fp.reeb_tree();
    for x in 0..fp.len() {
        if fabs(tree.f(pi.apply(x)) - fp.f(x)) > DEFAULT_TOL {
            return Err(format!("tree changes the filtration value of {x}"));
        }
        for y in 0..fp.len() {
            let (a, b) = (pi.apply(x), pi.apply(y));
            // same tree point <=> equal value and connected at that level
            let same_def =
                fp.f(x) == fp.f(y) && connected_at(fp, fp.f(x), x, y);
            if same_def != (a == b) {
                return Err(format!(
                    "class disagreement at ({x},{y}): definition {same_def}, tree {}",
                    a == b
                ));
            }
            // [x] <= [y] in the tree <=> the component of x at level f(x)
            // swallows y, i.e. they are connected within { f >= f(x) }
            let leq_def = fp.f(x) <= fp.f(y) && connected_at(fp, fp.f(x), x, y);
            if leq_def != tree.poset().leq(a, b) {
                return Err(format!(
                    "order disagreement at ({x},{y}): definition {leq_def}, tree {}",
                    tree.poset().leq(a, b)
                ));
            }
        }
    }
    Ok(())
}

/// Exhaustive longest-fence search used to double-check the budgeted one.
pub fn longest_fence_bruteforce(poset: &Poset) -> usize {
    let n = poset.len();
    let mut best = 0;
    for s in 0..n {
        let mut path = vec![s];
        longest_walk(poset, &mut path, &mut best);
    }
    best
}

fn longest_walk(poset: &Poset, path: &mut Vec<usize>, best: &mut usize) {
    let at = *path.last().unwrap();
    'next: for next in 0..poset.len() {
        if !poset.comparable(at, next) || next == at {
            continue;
        }
        for &seen in path[..path.len() - 1].iter() {
            if next == seen || poset.comparable(next, seen) {
                continue 'next;
            }
        }
        path.push(next);
        *best = (*best).max(path.len() - 1);
        longest_walk(poset, path, best);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::{random_filtered_poset, random_poset, random_reeb_poset, rng_for};
    use crate::poset::MfMode;

    #[test]
    fn df_matches_floyd_warshall_on_samples() {
        let mut rng = rng_for(101);
        for _ in 0..40 {
            let rp = random_reeb_poset(&mut rng, 8);
            assert!(rp.distance_matrix().linf_distance(&df_bruteforce(&rp)) <= 1e-12);
        }
    }

    #[test]
    fn distances_are_realized_by_fences() {
        let mut rng = rng_for(102);
        for _ in 0..40 {
            let rp = random_reeb_poset(&mut rng, 8);
            assert!(rp.distance_matrix().linf_distance(&df_bruteforce_fences(&rp)) <= 1e-12);
        }
    }

    #[test]
    fn merge_values_match() {
        let mut rng = rng_for(103);
        for _ in 0..40 {
            let fp = random_filtered_poset(&mut rng, 8);
            assert!(fp.merge_values().linf_distance(&merge_values_bruteforce(&fp)) <= 1e-12);
        }
    }

    #[test]
    fn tree_quotient_matches_definition() {
        let mut rng = rng_for(104);
        for _ in 0..40 {
            let fp = random_filtered_poset(&mut rng, 8);
            check_reeb_tree(&fp).unwrap();
        }
    }

    #[test]
    fn fence_search_matches_exhaustive() {
        let mut rng = rng_for(105);
        for _ in 0..40 {
            let poset = random_poset(&mut rng, 7);
            let exact = poset.max_fence_length(MfMode::Exact).unwrap();
            assert_eq!(exact, longest_fence_bruteforce(&poset));
        }
    }
}
