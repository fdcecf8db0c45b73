//! Straightforward reference implementations for cross-checking the
//! optimized ones in tests. Everything here favors obviousness over speed:
//! plain subset scans, no pruning tables, no canonicalization.

use crate::graph::{bit, EdgeColoring, Graph};
use std::collections::BTreeSet;

/// Independence number by scanning all vertex subsets.
pub fn alpha_brute(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 20, "subset scan is for tiny graphs");
    let mut best = 0;
    for mask in 0u64..(1 << n) {
        let mut ok = true;
        'pairs: for u in 0..n {
            if mask & bit(u) == 0 {
                continue;
            }
            for v in u + 1..n {
                if mask & bit(v) != 0 && g.has_edge(u, v) {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

fn path_rec(
    coloring: &EdgeColoring,
    target: usize,
    x: usize,
    last: Option<u32>,
    visited: u64,
    path: &mut Vec<usize>,
) -> bool {
    if x == target {
        return true;
    }
    for y in coloring.graph().neighbors(x) {
        if visited & bit(y) != 0 {
            continue;
        }
        let c = coloring.color(x, y).unwrap();
        if last == Some(c) {
            continue;
        }
        path.push(y);
        if path_rec(coloring, target, y, Some(c), visited | bit(y), path) {
            return true;
        }
        path.pop();
    }
    false
}

/// Lexicographically first properly colored simple path, by trying every
/// simple path outright.
pub fn exists_pc_path_brute(coloring: &EdgeColoring, u: usize, v: usize) -> Option<Vec<usize>> {
    assert_ne!(u, v);
    let mut path = vec![u];
    if path_rec(coloring, v, u, None, bit(u), &mut path) {
        Some(path)
    } else {
        None
    }
}

/// Proper connection decided pair by pair with the brute path search.
pub fn properly_connected_brute(coloring: &EdgeColoring) -> bool {
    let n = coloring.graph().order();
    for u in 0..n {
        for v in u + 1..n {
            if exists_pc_path_brute(coloring, u, v).is_none() {
                return false;
            }
        }
    }
    true
}

/// Minimum recoloring cost by trying every coloring outright: for each
/// total t, every edge subset of size at most t and every assignment of
/// colors from {2..=t+1}, kept when the recolored-edges-plus-distinct-colors
/// total lands exactly on t. No symmetry reduction of any kind.
pub fn naive_pc_opt(g: &Graph, budget: usize) -> Option<usize> {
    let m = g.size();
    assert!(m <= 20, "exhaustive coloring scan is for tiny graphs");
    for t in 0..=budget {
        for mask in 0u32..1 << m {
            let p = mask.count_ones() as usize;
            if p > t {
                continue;
            }
            if p == 0 {
                if t == 0 && properly_connected_brute(&EdgeColoring::monochromatic(g)) {
                    return Some(0);
                }
                continue;
            }
            let selected: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            let mut digits = vec![0usize; p];
            loop {
                let mut distinct: Vec<usize> = digits.clone();
                distinct.sort_unstable();
                distinct.dedup();
                if p + distinct.len() == t {
                    let mut coloring = EdgeColoring::monochromatic(g);
                    for (j, &ei) in selected.iter().enumerate() {
                        coloring.set_color_by_index(ei, 2 + digits[j] as u32);
                    }
                    if properly_connected_brute(&coloring) {
                        return Some(t);
                    }
                }
                let mut j = 0;
                while j < p {
                    digits[j] += 1;
                    if digits[j] < t {
                        break;
                    }
                    digits[j] = 0;
                    j += 1;
                }
                if j == p {
                    break;
                }
            }
        }
    }
    None
}

/// All spanning trees, as lexicographically sorted edge lists, found by
/// checking every (n-1)-subset of edges.
pub fn all_spanning_trees(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let m = g.size();
    if n <= 1 {
        return vec![vec![]];
    }
    if m < n - 1 {
        return vec![];
    }
    let mut out = Vec::new();
    let k = n - 1;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let edges: Vec<(usize, usize)> = idx.iter().map(|&i| g.edges()[i]).collect();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            if parent[x] != x {
                parent[x] = find(parent, parent[x]);
            }
            parent[x]
        }
        let mut acyclic = true;
        for &(u, v) in &edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                acyclic = false;
                break;
            }
            parent[ru] = rv;
        }
        if acyclic {
            out.push(edges);
        }
        if !crate::analysis::next_combination(&mut idx, m) {
            break;
        }
    }
    out
}

fn rooted_canon(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut subs: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| rooted_canon(adj, u, v))
        .collect();
    subs.sort();
    format!("({})", subs.concat())
}

fn tree_centers(adj: &[Vec<usize>], n: usize) -> Vec<usize> {
    if n == 1 {
        return vec![0];
    }
    let mut degree: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            for &u in &adj[v] {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// Isomorphism-invariant string form of a tree given by its edges.
pub fn free_tree_canon(edges: &[(usize, usize)], n: usize) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    tree_centers(&adj, n)
        .into_iter()
        .map(|c| rooted_canon(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// One representative per isomorphism class of trees on `n` vertices,
/// grown by attaching a leaf everywhere on each smaller tree and deduping
/// by canonical form.
pub fn free_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n >= 1);
    let mut current: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for k in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &current {
            for v in 0..k - 1 {
                let mut edges = t.clone();
                edges.push((v, k - 1));
                edges.sort_unstable();
                if seen.insert(free_tree_canon(&edges, k)) {
                    next.push(edges);
                }
            }
        }
        current = next;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::independence_number;
    use crate::generate::{generate, Family};
    use crate::oracle::exact_pc_opt;
    use crate::verify;

    #[test]
    fn brute_alpha_agrees_on_small_families() {
        for family in [
            Family::Path(5),
            Family::Cycle(6),
            Family::Star(4),
            Family::Complete(4),
            Family::CompleteBipartite(3, 2),
        ] {
            let g = generate(&family, None).unwrap();
            assert_eq!(
                alpha_brute(&g),
                independence_number(&g, 25).unwrap(),
                "{family:?}"
            );
        }
    }

    #[test]
    fn brute_path_search_matches_pruned_search() {
        let g = generate(&Family::Cycle(5), None).unwrap();
        let mut coloring = EdgeColoring::monochromatic(&g);
        coloring.set_color(1, 2, 2).unwrap();
        coloring.set_color(3, 4, 3).unwrap();
        for u in 0..5 {
            for v in u + 1..5 {
                assert_eq!(
                    exists_pc_path_brute(&coloring, u, v),
                    verify::exists_pc_path(&coloring, u, v).unwrap()
                );
            }
        }
    }

    #[test]
    fn naive_search_matches_oracle_on_small_graphs() {
        for family in [
            Family::Path(4),
            Family::Cycle(5),
            Family::Star(3),
            Family::Complete(4),
        ] {
            let g = generate(&family, None).unwrap();
            let naive = naive_pc_opt(&g, 8);
            let fast = exact_pc_opt(&g, 8).unwrap();
            assert_eq!(naive, fast.value, "{family:?}");
        }
    }

    #[test]
    fn spanning_tree_counts() {
        let c4 = generate(&Family::Cycle(4), None).unwrap();
        assert_eq!(all_spanning_trees(&c4).len(), 4);
        let k4 = generate(&Family::Complete(4), None).unwrap();
        assert_eq!(all_spanning_trees(&k4).len(), 16);
        let p3 = generate(&Family::Path(3), None).unwrap();
        assert_eq!(all_spanning_trees(&p3).len(), 1);
    }

    #[test]
    fn free_tree_counts() {
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(free_trees(i + 1).len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn free_tree_canon_separates_path_from_star() {
        let path = vec![(0, 1), (1, 2), (2, 3)];
        let star = vec![(0, 1), (0, 2), (0, 3)];
        assert_ne!(free_tree_canon(&path, 4), free_tree_canon(&star, 4));
        let relabeled = vec![(0, 2), (1, 2), (1, 3)];
        assert_eq!(free_tree_canon(&path, 4), free_tree_canon(&relabeled, 4));
    }
}
