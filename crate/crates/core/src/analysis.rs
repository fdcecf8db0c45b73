//! Structural analysis: independence number, matching number, small core
//! subgraphs that preserve the independence number, and degree-minimal
//! spanning trees.
//!
//! All exact searches are exponential and guarded by a configurable vertex
//! cap; they are intended for desk-scale instances.

use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, mask_to_vec, vec_to_mask, Graph};
use serde::{Deserialize, Serialize};

/// Default guard for the exponential searches.
pub const DEFAULT_VERTEX_CAP: usize = 25;

/// Above this order the spanning-tree search switches from exact
/// enumeration to local search.
pub const EXACT_TREE_CAP: usize = 12;

/// Hard limit for the matching bitmask DP (memo table is `2^n` bytes).
const MATCHING_DP_CAP: usize = 25;

/// Caps for the exponential searches. `vertex_cap` guards the independence
/// computations; `subgraph_cap` guards the subset search for a minimum
/// independence-preserving subgraph, which is the costliest step and may be
/// tightened independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisLimits {
    pub vertex_cap: usize,
    pub subgraph_cap: usize,
}

impl Default for AnalysisLimits {
    fn default() -> Self {
        AnalysisLimits {
            vertex_cap: DEFAULT_VERTEX_CAP,
            subgraph_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl AnalysisLimits {
    pub fn with_cap(cap: usize) -> Self {
        AnalysisLimits {
            vertex_cap: cap,
            subgraph_cap: cap,
        }
    }
}

fn cap_check(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Independence number

/// Greedy clique cover of `pool`; the number of cliques is an upper bound
/// on the independence number of the induced subgraph.
fn clique_cover_bound(adj: &[u64], mut pool: u64) -> usize {
    let mut cliques = 0;
    while pool != 0 {
        let v = pool.trailing_zeros() as usize;
        pool &= !bit(v);
        cliques += 1;
        // Grow a clique around v greedily; `common` holds candidates
        // adjacent to every member picked so far.
        let mut common = adj[v] & pool;
        while common != 0 {
            let u = common.trailing_zeros() as usize;
            pool &= !bit(u);
            common &= adj[u];
        }
    }
    cliques
}

fn alpha_rec(adj: &[u64], mut pool: u64, mut current: usize, best: &mut usize) {
    // Reductions: vertices of pool-degree 0 are always taken; a vertex of
    // pool-degree 1 can be taken greedily (some maximum set contains it).
    loop {
        let mut isolated = 0u64;
        let mut deg1: Option<usize> = None;
        let mut p = pool;
        while p != 0 {
            let v = p.trailing_zeros() as usize;
            p &= p - 1;
            let nb = adj[v] & pool;
            if nb == 0 {
                isolated |= bit(v);
            } else if deg1.is_none() && nb.count_ones() == 1 {
                deg1 = Some(v);
            }
        }
        if isolated != 0 {
            current += isolated.count_ones() as usize;
            pool &= !isolated;
            continue;
        }
        if let Some(v) = deg1 {
            current += 1;
            pool &= !(adj[v] | bit(v));
            continue;
        }
        break;
    }
    if pool == 0 {
        if current > *best {
            *best = current;
        }
        return;
    }
    if current + clique_cover_bound(adj, pool) <= *best {
        return;
    }
    // Branch on a vertex of maximum pool-degree.
    let mut pivot = 0;
    let mut pivot_deg = 0;
    let mut p = pool;
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        p &= p - 1;
        let d = (adj[v] & pool).count_ones() as usize;
        if d >= pivot_deg {
            // `>=` keeps the largest id among ties irrelevant; either works.
            if d > pivot_deg {
                pivot = v;
                pivot_deg = d;
            }
        }
    }
    alpha_rec(adj, pool & !(adj[pivot] | bit(pivot)), current + 1, best);
    alpha_rec(adj, pool & !bit(pivot), current, best);
}

/// Exact independence number of the subgraph induced by `pool`.
pub(crate) fn alpha_mask(adj: &[u64], pool: u64) -> usize {
    let mut best = 0;
    alpha_rec(adj, pool, 0, &mut best);
    best
}

/// Exact independence number of the subgraph of `g` induced by `mask`.
pub fn independence_number_within(g: &Graph, mask: u64, cap: usize) -> Result<usize> {
    cap_check(mask.count_ones() as usize, cap)?;
    let adj: Vec<u64> = (0..g.order()).map(|v| g.neighbor_mask(v)).collect();
    Ok(alpha_mask(&adj, mask & g.full_mask()))
}

/// Exact independence number via branch and bound.
pub fn independence_number(g: &Graph, cap: usize) -> Result<usize> {
    cap_check(g.order(), cap)?;
    let adj: Vec<u64> = (0..g.order()).map(|v| g.neighbor_mask(v)).collect();
    Ok(alpha_mask(&adj, g.full_mask()))
}

/// Lexicographically smallest maximum independent set.
pub fn max_independent_set(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    cap_check(g.order(), cap)?;
    let n = g.order();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let full = g.full_mask();
    let k = alpha_mask(&adj, full);
    let mut chosen = Vec::with_capacity(k);
    let mut forbidden = 0u64;
    let mut need = k;
    for v in 0..n {
        if need == 0 {
            break;
        }
        if forbidden & bit(v) != 0 {
            continue;
        }
        // Candidates for the rest of the set: above v, compatible with
        // everything chosen, and not adjacent to v.
        let future = full & !forbidden & !(adj[v] | bit(v)) & !low_mask(v + 1);
        if 1 + alpha_mask(&adj, future) >= need {
            chosen.push(v);
            forbidden |= adj[v] | bit(v);
            need -= 1;
        }
    }
    debug_assert_eq!(chosen.len(), k);
    Ok(chosen)
}

fn all_mis_rec(adj: &[u64], pool: u64, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    if pool == 0 || cur.len() + clique_cover_bound(adj, pool) < k {
        return;
    }
    let v = pool.trailing_zeros() as usize;
    cur.push(v);
    all_mis_rec(adj, pool & !(adj[v] | bit(v)), k, cur, out);
    cur.pop();
    all_mis_rec(adj, pool & !bit(v), k, cur, out);
}

/// Every maximum independent set, in lexicographic order.
pub fn all_max_independent_sets(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    cap_check(g.order(), cap)?;
    let adj: Vec<u64> = (0..g.order()).map(|v| g.neighbor_mask(v)).collect();
    let full = g.full_mask();
    let k = alpha_mask(&adj, full);
    let mut out = Vec::new();
    if g.order() == 0 {
        out.push(Vec::new());
        return Ok(out);
    }
    all_mis_rec(&adj, full, k, &mut Vec::new(), &mut out);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Matching number

/// Exact maximum matching size via bitmask DP over vertex subsets.
pub fn matching_number(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.order();
    cap_check(n, cap.min(MATCHING_DP_CAP))?;
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let mut memo = vec![-1i8; 1usize << n];

    fn rec(adj: &[u64], memo: &mut [i8], mask: u64) -> i8 {
        if mask == 0 {
            return 0;
        }
        let idx = mask as usize;
        if memo[idx] >= 0 {
            return memo[idx];
        }
        let u = mask.trailing_zeros() as usize;
        let rest = mask & !bit(u);
        let mut best = rec(adj, memo, rest);
        let mut nb = adj[u] & rest;
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let cand = 1 + rec(adj, memo, rest & !bit(v));
            if cand > best {
                best = cand;
            }
        }
        memo[idx] = best;
        best
    }

    Ok(rec(&adj, &mut memo, g.full_mask()) as usize)
}

// ---------------------------------------------------------------------------
// Independence-preserving core subgraphs

/// Repeatedly deletes the smallest vertex whose removal keeps the graph
/// connected and the independence number unchanged. The surviving set `S`
/// induces a subgraph in which every vertex is a cut vertex or essential to
/// the independence number.
pub fn alpha_minimal_reduce(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    cap_check(g.order(), cap)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let target = alpha_mask(&adj, g.full_mask());
    let mut mask = g.full_mask();
    'outer: loop {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let reduced = mask & !bit(v);
            if reduced != 0
                && g.is_connected_within(reduced)
                && alpha_mask(&adj, reduced) == target
            {
                mask = reduced;
                continue 'outer;
            }
        }
        break;
    }
    Ok(mask_to_vec(mask))
}

/// Masks of every maximum independent set.
fn max_independent_set_masks(g: &Graph) -> Vec<u64> {
    let adj: Vec<u64> = (0..g.order()).map(|v| g.neighbor_mask(v)).collect();
    let full = g.full_mask();
    let k = alpha_mask(&adj, full);
    let mut sets = Vec::new();
    if g.order() == 0 {
        return vec![0];
    }
    all_mis_rec(&adj, full, k, &mut Vec::new(), &mut sets);
    sets.iter().map(|s| vec_to_mask(s)).collect()
}

pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] != i + n - k {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Vertex sets (as masks) of the minimum-order connected induced subgraphs
/// whose independence number equals that of `g`, in lexicographic order.
/// When `first_only` is set, stops at the first hit.
fn minimum_alpha_masks(g: &Graph, first_only: bool) -> Vec<u64> {
    let n = g.order();
    if n == 0 {
        return vec![0];
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbor_mask(v)).collect();
    let alpha = alpha_mask(&adj, g.full_mask());
    let mis = max_independent_set_masks(g);
    for k in alpha..=n {
        let mut hits = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mask = idx.iter().fold(0u64, |m, &v| m | bit(v));
            // The induced subgraph keeps alpha iff it contains some maximum
            // independent set of g.
            if mis.iter().any(|&s| s & !mask == 0) && g.is_connected_within(mask) {
                hits.push(mask);
                if first_only {
                    return hits;
                }
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
        if !hits.is_empty() {
            return hits;
        }
    }
    unreachable!("the whole vertex set always qualifies for a connected graph")
}

/// Lexicographically smallest minimum-order connected induced subgraph
/// preserving the independence number.
pub fn minimum_alpha_subgraph(g: &Graph, limits: AnalysisLimits) -> Result<Vec<usize>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    cap_check(g.order(), limits.subgraph_cap)?;
    Ok(mask_to_vec(minimum_alpha_masks(g, true)[0]))
}

/// Every minimum-order connected induced subgraph preserving the
/// independence number, in lexicographic order.
pub fn all_minimum_alpha_subgraphs(g: &Graph, limits: AnalysisLimits) -> Result<Vec<Vec<usize>>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    cap_check(g.order(), limits.subgraph_cap)?;
    Ok(minimum_alpha_masks(g, false)
        .into_iter()
        .map(mask_to_vec)
        .collect())
}

// ---------------------------------------------------------------------------
// Spanning trees of minimum maximum degree

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.0[ra] = rb;
            true
        }
    }
}

/// Lexicographically first spanning tree whose maximum degree is at most
/// `d`, or `None` if there is none.
fn lex_first_bounded_tree(g: &Graph, d: usize) -> Option<Vec<(usize, usize)>> {
    let n = g.order();
    let edges = g.edges();

    fn rec(
        edges: &[(usize, usize)],
        n: usize,
        d: usize,
        idx: usize,
        chosen: &mut Vec<usize>,
        dsu: &Dsu,
        deg: &[usize],
    ) -> bool {
        if chosen.len() == n - 1 {
            return true;
        }
        if idx == edges.len() {
            return false;
        }
        // Feasibility: the chosen forest plus the still-usable later edges
        // must be able to connect everything.
        let mut probe = Dsu(dsu.0.clone());
        let mut comps = n - chosen.len();
        for &(u, v) in &edges[idx..] {
            if deg[u] < d && deg[v] < d && probe.union(u, v) {
                comps -= 1;
            }
        }
        if comps > 1 {
            return false;
        }
        let (u, v) = edges[idx];
        if deg[u] < d && deg[v] < d {
            let mut next = Dsu(dsu.0.clone());
            if next.union(u, v) {
                let mut deg2 = deg.to_vec();
                deg2[u] += 1;
                deg2[v] += 1;
                chosen.push(idx);
                if rec(edges, n, d, idx + 1, chosen, &next, &deg2) {
                    return true;
                }
                chosen.pop();
            }
        }
        rec(edges, n, d, idx + 1, chosen, dsu, deg)
    }

    let mut chosen = Vec::new();
    if rec(
        edges,
        n,
        d,
        0,
        &mut chosen,
        &Dsu::new(n),
        &vec![0usize; n],
    ) {
        Some(chosen.into_iter().map(|i| edges[i]).collect())
    } else {
        None
    }
}

fn lex_greedy_spanning_tree(g: &Graph) -> Vec<(usize, usize)> {
    let mut dsu = Dsu::new(g.order());
    let mut tree = Vec::with_capacity(g.order().saturating_sub(1));
    for &(u, v) in g.edges() {
        if dsu.union(u, v) {
            tree.push((u, v));
        }
    }
    tree
}

/// Local-search fallback for orders above `EXACT_TREE_CAP`: repeatedly move
/// an edge off a maximum-degree vertex when some non-tree edge can reconnect
/// the two sides at lower degrees.
fn local_search_tree(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut tree = lex_greedy_spanning_tree(g);
    loop {
        let mut deg = vec![0usize; n];
        for &(u, v) in &tree {
            deg[u] += 1;
            deg[v] += 1;
        }
        let dmax = deg.iter().copied().max().unwrap_or(0);
        if dmax <= 2 {
            break;
        }
        let mut improved = false;
        'moves: for v in (0..n).filter(|&v| deg[v] == dmax) {
            for ti in 0..tree.len() {
                let (a, b) = tree[ti];
                if a != v && b != v {
                    continue;
                }
                let x = if a == v { b } else { a };
                // Side of x in the tree with edge (v, x) removed.
                let mut side = bit(x);
                let mut frontier = vec![x];
                while let Some(y) = frontier.pop() {
                    for (i, &(p, q)) in tree.iter().enumerate() {
                        if i == ti {
                            continue;
                        }
                        for (s, t) in [(p, q), (q, p)] {
                            if s == y && side & bit(t) == 0 {
                                side |= bit(t);
                                frontier.push(t);
                            }
                        }
                    }
                }
                for &(p, q) in g.edges() {
                    if tree.contains(&(p, q)) {
                        continue;
                    }
                    let (inside, outside) = if side & bit(p) != 0 && side & bit(q) == 0 {
                        (p, q)
                    } else if side & bit(q) != 0 && side & bit(p) == 0 {
                        (q, p)
                    } else {
                        continue;
                    };
                    if outside == v || deg[inside] > dmax - 2 || deg[outside] > dmax - 2 {
                        continue;
                    }
                    tree.remove(ti);
                    tree.push((p, q));
                    tree.sort_unstable();
                    improved = true;
                    break 'moves;
                }
            }
        }
        if !improved {
            break;
        }
    }
    tree.sort_unstable();
    tree
}

/// Spanning tree minimizing the maximum degree. Exact (and lexicographically
/// smallest among optimal trees) up to `EXACT_TREE_CAP` vertices; local
/// search above that.
pub fn min_max_degree_spanning_tree(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.order();
    if n <= 1 {
        return Ok(vec![]);
    }
    if n > EXACT_TREE_CAP {
        return Ok(local_search_tree(g));
    }
    for d in 1..n {
        if let Some(t) = lex_first_bounded_tree(g, d) {
            return Ok(t);
        }
    }
    Err(Error::Internal(
        "no spanning tree found for a connected graph".into(),
    ))
}

// ---------------------------------------------------------------------------
// Tree degree structure

/// Validates that `edges` form a tree; returns `(vertices, degree_of)` with
/// `degree_of` indexed by position in `vertices`.
pub(crate) fn validate_tree(edges: &[(usize, usize)]) -> Result<(Vec<usize>, Vec<usize>)> {
    if edges.is_empty() {
        return Err(Error::NotATree("empty edge set".into()));
    }
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    if edges.len() != verts.len() - 1 {
        return Err(Error::NotATree(format!(
            "{} edges over {} vertices",
            edges.len(),
            verts.len()
        )));
    }
    let pos = |v: usize| verts.binary_search(&v).unwrap();
    let mut dsu = Dsu::new(verts.len());
    let mut deg = vec![0usize; verts.len()];
    for &(u, v) in edges {
        if u == v {
            return Err(Error::NotATree(format!("self-loop at {u}")));
        }
        if !dsu.union(pos(u), pos(v)) {
            return Err(Error::NotATree("contains a cycle".into()));
        }
        deg[pos(u)] += 1;
        deg[pos(v)] += 1;
    }
    Ok((verts, deg))
}

/// For a tree with at most `p` pendant vertices: when the maximum degree
/// exceeds `(p + 3) / 2` the maximum-degree vertex is unique and the second
/// largest degree is at most `max - 2`; returns that vertex. Otherwise
/// returns `None`.
pub fn unique_max_degree(tree_edges: &[(usize, usize)], p: usize) -> Result<Option<usize>> {
    let (verts, deg) = validate_tree(tree_edges)?;
    let pendants = deg.iter().filter(|&&d| d == 1).count();
    if pendants > p {
        return Err(Error::HypothesisViolation(format!(
            "tree has {pendants} pendant vertices, exceeding the stated bound {p}"
        )));
    }
    let dmax = *deg.iter().max().unwrap();
    if 2 * dmax <= p + 3 {
        return Ok(None);
    }
    let maxima: Vec<usize> = verts
        .iter()
        .zip(&deg)
        .filter(|(_, &d)| d == dmax)
        .map(|(&v, _)| v)
        .collect();
    if maxima.len() != 1 {
        return Err(Error::Internal(format!(
            "expected a unique maximum-degree vertex, found {maxima:?}"
        )));
    }
    let second = deg.iter().filter(|&&d| d != dmax).max().copied().unwrap_or(0);
    if second + 2 > dmax {
        return Err(Error::Internal(format!(
            "second-largest tree degree {second} exceeds {} - 2",
            dmax
        )));
    }
    Ok(Some(maxima[0]))
}

/// Components of the subgraph induced by `h_vertices` minus `center`,
/// checked against the spanning tree: each component must be joined to the
/// center by exactly one tree edge, so the component count equals the
/// center's tree degree.
pub fn components_after_center_removal(
    g: &Graph,
    h_vertices: &[usize],
    tree_edges: &[(usize, usize)],
    center: usize,
) -> Result<Vec<Vec<usize>>> {
    let hmask = vec_to_mask(h_vertices);
    if hmask & bit(center) == 0 {
        return Err(Error::InvalidParameter(format!(
            "center {center} is not a vertex of the subgraph"
        )));
    }
    if h_vertices.len() == 1 {
        return Ok(vec![]);
    }
    let (tverts, _) = validate_tree(tree_edges)?;
    if vec_to_mask(&tverts) != hmask {
        return Err(Error::NotATree(
            "tree does not span the subgraph's vertex set".into(),
        ));
    }
    for &(u, v) in tree_edges {
        if !g.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
    }
    let comps = g.components_within(hmask & !bit(center));
    let mut out = Vec::with_capacity(comps.len());
    for comp in comps {
        let joins = tree_edges
            .iter()
            .filter(|&&(u, v)| {
                (u == center && comp & bit(v) != 0) || (v == center && comp & bit(u) != 0)
            })
            .count();
        if joins != 1 {
            return Err(Error::HypothesisViolation(format!(
                "component {:?} is joined to the center by {joins} tree edges, expected exactly 1",
                mask_to_vec(comp)
            )));
        }
        out.push(mask_to_vec(comp));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Combined report

/// Summary of the decomposition used by the plan constructors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StructureReport {
    /// Independence number of the input graph.
    pub alpha: usize,
    /// Lexicographically smallest maximum independent set of the input.
    #[serde(rename = "mis")]
    pub max_independent_set: Vec<usize>,
    /// Vertices of the chosen independence-preserving core subgraph H.
    #[serde(rename = "h_vertices")]
    pub min_subgraph: Vec<usize>,
    /// Spanning tree of H minimizing the maximum degree (original vertex ids).
    #[serde(rename = "tree_edges")]
    pub spanning_tree: Vec<(usize, usize)>,
    /// Maximum degree of the spanning tree.
    #[serde(rename = "delta")]
    pub tree_max_degree: usize,
    /// Unique maximum-degree vertex when the degree condition holds.
    pub center: Option<usize>,
    /// Maximum independent set of H minimizing overlap with the
    /// maximum-degree tree vertices (lexicographic tie-break).
    pub chosen_set: Vec<usize>,
    /// Whether H came from the exact minimum search rather than the
    /// deletion-based fallback.
    pub h_exact: bool,
}

/// Runs the full decomposition pipeline on a connected graph.
pub fn analyze(g: &Graph, limits: AnalysisLimits) -> Result<StructureReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let alpha = independence_number(g, limits.vertex_cap)?;
    let mis = max_independent_set(g, limits.vertex_cap)?;
    let (h, h_exact) = match minimum_alpha_subgraph(g, limits) {
        Ok(h) => (h, true),
        Err(Error::CapExceeded { .. }) => (alpha_minimal_reduce(g, limits.vertex_cap)?, false),
        Err(e) => return Err(e),
    };
    let (hg, map) = g.induced_subgraph(&h)?;
    let tree_local = min_max_degree_spanning_tree(&hg)?;
    let mut spanning_tree: Vec<(usize, usize)> = tree_local
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (map[u], map[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    spanning_tree.sort_unstable();
    let tree_max_degree = tree_degree_map(&spanning_tree, &h)
        .into_iter()
        .max()
        .unwrap_or(0);
    let center = if spanning_tree.is_empty() {
        None
    } else {
        unique_max_degree(&spanning_tree, alpha)?
    };
    let chosen_set = choose_independent_set(g, &h, &spanning_tree, limits.vertex_cap)?;
    Ok(StructureReport {
        alpha,
        max_independent_set: mis,
        min_subgraph: h,
        spanning_tree,
        tree_max_degree,
        center,
        chosen_set,
        h_exact,
    })
}

/// Degrees within `tree_edges` for each member of `verts` (same order).
pub(crate) fn tree_degree_map(tree_edges: &[(usize, usize)], verts: &[usize]) -> Vec<usize> {
    verts
        .iter()
        .map(|&v| {
            tree_edges
                .iter()
                .filter(|&&(a, b)| a == v || b == v)
                .count()
        })
        .collect()
}

/// Maximum independent set of the subgraph induced by `h`, minimizing the
/// overlap with the maximum-degree vertices of the tree; lexicographically
/// smallest among minimizers. Ids are in terms of the original graph.
pub(crate) fn choose_independent_set(
    g: &Graph,
    h: &[usize],
    tree_edges: &[(usize, usize)],
    cap: usize,
) -> Result<Vec<usize>> {
    let (hg, map) = g.induced_subgraph(h)?;
    let sets = all_max_independent_sets(&hg, cap)?;
    let degs = tree_degree_map(tree_edges, h);
    let dmax = degs.iter().copied().max().unwrap_or(0);
    let heavy: Vec<usize> = h
        .iter()
        .zip(&degs)
        .filter(|(_, &d)| d == dmax && dmax > 0)
        .map(|(&v, _)| v)
        .collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for s in sets {
        let mapped: Vec<usize> = s.iter().map(|&v| map[v]).collect();
        let overlap = mapped.iter().filter(|v| heavy.contains(v)).count();
        if best.as_ref().is_none_or(|(o, _)| overlap < *o) {
            best = Some((overlap, mapped));
        }
    }
    Ok(best.expect("a maximum independent set always exists").1)
}
