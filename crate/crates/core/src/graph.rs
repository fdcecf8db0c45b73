//! Undirected simple graphs on dense vertex ids 0..n-1, plus edge colorings.
//!
//! Vertex sets and neighborhoods are represented as `u64` bitsets, which
//! caps the order at 64; the search routines in this crate are only meant
//! for desk-scale instances well below that.

use crate::error::{Error, Result};

/// Hard upper bound on the number of vertices (bitset width).
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Bitmask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}

/// An immutable simple graph. Edges are stored canonically as `(min, max)`
/// pairs sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoints may appear in either
    /// order; self-loops, duplicates, and out-of-range endpoints are errors.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({a}, {b}) out of range for order {n}"
                )));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &canon {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph {
            n,
            edges: canon,
            adj,
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Canonical sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Index of edge `(u, v)` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    /// Neighborhood of `u` as a bitset.
    pub fn neighbor_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    /// Neighbors of `u` in ascending order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[u])
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    /// Bitset of all vertices.
    pub fn full_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Vertices of the component of `start` inside `mask`, as a bitset.
    /// `start` must be a member of `mask`.
    pub(crate) fn component_mask(&self, mask: u64, start: usize) -> u64 {
        debug_assert!(mask & bit(start) != 0);
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & mask & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Whether the subgraph induced by `mask` is connected (vacuously true
    /// for at most one vertex).
    pub fn is_connected_within(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        self.component_mask(mask, start) == mask
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.full_mask())
    }

    /// Connected components as bitsets, ordered by smallest member.
    pub fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut rest = mask;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let comp = self.component_mask(rest, start);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(self.full_mask())
            .into_iter()
            .map(|m| BitIter(m).collect())
            .collect()
    }

    /// Subgraph induced by `verts` (deduplicated, sorted). Returns the new
    /// graph together with the mapping from new ids to original ids.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut map: Vec<usize> = verts.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&v) = map.iter().find(|&&v| v >= self.n) {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} out of range for order {}",
                self.n
            )));
        }
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if back[u] != usize::MAX && back[v] != usize::MAX {
                edges.push((back[u], back[v]));
            }
        }
        let g = Graph::new(map.len(), edges)?;
        Ok((g, map))
    }

    /// Parses the edge-list format: a header line `n m` followed by `m`
    /// lines `u v`. Diagnostics carry 1-based line numbers.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate();
        let (idx, header) = lines
            .next()
            .ok_or(Error::MalformedHeader { line: 1 })
            .map(|(i, l)| (i + 1, l))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::MalformedHeader { line: idx })?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(Error::MalformedHeader { line: idx })?;
        if it.next().is_some() {
            return Err(Error::MalformedHeader { line: idx });
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }

        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
        let mut seen = std::collections::HashSet::new();
        for (i, raw) in lines {
            let line = i + 1;
            if edges.len() == m {
                if raw.trim().is_empty() {
                    continue;
                }
                return Err(Error::TrailingContent { line, expected: m });
            }
            let mut toks = raw.split_whitespace();
            let (a, b) = match (toks.next(), toks.next(), toks.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(Error::MalformedEdgeLine { line }),
            };
            let a: usize = a
                .parse()
                .map_err(|_| Error::MalformedEdgeLine { line })?;
            let b: usize = b
                .parse()
                .map_err(|_| Error::MalformedEdgeLine { line })?;
            for &v in &[a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { line, vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { line, vertex: a });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge {
                    line,
                    u: e.0,
                    v: e.1,
                });
            }
            edges.push(e);
        }
        if edges.len() < m {
            return Err(Error::MissingEdges {
                expected: m,
                found: edges.len(),
            });
        }
        Graph::new(n, edges)
    }

    /// Canonical edge-list text: header, then edges sorted by `(u, v)`,
    /// LF line endings.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Iterator over the set bits of a `u64`, ascending.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    BitIter(mask).collect()
}

pub(crate) fn vec_to_mask(verts: &[usize]) -> u64 {
    verts.iter().fold(0u64, |m, &v| m | bit(v))
}

/// A total edge coloring over a base graph. Color 1 is the original color;
/// recoloring uses new colors 2, 3, ... .
#[derive(Debug, Clone)]
pub struct EdgeColoring<'g> {
    graph: &'g Graph,
    colors: Vec<u32>,
}

/// The color every edge starts with.
pub const BASE_COLOR: u32 = 1;

impl<'g> EdgeColoring<'g> {
    /// All edges colored with the base color.
    pub fn monochromatic(graph: &'g Graph) -> Self {
        EdgeColoring {
            graph,
            colors: vec![BASE_COLOR; graph.size()],
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn color(&self, u: usize, v: usize) -> Result<u32> {
        self.graph
            .edge_index(u, v)
            .map(|i| self.colors[i])
            .ok_or(Error::NotAnEdge { u, v })
    }

    pub fn set_color(&mut self, u: usize, v: usize, color: u32) -> Result<()> {
        if color == 0 {
            return Err(Error::InvalidParameter("color 0 is reserved".into()));
        }
        let i = self.graph.edge_index(u, v).ok_or(Error::NotAnEdge { u, v })?;
        self.colors[i] = color;
        Ok(())
    }

    #[inline]
    pub(crate) fn color_by_index(&self, edge_index: usize) -> u32 {
        self.colors[edge_index]
    }

    #[inline]
    pub(crate) fn set_color_by_index(&mut self, edge_index: usize, color: u32) {
        self.colors[edge_index] = color;
    }

    /// Edges carrying a non-base color, with their colors, in edge order.
    pub fn recolored_edges(&self) -> Vec<((usize, usize), u32)> {
        self.graph
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, &c)| c != BASE_COLOR)
            .map(|(&e, &c)| (e, c))
            .collect()
    }

    /// Distinct non-base colors in ascending order.
    pub fn palette(&self) -> Vec<u32> {
        let mut p: Vec<u32> = self
            .colors
            .iter()
            .copied()
            .filter(|&c| c != BASE_COLOR)
            .collect();
        p.sort_unstable();
        p.dedup();
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_queries() {
        let g = Graph::new(4, vec![(1, 0), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.max_degree(), 2);
        assert!(g.is_connected());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, vec![(0, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 3)]).is_err());
        assert!(Graph::new(3, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(65, vec![]).is_err());
    }

    #[test]
    fn parses_round_trip() {
        let text = "3 2\n0 1\n1 2\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.to_edge_list(), text);

        // Unsorted input canonicalizes.
        let g2 = Graph::parse("3 2\n1 2\n0 1\n").unwrap();
        assert_eq!(g2.to_edge_list(), text);
    }

    #[test]
    fn parses_single_vertex() {
        let g = Graph::parse("1 0").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.size(), 0);
        assert!(g.is_connected());
    }

    #[test]
    fn parse_diagnostics_name_lines() {
        match Graph::parse("3 2\n0 1\n1 5\n") {
            Err(Error::VertexOutOfRange { line, vertex, n }) => {
                assert_eq!((line, vertex, n), (3, 5, 3));
            }
            other => panic!("expected out-of-range, got {other:?}"),
        }
        match Graph::parse("3 2\n0 1\n0 1\n") {
            Err(Error::DuplicateEdge { line, u, v }) => assert_eq!((line, u, v), (3, 0, 1)),
            other => panic!("expected duplicate, got {other:?}"),
        }
        match Graph::parse("3 2\n0 1\n2 2\n") {
            Err(Error::SelfLoop { line, vertex }) => assert_eq!((line, vertex), (3, 2)),
            other => panic!("expected self-loop, got {other:?}"),
        }
        match Graph::parse("3 1\n0 1\n2 0\n") {
            Err(Error::TrailingContent { line, expected }) => assert_eq!((line, expected), (3, 1)),
            other => panic!("expected trailing content, got {other:?}"),
        }
        match Graph::parse("3 2\n0 1\n") {
            Err(Error::MissingEdges { expected, found }) => assert_eq!((expected, found), (2, 1)),
            other => panic!("expected missing edges, got {other:?}"),
        }
        match Graph::parse("3 2\n0 1\nx y\n") {
            Err(Error::MalformedEdgeLine { line }) => assert_eq!(line, 3),
            other => panic!("expected malformed line, got {other:?}"),
        }
        assert!(matches!(
            Graph::parse("nope"),
            Err(Error::MalformedHeader { line: 1 })
        ));
    }

    #[test]
    fn components_and_induced() {
        let g = Graph::new(5, vec![(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);

        let (h, map) = g.induced_subgraph(&[4, 3, 0]).unwrap();
        assert_eq!(map, vec![0, 3, 4]);
        assert_eq!(h.edges(), &[(1, 2)]);
    }

    #[test]
    fn coloring_basics() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let mut c = EdgeColoring::monochromatic(&g);
        assert_eq!(c.color(0, 1).unwrap(), BASE_COLOR);
        c.set_color(1, 2, 2).unwrap();
        assert_eq!(c.color(2, 1).unwrap(), 2);
        assert_eq!(c.recolored_edges(), vec![((1, 2), 2)]);
        assert_eq!(c.palette(), vec![2]);
        assert!(c.set_color(0, 2, 2).is_err());
    }
}
