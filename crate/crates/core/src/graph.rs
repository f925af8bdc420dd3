//! Simple undirected graphs on the vertex labels `1..=n`.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so `n` is capped at
//! [`MAX_VERTICES`]. Every public method speaks 1-based labels.

use std::fmt;

use crate::bits::{self, ones};
use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A simple graph: no loops, no multiple edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Result of [`Graph::delete_vertices`]: the induced subgraph relabeled to
/// `1..=m`, plus the original label of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `labels[i]` is the original label of vertex `i + 1`.
    pub labels: Vec<usize>,
}

impl Graph {
    /// Graph on `n` vertices without edges. `n = 0` is allowed here.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Input(format!(
                "vertex count {n} exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = bits::low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Builds a graph from 1-based unordered pairs. Duplicate pairs collapse.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::Input("vertex count must be positive".into()));
        }
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Input(format!(
                    "edge {{{u},{v}}} has an endpoint outside 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::Input(format!("loop at vertex {u}")));
            }
            g.add_edge_raw(u - 1, v - 1);
        }
        Ok(g)
    }

    /// Graph whose maximal cliques contain the given 1-based vertex sets.
    pub fn from_cliques<I, C>(n: usize, cliques: I) -> Result<Self>
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = usize>,
    {
        let mut g = Self::empty(n)?;
        for clique in cliques {
            let members: Vec<usize> = clique.into_iter().collect();
            for &v in &members {
                if v == 0 || v > n {
                    return Err(Error::Input(format!("vertex {v} outside 1..={n}")));
                }
            }
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if u != v {
                        g.add_edge_raw(u - 1, v - 1);
                    }
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge_raw(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// 0-based neighbourhood bitset.
    pub(crate) fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Bitset of all vertices (0-based).
    pub(crate) fn vertex_mask(&self) -> u64 {
        bits::low_mask(self.n)
    }

    /// Sorted neighbours of `v` (1-based).
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        bits::to_labels(self.adj[v - 1])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in ones(self.adj[u] & !bits::low_mask(u + 1)) {
                out.push((u + 1, v + 1));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Induced subgraph on `[n] \ w`, relabeled in increasing order of the
    /// surviving labels. Labels in `w` outside `1..=n` are ignored.
    pub fn delete_vertices(&self, w: &[usize]) -> InducedSubgraph {
        let mut removed = 0u64;
        for &v in w {
            if v >= 1 && v <= self.n {
                removed |= 1u64 << (v - 1);
            }
        }
        let keep = self.vertex_mask() & !removed;
        self.induced(keep)
    }

    pub(crate) fn induced(&self, keep: u64) -> InducedSubgraph {
        let old: Vec<usize> = ones(keep).collect();
        let mut graph = Graph {
            n: old.len(),
            adj: vec![0; old.len()],
        };
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    graph.adj[i] |= 1u64 << j;
                }
            }
        }
        InducedSubgraph {
            graph,
            labels: old.into_iter().map(|v| v + 1).collect(),
        }
    }

    /// Connected components of the subgraph induced on `alive` (0-based masks).
    pub(crate) fn components_of(&self, alive: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = alive;
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0u64;
                for v in ones(frontier) {
                    next |= self.adj[v];
                }
                next &= alive & !comp;
                comp |= next;
                frontier = next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Number of connected components of the subgraph induced on `alive`.
    pub(crate) fn component_count(&self, alive: u64) -> usize {
        let mut count = 0;
        let mut rest = alive;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in ones(frontier) {
                    next |= self.adj[v];
                }
                next &= alive & !comp;
                comp |= next;
                frontier = next;
            }
            count += 1;
            rest &= !comp;
        }
        count
    }

    /// Partition of the vertex set into connected components, each sorted,
    /// ordered by minimum element.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        // components_of already yields components by increasing minimum
        self.components_of(self.vertex_mask())
            .into_iter()
            .map(bits::to_labels)
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(self.vertex_mask()) <= 1
    }

    /// All maximal cliques as sorted label lists, in lexicographic order of
    /// their bitsets.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut cliques: Vec<Vec<usize>> = bits::maximal_cliques(&self.adj, self.vertex_mask())
            .into_iter()
            .map(bits::to_labels)
            .collect();
        cliques.sort();
        cliques
    }

    /// Number of maximal cliques containing `v`.
    pub fn clique_degree(&self, v: usize) -> usize {
        assert!(v >= 1 && v <= self.n, "vertex {v} outside 1..={}", self.n);
        // maximal cliques of G through v are v + maximal cliques of N(v)
        let nbrs = self.adj[v - 1];
        if nbrs == 0 {
            return 1;
        }
        bits::maximal_cliques(&self.adj, nbrs).len()
    }

    pub fn is_free_vertex(&self, v: usize) -> bool {
        self.clique_degree(v) == 1
    }

    /// Applies a relabeling: `perm[old - 1]` is the new label of `old`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Input("permutation length differs from n".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p == 0 || p > self.n || seen >> (p - 1) & 1 == 1 {
                return Err(Error::Input("not a permutation of 1..=n".into()));
            }
            seen |= 1u64 << (p - 1);
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge_raw(perm[u - 1] - 1, perm[v - 1] - 1);
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.add_edge_raw(u - 1, v - 1);
        }
        for (u, v) in other.edges() {
            g.add_edge_raw(self.n + u - 1, self.n + v - 1);
        }
        Ok(g)
    }

    /// Parses the edge-list text format: a first line `n`, then one `u v`
    /// pair per line. Blank lines and lines starting with `#` are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Input("empty edge list".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Input(format!("expected vertex count, found {header:?}")))?;
        let mut edges = Vec::new();
        for (lineno, line) in lines {
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize> {
                tok.and_then(|t| t.parse().ok()).ok_or_else(|| {
                    Error::Input(format!("line {}: expected \"u v\", found {line:?}", lineno + 1))
                })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::Input(format!(
                    "line {}: trailing tokens in {line:?}",
                    lineno + 1
                )));
            }
            edges.push((u, v));
        }
        Graph::from_edge_list(n, edges)
    }

    /// Inverse of [`Graph::parse_edge_list`].
    pub fn to_edge_list_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
