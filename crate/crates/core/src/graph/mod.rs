//! Simple undirected unweighted graphs.
//!
//! A [`Graph`] is an immutable value: `n` dense vertices `0..n` and a set of
//! unordered edges. Edges are stored normalized (`u < v`) and sorted, and the
//! per-vertex neighbour lists are derived from them at construction time.
//! Edit operations such as [`Graph::with_edge`] return new graphs.

mod family;
mod io;

pub use family::{generate, Family, GraphFamily};
pub use io::parse_edge_list;

use crate::error::{Error, Result};

/// Unordered vertex pair, always stored with the smaller index first.
pub type Edge = (usize, usize);

/// Largest vertex count accepted by the dense-matrix pipelines.
pub const MAX_DENSE_ORDER: usize = 2000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list.
    ///
    /// Duplicate and reversed edges collapse to a single edge. Self-loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n == 0 {
            return Err(Error::domain("a graph needs at least one vertex"));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            list.push(normalize(n, u, v, None)?);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Smallest vertex degree; 0 for graphs with an isolated vertex.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    /// Returns a copy of the graph with `{u, v}` added. Adding an edge that
    /// is already present returns an equal graph.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let e = normalize(self.n, u, v, None)?;
        match self.edges.binary_search(&e) {
            Ok(_) => Ok(self.clone()),
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, e);
                Ok(Self::from_sorted(self.n, edges))
            }
        }
    }

    /// Returns a copy of the graph with `{u, v}` removed (if present).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        let e = normalize(self.n, u, v, None)?;
        match self.edges.binary_search(&e) {
            Ok(pos) => {
                let mut edges = self.edges.clone();
                edges.remove(pos);
                Ok(Self::from_sorted(self.n, edges))
            }
            Err(_) => Ok(self.clone()),
        }
    }

    /// All vertex pairs `u < v` that are not edges, in lexicographic order.
    pub fn complement_nonedges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut nb = self.adj[u].iter().copied().filter(|&w| w > u).peekable();
            for v in u + 1..self.n {
                if nb.peek() == Some(&v) {
                    nb.next();
                } else {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components as a vertex -> component id map (ids in order of
    /// smallest member) together with the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Canonical edge-list text: the vertex count on the first line, then one
    /// `u v` line per edge with `u < v` in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

pub(crate) fn normalize(n: usize, u: usize, v: usize, line: Option<usize>) -> Result<Edge> {
    for x in [u, v] {
        if x >= n {
            return Err(Error::Range { vertex: x, n, line });
        }
    }
    if u == v {
        return Err(Error::SelfLoop { vertex: u, line });
    }
    Ok(if u < v { (u, v) } else { (v, u) })
}

impl std::str::FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_edge_list(s)
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}
