//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is one `u64` bit set per vertex, so neighbourhood unions and
//! intersections are single word operations. Every graph fits the
//! one-byte size header of graph6.

mod algo;
mod format;
mod set;

pub use algo::{
    all_cycles, blocks, connected_components, cutvertices, distance, two_cuts, Distance,
    MAX_CYCLE_LISTING_N,
};
pub(crate) use algo::{components_within, reach};
pub use format::{decode_graph6, encode_graph6, to_dot, Graph6Error};
pub use set::{Iter as VertexSetIter, VertexSet};

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} exceeds the maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has {n} vertices, operation is limited to {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Cycle `0 - 1 - .. - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::Precondition(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for v in 0..n {
            g.adj[v] = VertexSet::full(n).bits() & !(1u64 << v);
        }
        Ok(g)
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Number of unordered adjacent pairs.
    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    /// Unchecked edge toggles for hot loops; callers guarantee `u != v < n`.
    #[inline]
    pub(crate) fn set_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> Result<usize, GraphError> {
        if self.n == MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        self.n += 1;
        Ok(self.n - 1)
    }

    /// Edges `(u, v)` with `u < v`, sorted ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet::from_bits(self.adj[u] >> u >> 1 << u << 1) {
                out.push((u, v));
            }
        }
        out
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for (u, v) in self.edges() {
            g.set_edge_unchecked(perm[u], perm[v]);
        }
        g
    }

    /// Graph with the vertices of `removed` deleted; survivors keep their
    /// relative order and are renumbered from 0.
    pub fn without_vertices(&self, removed: VertexSet) -> Graph {
        let keep: Vec<usize> = self.vertices().difference(removed).to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph {
            n: keep.len(),
            adj: [0; MAX_VERTICES],
        };
        for (u, v) in self.edges() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.set_edge_unchecked(index[u], index[v]);
            }
        }
        g
    }

    /// Raw adjacency rows `0..n`.
    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj[..self.n]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}
