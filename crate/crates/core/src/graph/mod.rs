//! Simple undirected graphs on vertices `0..n`.
//!
//! Edges are kept in canonical order: pairs `(u, v)` with `u < v`, sorted
//! lexicographically. Every per-edge quantity in the crate (colourings,
//! triangle-edge sets, random-stream consumption) is indexed by position in
//! this order.

mod generate;
mod io;
mod triangles;

use std::fmt;

pub use generate::generate_gnp;
pub use io::{load_edge_list, save_edge_list};
pub use triangles::{expected_triangle_count, triangle_stats, Triangle, TriangleStats};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Immutable simple graph with symmetric bit-row adjacency and a canonical
/// edge list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: Vec<(Vertex, Vertex)>,
}

/// Number of vertex pairs on `n` vertices, or a capacity error when it does
/// not fit the index type.
pub fn pair_count(n: usize) -> Result<usize> {
    if n > Vertex::MAX as usize {
        return Err(Error::Capacity(format!("{n} vertices exceed the vertex index type")));
    }
    let (a, b) = if n % 2 == 0 { (n / 2, n.saturating_sub(1)) } else { (n, (n - 1) / 2) };
    a.checked_mul(b)
        .ok_or_else(|| Error::Capacity(format!("C({n}, 2) overflows the edge index type")))
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        pair_count(n)?;
        let words = n.div_ceil(64);
        let len = n
            .checked_mul(words)
            .ok_or_else(|| Error::Capacity(format!("adjacency for {n} vertices is too large")))?;
        Ok(Graph {
            n,
            words,
            rows: vec![0; len],
            edges: Vec::new(),
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(pair_count(n)?);
        for u in 0..n as Vertex {
            for v in u + 1..n as Vertex {
                edges.push((u, v));
            }
        }
        Self::from_sorted_edges(n, edges)
    }

    /// Builds a graph from edges in any order and orientation. Loops,
    /// duplicates and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty(n)?;
        for (a, b) in edges {
            if a as usize >= n || b as usize >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("loop at vertex {a}")));
            }
            let (u, v) = (a.min(b), a.max(b));
            if g.has_edge(u, v) {
                return Err(Error::InvalidArgument(format!("duplicate edge ({u}, {v})")));
            }
            g.set(u, v);
            g.edges.push((u, v));
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    /// `edges` must already be canonical: strictly increasing, `u < v < n`.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in &edges {
            debug_assert!(u < v && (v as usize) < n);
            g.set(u, v);
        }
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        g.edges = edges;
        Ok(g)
    }

    fn set(&mut self, u: Vertex, v: Vertex) {
        let (u, v) = (u as usize, v as usize);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `e(G)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (u, v) = (u as usize, v as usize);
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Canonical index of edge `{u, v}`, if present.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Neighbourhood bit row of `v` (bit `w` of word `w / 64`).
    pub fn row(&self, v: Vertex) -> &[u64] {
        let start = v as usize * self.words;
        &self.rows[start..start + self.words]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Graph on the same vertices keeping only edges for which `keep` holds.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, (Vertex, Vertex)) -> bool) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, &e)| keep(i, e))
            .map(|(_, &e)| e)
            .collect();
        Self::from_sorted_edges(self.n, edges).expect("subgraph of a valid graph")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n as Vertex;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_sorted_edges(self.n + other.n, edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}
