//! Ordered uniform hypergraphs on the vertex set `0..n`.
//!
//! The vertex order is the integer order, so an ordered hypergraph needs no
//! extra permutation object. Edges are stored sorted ascending and the edge
//! list is kept lexicographic, which makes equality, hashing and the text
//! serialization canonical.

mod construct;
mod containment;
pub(crate) mod format;
mod iso;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use construct::{build_k_h_t, build_k_h_t_s_r, complete, cycle, matching};
pub use containment::{contains, contains_through_edge, find_embedding, MAX_CONTAINMENT_VERTICES};
pub(crate) use containment::{EdgeSet, Pattern};
pub use iso::{canonical_form, is_isomorphic, MAX_ISOMORPHISM_VERTICES};

pub type Vertex = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("edge {edge:?} has {got} vertices, expected {expected}")]
    WrongArity { edge: Vec<Vertex>, expected: usize, got: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<Vertex>),
    #[error("uniformity mismatch: host is {host}-uniform, pattern is {pattern}-uniform")]
    ArityMismatch { host: usize, pattern: usize },
    #[error("parameter order violated: s = {s} < t = {t}")]
    ParameterOrder { s: usize, t: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} supports at most {limit} vertices, got {n}")]
    TooLarge { what: &'static str, limit: usize, n: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Position of an edge in the canonical edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeId(pub usize);

/// A `d`-uniform hypergraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    d: usize,
    edges: Vec<Vec<Vertex>>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    n: usize,
    d: usize,
    edges: Vec<Vec<Vertex>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = HypergraphError;

    fn try_from(raw: RawHypergraph) -> Result<Self, Self::Error> {
        Hypergraph::new(raw.n, raw.d, raw.edges)
    }
}

impl Hypergraph {
    /// Builds a canonical hypergraph, sorting each edge and the edge list.
    ///
    /// Input edges may list their vertices in any order; repeated vertices
    /// inside an edge count as a wrong arity.
    pub fn new<E, I>(n: usize, d: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[Vertex]>,
    {
        if d == 0 {
            return Err(HypergraphError::InvalidParameter("uniformity must be at least 1".into()));
        }
        let mut out: Vec<Vec<Vertex>> = Vec::new();
        for edge in edges {
            let mut e = edge.as_ref().to_vec();
            e.sort_unstable();
            e.dedup();
            if e.len() != d || edge.as_ref().len() != d {
                return Err(HypergraphError::WrongArity { edge: edge.as_ref().to_vec(), expected: d, got: e.len() });
            }
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
            }
            out.push(e);
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::DuplicateEdge(w[0].clone()));
        }
        Ok(Hypergraph { n, d, edges: out })
    }

    pub fn empty(n: usize, d: usize) -> Result<Self, HypergraphError> {
        Hypergraph::new(n, d, Vec::<Vec<Vertex>>::new())
    }

    // Callers guarantee canonical, valid edges.
    pub(crate) fn from_sorted_unchecked(n: usize, d: usize, edges: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|e| e.len() == d && e.windows(2).all(|p| p[0] < p[1])));
        Hypergraph { n, d, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.d
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<Vertex>] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &[Vertex] {
        &self.edges[id.0]
    }

    pub fn edge_id(&self, edge: &[Vertex]) -> Option<EdgeId> {
        let mut key = edge.to_vec();
        key.sort_unstable();
        self.edges.binary_search(&key).ok().map(EdgeId)
    }

    pub fn has_edge(&self, edge: &[Vertex]) -> bool {
        self.edge_id(edge).is_some()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    /// Greatest vertex of an edge in the vertex order.
    pub fn top(edge: &[Vertex]) -> Vertex {
        *edge.last().expect("edges are nonempty")
    }

    /// Returns a copy with `edge` added, or an error if it is invalid or present.
    pub fn with_edge(&self, edge: &[Vertex]) -> Result<Self, HypergraphError> {
        let mut edges = self.edges.clone();
        edges.push(edge.to_vec());
        Hypergraph::new(self.n, self.d, edges)
    }

    /// Sub-hypergraph keeping the edges selected by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(EdgeId, &[Vertex]) -> bool) -> Self {
        let edges =
            self.edges.iter().enumerate().filter(|(i, e)| keep(EdgeId(*i), e)).map(|(_, e)| e.clone()).collect();
        Hypergraph::from_sorted_unchecked(self.n, self.d, edges)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
