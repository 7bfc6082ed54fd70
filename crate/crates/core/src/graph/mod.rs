//! Simple undirected graphs on vertices `0..n`.

mod family;
mod girth;
mod parse;
mod random;

use std::fmt;

use thiserror::Error;

pub use family::{generate, FamilySpec};
pub use girth::{girth, Girth};
pub use parse::parse_edge_list;
pub use random::random_with_min_girth;

/// Where an offending edge came from: a line of edge-list text or a position
/// in an edge iterator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Loc {
    Line(usize),
    Edge(usize),
}

impl fmt::Display for Loc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Loc::Line(l) => write!(f, "line {l}"),
            Loc::Edge(i) => write!(f, "edge #{i}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("empty input: expected a header line \"n m\"")]
    Empty,
    #[error("{at}: malformed line {text:?}: {reason}")]
    Malformed { at: Loc, text: String, reason: &'static str },
    #[error("{at}: self-loop on vertex {vertex}")]
    SelfLoop { at: Loc, vertex: usize },
    #[error("{at}: duplicate edge {u} {v}")]
    DuplicateEdge { at: Loc, u: usize, v: usize },
    #[error("{at}: vertex {vertex} out of range for n = {n}")]
    OutOfRange { at: Loc, vertex: usize, n: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error("cannot delete vertex {0} twice")]
    SameVertex(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    NoSuchVertex { vertex: usize, n: usize },
    #[error("{family}: parameter {param} = {value} out of range (need {need})")]
    FamilyParam { family: &'static str, param: &'static str, value: u64, need: &'static str },
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("{family} takes {expected} parameter(s), got {got}")]
    FamilyArity { family: &'static str, expected: usize, got: usize },
}

/// An immutable simple undirected graph.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted
/// lexicographically; neighbor lists are sorted as well, so every iteration
/// order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge iterator, rejecting self-loops, repeated
    /// edges (in either orientation) and out-of-range labels.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(n, edges.into_iter().enumerate().map(|(i, (u, v))| (Loc::Edge(i), u, v)))
    }

    pub(crate) fn build<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Loc, usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut canon = Vec::new();
        for (at, u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { at, vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { at, vertex: u });
            }
            if adj[u].contains(&v) {
                return Err(GraphError::DuplicateEdge { at, u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        adj.iter_mut().for_each(|a| a.sort_unstable());
        Ok(Graph { n, edges: canon, adj })
    }

    /// Construction for edge sets already known to be simple.
    fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj.iter_mut().for_each(|a| a.sort_unstable());
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// `G - {u, v}`: removes both vertices and every edge touching them.
    /// Surviving vertices are relabeled `0..n-2` in their original order, so
    /// deleting two pairs in either order yields identical graphs.
    pub fn delete_vertex_pair(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::NoSuchVertex { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        let (lo, hi) = (u.min(v), u.max(v));
        let relabel = |w: usize| w - (w > lo) as usize - (w > hi) as usize;
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != lo && a != hi && b != lo && b != hi)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Ok(Graph::from_canonical(self.n - 2, edges))
    }

    pub fn girth(&self) -> Girth {
        girth(self)
    }

    /// Serializes to the edge-list text format read by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.m())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}
