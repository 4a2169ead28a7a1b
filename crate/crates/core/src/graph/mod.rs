//! Finite simple graphs on at most 64 vertices.
//!
//! Vertices are the integers `0..n`; every graph also carries an external
//! label per vertex (explicit names, or the decimal index when none were
//! given). Adjacency is kept as one `u64` neighbor row per vertex, while
//! equality is the semantic one: two graphs are equal when they have the
//! same label set and the same edges between labels.

mod canon;
mod induced;
mod standard;

pub use canon::{canonical_form, is_isomorphic, CanonicalKey, MAX_CANON_VERTICES};
pub use induced::contains_induced;
pub use standard::{standard_graph, StandardGraph};

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("graph has {0} vertices, more than the supported {1}")]
    TooLarge(usize, usize),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
}

#[derive(Clone)]
pub struct Graph {
    adj: Vec<u64>,
    names: Option<Vec<String>>,
}

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` unnamed vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph { adj: vec![0; n], names: None }
    }

    pub fn with_names<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, GraphError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VERTICES {
            return Err(GraphError::TooLarge(names.len(), MAX_VERTICES));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(GraphError::DuplicateLabel(name.clone()));
            }
        }
        Ok(Graph { adj: vec![0; names.len()], names: Some(names) })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n, MAX_VERTICES));
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order())
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// Neighbor row of `v` as a bitmask.
    #[inline]
    pub fn row(&self, v: Vertex) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        self.try_add_edge(u, v).expect("valid edge");
    }

    pub fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.order();
        if u >= n {
            return Err(GraphError::UnknownVertex(u.to_string()));
        }
        if v >= n {
            return Err(GraphError::UnknownVertex(v.to_string()));
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in bits(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn has_names(&self) -> bool {
        self.names.is_some()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn label(&self, v: Vertex) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        self.vertices().map(|v| self.label(v)).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<Vertex> {
        match &self.names {
            Some(names) => names.iter().position(|n| n == label),
            None => label.parse::<usize>().ok().filter(|&v| v < self.order()),
        }
    }

    /// Same edges, names dropped.
    pub fn unlabeled(&self) -> Graph {
        Graph { adj: self.adj.clone(), names: None }
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v.to_string()))
        }
    }

    /// Induced subgraph on the vertices of `mask`, keeping their labels.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<Vertex> = bits(mask & self.vertex_mask()).collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| bits(self.adj[v] & mask).fold(0u64, |acc, w| acc | 1 << pos[w]))
            .collect();
        let names = keep.iter().map(|&v| self.label(v)).collect();
        Graph { adj, names: Some(names) }
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertex_mask() & !(1 << v)))
    }

    /// Complement the adjacency inside the open neighborhood of `v`.
    pub fn local_complement(&self, v: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        g.local_complement_in_place(v);
        Ok(g)
    }

    pub(crate) fn local_complement_in_place(&mut self, v: Vertex) {
        let nv = self.adj[v];
        for u in bits(nv) {
            self.adj[u] ^= nv & !(1 << u);
        }
    }

    /// Relabel so that vertex `v` becomes `perm[v]`; names are dropped.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![0u64; self.order()];
        for u in self.vertices() {
            adj[perm[u]] = bits(self.adj[u]).fold(0, |acc, w| acc | 1 << perm[w]);
        }
        Graph { adj, names: None }
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.vertices().all(|v| self.degree(v) == k)
    }

    /// Components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        components_within(&self.adj, self.vertex_mask())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    /// Named vertices keep their names, which must not clash.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.order() + other.order();
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n, MAX_VERTICES));
        }
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << shift));
        // unnamed vertices are positional, so they are renumbered
        let names = if self.names.is_none() && other.names.is_none() {
            None
        } else {
            let mut names = self.labels();
            names.extend(match &other.names {
                Some(names) => names.clone(),
                None => (shift..n).map(|v| v.to_string()).collect(),
            });
            let mut seen = std::collections::HashSet::new();
            for name in &names {
                if !seen.insert(name.as_str()) {
                    return Err(GraphError::DuplicateLabel(name.clone()));
                }
            }
            Some(names)
        };
        Ok(Graph { adj, names })
    }

    /// All unordered twin pairs `{u, v}` (`u < v`), in lexicographic order.
    pub fn twin_pairs(&self) -> Vec<TwinPair> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in u + 1..self.order() {
                let outside = !((1u64 << u) | (1u64 << v));
                if self.adj[u] & outside == self.adj[v] & outside {
                    out.push(TwinPair { u, v, adjacent: self.has_edge(u, v) });
                }
            }
        }
        out
    }

    /// Number of unordered couples of vertex-disjoint twin pairs.
    pub fn disjoint_twin_pair_couples(&self) -> usize {
        let pairs = self.twin_pairs();
        let mut count = 0;
        for (i, p) in pairs.iter().enumerate() {
            for q in &pairs[i + 1..] {
                if p.u != q.u && p.u != q.v && p.v != q.u && p.v != q.v {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn has_two_disjoint_twin_pairs(&self) -> bool {
        self.disjoint_twin_pair_couples() >= 1
    }

    pub fn cutpoints(&self) -> Vec<Vertex> {
        let all = self.vertex_mask();
        let base = self.components().len();
        self.vertices()
            .filter(|&v| components_within(&self.adj, all & !(1 << v)).len() > base)
            .collect()
    }

    /// Connectivity level by removing every vertex subset of size at most two.
    ///
    /// The level is the size of the smallest disconnecting set, capped at
    /// `n - 1`; a single vertex is level 0.
    pub fn connectivity_class(&self) -> Connectivity {
        let n = self.order();
        let all = self.vertex_mask();
        let disconnects = |removed: u64| components_within(&self.adj, all & !removed).len() > 1;
        if n <= 1 || disconnects(0) {
            return Connectivity::Disconnected;
        }
        let cutpoints: Vec<Vertex> = self.vertices().filter(|&v| disconnects(1 << v)).collect();
        if !cutpoints.is_empty() || n == 2 {
            return Connectivity::Cutpoint { cutpoints };
        }
        for u in self.vertices() {
            for v in u + 1..n {
                if disconnects(1 << u | 1 << v) {
                    return Connectivity::TwoConnected;
                }
            }
        }
        if n == 3 {
            return Connectivity::TwoConnected;
        }
        Connectivity::ThreeConnectedOrMore
    }

    /// Edge-list text: the order on the first line, then `u v` per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.order());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let first = lines
            .next()
            .ok_or_else(|| GraphError::MalformedEdgeList("missing vertex count".into()))?;
        let n: usize = first
            .parse()
            .map_err(|_| GraphError::MalformedEdgeList(format!("bad vertex count {first:?}")))?;
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n, MAX_VERTICES));
        }
        let mut g = Graph::new(n);
        for line in lines {
            let mut parts = line.split_whitespace();
            let mut next = || -> Result<Vertex, GraphError> {
                parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| GraphError::MalformedEdgeList(format!("bad edge line {line:?}")))
            };
            let (u, v) = (next()?, next()?);
            if parts.next().is_some() {
                return Err(GraphError::MalformedEdgeList(format!("bad edge line {line:?}")));
            }
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }
}

pub(crate) fn components_within(adj: &[u64], within: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut left = within;
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        out.push(comp);
        left &= !comp;
    }
    out
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        if self.order() != other.order() {
            return false;
        }
        if self.names.is_none() && other.names.is_none() {
            return self.adj == other.adj;
        }
        let index: HashMap<String, Vertex> =
            other.labels().into_iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut map = Vec::with_capacity(self.order());
        for v in self.vertices() {
            match index.get(&self.label(v)) {
                Some(&w) => map.push(w),
                None => return false,
            }
        }
        self.vertices().all(|u| {
            let image = bits(self.adj[u]).fold(0u64, |acc, w| acc | 1 << map[w]);
            image == other.adj[map[u]]
        })
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| format!("{}-{}", self.label(u), self.label(v)))
            .collect();
        write!(f, "Graph[{}; {}]", self.labels().join(","), edges.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwinPair {
    pub u: Vertex,
    pub v: Vertex,
    pub adjacent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum Connectivity {
    Disconnected,
    /// Connected, with at least one cutpoint (or exactly two vertices).
    Cutpoint { cutpoints: Vec<Vertex> },
    TwoConnected,
    ThreeConnectedOrMore,
}

impl Connectivity {
    pub fn name(&self) -> &'static str {
        match self {
            Connectivity::Disconnected => "disconnected",
            Connectivity::Cutpoint { .. } => "1-connected-with-cutpoint",
            Connectivity::TwoConnected => "2-connected",
            Connectivity::ThreeConnectedOrMore => "3-connected-or-more",
        }
    }
}
