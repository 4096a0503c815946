//! Labeled simple graphs with arbitrary (not necessarily contiguous) vertex
//! labels, plus the vertex surgeries used by the block-graph machinery.
//!
//! Vertex labels are positive integers. Deleting a vertex keeps the remaining
//! labels, so derived graphs share a common label universe with the original
//! and vertex sets can be compared across them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be at least 1")]
    EmptyVertexSet,
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(u32, u32),
    #[error("edge endpoint {0} is not a vertex of the graph")]
    UnknownVertex(u32),
    #[error("vertex {0} is not present in the graph")]
    NoSuchVertex(u32),
    #[error("vertex {0} is not a cut vertex")]
    NotACutVertex(u32),
    #[error("vertex label 0 is not allowed; labels start at 1")]
    ZeroLabel,
    #[error("malformed edge list: {0}")]
    EdgeListFormat(String),
}

/// A canonically ordered set of vertex labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<u32>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn singleton(v: u32) -> Self {
        VertexSet(BTreeSet::from([v]))
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn insert(&mut self, v: u32) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: u32) -> bool {
        self.0.remove(&v)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn without(&self, v: u32) -> VertexSet {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn with(&self, v: u32) -> VertexSet {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn min(&self) -> Option<u32> {
        self.0.iter().next().copied()
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[u32; N]> for VertexSet {
    fn from(vs: [u32; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Immutable labeled simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: BTreeSet<u32>,
    edges: BTreeSet<(u32, u32)>,
    adjacency: BTreeMap<u32, BTreeSet<u32>>,
}

/// JSON edge-list interchange format: `{"n":3,"edges":[[1,2],[2,3]]}`,
/// optionally with explicit `"labels"` for non-contiguous vertex sets.
#[derive(Debug, Serialize, Deserialize)]
struct EdgeListDoc {
    n: u64,
    edges: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<u32>>,
}

impl Graph {
    /// Graph on vertices `1..=n` with the given edges.
    pub fn new(n: u32, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        Self::with_labels((1..=n).collect(), edges)
    }

    /// Graph on an explicit label set.
    pub fn with_labels(labels: BTreeSet<u32>, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        if labels.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if labels.contains(&0) {
            return Err(GraphError::ZeroLabel);
        }
        let mut edge_set = BTreeSet::new();
        let mut adjacency: BTreeMap<u32, BTreeSet<u32>> =
            labels.iter().map(|&v| (v, BTreeSet::new())).collect();
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            if !labels.contains(&a) {
                return Err(GraphError::UnknownVertex(a));
            }
            if !labels.contains(&b) {
                return Err(GraphError::UnknownVertex(b));
            }
            let e = (a.min(b), a.max(b));
            if !edge_set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            adjacency.get_mut(&a).unwrap().insert(b);
            adjacency.get_mut(&b).unwrap().insert(a);
        }
        Ok(Graph {
            labels,
            edges: edge_set,
            adjacency,
        })
    }

    /// Complete graph on `1..=n`.
    pub fn complete(n: u32) -> Self {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: u32) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    /// Parse the JSON edge-list format.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let doc: EdgeListDoc = serde_json::from_str(text)
            .map_err(|e| GraphError::EdgeListFormat(e.to_string()))?;
        if doc.n < 1 {
            return Err(GraphError::EmptyVertexSet);
        }
        if doc.n > u32::MAX as u64 {
            return Err(GraphError::EdgeListFormat("n too large".into()));
        }
        let labels: BTreeSet<u32> = match &doc.labels {
            Some(ls) => {
                if ls.len() as u64 != doc.n {
                    return Err(GraphError::EdgeListFormat(format!(
                        "labels has {} entries but n = {}",
                        ls.len(),
                        doc.n
                    )));
                }
                let set: BTreeSet<u32> = ls.iter().copied().collect();
                if set.len() != ls.len() {
                    return Err(GraphError::EdgeListFormat("duplicate labels".into()));
                }
                set
            }
            None => (1..=doc.n as u32).collect(),
        };
        Graph::with_labels(labels, &doc.edges)
    }

    /// Serialize to the JSON edge-list format.
    pub fn to_edge_list_json(&self) -> String {
        let contiguous = self.labels.iter().copied().eq(1..=self.vertex_count() as u32);
        let doc = EdgeListDoc {
            n: self.vertex_count() as u64,
            edges: self.edges.iter().copied().collect(),
            labels: if contiguous {
                None
            } else {
                Some(self.labels.iter().copied().collect())
            },
        };
        serde_json::to_string(&doc).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.labels.iter().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.labels.iter().copied().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_vertex(&self, v: u32) -> bool {
        self.labels.contains(&v)
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: u32) -> impl Iterator<Item = u32> + '_ {
        self.adjacency.get(&v).into_iter().flatten().copied()
    }

    pub fn neighborhood(&self, v: u32) -> VertexSet {
        self.neighbors(v).collect()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adjacency.get(&v).map_or(0, |s| s.len())
    }

    /// Connected components of the induced subgraph on `V ∖ removed`,
    /// each canonically ordered, listed by smallest member.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if removed.contains(v) || seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([v]);
            seen.insert(v);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for w in self.neighbors(u) {
                    if !removed.contains(w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(VertexSet(comp));
        }
        out
    }

    /// `c_G(S)`: the number of connected components of `G ∖ S`.
    pub fn component_count(&self, removed: &VertexSet) -> usize {
        self.components(removed).len()
    }

    /// `G_v`: add every edge between two neighbors of `v`. Defined for cut
    /// vertices only.
    pub fn complete_neighborhood(&self, v: u32) -> Result<Graph, GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::NoSuchVertex(v));
        }
        if !self.is_cut_vertex(v) {
            return Err(GraphError::NotACutVertex(v));
        }
        let nbrs: Vec<u32> = self.neighbors(v).collect();
        let mut g = self.clone();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                let e = (a.min(b), a.max(b));
                if g.edges.insert(e) {
                    g.adjacency.get_mut(&a).unwrap().insert(b);
                    g.adjacency.get_mut(&b).unwrap().insert(a);
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on `V ∖ {v}`; remaining labels are retained.
    pub fn delete_vertex(&self, v: u32) -> Result<Graph, GraphError> {
        if !self.has_vertex(v) {
            return Err(GraphError::NoSuchVertex(v));
        }
        if self.vertex_count() == 1 {
            return Err(GraphError::EmptyVertexSet);
        }
        let labels: BTreeSet<u32> = self.labels.iter().copied().filter(|&u| u != v).collect();
        let edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| a != v && b != v)
            .collect();
        Graph::with_labels(labels, &edges)
    }

    /// Induced subgraph on a subset of the vertices, labels retained.
    pub fn induced(&self, keep: &VertexSet) -> Result<Graph, GraphError> {
        let labels: BTreeSet<u32> = self
            .labels
            .iter()
            .copied()
            .filter(|&u| keep.contains(u))
            .collect();
        if labels.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| keep.contains(a) && keep.contains(b))
            .collect();
        Graph::with_labels(labels, &edges)
    }

    /// A vertex is a cut vertex iff removing it increases the component count.
    pub fn is_cut_vertex(&self, v: u32) -> bool {
        if !self.has_vertex(v) || self.vertex_count() == 1 {
            return false;
        }
        self.component_count(&VertexSet::singleton(v)) > self.component_count(&VertexSet::new())
    }

    /// Does `keep` induce a complete subgraph?
    pub fn induces_clique(&self, vs: &VertexSet) -> bool {
        let members: Vec<u32> = vs.iter().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !self.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }
}
