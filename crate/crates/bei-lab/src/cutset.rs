//! Enumeration of the cut-set family C(G): the subsets S of V(G) such that
//! adding back any vertex of S strictly lowers the component count of G ∖ S.
//! These index the minimal primes of the binomial edge ideal.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

/// Largest vertex count accepted for exhaustive 2^n enumeration.
pub const DEFAULT_ENUM_BOUND: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CutsetError {
    #[error("graph has {n} vertices, exceeding the enumeration bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Bitmask view of a graph with at most 32 vertices. Index i corresponds to
/// the i-th smallest label.
#[derive(Debug, Clone)]
pub(crate) struct BitGraph {
    pub labels: Vec<u32>,
    pub adj: Vec<u32>,
    pub all: u32,
}

impl BitGraph {
    pub fn new(g: &Graph) -> Self {
        let labels: Vec<u32> = g.vertices().collect();
        assert!(labels.len() <= 32, "BitGraph supports at most 32 vertices");
        let idx = |v: u32| labels.binary_search(&v).unwrap();
        let mut adj = vec![0u32; labels.len()];
        for (a, b) in g.edges() {
            let (i, j) = (idx(a), idx(b));
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        let all = if labels.len() == 32 {
            u32::MAX
        } else {
            (1u32 << labels.len()) - 1
        };
        BitGraph { labels, adj, all }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn mask_of(&self, s: &VertexSet) -> Option<u32> {
        let mut mask = 0u32;
        for v in s.iter() {
            mask |= 1 << self.labels.binary_search(&v).ok()?;
        }
        Some(mask)
    }

    pub fn set_of(&self, mask: u32) -> VertexSet {
        (0..self.n())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| self.labels[i])
            .collect()
    }

    /// Number of connected components of the subgraph induced on
    /// `V ∖ removed`.
    pub fn component_count(&self, removed: u32) -> u32 {
        let mut remaining = self.all & !removed;
        let mut count = 0;
        while remaining != 0 {
            let mut comp = remaining & remaining.wrapping_neg();
            loop {
                let mut next = comp;
                let mut bits = comp;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    next |= self.adj[i];
                }
                next &= remaining;
                if next == comp {
                    break;
                }
                comp = next;
            }
            remaining &= !comp;
            count += 1;
        }
        count
    }

    /// Definitional test: S = ∅, or adding back any v ∈ S reconnects.
    pub fn is_cut_set_mask(&self, s: u32) -> bool {
        if s == 0 {
            return true;
        }
        let c = self.component_count(s);
        let mut bits = s;
        while bits != 0 {
            let v = bits & bits.wrapping_neg();
            bits &= bits - 1;
            if self.component_count(s & !v) >= c {
                return false;
            }
        }
        true
    }

    /// All members of C(G) as masks, ascending by (popcount, value).
    pub fn cutset_masks(&self) -> Vec<u32> {
        let total: u64 = 1u64 << self.n();
        let mut masks: Vec<u32> = (0..total)
            .map(|m| m as u32)
            .filter(|&m| self.is_cut_set_mask(m))
            .collect();
        // Size first, then lexicographic on the sorted member lists. For two
        // masks of equal size the lex-smaller one owns the smallest label in
        // the symmetric difference.
        masks.sort_by(|&a, &b| {
            a.count_ones().cmp(&b.count_ones()).then_with(|| {
                if a == b {
                    std::cmp::Ordering::Equal
                } else {
                    let d = a ^ b;
                    if a & (d & d.wrapping_neg()) != 0 {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                }
            })
        });
        masks
    }
}

/// The family C(G), canonically ordered by size then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSetFamily {
    #[serde(skip)]
    pub graph: Graph,
    pub sets: Vec<VertexSet>,
}

impl CutSetFamily {
    pub fn contains(&self, s: &VertexSet) -> bool {
        self.sets.iter().any(|t| t == s)
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// JSON as a list of integer arrays.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.sets).unwrap()
    }
}

/// Membership test for C(G): `s = ∅`, or `c(S ∖ {v}) < c(S)` for every
/// `v ∈ S`.
pub fn is_cut_set(g: &Graph, s: &VertexSet) -> Result<bool, GraphError> {
    let bg = BitGraph::new(g);
    let mask = bg
        .mask_of(s)
        .ok_or_else(|| GraphError::NoSuchVertex(s.iter().find(|&v| !g.has_vertex(v)).unwrap()))?;
    Ok(bg.is_cut_set_mask(mask))
}

/// When `s ∉ C(G)` and `s ≠ ∅`, some `v ∈ s` fails to reconnect; report it.
pub fn cut_set_witness(g: &Graph, s: &VertexSet) -> Result<Option<u32>, GraphError> {
    let bg = BitGraph::new(g);
    let mask = bg
        .mask_of(s)
        .ok_or_else(|| GraphError::NoSuchVertex(s.iter().find(|&v| !g.has_vertex(v)).unwrap()))?;
    if mask == 0 {
        return Ok(None);
    }
    let c = bg.component_count(mask);
    for v in s.iter() {
        if bg.component_count(mask & !bg.mask_of(&VertexSet::singleton(v)).unwrap()) >= c {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Exhaustive enumeration of C(G) over all 2^n subsets.
pub fn enumerate_cutsets(g: &Graph, bound: usize) -> Result<CutSetFamily, CutsetError> {
    let n = g.vertex_count();
    if n > bound || n > 32 {
        return Err(CutsetError::TooLarge { n, bound: bound.min(32) });
    }
    let bg = BitGraph::new(g);
    let sets = bg.cutset_masks().into_iter().map(|m| bg.set_of(m)).collect();
    Ok(CutSetFamily {
        graph: g.clone(),
        sets,
    })
}

/// Same-component test in `g ∖ removed`.
pub fn reachable(g: &Graph, removed: &VertexSet, a: u32, b: u32) -> Result<bool, GraphError> {
    for v in [a, b] {
        if !g.has_vertex(v) {
            return Err(GraphError::NoSuchVertex(v));
        }
        if removed.contains(v) {
            return Err(GraphError::NoSuchVertex(v));
        }
    }
    if a == b {
        return Ok(true);
    }
    Ok(g
        .components(removed)
        .iter()
        .any(|c| c.contains(a) && c.contains(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cut_set_membership_on_p3() {
        let p3 = Graph::path(3);
        assert!(is_cut_set(&p3, &VertexSet::from([2])).unwrap());
        assert!(!is_cut_set(&p3, &VertexSet::from([1])).unwrap());
        assert!(is_cut_set(&p3, &VertexSet::new()).unwrap());
    }

    #[test]
    fn witness_for_failed_membership() {
        let p3 = Graph::path(3);
        assert_eq!(cut_set_witness(&p3, &VertexSet::from([1])).unwrap(), Some(1));
        assert_eq!(cut_set_witness(&p3, &VertexSet::from([2])).unwrap(), None);
    }

    #[test]
    fn complete_graphs_have_only_the_empty_cut_set() {
        for n in 2..=6 {
            let fam = enumerate_cutsets(&Graph::complete(n), 16).unwrap();
            assert_eq!(fam.sets, vec![VertexSet::new()], "K_{n}");
        }
    }

    #[test]
    fn paths() {
        let fam = enumerate_cutsets(&Graph::path(3), 16).unwrap();
        assert_eq!(fam.sets, vec![VertexSet::new(), VertexSet::from([2])]);

        let fam = enumerate_cutsets(&Graph::path(4), 16).unwrap();
        assert_eq!(
            fam.sets,
            vec![VertexSet::new(), VertexSet::from([2]), VertexSet::from([3])]
        );
        // {2,3} fails: c({3}) = 2 = c({2,3}).
        assert!(!is_cut_set(&Graph::path(4), &VertexSet::from([2, 3])).unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        let g = Graph::complete(5);
        assert!(matches!(
            enumerate_cutsets(&g, 4),
            Err(CutsetError::TooLarge { n: 5, bound: 4 })
        ));
    }

    #[test]
    fn reachability() {
        let p3 = Graph::path(3);
        assert!(reachable(&p3, &VertexSet::new(), 1, 3).unwrap());
        assert!(!reachable(&p3, &VertexSet::singleton(2), 1, 3).unwrap());
        assert!(reachable(&p3, &VertexSet::singleton(2), 1, 1).unwrap());
        assert!(reachable(&p3, &VertexSet::new(), 3, 3).unwrap());
        assert!(reachable(&p3, &VertexSet::singleton(3), 1, 2).unwrap());
        assert!(matches!(
            reachable(&p3, &VertexSet::singleton(2), 2, 3),
            Err(GraphError::NoSuchVertex(2))
        ));
    }

    #[test]
    fn family_serializes_to_arrays() {
        let fam = enumerate_cutsets(&Graph::path(3), 16).unwrap();
        assert_eq!(fam.to_json(), "[[],[2]]");
    }
}
