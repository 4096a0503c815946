//! Biconnected decomposition, cut vertices, block-graph recognition, and
//! leaf/branch classification of the maximal cliques of a block graph.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CliqueRole {
    Leaf,
    Branch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Vertex sets of the biconnected components, canonically ordered.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
    /// Vertices lying in no block at all.
    pub isolated: VertexSet,
    pub is_block_graph: bool,
    /// Defined only for block graphs; indexed like `blocks`.
    pub clique_roles: BTreeMap<usize, CliqueRole>,
}

/// Biconnected components via DFS low-links (iterative), cut vertices by the
/// definitional removal test.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let labels: Vec<u32> = g.vertices().collect();
    let n = labels.len();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let adj: Vec<Vec<usize>> = labels
        .iter()
        .map(|&v| g.neighbors(v).map(|w| index[&w]).collect())
        .collect();

    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<VertexSet> = Vec::new();

    // Frame: (vertex, parent, next neighbor position).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&(u, parent, pos)) = stack.last() {
            if pos < adj[u].len() {
                let w = adj[u][pos];
                stack.last_mut().unwrap().2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        // Everything above and including (p,u) forms one block.
                        let mut members = VertexSet::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if a == p && b == u {
                                edge_stack.pop();
                                members.insert(labels[a]);
                                members.insert(labels[b]);
                                break;
                            }
                            edge_stack.pop();
                            members.insert(labels[a]);
                            members.insert(labels[b]);
                        }
                        blocks.push(members);
                    }
                }
            }
        }
    }
    blocks.sort();

    let base_components = g.component_count(&VertexSet::new());
    let cut_vertices: VertexSet = g
        .vertices()
        .filter(|&v| {
            g.vertex_count() > 1
                && g.component_count(&VertexSet::singleton(v)) > base_components
        })
        .collect();

    let isolated: VertexSet = g.vertices().filter(|&v| g.degree(v) == 0).collect();

    let is_block_graph = blocks.iter().all(|b| g.induces_clique(b));

    let mut clique_roles = BTreeMap::new();
    if is_block_graph {
        for (i, b) in blocks.iter().enumerate() {
            let shared = b.iter().filter(|&v| cut_vertices.contains(v)).count();
            let role = if shared <= 1 {
                CliqueRole::Leaf
            } else {
                CliqueRole::Branch
            };
            clique_roles.insert(i, role);
        }
    }

    BlockDecomposition {
        blocks,
        cut_vertices,
        isolated,
        is_block_graph,
        clique_roles,
    }
}

/// Is every biconnected component of `g` a clique?
pub fn is_block_graph(g: &Graph) -> bool {
    block_decomposition(g).is_block_graph
}

/// A non-clique block to cite when rejecting a non-block graph, if any.
pub fn non_clique_block(g: &Graph) -> Option<VertexSet> {
    block_decomposition(g)
        .blocks
        .into_iter()
        .find(|b| !g.induces_clique(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn k23_is_not_a_block_graph() {
        let g = Graph::new(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        let d = block_decomposition(&g);
        assert!(!d.is_block_graph);
        assert_eq!(d.blocks.len(), 1);
        assert_eq!(d.blocks[0], VertexSet::from([1, 2, 3, 4, 5]));
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn triangle() {
        let d = block_decomposition(&Graph::complete(3));
        assert!(d.is_block_graph);
        assert_eq!(d.blocks, vec![VertexSet::from([1, 2, 3])]);
        assert!(d.cut_vertices.is_empty());
        assert_eq!(d.clique_roles[&0], CliqueRole::Leaf);
    }

    #[test]
    fn tree_blocks_are_edges() {
        let g = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        let d = block_decomposition(&g);
        assert!(d.is_block_graph);
        assert_eq!(d.blocks.len(), 4);
        assert_eq!(d.cut_vertices, VertexSet::from([2, 3]));
        // {2,3} touches two cut vertices, every other edge at most one.
        let branch_idx = d
            .blocks
            .iter()
            .position(|b| *b == VertexSet::from([2, 3]))
            .unwrap();
        assert_eq!(d.clique_roles[&branch_idx], CliqueRole::Branch);
        for (i, role) in &d.clique_roles {
            if *i != branch_idx {
                assert_eq!(*role, CliqueRole::Leaf);
            }
        }
    }

    #[test]
    fn isolated_vertices_form_no_block() {
        let g = Graph::parse_edge_list(r#"{"n":3,"edges":[[1,2]]}"#).unwrap();
        let d = block_decomposition(&g);
        assert_eq!(d.blocks, vec![VertexSet::from([1, 2])]);
        assert_eq!(d.isolated, VertexSet::from([3]));
        assert!(d.is_block_graph);
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        let g = Graph::new(6, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (4, 6), (5, 6)]).unwrap();
        let d = block_decomposition(&g);
        for (a, b) in g.edges() {
            let count = d
                .blocks
                .iter()
                .filter(|blk| blk.contains(a) && blk.contains(b))
                .count();
            assert_eq!(count, 1, "edge ({a},{b})");
        }
    }
}
