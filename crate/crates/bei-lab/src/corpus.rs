//! Deterministic enumeration of all labeled graphs on n vertices by
//! adjacency bitmask, with block-graph and connectivity filters and optional
//! canonical-form deduplication. Backs the exhaustive property sweeps and
//! the corpus subcommand.

use thiserror::Error;

use crate::graph::Graph;

/// Hard ceiling for exhaustive corpora: 2^(n choose 2) masks.
pub const MAX_CORPUS_N: u32 = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("corpus enumeration supports 1 ..= {MAX_CORPUS_N} vertices, got {0}")]
    UnsupportedSize(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFilter {
    All,
    Block,
    ConnectedBlock,
}

impl GraphFilter {
    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "all" => Some(GraphFilter::All),
            "block" => Some(GraphFilter::Block),
            "connected-block" => Some(GraphFilter::ConnectedBlock),
            _ => None,
        }
    }
}

fn pair_count(n: u32) -> u32 {
    n * (n - 1) / 2
}

/// Adjacency masks from an edge bitmask in colex pair order:
/// (1,2), (1,3), (2,3), (1,4), ...
fn adjacency(n: u32, mask: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n as usize];
    let mut bit = 0;
    for j in 1..n as usize {
        for i in 0..j {
            if mask & (1u64 << bit) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    adj
}

fn component_of(adj: &[u32], avail: u32, start: usize) -> u32 {
    let mut comp = 1u32 << start;
    loop {
        let mut next = comp;
        let mut bits = comp;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[i];
        }
        next &= avail;
        if next == comp {
            return comp;
        }
        comp = next;
    }
}

pub fn mask_is_connected(n: u32, mask: u64) -> bool {
    let adj = adjacency(n, mask);
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    component_of(&adj, all, 0) == all
}

/// Every biconnected component induces a clique. Allocation-light DFS
/// low-link over bitmask adjacency.
pub fn mask_is_block(n: u32, mask: u64) -> bool {
    let adj = adjacency(n, mask);
    let n = n as usize;
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut frames: Vec<(usize, usize, u32)> = Vec::new(); // (v, parent, pending neighbors)

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        frames.push((root, usize::MAX, adj[root]));
        while let Some(&(u, parent, pending)) = frames.last() {
            if pending != 0 {
                let w = pending.trailing_zeros() as usize;
                frames.last_mut().unwrap().2 &= !(1 << w);
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, u, adj[w]));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut members = 0u32;
                        while let Some(&(a, b)) = edge_stack.last() {
                            edge_stack.pop();
                            members |= (1 << a) | (1 << b);
                            if a == p && b == u {
                                break;
                            }
                        }
                        // Clique check on the block.
                        let mut bits = members;
                        while bits != 0 {
                            let i = bits.trailing_zeros() as usize;
                            bits &= bits - 1;
                            if adj[i] & members != members & !(1 << i) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Smallest edge bitmask over all vertex relabelings.
pub fn canonical_mask(n: u32, mask: u64) -> u64 {
    let mut perm: Vec<usize> = (0..n as usize).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut remapped = 0u64;
        let mut bit = 0;
        for j in 1..n as usize {
            for i in 0..j {
                if mask & (1u64 << bit) != 0 {
                    let (a, b) = (p[i].min(p[j]), p[i].max(p[j]));
                    remapped |= 1u64 << (b * (b - 1) / 2 + a);
                }
                bit += 1;
            }
        }
        best = best.min(remapped);
    });
    best
}

fn permute(items: &mut [usize], k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

pub fn graph_from_mask(n: u32, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for j in 2..=n {
        for i in 1..j {
            if mask & (1u64 << bit) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).expect("mask encodes a valid simple graph")
}

/// All edge bitmasks on n labeled vertices passing the filter, ascending.
/// With `dedup`, only canonical representatives are emitted.
pub fn graph_masks(
    n: u32,
    filter: GraphFilter,
    dedup: bool,
) -> Result<impl Iterator<Item = u64>, CorpusError> {
    if n < 1 || n > MAX_CORPUS_N {
        return Err(CorpusError::UnsupportedSize(n));
    }
    let total: u64 = 1u64 << pair_count(n);
    Ok((0..total).filter(move |&mask| {
        let keep = match filter {
            GraphFilter::All => true,
            GraphFilter::Block => mask_is_block(n, mask),
            GraphFilter::ConnectedBlock => {
                mask_is_connected(n, mask) && mask_is_block(n, mask)
            }
        };
        keep && (!dedup || canonical_mask(n, mask) == mask)
    }))
}

pub fn enumerate_graphs(
    n: u32,
    filter: GraphFilter,
    dedup: bool,
) -> Result<impl Iterator<Item = Graph>, CorpusError> {
    Ok(graph_masks(n, filter, dedup)?.map(move |m| graph_from_mask(n, m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks;

    #[test]
    fn two_vertex_corpus() {
        let all: Vec<u64> = graph_masks(2, GraphFilter::All, false).unwrap().collect();
        assert_eq!(all, vec![0, 1]);
    }

    #[test]
    fn three_vertex_block_graphs_up_to_iso() {
        let graphs: Vec<Graph> = enumerate_graphs(3, GraphFilter::Block, true)
            .unwrap()
            .collect();
        // Empty, one edge, path, triangle.
        assert_eq!(graphs.len(), 4);
        let sizes: Vec<usize> = graphs.iter().map(|g| g.edge_count()).collect();
        assert_eq!(sizes, vec![0, 1, 2, 3]);
    }

    #[test]
    fn four_vertex_connected_block_graphs() {
        let graphs: Vec<Graph> = enumerate_graphs(4, GraphFilter::ConnectedBlock, true)
            .unwrap()
            .collect();
        // P_4, star, triangle+pendant, K_4 — and not C_4.
        for g in &graphs {
            assert!(blocks::is_block_graph(g));
        }
        assert!(graphs.iter().any(|g| g.edge_count() == 6), "K_4 present");
        let c4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(!blocks::is_block_graph(&c4));
        assert_eq!(graphs.len(), 4);
    }

    #[test]
    fn fast_checks_agree_with_block_decomposition() {
        for n in 1..=5u32 {
            for mask in graph_masks(n, GraphFilter::All, false).unwrap() {
                let g = graph_from_mask(n, mask);
                assert_eq!(
                    mask_is_block(n, mask),
                    blocks::is_block_graph(&g),
                    "n={n} mask={mask}"
                );
                assert_eq!(
                    mask_is_connected(n, mask),
                    g.component_count(&Default::default()) == 1,
                    "n={n} mask={mask}"
                );
            }
        }
    }

    #[test]
    fn size_limit() {
        assert_eq!(
            graph_masks(9, GraphFilter::All, false).err(),
            Some(CorpusError::UnsupportedSize(9))
        );
    }
}
