//! The `analyze` report: block structure, cut-set family, minimal primes,
//! and (for block graphs) the local cohomology profile, as one JSON document.

use anyhow::Result;
use serde_json::json;

use bei_lab::blocks::block_decomposition;
use bei_lab::cohomology::cohomology_profile;
use bei_lab::cutset::enumerate_cutsets;
use bei_lab::graph::Graph;
use bei_lab::graph6::emit_graph6;
use bei_lab::primes::associated_primes;

use crate::OutputFormat;

pub fn run(g: &Graph, bound: usize, output: OutputFormat) -> Result<()> {
    let decomp = block_decomposition(g);
    let cutsets = enumerate_cutsets(g, bound)?;
    let primes = associated_primes(g, bound)?;
    let profile = if decomp.is_block_graph {
        Some(cohomology_profile(g, bound)?)
    } else {
        None
    };

    match output {
        OutputFormat::Json => {
            let doc = json!({
                "graph": serde_json::from_str::<serde_json::Value>(&g.to_edge_list_json())?,
                "graph6": emit_graph6(g)?,
                "is_block_graph": decomp.is_block_graph,
                "block_decomposition": decomp,
                "cutsets": cutsets.sets,
                "primes": primes.primes,
                "profile": profile,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        OutputFormat::Table => {
            println!(
                "graph: {} vertices, {} edges ({})",
                g.vertex_count(),
                g.edge_count(),
                emit_graph6(g)?
            );
            println!(
                "block graph: {} ({} blocks, cut vertices {})",
                decomp.is_block_graph,
                decomp.blocks.len(),
                decomp.cut_vertices
            );
            println!("cut sets ({}):", cutsets.len());
            for s in &cutsets.sets {
                println!("  {s}");
            }
            println!("minimal primes:");
            for p in &primes.primes {
                println!(
                    "  P_S for S = {}: height {}, dimension {}",
                    p.s, p.height, p.dimension
                );
            }
            if let Some(profile) = profile {
                println!(
                    "cohomology: nonvanishing {:?}, depth {}, dimension {}, Cohen-Macaulay {}",
                    profile.nonvanishing, profile.depth, profile.dimension, profile.cohen_macaulay
                );
            } else {
                println!("cohomology: not computed (not a block graph)");
            }
        }
    }
    Ok(())
}
