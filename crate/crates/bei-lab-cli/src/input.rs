//! Graph input loading: JSON edge lists or graph6, from a file, stdin, or an
//! inline graph6 string.

use std::fs;
use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context, Result};
use bei_lab::graph::Graph;
use bei_lab::graph6::parse_graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Graph6,
    Json,
}

/// `input` is a path, `-` for stdin, or (for graph6) an inline string.
pub fn load_graph(input: &str, format: InputFormat) -> Result<Graph> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else if Path::new(input).exists() {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    } else if format == InputFormat::Graph6 || input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        bail!("input file not found: {input}");
    };
    let text = text.trim();
    match format {
        InputFormat::Graph6 => parse_graph6(text).context("parsing graph6 input"),
        InputFormat::Json => Graph::parse_edge_list(text).context("parsing JSON edge list"),
    }
}
