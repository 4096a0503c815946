//! `bei-lab`: decompositions and local cohomology profiles of binomial edge
//! ideals, with exhaustive corpus verification against a Gröbner oracle.

mod analyze;
mod input;
mod verify;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use bei_lab::corpus::{graph_from_mask, graph_masks, GraphFilter, MAX_CORPUS_N};
use bei_lab::cutset::DEFAULT_ENUM_BOUND;
use bei_lab::graph::Graph;
use bei_lab::graph6::emit_graph6;
use bei_lab::oracle::DEFAULT_ORACLE_BOUND;
use bei_lab::poly::is_prime;

use input::InputFormat;
use verify::Suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Machine-readable contract output.
    Json,
    /// Lossy human-readable summary.
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum CorpusFilter {
    All,
    Block,
    ConnectedBlock,
}

impl From<CorpusFilter> for GraphFilter {
    fn from(f: CorpusFilter) -> GraphFilter {
        match f {
            CorpusFilter::All => GraphFilter::All,
            CorpusFilter::Block => GraphFilter::Block,
            CorpusFilter::ConnectedBlock => GraphFilter::ConnectedBlock,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "bei-lab",
    about = "Primary decompositions and local cohomology profiles of binomial edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one graph: block structure, cut sets, minimal primes,
    /// and (for block graphs) the cohomology profile.
    Analyze {
        /// Path, `-` for stdin, or an inline graph6 string.
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: InputFormat,
        /// Vertex-count ceiling for cut-set enumeration.
        #[arg(long, default_value_t = DEFAULT_ENUM_BOUND)]
        bound: usize,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Run a verification suite over one graph or an exhaustive corpus;
    /// exits nonzero if any case fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Single graph to check (path, `-`, or inline graph6).
        #[arg(long, conflicts_with = "exhaustive_n")]
        input: Option<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: InputFormat,
        /// Check every labeled graph on 1..=N vertices instead of one input.
        #[arg(long)]
        exhaustive_n: Option<u32>,
        /// Coefficient primes for the oracle suites (repeatable).
        #[arg(long = "prime", default_values_t = [32003u64])]
        primes: Vec<u64>,
        /// Vertex-count ceiling for Gröbner oracle runs.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND)]
        bound: usize,
        #[arg(long, value_enum, default_value = "table")]
        output: OutputFormat,
    },
    /// Emit a deterministic corpus of graphs as graph6 lines.
    Corpus {
        /// Number of labeled vertices.
        #[arg(long)]
        exhaustive_n: u32,
        #[arg(long, value_enum, default_value = "all")]
        filter: CorpusFilter,
        /// Keep only canonical representatives up to isomorphism.
        #[arg(long)]
        dedup: bool,
        /// Emit a random sample of this size instead of the full stream.
        #[arg(long)]
        sample: Option<usize>,
        /// RNG seed for --sample.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Upper limit on vertex count.
        #[arg(long, default_value_t = MAX_CORPUS_N)]
        bound: u32,
    },
}

fn threads_from_env() -> usize {
    match std::env::var("BEI_LAB_THREADS") {
        Ok(v) => v.parse().unwrap_or(1).max(1),
        Err(_) => std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1),
    }
}

fn exhaustive_corpus(max_n: u32, filter: GraphFilter) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        for mask in graph_masks(n, filter, false)? {
            graphs.push(graph_from_mask(n, mask));
        }
    }
    Ok(graphs)
}

fn main() -> Result<()> {
    // Die quietly when a downstream pipe (head, grep -m, ...) closes early.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            input,
            format,
            bound,
            output,
        } => {
            let g = input::load_graph(&input, format)?;
            analyze::run(&g, bound, output)
        }
        Command::Verify {
            suite,
            input,
            format,
            exhaustive_n,
            primes,
            bound,
            output,
        } => {
            for &p in &primes {
                if !is_prime(p) {
                    bail!("--prime {p} is not prime");
                }
            }
            let graphs = match (&input, exhaustive_n) {
                (Some(path), None) => vec![input::load_graph(path, format)?],
                (None, Some(n)) => exhaustive_corpus(n, GraphFilter::All)?,
                _ => bail!("provide exactly one of --input or --exhaustive-n"),
            };
            let results =
                verify::run_cases(&graphs, suite, &primes, bound, threads_from_env())?;
            if results.is_empty() {
                bail!("no applicable cases (suite {:?} skipped every graph)", suite);
            }
            if verify::emit(&results, output)? {
                Ok(())
            } else {
                std::process::exit(1);
            }
        }
        Command::Corpus {
            exhaustive_n,
            filter,
            dedup,
            sample,
            seed,
            bound,
        } => {
            if exhaustive_n > bound {
                bail!("--exhaustive-n {exhaustive_n} exceeds --bound {bound}");
            }
            let mut lines = Vec::new();
            for mask in graph_masks(exhaustive_n, filter.into(), dedup)? {
                lines.push(emit_graph6(&graph_from_mask(exhaustive_n, mask))?);
            }
            if let Some(k) = sample {
                let mut rng = StdRng::seed_from_u64(seed);
                lines.shuffle(&mut rng);
                lines.truncate(k);
                lines.sort();
            }
            let mut stdout = std::io::stdout().lock();
            use std::io::Write;
            for line in lines {
                writeln!(stdout, "{line}").context("writing corpus")?;
            }
            Ok(())
        }
    }
}
