//! The `verify` command: run theorem checkers over a corpus of graphs,
//! report per-case pass/fail with witnesses, and exit nonzero on any failure.

use std::sync::Mutex;

use anyhow::Result;
use serde::Serialize;

use bei_lab::blocks::block_decomposition;
use bei_lab::graph::Graph;
use bei_lab::graph6::emit_graph6;
use bei_lab::oracle::{verify_ohtani, verify_primary_decomposition};
use bei_lab::surgery::{
    find_good_cut_vertex, satisfies_dagger, verify_component_agreement, verify_gprime_cutsets,
    verify_h_cutsets, verify_path_equiv, verify_sepset_containment,
};

use crate::OutputFormat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Oracle check of the combinatorial primary decomposition.
    Decomposition,
    /// Oracle check of the cut-vertex ideal splitting and sum identity.
    Ohtani,
    /// Cut sets of the completed-neighborhood graph G'.
    Gprime,
    /// Cut sets of H = G' minus the cut vertex (good vertices only), with
    /// component agreement and path equivalence.
    H,
    /// Existence of a good cut vertex.
    Dagger,
    /// Separator containment between C(H) and C(G'').
    Containment,
    /// Everything above.
    All,
}

impl Suite {
    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Decomposition,
                Suite::Ohtani,
                Suite::Gprime,
                Suite::H,
                Suite::Dagger,
                Suite::Containment,
            ],
            s => vec![s],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Decomposition => "decomposition",
            Suite::Ohtani => "ohtani",
            Suite::Gprime => "gprime",
            Suite::H => "h",
            Suite::Dagger => "dagger",
            Suite::Containment => "containment",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub suite: &'static str,
    pub graph6: String,
    pub case: String,
    pub pass: bool,
    pub detail: String,
}

fn cases_for_graph(
    g: &Graph,
    suites: &[Suite],
    primes: &[u64],
    bound: usize,
) -> Result<Vec<CaseResult>> {
    let id = emit_graph6(g)?;
    let n = g.vertex_count();
    let decomp = block_decomposition(g);
    let cut_vertices: Vec<u32> = decomp.cut_vertices.iter().collect();
    let mut out = Vec::new();

    for &suite in suites {
        match suite {
            Suite::Decomposition => {
                if n > bound {
                    continue;
                }
                for &p in primes {
                    let rep = verify_primary_decomposition(g, p, bound)?;
                    out.push(CaseResult {
                        suite: "decomposition",
                        graph6: id.clone(),
                        case: format!("prime={p}"),
                        pass: rep.holds,
                        detail: format!("{} minimal primes", rep.num_primes),
                    });
                }
            }
            Suite::Ohtani => {
                if n > bound || !decomp.is_block_graph {
                    continue;
                }
                for &v in &cut_vertices {
                    for &p in primes {
                        let rep = verify_ohtani(g, v, p, bound)?;
                        out.push(CaseResult {
                            suite: "ohtani",
                            graph6: id.clone(),
                            case: format!("v={v} prime={p}"),
                            pass: rep.holds(),
                            detail: format!(
                                "splitting={} sum identity={}",
                                rep.splitting_holds, rep.sum_identity_holds
                            ),
                        });
                    }
                }
            }
            Suite::Gprime | Suite::Containment => {
                if !decomp.is_block_graph {
                    continue;
                }
                for &v in &cut_vertices {
                    let outcome = if suite == Suite::Gprime {
                        verify_gprime_cutsets(g, v)?
                    } else {
                        verify_sepset_containment(g, v)?
                    };
                    out.push(CaseResult {
                        suite: suite.name(),
                        graph6: id.clone(),
                        case: format!("v={v}"),
                        pass: outcome.holds,
                        detail: witness_text(&outcome.counterexample),
                    });
                }
            }
            Suite::H => {
                if !decomp.is_block_graph {
                    continue;
                }
                for &v in &cut_vertices {
                    let path = verify_path_equiv(g, v)?;
                    out.push(CaseResult {
                        suite: "h",
                        graph6: id.clone(),
                        case: format!("v={v} path-equivalence"),
                        pass: path.holds,
                        detail: witness_text(&path.counterexample),
                    });
                    if satisfies_dagger(g, v)?.holds {
                        for (label, outcome) in [
                            ("cut sets", verify_h_cutsets(g, v)?),
                            ("component agreement", verify_component_agreement(g, v)?),
                        ] {
                            out.push(CaseResult {
                                suite: "h",
                                graph6: id.clone(),
                                case: format!("v={v} {label}"),
                                pass: outcome.holds,
                                detail: witness_text(&outcome.counterexample),
                            });
                        }
                    }
                }
            }
            Suite::Dagger => {
                if !decomp.is_block_graph || cut_vertices.is_empty() {
                    continue;
                }
                match find_good_cut_vertex(g) {
                    Ok(v) => out.push(CaseResult {
                        suite: "dagger",
                        graph6: id.clone(),
                        case: String::new(),
                        pass: true,
                        detail: format!("good vertex {v}"),
                    }),
                    Err(e) => out.push(CaseResult {
                        suite: "dagger",
                        graph6: id.clone(),
                        case: String::new(),
                        pass: false,
                        detail: e.to_string(),
                    }),
                }
            }
            Suite::All => unreachable!("expanded before dispatch"),
        }
    }
    Ok(out)
}

fn witness_text(w: &Option<bei_lab::graph::VertexSet>) -> String {
    match w {
        Some(s) => format!("counterexample S = {s}"),
        None => String::new(),
    }
}

/// Fan out per graph across up to `threads` workers; results are reassembled
/// in corpus order so output is deterministic.
pub fn run_cases(
    graphs: &[Graph],
    suite: Suite,
    primes: &[u64],
    bound: usize,
    threads: usize,
) -> Result<Vec<CaseResult>> {
    let suites = suite.expand();
    let threads = threads.max(1).min(graphs.len().max(1));
    let slots: Mutex<Vec<Option<Result<Vec<CaseResult>>>>> =
        Mutex::new((0..graphs.len()).map(|_| None).collect());
    let next = std::sync::atomic::AtomicUsize::new(0);

    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= graphs.len() {
                    break;
                }
                let res = cases_for_graph(&graphs[i], &suites, primes, bound);
                slots.lock().unwrap()[i] = Some(res);
            });
        }
    });

    let mut out = Vec::new();
    for slot in slots.into_inner().unwrap() {
        out.extend(slot.expect("every graph processed")?);
    }
    Ok(out)
}

/// Print results; returns true when every case passed.
pub fn emit(results: &[CaseResult], output: OutputFormat) -> Result<bool> {
    let all_pass = results.iter().all(|r| r.pass);
    match output {
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "cases": results,
                "total": results.len(),
                "failures": results.iter().filter(|r| !r.pass).count(),
                "pass": all_pass,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        OutputFormat::Table => {
            for r in results {
                println!(
                    "{} {} {} {}{}",
                    if r.pass { "ok  " } else { "FAIL" },
                    r.suite,
                    r.graph6,
                    r.case,
                    if r.detail.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", r.detail)
                    }
                );
            }
            println!(
                "{} cases, {} failures",
                results.len(),
                results.iter().filter(|r| !r.pass).count()
            );
        }
    }
    Ok(all_pass)
}
