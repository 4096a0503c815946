//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; any failure fails the build.

use bei_lab::blocks::{self, block_decomposition};
use bei_lab::cohomology::{cohomology_profile, depth_check, CohomologyError};
use bei_lab::corpus::{graph_from_mask, graph_masks, mask_is_connected, GraphFilter};
use bei_lab::graph::{Graph, VertexSet};
use bei_lab::groebner::{self, Ideal};
use bei_lab::oracle::{self, verify_ohtani, verify_primary_decomposition};
use bei_lab::poly::PolyRing;
use bei_lab::primes::associated_primes;
use bei_lab::surgery::{
    find_good_cut_vertex, satisfies_dagger, verify_component_agreement, verify_gprime_cutsets,
    verify_h_cutsets, verify_path_equiv, verify_sepset_containment,
};

const PRIMES: [u64; 2] = [32003, 101];

fn report(criterion: &str, pass: bool) {
    println!(
        "acceptance: {criterion}: {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion failed: {criterion}");
}

fn tree_12_23_34_25() -> Graph {
    Graph::new(5, &[(1, 2), (2, 3), (3, 4), (2, 5)]).unwrap()
}

fn k23() -> Graph {
    Graph::new(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap()
}

/// Eight-vertex non-block graph whose cohomology has an embedded attached
/// prime; must be rejected, never profiled.
fn embedded_attached_prime_graph() -> Graph {
    Graph::new(
        8,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 6),
            (2, 4),
            (2, 5),
            (2, 7),
            (3, 4),
            (3, 5),
            (3, 7),
            (4, 5),
            (4, 8),
            (5, 6),
        ],
    )
    .unwrap()
}

/// Criterion 1: J(G) equals the intersection of the P_S over the cut-set
/// family, checked by the Gröbner oracle for every connected graph on
/// n ≤ 4 labeled vertices and for K_{2,3} at n = 5, over two primes.
#[test]
fn criterion_1_primary_decomposition() {
    let mut pass = true;
    for n in 2..=4u32 {
        for mask in graph_masks(n, GraphFilter::All, false).unwrap() {
            if !mask_is_connected(n, mask) {
                continue;
            }
            let g = graph_from_mask(n, mask);
            for p in PRIMES {
                let rep = verify_primary_decomposition(&g, p, 5).unwrap();
                if !rep.holds {
                    eprintln!("decomposition fails: n={n} mask={mask} p={p}");
                    pass = false;
                }
            }
        }
    }
    for p in PRIMES {
        pass &= verify_primary_decomposition(&k23(), p, 5).unwrap().holds;
    }
    report("1 primary decomposition (oracle, connected n<=4 + K_{2,3})", pass);
}

/// Criterion 2: the cut-vertex splitting J(G) = J(G') ∩ (J(G)+(x_v,y_v))
/// and the sum identity Q1+Q2 = Q3 hold for every (block graph, cut vertex)
/// pair with n ≤ 5, by the oracle.
#[test]
fn criterion_2_cut_vertex_splitting() {
    let mut pass = true;
    let mut pairs = 0usize;
    for n in 3..=5u32 {
        for mask in graph_masks(n, GraphFilter::Block, false).unwrap() {
            let g = graph_from_mask(n, mask);
            let cut_vertices = block_decomposition(&g).cut_vertices;
            for v in cut_vertices.iter() {
                pairs += 1;
                let rep = verify_ohtani(&g, v, PRIMES[0], 5).unwrap();
                if !rep.holds() {
                    eprintln!("splitting fails: n={n} mask={mask} v={v}");
                    pass = false;
                }
            }
        }
    }
    pass &= pairs > 0;
    report("2 cut-vertex ideal splitting (all block-graph pairs n<=5)", pass);
}

/// Criterion 3: the four cut-set transfer laws hold exhaustively over block
/// graphs with n ≤ 6 — C(G') and separator containment and path equivalence
/// for every cut vertex, C(H) (with component agreement) for good vertices.
#[test]
fn criterion_3_cutset_transfer_laws() {
    let mut pass = true;
    for n in 3..=6u32 {
        for mask in graph_masks(n, GraphFilter::Block, false).unwrap() {
            let g = graph_from_mask(n, mask);
            let cut_vertices = block_decomposition(&g).cut_vertices;
            for v in cut_vertices.iter() {
                let checks = [
                    verify_gprime_cutsets(&g, v).unwrap(),
                    verify_sepset_containment(&g, v).unwrap(),
                    verify_path_equiv(&g, v).unwrap(),
                ];
                for c in checks {
                    if !c.holds {
                        eprintln!(
                            "transfer law fails: n={n} mask={mask} v={v} witness={:?}",
                            c.counterexample
                        );
                        pass = false;
                    }
                }
                if satisfies_dagger(&g, v).unwrap().holds {
                    for c in [
                        verify_h_cutsets(&g, v).unwrap(),
                        verify_component_agreement(&g, v).unwrap(),
                    ] {
                        if !c.holds {
                            eprintln!(
                                "H transfer law fails: n={n} mask={mask} v={v} witness={:?}",
                                c.counterexample
                            );
                            pass = false;
                        }
                    }
                }
            }
        }
    }
    report("3 cut-set transfer laws (block graphs n<=6, zero counterexamples)", pass);
}

/// Criterion 4: every block graph with at least one cut vertex on n ≤ 7
/// vertices has a good cut vertex; the tree 1-2,2-3,3-4,2-5 has good vertex 2
/// while v=3 fails with witness S={2}.
#[test]
fn criterion_4_good_cut_vertex_exists() {
    let mut pass = true;
    for n in 3..=7u32 {
        for mask in graph_masks(n, GraphFilter::Block, false).unwrap() {
            let g = graph_from_mask(n, mask);
            let cut_vertices = block_decomposition(&g).cut_vertices;
            if cut_vertices.is_empty() {
                continue;
            }
            match find_good_cut_vertex(&g) {
                Ok(_) => {}
                Err(e) => {
                    eprintln!("no good cut vertex: n={n} mask={mask}: {e}");
                    pass = false;
                }
            }
        }
    }
    let tree = tree_12_23_34_25();
    pass &= find_good_cut_vertex(&tree).unwrap() == 2;
    let bad = satisfies_dagger(&tree, 3).unwrap();
    pass &= !bad.holds && bad.witness == Some(VertexSet::from([2]));
    report("4 good cut vertex exists (block graphs n<=7)", pass);
}

/// Criterion 5: depth(R/J(G)) = n + c for every block graph on n ≤ 7
/// vertices, disconnected graphs included.
#[test]
fn criterion_5_depth_identity() {
    let mut pass = true;
    for n in 1..=7u32 {
        for mask in graph_masks(n, GraphFilter::Block, false).unwrap() {
            let g = graph_from_mask(n, mask);
            let d = depth_check(&g, 16).unwrap();
            if !d.agree {
                eprintln!(
                    "depth mismatch: n={n} mask={mask} depth={} n+c={}",
                    d.depth, d.n_plus_c
                );
                pass = false;
            }
        }
    }
    report("5 depth identity depth = n + c (block graphs n<=7)", pass);
}

/// Criterion 6: named fixtures — the star and path profiles, complete-graph
/// Cohen–Macaulayness, and rejection of the two non-block counterexample
/// graphs with an explicit non-clique block witness.
#[test]
fn criterion_6_named_fixtures() {
    let mut pass = true;

    let star = Graph::new(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
    let p = cohomology_profile(&star, 16).unwrap();
    pass &= p.nonvanishing == vec![5, 6] && !p.cohen_macaulay;

    let p3 = cohomology_profile(&Graph::path(3), 16).unwrap();
    pass &= p3.nonvanishing == vec![4] && p3.cohen_macaulay;

    for n in 2..=6u32 {
        let kn = cohomology_profile(&Graph::complete(n), 16).unwrap();
        pass &= kn.nonvanishing == vec![n as usize + 1] && kn.cohen_macaulay;
    }

    for g in [k23(), embedded_attached_prime_graph()] {
        match cohomology_profile(&g, 16) {
            Err(CohomologyError::NotABlockGraph(block)) => {
                pass &= !g.induces_clique(&block);
            }
            other => {
                eprintln!("non-block graph not rejected: {other:?}");
                pass = false;
            }
        }
        pass &= blocks::non_clique_block(&g).is_some();
    }
    report("6 named fixtures (profiles + non-block rejections)", pass);
}

/// Criterion 7: oracle self-consistency over the connected n ≤ 4 corpus —
/// Gröbner-basis idempotence, membership soundness, intersection
/// containment, and agreement between two coefficient primes.
#[test]
fn criterion_7_oracle_self_consistency() {
    let mut pass = true;
    for n in 2..=4u32 {
        for mask in graph_masks(n, GraphFilter::All, false).unwrap() {
            if !mask_is_connected(n, mask) {
                continue;
            }
            let g = graph_from_mask(n, mask);
            let mut verdicts = Vec::new();
            for p in PRIMES {
                let ring = PolyRing::for_graph(&g, p).unwrap();
                let ideal = oracle::bei_ideal(&g, &ring);
                let gb = groebner::buchberger(&ideal).unwrap();

                // Idempotence: a reduced basis is its own basis.
                let again =
                    groebner::buchberger(&Ideal::new(&ring, gb.basis.clone())).unwrap();
                pass &= again.basis == gb.basis;

                // Membership soundness: generators reduce to zero.
                for f in &ideal.generators {
                    pass &= groebner::in_ideal(f, &gb).unwrap();
                }

                // Intersection containment over the minimal primes.
                let decomp = associated_primes(&g, 16).unwrap();
                if decomp.primes.len() >= 2 {
                    let a = oracle::prime_ideal(&decomp.primes[0], &ring);
                    let b = oracle::prime_ideal(&decomp.primes[1], &ring);
                    let meet = groebner::intersect(&a, &b).unwrap();
                    for side in [&a, &b] {
                        let side_gb = groebner::buchberger(side).unwrap();
                        for f in &meet.generators {
                            pass &= groebner::in_ideal(f, &side_gb).unwrap();
                        }
                    }
                }

                verdicts.push(verify_primary_decomposition(&g, p, 5).unwrap().holds);
            }
            // Dual-prime agreement.
            pass &= verdicts.iter().all(|&v| v == verdicts[0]);
        }
    }
    report("7 oracle self-consistency (idempotence, membership, containment, dual prime)", pass);
}
