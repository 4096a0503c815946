//! Gröbner-basis oracle: materializes binomial edge ideals and the symbolic
//! primes as explicit generator lists, and checks the primary-decomposition
//! and cut-vertex splitting identities on small graphs.

use std::sync::Arc;
use std::time::Instant;

use thiserror::Error;

use crate::cutset::CutsetError;
use crate::graph::{Graph, GraphError};
use crate::groebner::{self, Ideal};
use crate::poly::{PolyError, PolyRing, Polynomial};
use crate::primes::{self, MinimalPrime, PrimeError};

/// Default vertex-count ceiling for oracle runs (ambient has 2n+1 variables
/// once t is adjoined).
pub const DEFAULT_ORACLE_BOUND: usize = 5;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Prime(#[from] PrimeError),
    #[error(transparent)]
    Cutset(#[from] CutsetError),
}

/// δ_{i,j} for each edge {i,j}, i < j, in edge order.
pub fn bei_generators(g: &Graph, ring: &Arc<PolyRing>) -> Vec<Polynomial> {
    g.edges().map(|(a, b)| Polynomial::delta(ring, a, b)).collect()
}

pub fn bei_ideal(g: &Graph, ring: &Arc<PolyRing>) -> Ideal {
    Ideal::new(ring, bei_generators(g, ring))
}

/// Explicit generators of P_S(G): x_i, y_i for i ∈ S, then δ_{a,b} for every
/// pair a < b inside each completed component. Deterministic order.
pub fn prime_generators(p: &MinimalPrime, ring: &Arc<PolyRing>) -> Vec<Polynomial> {
    let mut gens = Vec::new();
    for i in p.s.iter() {
        gens.push(Polynomial::variable(ring, ring.x_index(i).expect("label in ring")));
        gens.push(Polynomial::variable(ring, ring.y_index(i).expect("label in ring")));
    }
    for comp in &p.components {
        let members: Vec<u32> = comp.iter().collect();
        for (k, &a) in members.iter().enumerate() {
            for &b in &members[k + 1..] {
                gens.push(Polynomial::delta(ring, a, b));
            }
        }
    }
    gens
}

pub fn prime_ideal(p: &MinimalPrime, ring: &Arc<PolyRing>) -> Ideal {
    Ideal::new(ring, prime_generators(p, ring))
}

#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub modulus: u64,
    pub num_primes: usize,
    pub holds: bool,
    /// Milliseconds per intersection step.
    pub step_millis: Vec<f64>,
}

/// Theorem check: ∩_{S ∈ C(G)} P_S(G) = J(G), by iterated elimination-order
/// intersection. Applies to every graph, block or not.
pub fn verify_primary_decomposition(
    g: &Graph,
    modulus: u64,
    bound: usize,
) -> Result<DecompositionReport, OracleError> {
    let n = g.vertex_count();
    if n > bound {
        return Err(OracleError::BoundExceeded { n, bound });
    }
    let ring = PolyRing::for_graph(g, modulus)?;
    let decomp = primes::associated_primes(g, bound.max(n))?;
    let mut step_millis = Vec::new();

    let mut acc: Option<Ideal> = None;
    for p in &decomp.primes {
        let ideal = prime_ideal(p, &ring);
        let start = Instant::now();
        acc = Some(match acc {
            None => ideal,
            Some(current) => groebner::intersect(&current, &ideal)?,
        });
        step_millis.push(start.elapsed().as_secs_f64() * 1e3);
    }
    let intersection = acc.expect("C(G) always contains the empty set");
    let holds = groebner::ideal_equal(&intersection, &bei_ideal(g, &ring))?;
    Ok(DecompositionReport {
        modulus,
        num_primes: decomp.primes.len(),
        holds,
        step_millis,
    })
}

#[derive(Debug, Clone)]
pub struct OhtaniReport {
    pub modulus: u64,
    /// J(G) = J(G_v) ∩ (J(G) + (x_v, y_v)).
    pub splitting_holds: bool,
    /// Q1 + Q2 = Q3, i.e. J(G_v) + (J(G)+(x_v,y_v)) = J(G_v ∖ {v}) + (x_v,y_v).
    pub sum_identity_holds: bool,
}

impl OhtaniReport {
    pub fn holds(&self) -> bool {
        self.splitting_holds && self.sum_identity_holds
    }
}

/// Check the cut-vertex splitting of J(G) at `v`.
pub fn verify_ohtani(
    g: &Graph,
    v: u32,
    modulus: u64,
    bound: usize,
) -> Result<OhtaniReport, OracleError> {
    let n = g.vertex_count();
    if n > bound {
        return Err(OracleError::BoundExceeded { n, bound });
    }
    if !g.is_cut_vertex(v) {
        return Err(OracleError::Graph(GraphError::NotACutVertex(v)));
    }
    let ring = PolyRing::for_graph(g, modulus)?;
    let g_prime = g.complete_neighborhood(v)?;
    let h = g_prime.delete_vertex(v)?;

    let xv = Polynomial::variable(&ring, ring.x_index(v).unwrap());
    let yv = Polynomial::variable(&ring, ring.y_index(v).unwrap());
    let vars_v = Ideal::new(&ring, vec![xv, yv]);

    let j_g = bei_ideal(g, &ring);
    let q1 = bei_ideal(&g_prime, &ring);
    let q2 = groebner::sum(&j_g, &vars_v)?;
    let q3 = groebner::sum(&bei_ideal(&h, &ring), &vars_v)?;

    let splitting_holds = groebner::ideal_equal(&j_g, &groebner::intersect(&q1, &q2)?)?;
    let sum_identity_holds = groebner::ideal_equal(&groebner::sum(&q1, &q2)?, &q3)?;
    Ok(OhtaniReport {
        modulus,
        splitting_holds,
        sum_identity_holds,
    })
}
