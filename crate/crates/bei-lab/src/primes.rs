//! The minimal primes P_S(G) of a binomial edge ideal, their heights and
//! dimensions, and the full combinatorial primary decomposition.
//!
//! P_S(G) is generated by x_i, y_i for i ∈ S together with the binomial edge
//! ideal of the complete graph on each connected component of G ∖ S. The
//! height is |S| + n − c(S) and the dimension 2n minus that; everything here
//! is derived from the component structure, never from Gröbner bases.

use serde::Serialize;
use thiserror::Error;

use crate::cutset::{self, CutsetError};
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PrimeError {
    #[error("{0} is not a member of C(G)")]
    NotACutSet(VertexSet),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cutset(#[from] CutsetError),
}

/// Symbolic form of P_S(G).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalPrime {
    #[serde(rename = "S")]
    pub s: VertexSet,
    pub components: Vec<VertexSet>,
    pub height: usize,
    pub dimension: usize,
    #[serde(skip)]
    pub ambient_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeDecomposition {
    #[serde(skip)]
    pub graph: Graph,
    pub primes: Vec<MinimalPrime>,
}

fn prime_from_components(g: &Graph, s: &VertexSet) -> MinimalPrime {
    let n = g.vertex_count();
    let components = g.components(s);
    let height = s.len() + n - components.len();
    MinimalPrime {
        s: s.clone(),
        components,
        height,
        dimension: 2 * n - height,
        ambient_n: n,
    }
}

/// P_S(G) for S ∈ C(G); membership is enforced.
pub fn prime_of_cutset(g: &Graph, s: &VertexSet) -> Result<MinimalPrime, PrimeError> {
    if !cutset::is_cut_set(g, s)? {
        return Err(PrimeError::NotACutSet(s.clone()));
    }
    Ok(prime_from_components(g, s))
}

/// P_S(G) for arbitrary S ⊆ V(G). P_S is prime for any S; only members of
/// C(G) appear in the decomposition, so this is for exploration.
pub fn prime_of_any_subset(g: &Graph, s: &VertexSet) -> Result<MinimalPrime, PrimeError> {
    if let Some(v) = s.iter().find(|&v| !g.has_vertex(v)) {
        return Err(PrimeError::Graph(GraphError::NoSuchVertex(v)));
    }
    Ok(prime_from_components(g, s))
}

/// Ass(R/J(G)) = {P_S : S ∈ C(G)}, in C(G) order.
pub fn associated_primes(g: &Graph, bound: usize) -> Result<PrimeDecomposition, PrimeError> {
    let family = cutset::enumerate_cutsets(g, bound)?;
    let primes = family
        .sets
        .iter()
        .map(|s| prime_from_components(g, s))
        .collect();
    Ok(PrimeDecomposition {
        graph: g.clone(),
        primes,
    })
}

impl MinimalPrime {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Graph {
        Graph::new(4, &[(1, 2), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn complete_graph_prime() {
        for n in 2..=5 {
            let p = prime_of_cutset(&Graph::complete(n), &VertexSet::new()).unwrap();
            assert_eq!(p.height, n as usize - 1);
            assert_eq!(p.dimension, n as usize + 1);
            assert_eq!(p.components.len(), 1);
        }
    }

    #[test]
    fn star_center() {
        let p = prime_of_cutset(&star(), &VertexSet::from([2])).unwrap();
        assert_eq!(
            p.components,
            vec![VertexSet::from([1]), VertexSet::from([3]), VertexSet::from([4])]
        );
        assert_eq!(p.height, 2);
        assert_eq!(p.dimension, 6);
    }

    #[test]
    fn p3_center() {
        let p = prime_of_cutset(&Graph::path(3), &VertexSet::from([2])).unwrap();
        assert_eq!(p.height, 2);
        assert_eq!(p.dimension, 4);
    }

    #[test]
    fn membership_is_enforced() {
        let err = prime_of_cutset(&Graph::path(3), &VertexSet::from([1])).unwrap_err();
        assert_eq!(err, PrimeError::NotACutSet(VertexSet::from([1])));
        assert!(prime_of_any_subset(&Graph::path(3), &VertexSet::from([1])).is_ok());
    }

    #[test]
    fn associated_primes_of_small_graphs() {
        let d = associated_primes(&Graph::path(3), 16).unwrap();
        assert_eq!(d.primes.len(), 2);
        assert!(d.primes.iter().all(|p| p.height == 2), "P_3 is unmixed");

        let d = associated_primes(&star(), 16).unwrap();
        let heights: Vec<usize> = d.primes.iter().map(|p| p.height).collect();
        assert_eq!(heights, vec![3, 2]);

        let d = associated_primes(&Graph::complete(2), 16).unwrap();
        assert_eq!(d.primes.len(), 1);
        assert_eq!(d.primes[0].height, 1);
        assert_eq!(d.primes[0].dimension, 3);
    }

    #[test]
    fn height_plus_dimension_is_2n() {
        for g in [Graph::path(4), star(), Graph::complete(4)] {
            for p in associated_primes(&g, 16).unwrap().primes {
                assert_eq!(p.height + p.dimension, 2 * p.ambient_n);
            }
        }
    }

    #[test]
    fn json_schema() {
        let p = prime_of_cutset(&star(), &VertexSet::from([2])).unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"S":[2],"components":[[1],[3],[4]],"height":2,"dimension":6}"#
        );
    }
}
