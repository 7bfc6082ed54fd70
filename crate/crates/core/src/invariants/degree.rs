use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;
use serde::Serialize;

use super::{InvariantError, MAX_LAMBDA, REQUIRED_LAMBDAS};
use crate::graph::Graph;
use crate::scalar::{pow, ExactInt};

/// Zagreb-type sums of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct DegreeInvariants<T: ExactInt> {
    #[serde(serialize_with = "crate::report::decimal")]
    pub m: T,
    /// First Zagreb index, sum of `d(u)^2`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub m1: T,
    /// Second Zagreb index, sum over edges of `d(u) d(v)`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub m2: T,
    /// Forgotten index, sum of `d(u)^3`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub f: T,
    /// `lambda -> sum of d(u)^lambda`.
    #[serde(serialize_with = "crate::report::decimal_map")]
    pub m1_general: BTreeMap<u32, T>,
    /// `lambda -> sum over edges of (d(u) d(v))^lambda`.
    #[serde(serialize_with = "crate::report::decimal_map")]
    pub m2_general: BTreeMap<u32, T>,
    /// First reformulated Zagreb index, sum over edges of `d(e)^2`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub em1: T,
    /// Second reformulated Zagreb index, sum over incident pairs of `d(e) d(f)`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub em2: T,
}

impl<T: ExactInt> DegreeInvariants<T> {
    /// `sum of d(u)^lambda`; panics if `lambda` was not requested.
    pub fn m1_pow(&self, lambda: u32) -> &T {
        &self.m1_general[&lambda]
    }

    /// `sum over edges of (d(u) d(v))^lambda`; panics if `lambda` was not requested.
    pub fn m2_pow(&self, lambda: u32) -> &T {
        &self.m2_general[&lambda]
    }
}

pub fn degree_invariants<T: ExactInt>(g: &Graph) -> DegreeInvariants<T> {
    degree_invariants_with(g, &[]).expect("required exponents are in range")
}

/// Invariants with extra general-Zagreb exponents on top of
/// [`REQUIRED_LAMBDAS`].
pub fn degree_invariants_with<T: ExactInt>(
    g: &Graph,
    lambdas: &[u32],
) -> Result<DegreeInvariants<T>, InvariantError> {
    if let Some(&bad) = lambdas.iter().find(|&&l| l > MAX_LAMBDA) {
        return Err(InvariantError::ExponentTooLarge(bad));
    }
    let lambdas: BTreeSet<u32> = lambdas.iter().copied().chain(REQUIRED_LAMBDAS).collect();
    let deg: Vec<T> = g.degrees().into_iter().map(T::of).collect();

    let m1_general = lambdas
        .iter()
        .map(|&l| (l, deg.iter().fold(T::zero(), |acc, d| acc + pow(d, l))))
        .collect();

    let products: Vec<T> = g.edges().iter().map(|&(u, v)| deg[u].clone() * deg[v].clone()).collect();
    let m2_general: BTreeMap<u32, T> = lambdas
        .iter()
        .map(|&l| (l, products.iter().fold(T::zero(), |acc, p| acc + pow(p, l))))
        .collect();

    let two = T::one() + T::one();
    let edge_deg: Vec<T> =
        g.edges().iter().map(|&(u, v)| deg[u].clone() + deg[v].clone() - two.clone()).collect();
    let em1 = edge_deg.iter().fold(T::zero(), |acc, x| acc + x.clone() * x.clone());

    // sum over unordered pairs of edges at each vertex: ((sum)^2 - sum of squares) / 2
    let mut em2 = T::zero();
    for u in 0..g.n() {
        let (mut s, mut sq) = (T::zero(), T::zero());
        for &v in g.neighbors(u) {
            let de = deg[u].clone() + deg[v].clone() - two.clone();
            s = s + de.clone();
            sq = sq + de.clone() * de;
        }
        em2 = em2 + (s.clone() * s - sq) / two.clone();
    }

    Ok(DegreeInvariants {
        m: T::of(g.m()),
        m1: pow_sum(&m1_general, 2),
        m2: pow_sum(&m2_general, 1),
        f: pow_sum(&m1_general, 3),
        m1_general,
        m2_general,
        em1,
        em2,
    })
}

fn pow_sum<T: ExactInt>(map: &BTreeMap<u32, T>, l: u32) -> T {
    map[&l].clone()
}

/// `sum over neighbors v of u of d(v)`, i.e. `d(u) m_G(u)` kept as an integer.
pub fn neighbor_degree_sum<T: ExactInt>(g: &Graph, u: usize) -> T {
    g.neighbors(u).iter().fold(T::zero(), |acc, &v| acc + T::of(g.degree(v)))
}

/// Average neighbor degree `m_G(u)`, `None` for isolated vertices.
pub fn average_neighbor_degree<T: ExactInt>(g: &Graph, u: usize) -> Option<Ratio<T>> {
    let d = g.degree(u);
    (d > 0).then(|| Ratio::new(neighbor_degree_sum(g, u), T::of(d)))
}
