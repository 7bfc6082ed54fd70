use std::collections::BTreeMap;

use serde::Serialize;

use super::{InvariantError, MAX_LAMBDA};
use crate::graph::Graph;
use crate::scalar::{pow, ExactInt};

/// The alpha / beta / gamma family of sums.
///
/// * `alpha_lambda = sum over edges uv of d(u) d(v) (d(u)^lambda + d(v)^lambda)`
/// * `beta = sum over incident pairs e ~ f of d(e ∩ f) (d(e) + d(f))`
/// * `gamma = sum over {v, xy} in Lambda of d(v) (d(x) + d(y))`, where
///   `Lambda` holds each (vertex, edge) pair with `v` off the edge but
///   adjacent to one of its ends. A pair is counted once even when `v` sees
///   both ends (only possible on a triangle).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct IncidenceInvariants<T: ExactInt> {
    #[serde(serialize_with = "crate::report::decimal")]
    pub alpha: T,
    #[serde(serialize_with = "crate::report::decimal_map")]
    pub alpha_general: BTreeMap<u32, T>,
    #[serde(serialize_with = "crate::report::decimal")]
    pub beta: T,
    #[serde(serialize_with = "crate::report::decimal")]
    pub gamma: T,
    /// `|Lambda|`.
    #[serde(serialize_with = "crate::report::decimal")]
    pub lambda_count: T,
}

impl<T: ExactInt> IncidenceInvariants<T> {
    /// `alpha_lambda`; panics if `lambda` was not requested.
    pub fn alpha_pow(&self, lambda: u32) -> &T {
        &self.alpha_general[&lambda]
    }
}

/// Incidence sums with `alpha_lambda` for `lambda` in 1..=5.
pub fn incidence_invariants<T: ExactInt>(g: &Graph) -> IncidenceInvariants<T> {
    incidence_invariants_with(g, &[]).expect("default exponents are in range")
}

pub fn incidence_invariants_with<T: ExactInt>(
    g: &Graph,
    lambdas: &[u32],
) -> Result<IncidenceInvariants<T>, InvariantError> {
    if let Some(&bad) = lambdas.iter().find(|&&l| l > MAX_LAMBDA) {
        return Err(InvariantError::ExponentTooLarge(bad));
    }
    let deg: Vec<T> = g.degrees().into_iter().map(T::of).collect();
    let two = T::one() + T::one();

    let alpha_general: BTreeMap<u32, T> = lambdas
        .iter()
        .copied()
        .chain(1..=5)
        .map(|l| {
            let s = g.edges().iter().fold(T::zero(), |acc, &(u, v)| {
                let (du, dv) = (&deg[u], &deg[v]);
                acc + du.clone() * dv.clone() * (pow(du, l) + pow(dv, l))
            });
            (l, s)
        })
        .collect();

    // beta: at each vertex w, every unordered pair of its edges contributes
    // d(w) (d(e) + d(f)); each edge at w is paired with d(w) - 1 others.
    let mut beta = T::zero();
    for w in 0..g.n() {
        let dw = g.degree(w);
        if dw < 2 {
            continue;
        }
        let edge_deg_sum = g
            .neighbors(w)
            .iter()
            .fold(T::zero(), |acc, &x| acc + deg[w].clone() + deg[x].clone() - two.clone());
        beta = beta + deg[w].clone() * T::of(dw - 1) * edge_deg_sum;
    }

    let mut gamma = T::zero();
    let mut lambda_count = 0usize;
    for &(x, y) in g.edges() {
        let ends = deg[x].clone() + deg[y].clone();
        let mut seen = merge_neighbors(g.neighbors(x), g.neighbors(y));
        seen.retain(|&v| v != x && v != y);
        lambda_count += seen.len();
        for v in seen {
            gamma = gamma + deg[v].clone() * ends.clone();
        }
    }

    Ok(IncidenceInvariants {
        alpha: alpha_general[&1].clone(),
        alpha_general,
        beta,
        gamma,
        lambda_count: T::of(lambda_count),
    })
}

/// Sorted union of two sorted neighbor lists.
fn merge_neighbors(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x == y => {
                i += 1;
                j += 1;
                x
            }
            (Some(&x), Some(&y)) if x < y => {
                i += 1;
                x
            }
            (Some(_), Some(&y)) => {
                j += 1;
                y
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        out.push(next);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    // beta and gamma straight from the definitions: all edge pairs, all
    // vertex/edge pairs.
    fn brute(g: &Graph) -> (i64, i64, i64, i64) {
        let d: Vec<i64> = g.degrees().iter().map(|&x| x as i64).collect();
        let e = g.edges();
        let alpha = e.iter().map(|&(u, v)| d[u] * d[v] * (d[u] + d[v])).sum();
        let de = |i: usize| d[e[i].0] + d[e[i].1] - 2;
        let mut beta = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                let (a, b) = (e[i], e[j]);
                let shared = [a.0, a.1].into_iter().find(|&w| w == b.0 || w == b.1);
                if let Some(w) = shared {
                    beta += d[w] * (de(i) + de(j));
                }
            }
        }
        let mut gamma = 0;
        for &(x, y) in e {
            for v in 0..g.n() {
                if v != x && v != y && (g.has_edge(v, x) || g.has_edge(v, y)) {
                    gamma += d[v] * (d[x] + d[y]);
                }
            }
        }
        let lambda = e
            .iter()
            .map(|&(x, y)| (0..g.n()).filter(|&v| v != x && v != y && (g.has_edge(v, x) || g.has_edge(v, y))).count() as i64)
            .sum();
        (alpha, beta, gamma, lambda)
    }

    fn check(spec: FamilySpec, alpha: i64, beta: i64, gamma: i64) -> IncidenceInvariants<i64> {
        let g = generate(&spec).unwrap();
        let x = incidence_invariants::<i64>(&g);
        assert_eq!((x.alpha, x.beta, x.gamma), (alpha, beta, gamma), "{spec}");
        assert_eq!((x.alpha, x.beta, x.gamma, x.lambda_count), brute(&g), "{spec}");
        x
    }

    #[test]
    fn c4() {
        let x = check(FamilySpec::Cycle { n: 4 }, 64, 32, 64);
        assert_eq!(*x.alpha_pow(2), 128);
    }

    #[test]
    fn p4() {
        check(FamilySpec::Path { n: 4 }, 28, 12, 20);
    }

    #[test]
    fn s4() {
        check(FamilySpec::Star { n: 4 }, 36, 36, 24);
    }

    #[test]
    fn triangles_count_lambda_pairs_once() {
        let g = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        let x = incidence_invariants::<i64>(&g);
        // every edge of K4 sees both remaining vertices
        assert_eq!(x.lambda_count, 12);
        assert_eq!((x.alpha, x.beta, x.gamma, x.lambda_count), brute(&g));
    }

    #[test]
    fn merge() {
        assert_eq!(merge_neighbors(&[0, 2, 5], &[1, 2, 6]), vec![0, 1, 2, 5, 6]);
        assert_eq!(merge_neighbors(&[], &[3]), vec![3]);
    }
}
