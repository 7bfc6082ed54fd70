use serde::Serialize;

use super::{MatchCount, MatchingError, Method};
use crate::graph::Graph;
use crate::scalar::ExactInt;

/// Number of k-subsets of pairwise disjoint edges, by brute force.
///
/// Walks the sorted edge list, splitting on each edge `uv`: matchings
/// without it (`G - e`) plus matchings through it (`G - {u, v}`, one fewer
/// edge to place). A branch stops as soon as fewer edges remain than still
/// need placing.
pub fn count_matchings_oracle<T: ExactInt>(g: &Graph, k: usize) -> MatchCount<T> {
    let mut used = vec![false; g.n()];
    let value = if k > g.n() / 2 { T::zero() } else { split(g.edges(), k, &mut used) };
    MatchCount::exact(k, value, Method::Oracle)
}

fn split<T: ExactInt>(edges: &[(usize, usize)], k: usize, used: &mut [bool]) -> T {
    if k == 0 {
        return T::one();
    }
    let mut total = T::zero();
    for (i, &(u, v)) in edges.iter().enumerate() {
        // edges[i..] must still hold k edges
        if edges.len() - i < k {
            break;
        }
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        total = total + split(&edges[i + 1..], k - 1, used);
        used[u] = false;
        used[v] = false;
    }
    total
}

/// `p(G, uv; k)`: k-matchings that use the edge `uv`, i.e. `p(G - {u, v}; k - 1)`.
pub fn count_containing_edge<T: ExactInt>(
    g: &Graph,
    (u, v): (usize, usize),
    k: usize,
) -> Result<MatchCount<T>, MatchingError> {
    if !g.has_edge(u, v) {
        return Err(MatchingError::NoSuchEdge(u, v));
    }
    if k == 0 {
        return Ok(MatchCount::exact(0, T::zero(), Method::Oracle));
    }
    let rest = g.delete_vertex_pair(u, v)?;
    let inner: MatchCount<T> = count_matchings_oracle(&rest, k - 1);
    Ok(MatchCount::exact(k, inner.value, Method::Oracle))
}

/// Coefficients `p(G; 0), ..., p(G; n/2)`. The coefficient `p(G; k)` goes
/// with the monomial `w1^(n - 2k) w2^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct MatchingPolynomial<T: ExactInt> {
    pub n: usize,
    #[serde(serialize_with = "crate::report::decimal_seq")]
    pub coefficients: Vec<T>,
}

impl<T: ExactInt> MatchingPolynomial<T> {
    /// Evaluates the polynomial at vertex weight `w1` and edge weight `w2`.
    pub fn eval(&self, w1: &T, w2: &T) -> T {
        self.coefficients.iter().enumerate().fold(T::zero(), |acc, (k, c)| {
            let a = num_traits::pow(w1.clone(), self.n - 2 * k);
            let b = num_traits::pow(w2.clone(), k);
            acc + c.clone() * a * b
        })
    }

    /// Total number of matchings, the value at `w1 = w2 = 1`.
    pub fn total(&self) -> T {
        self.coefficients.iter().fold(T::zero(), |acc, c| acc + c.clone())
    }
}

pub fn matching_polynomial<T: ExactInt>(g: &Graph) -> MatchingPolynomial<T> {
    let coefficients = (0..=g.n() / 2).map(|k| count_matchings_oracle(g, k).value).collect();
    MatchingPolynomial { n: g.n(), coefficients }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn oracle(g: &Graph, k: usize) -> i64 {
        count_matchings_oracle::<i64>(g, k).value
    }

    // All k-subsets of edges, kept when pairwise disjoint.
    fn subsets(g: &Graph, k: usize) -> i64 {
        fn rec(e: &[(usize, usize)], start: usize, k: usize, chosen: &mut Vec<(usize, usize)>) -> i64 {
            if chosen.len() == k {
                let mut seen = std::collections::HashSet::new();
                return chosen.iter().all(|&(u, v)| seen.insert(u) && seen.insert(v)) as i64;
            }
            (start..e.len())
                .map(|i| {
                    chosen.push(e[i]);
                    let r = rec(e, i + 1, k, chosen);
                    chosen.pop();
                    r
                })
                .sum()
        }
        rec(g.edges(), 0, k, &mut Vec::new())
    }

    #[test]
    fn k4_two_matchings() {
        assert_eq!(oracle(&fam(FamilySpec::Complete { n: 4 }), 2), 3);
    }

    #[test]
    fn zero_matching_is_one() {
        assert_eq!(oracle(&fam(FamilySpec::Complete { n: 5 }), 0), 1);
        assert_eq!(oracle(&Graph::empty(0), 0), 1);
    }

    #[test]
    fn c6_perfect_matchings() {
        assert_eq!(oracle(&fam(FamilySpec::Cycle { n: 6 }), 3), 2);
    }

    #[test]
    fn k_above_half_n() {
        assert_eq!(oracle(&fam(FamilySpec::Complete { n: 5 }), 3), 0);
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        for spec in [
            FamilySpec::Complete { n: 6 },
            FamilySpec::CompleteBipartite { p: 3, q: 4 },
            FamilySpec::Sunlet { k: 5 },
            FamilySpec::Caterpillar { k: 8 },
        ] {
            let g = fam(spec);
            for k in 0..=g.n() / 2 {
                assert_eq!(oracle(&g, k), subsets(&g, k), "{spec} k={k}");
            }
        }
    }

    #[test]
    fn containing_edge() {
        let p4 = fam(FamilySpec::Path { n: 4 });
        let c = |g: &Graph, e, k| count_containing_edge::<i64>(g, e, k).unwrap().value;
        assert_eq!(c(&p4, (1, 2), 1), 1);
        assert_eq!(c(&p4, (1, 2), 2), 0);
        let c6 = fam(FamilySpec::Cycle { n: 6 });
        for &e in c6.edges() {
            assert_eq!(c(&c6, e, 3), 1);
        }
        assert_eq!(count_containing_edge::<i64>(&p4, (0, 2), 1), Err(MatchingError::NoSuchEdge(0, 2)));
    }

    #[test]
    fn polynomials() {
        let coeffs = |g: &Graph| matching_polynomial::<i64>(g).coefficients;
        assert_eq!(coeffs(&fam(FamilySpec::Path { n: 4 })), vec![1, 3, 1]);
        assert_eq!(coeffs(&fam(FamilySpec::Cycle { n: 4 })), vec![1, 4, 2]);
        assert_eq!(coeffs(&Graph::empty(1)), vec![1]);
        assert_eq!(coeffs(&Graph::empty(0)), vec![1]);
    }

    #[test]
    fn polynomial_eval() {
        // P4: w1^4 + 3 w1^2 w2 + w2^2
        let p = matching_polynomial::<i64>(&fam(FamilySpec::Path { n: 4 }));
        assert_eq!(p.eval(&2, &3), 16 + 3 * 4 * 3 + 9);
        // total matchings of P_n is a Fibonacci number
        assert_eq!(p.total(), 5);
    }
}
