use serde::Serialize;

use super::closed_form as cf;
use super::formula::FormulaInputs;
use crate::graph::Graph;
use crate::invariants::degree_invariants;
use crate::scalar::ExactInt;

/// The five edge-deletion sums the 5-matching formula keeps as sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct Aux5<T: ExactInt> {
    /// `sum of M1(G - {u,v})^2`
    #[serde(serialize_with = "crate::report::decimal")]
    pub m1_squared: T,
    /// `sum of m(G - {u,v}) F(G - {u,v})`
    #[serde(serialize_with = "crate::report::decimal")]
    pub m_f: T,
    /// `sum of m(G - {u,v})^2 M1(G - {u,v})`
    #[serde(serialize_with = "crate::report::decimal")]
    pub m_squared_m1: T,
    /// `sum of EM2(G - {u,v})`
    #[serde(serialize_with = "crate::report::decimal")]
    pub em2: T,
    /// `sum of m(G - {u,v}) M2(G - {u,v})`
    #[serde(serialize_with = "crate::report::decimal")]
    pub m_m2: T,
}

/// Aggregates over all edges `uv` of invariants of `G - {u, v}`, measured
/// directly on each deleted subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct LemmaSums<T: ExactInt> {
    /// `mu[k-1] = sum of m(G - {u,v})^k`, k = 1..=4.
    #[serde(serialize_with = "crate::report::decimal_seq")]
    pub mu: [T; 4],
    /// `xi[k-2] = sum of M1^k(G - {u,v})`, k = 2..=4.
    #[serde(serialize_with = "crate::report::decimal_seq")]
    pub xi: [T; 3],
    /// `sum of m(G - {u,v}) M1(G - {u,v})`
    #[serde(serialize_with = "crate::report::decimal")]
    pub varrho1: T,
    /// `sum of M2(G - {u,v})`
    #[serde(serialize_with = "crate::report::decimal")]
    pub eta1: T,
    pub aux5: Aux5<T>,
}

pub fn lemma_sums<T: ExactInt>(g: &Graph) -> LemmaSums<T> {
    let zero = || T::zero();
    let mut mu = [zero(), zero(), zero(), zero()];
    let mut xi = [zero(), zero(), zero()];
    let (mut varrho1, mut eta1) = (zero(), zero());
    let mut aux = Aux5 { m1_squared: zero(), m_f: zero(), m_squared_m1: zero(), em2: zero(), m_m2: zero() };

    for &(u, v) in g.edges() {
        let h = g.delete_vertex_pair(u, v).expect("edge endpoints are distinct vertices");
        let d = degree_invariants::<T>(&h);
        let m = d.m.clone();

        let mut p = T::one();
        for slot in &mut mu {
            p = p * m.clone();
            *slot = slot.clone() + p.clone();
        }
        for (slot, l) in xi.iter_mut().zip(2..) {
            *slot = slot.clone() + d.m1_pow(l).clone();
        }
        varrho1 = varrho1 + m.clone() * d.m1.clone();
        eta1 = eta1 + d.m2.clone();

        aux.m1_squared = aux.m1_squared + d.m1.clone() * d.m1.clone();
        aux.m_f = aux.m_f + m.clone() * d.f.clone();
        aux.m_squared_m1 = aux.m_squared_m1 + m.clone() * m.clone() * d.m1.clone();
        aux.em2 = aux.em2 + d.em2.clone();
        aux.m_m2 = aux.m_m2 + m * d.m2;
    }
    LemmaSums { mu, xi, varrho1, eta1, aux5: aux }
}

/// The same aggregates from whole-graph invariants via the closed forms.
///
/// `mu` holds on every graph; `xi` and `varrho1` need girth >= 4 and `eta1`
/// needs girth >= 5.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaClosedForms<T: ExactInt> {
    pub mu: [T; 4],
    pub xi: [T; 3],
    pub varrho1: T,
    pub eta1: T,
}

impl<T: ExactInt> LemmaClosedForms<T> {
    pub fn from_inputs(x: &FormulaInputs<T>) -> Self {
        LemmaClosedForms {
            mu: [cf::MU1, cf::MU2, cf::MU3, cf::MU4].map(|e| x.eval_int(e)),
            xi: [cf::XI1, cf::XI2, cf::XI3].map(|e| x.eval_int(e)),
            varrho1: x.eval_int(cf::VARRHO1),
            eta1: x.eval_int(cf::ETA1),
        }
    }

    pub fn of(g: &Graph) -> Self {
        Self::from_inputs(&FormulaInputs::of(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn both(spec: FamilySpec) -> (LemmaSums<i64>, LemmaClosedForms<i64>) {
        let g = generate(&spec).unwrap();
        (lemma_sums(&g), LemmaClosedForms::of(&g))
    }

    #[test]
    fn mu1_c4() {
        let (s, c) = both(FamilySpec::Cycle { n: 4 });
        assert_eq!((s.mu[0], c.mu[0]), (4, 4));
    }

    #[test]
    fn xi1_p4() {
        let (s, c) = both(FamilySpec::Path { n: 4 });
        assert_eq!((s.xi[0], c.xi[0]), (4, 4));
    }

    #[test]
    fn eta1_p5() {
        let (s, c) = both(FamilySpec::Path { n: 5 });
        assert_eq!((s.eta1, c.eta1), (10, 10));
    }

    #[test]
    fn high_girth_family_agrees_everywhere() {
        for spec in [FamilySpec::Sunlet { k: 6 }, FamilySpec::Caterpillar { k: 9 }, FamilySpec::Cycle { n: 7 }] {
            let (s, c) = both(spec);
            assert_eq!(s.mu, c.mu, "{spec}");
            assert_eq!(s.xi, c.xi, "{spec}");
            assert_eq!(s.varrho1, c.varrho1, "{spec}");
            assert_eq!(s.eta1, c.eta1, "{spec}");
        }
    }

    #[test]
    fn mu_holds_with_triangles() {
        let (s, c) = both(FamilySpec::Complete { n: 6 });
        assert_eq!(s.mu, c.mu);
    }
}
