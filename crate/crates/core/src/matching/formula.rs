use num_rational::Ratio;
use num_traits::Signed;

use super::closed_form::{self as cf, Sym, Term};
use super::lemmas::{lemma_sums, Aux5};
use super::{MatchCount, MatchingError, Method};
use crate::graph::{girth, Graph};
use crate::invariants::{degree_invariants, incidence_invariants, DegreeInvariants, IncidenceInvariants};
use crate::scalar::ExactInt;

/// Everything the closed forms read off a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaInputs<T: ExactInt> {
    pub degree: DegreeInvariants<T>,
    pub incidence: IncidenceInvariants<T>,
    /// Edge-deletion sums; only the 5-matching formula reads these.
    pub aux5: Option<Aux5<T>>,
}

impl<T: ExactInt> FormulaInputs<T> {
    pub fn of(g: &Graph) -> Self {
        FormulaInputs { degree: degree_invariants(g), incidence: incidence_invariants(g), aux5: None }
    }

    pub fn with_aux(g: &Graph) -> Self {
        FormulaInputs { aux5: Some(lemma_sums::<T>(g).aux5), ..Self::of(g) }
    }

    pub(crate) fn value(&self, s: Sym) -> T {
        let (d, i) = (&self.degree, &self.incidence);
        let aux = || self.aux5.as_ref().expect("aux5 sums not computed");
        match s {
            Sym::M => d.m.clone(),
            Sym::M1 => d.m1.clone(),
            Sym::M2 => d.m2.clone(),
            Sym::F => d.f.clone(),
            Sym::M14 => d.m1_pow(4).clone(),
            Sym::M15 => d.m1_pow(5).clone(),
            Sym::M22 => d.m2_pow(2).clone(),
            Sym::Alpha => i.alpha.clone(),
            Sym::Alpha2 => i.alpha_pow(2).clone(),
            Sym::Beta => i.beta.clone(),
            Sym::Gamma => i.gamma.clone(),
            Sym::Em1 => d.em1.clone(),
            Sym::Em2 => d.em2.clone(),
            Sym::AuxM1Sq => aux().m1_squared.clone(),
            Sym::AuxMF => aux().m_f.clone(),
            Sym::AuxM2M1 => aux().m_squared_m1.clone(),
            Sym::AuxEm2 => aux().em2.clone(),
            Sym::AuxMM2 => aux().m_m2.clone(),
        }
    }

    pub(crate) fn eval(&self, terms: &[Term]) -> Ratio<T> {
        cf::eval(terms, |s| self.value(s))
    }

    /// Integer-coefficient closed forms are integers by construction.
    pub(crate) fn eval_int(&self, terms: &[Term]) -> T {
        self.eval(terms).to_integer()
    }

    /// `F + 2 M2 - 4 M1 + 4m`, equal to `EM1` on every graph.
    pub fn em1_identity(&self) -> T {
        self.eval_int(cf::EM1_IDENTITY)
    }

    /// `M1^4 - 3F + 2 M1 - 2 M2`, equal to `beta - alpha` on every graph.
    pub fn beta_minus_alpha_identity(&self) -> T {
        self.eval_int(cf::BETA_MINUS_ALPHA)
    }

    /// `2 EM2 - beta + 4 EM1 - 2F + 6 M1 - 8m`, equal to `gamma` when the
    /// girth exceeds 3.
    pub fn gamma_identity(&self) -> T {
        self.eval_int(cf::GAMMA_IDENTITY)
    }
}

/// Smallest girth for which the `k`-matching closed form is proved, or
/// `None` when there is no closed form. Every simple graph has girth >= 3,
/// so `k = 2` is unconditional.
pub fn formula_girth_bound(k: usize) -> Option<u32> {
    match k {
        2 => Some(3),
        3 => Some(4),
        4 | 5 => Some(5),
        _ => None,
    }
}

/// Evaluates the `k`-matching closed form without checking its girth
/// hypothesis. Outside that hypothesis the value need not be a count.
pub fn p_formula_rational<T: ExactInt>(g: &Graph, k: usize) -> Result<Ratio<T>, MatchingError> {
    let value = match k {
        2 => FormulaInputs::of(g).eval(cf::P2),
        3 => FormulaInputs::of(g).eval(cf::P3),
        4 => FormulaInputs::of(g).eval(cf::P4),
        5 => FormulaInputs::with_aux(g).eval(cf::P5_BRACKET) / Ratio::from_integer(T::of(5)),
        _ => return Err(MatchingError::NoFormula(k)),
    };
    Ok(value)
}

/// `p(G; k)` for `k` in `2..=5` from degree-based invariants.
///
/// The girth hypotheses are `g > 3` for `k = 3` and `g >= 5` for `k = 4, 5`.
/// When the hypothesis fails this is an error unless `force` is set, in
/// which case the value is returned with `girth_ok = false` if it happens to
/// be a non-negative integer.
pub fn p_formula<T: ExactInt>(g: &Graph, k: usize, force: bool) -> Result<MatchCount<T>, MatchingError> {
    let required = formula_girth_bound(k).ok_or(MatchingError::NoFormula(k))?;
    let actual = girth(g);
    let girth_ok = actual.at_least(required);
    if !girth_ok && !force {
        return Err(MatchingError::Girth { k, required, actual });
    }
    let value = p_formula_rational::<T>(g, k)?;
    if !value.is_integer() || value.is_negative() {
        return Err(MatchingError::NotACount { k, value: value.to_string() });
    }
    Ok(MatchCount { k, value: value.to_integer(), method: Method::Formula, girth_ok })
}
