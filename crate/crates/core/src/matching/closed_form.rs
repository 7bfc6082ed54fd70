//! The closed forms, transcribed term by term as sparse polynomials in the
//! graph invariants.
//!
//! Keeping them as data means every expression is evaluated by the same
//! exact-rational routine, and each table can be read against the printed
//! formula one monomial at a time.

use num_rational::Ratio;

use crate::scalar::{frac, q, ExactInt};

/// An invariant a closed form may reference.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Sym {
    /// Edge count.
    M,
    M1,
    M2,
    F,
    /// `sum of d^4`.
    M14,
    /// `sum of d^5`.
    M15,
    /// `sum over edges of (d(u) d(v))^2`.
    M22,
    Alpha,
    Alpha2,
    Beta,
    Gamma,
    Em1,
    Em2,
    /// `sum over edges of M1(G - {u,v})^2`.
    AuxM1Sq,
    /// `sum over edges of m(G - {u,v}) F(G - {u,v})`.
    AuxMF,
    /// `sum over edges of m(G - {u,v})^2 M1(G - {u,v})`.
    AuxM2M1,
    /// `sum over edges of EM2(G - {u,v})`.
    AuxEm2,
    /// `sum over edges of m(G - {u,v}) M2(G - {u,v})`.
    AuxMM2,
}

use Sym::*;

/// `num/den * product of vars`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Term {
    num: i64,
    den: i64,
    vars: &'static [Sym],
}

const fn t(num: i64, den: i64, vars: &'static [Sym]) -> Term {
    Term { num, den, vars }
}

/// Integer coefficient shorthand.
const fn z(num: i64, vars: &'static [Sym]) -> Term {
    Term { num, den: 1, vars }
}

pub(crate) fn eval<T: ExactInt>(terms: &[Term], value: impl Fn(Sym) -> T) -> Ratio<T> {
    terms.iter().fold(Ratio::from_integer(T::zero()), |acc, term| {
        let prod = term.vars.iter().fold(T::one(), |p, &s| p * value(s));
        acc + frac::<T>(term.num, term.den) * q(&prod)
    })
}

// Sums of m(G - {u,v})^k over edges.

pub(crate) const MU1: &[Term] = &[z(1, &[M, M]), z(1, &[M]), z(-1, &[M1])];

pub(crate) const MU2: &[Term] = &[
    z(1, &[M, M, M]),
    z(1, &[F]),
    z(-2, &[M, M1]),
    z(2, &[M2]),
    z(2, &[M, M]),
    z(-2, &[M1]),
    z(1, &[M]),
];

pub(crate) const MU3: &[Term] = &[
    z(1, &[M, M, M, M]),
    z(-3, &[M, M, M1]),
    z(3, &[M, F]),
    z(6, &[M, M2]),
    z(-1, &[M14]),
    z(-3, &[Alpha]),
    z(3, &[M, M, M]),
    z(-6, &[M, M1]),
    z(3, &[F]),
    z(6, &[M2]),
    z(3, &[M, M]),
    z(-3, &[M1]),
    z(1, &[M]),
];

pub(crate) const MU4: &[Term] = &[
    z(1, &[M15]),
    z(4, &[Alpha2]),
    z(-4, &[M, M14]),
    z(6, &[M22]),
    z(-12, &[M, Alpha]),
    z(6, &[M, M, F]),
    z(12, &[M, M, M2]),
    z(-4, &[M, M, M, M1]),
    z(-4, &[M14]),
    z(-12, &[Alpha]),
    z(12, &[M, F]),
    z(24, &[M, M2]),
    z(-12, &[M, M, M1]),
    z(6, &[F]),
    z(12, &[M2]),
    z(-12, &[M, M1]),
    z(-4, &[M1]),
    z(1, &[M, M, M, M, M]),
    z(4, &[M, M, M, M]),
    z(6, &[M, M, M]),
    z(4, &[M, M]),
    z(1, &[M]),
];

// Sums of M1^k(G - {u,v}) over edges, k = 2, 3, 4. Need girth >= 4.

pub(crate) const XI1: &[Term] = &[z(1, &[M, M1]), z(3, &[M1]), z(-1, &[F]), z(-4, &[M2]), z(-2, &[M])];

pub(crate) const XI2: &[Term] = &[
    z(1, &[M, F]),
    z(3, &[F]),
    z(-1, &[M14]),
    z(-3, &[Alpha]),
    z(6, &[M2]),
    z(-4, &[M1]),
    z(2, &[M]),
];

pub(crate) const XI3: &[Term] = &[
    z(1, &[M, M14]),
    z(4, &[M14]),
    z(-1, &[M15]),
    z(5, &[M1]),
    z(-2, &[M]),
    z(-4, &[Alpha2]),
    z(6, &[Alpha]),
    z(-6, &[F]),
    z(-8, &[M2]),
];

/// Sum of `m(G - {u,v}) M1(G - {u,v})`. Needs girth >= 4.
pub(crate) const VARRHO1: &[Term] = &[
    z(1, &[M, M, M1]),
    z(4, &[M, M1]),
    z(5, &[M1]),
    z(-1, &[M, F]),
    z(-2, &[F]),
    z(-4, &[M, M2]),
    z(-6, &[M2]),
    z(1, &[M14]),
    z(-1, &[M1, M1]),
    z(1, &[Alpha]),
    z(-2, &[M, M]),
    z(-2, &[M]),
    z(2, &[Gamma]),
];

/// Sum of `M2(G - {u,v})`. Needs girth >= 5.
pub(crate) const ETA1: &[Term] = &[
    z(1, &[M, M2]),
    z(-2, &[Em2]),
    z(1, &[Beta]),
    z(-2, &[F]),
    z(-7, &[M2]),
    z(9, &[M1]),
    z(-8, &[M]),
];

/// `EM1 = F + 2 M2 - 4 M1 + 4m`, any simple graph.
pub(crate) const EM1_IDENTITY: &[Term] = &[z(1, &[F]), z(2, &[M2]), z(-4, &[M1]), z(4, &[M])];

/// `beta - alpha = M1^4 - 3F + 2 M1 - 2 M2`, any simple graph.
pub(crate) const BETA_MINUS_ALPHA: &[Term] = &[z(1, &[M14]), z(-3, &[F]), z(2, &[M1]), z(-2, &[M2])];

/// `gamma = 2 EM2 - beta + 4 EM1 - 2F + 6 M1 - 8m`, girth > 3.
pub(crate) const GAMMA_IDENTITY: &[Term] = &[
    z(2, &[Em2]),
    z(-1, &[Beta]),
    z(4, &[Em1]),
    z(-2, &[F]),
    z(6, &[M1]),
    z(-8, &[M]),
];

// Matching counts.

/// Any simple graph.
pub(crate) const P2: &[Term] = &[t(1, 2, &[M, M]), t(1, 2, &[M]), t(-1, 2, &[M1])];

/// Girth > 3.
pub(crate) const P3: &[Term] = &[
    t(1, 6, &[M, M, M]),
    t(1, 2, &[M, M]),
    t(2, 3, &[M]),
    t(-1, 2, &[M, M1]),
    z(-1, &[M1]),
    t(1, 3, &[F]),
    z(1, &[M2]),
];

/// Girth >= 5.
pub(crate) const P4: &[Term] = &[
    t(1, 24, &[M, M, M, M]),
    t(1, 4, &[M, M, M]),
    t(19, 24, &[M, M]),
    t(-11, 4, &[M]),
    t(1, 8, &[M1, M1]),
    t(1, 3, &[M, F]),
    t(-1, 4, &[M, M, M1]),
    z(1, &[M, M2]),
    t(1, 4, &[M14]),
    z(-2, &[M2]),
    t(-5, 4, &[M, M1]),
    t(7, 2, &[M1]),
    z(-1, &[Em2]),
    t(-3, 2, &[F]),
];

/// Girth >= 5. The bracket only: the count is this divided by 5.
pub(crate) const P5_BRACKET: &[Term] = &[
    // m (m^4 + 10 m^3 + 43 m^2 + 54 m - 328) / 24
    t(1, 24, &[M, M, M, M, M]),
    t(10, 24, &[M, M, M, M]),
    t(43, 24, &[M, M, M]),
    t(54, 24, &[M, M]),
    t(-328, 24, &[M]),
    t(5, 4, &[M1, M1]),
    // -alpha (m - 7) / 2
    t(-1, 2, &[Alpha, M]),
    t(7, 2, &[Alpha]),
    t(-5, 6, &[Alpha2]),
    // -M1 (2m^3 + 30m^2 + 61m - 225) / 12
    t(-2, 12, &[M1, M, M, M]),
    t(-30, 12, &[M1, M, M]),
    t(-61, 12, &[M1, M]),
    t(225, 12, &[M1]),
    t(1, 2, &[Beta]),
    // M2 (6m^2 + 66m - 239) / 12
    t(6, 12, &[M2, M, M]),
    t(66, 12, &[M2, M]),
    t(-239, 12, &[M2]),
    // F (6m^2 + 24m - 149) / 24
    t(6, 24, &[F, M, M]),
    t(24, 24, &[F, M]),
    t(-149, 24, &[F]),
    // M1^4 (m + 10) / 12
    t(1, 12, &[M14, M]),
    t(10, 12, &[M14]),
    t(1, 4, &[M22]),
    z(-1, &[Em2]),
    t(-5, 24, &[M15]),
    t(1, 8, &[AuxM1Sq]),
    t(1, 3, &[AuxMF]),
    t(-1, 4, &[AuxM2M1]),
    z(-1, &[AuxEm2]),
    z(1, &[AuxMM2]),
];
