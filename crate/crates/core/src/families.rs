//! Closed-form matching counts for named graph families.
//!
//! These are independent of the degree-based formulas: paths and cycles use
//! binomial coefficients, caterpillars and sunlets use fixed polynomials in
//! the family parameter, each valid from a stated threshold upward.

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{generate, FamilySpec, GraphError};
use crate::matching::{count_matchings_oracle, MatchCount, Method};
use crate::scalar::{frac, int, q, ExactInt};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyCountQuery {
    pub spec: FamilySpec,
    pub k: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("no closed form for {k}-matchings of {family}")]
    NoClosedForm { family: &'static str, k: usize },
    #[error("closed form for {k}-matchings of {family} needs {need}, got {param} = {value}")]
    BelowThreshold { family: &'static str, k: usize, param: &'static str, value: usize, need: String },
    #[error("{family} recurrence at {k}-matchings: {sum} is not divisible by {k}")]
    InexactDivision { family: &'static str, k: usize, sum: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial<T: ExactInt>(n: i64, k: i64) -> T {
    if n < 0 || k < 0 || k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    // each prefix product C(n, i) is an integer, so the division is exact
    (0..k).fold(T::one(), |acc, i| acc * int::<T>(n - i) / int::<T>(i + 1))
}

/// `p(F; k)` from the family's closed form.
pub fn family_count<T: ExactInt>(query: &FamilyCountQuery) -> Result<MatchCount<T>, FamilyError> {
    let FamilyCountQuery { spec, k } = *query;
    spec.validate()?;
    let no_form = || FamilyError::NoClosedForm { family: spec.name(), k };
    let value = match spec {
        FamilySpec::Path { n } => binomial(n as i64 - k as i64, k as i64),
        FamilySpec::Cycle { n } => {
            if k == 0 {
                return Err(below(&spec, k, "k", 0, "k >= 1".into()));
            }
            // n/k C(n-k-1, k-1); k C(n-k, k) = n C(n-k-1, k-1) keeps it exact
            let (n, k) = (n as i64, k as i64);
            binomial::<T>(n - k - 1, k - 1) * int::<T>(n) / int::<T>(k)
        }
        FamilySpec::Star { n } => match k {
            0 => T::one(),
            1 => T::of(n - 1),
            2 => T::zero(),
            _ => return Err(no_form()),
        },
        FamilySpec::Caterpillar { k: size } => {
            if !(2..=5).contains(&k) {
                return Err(no_form());
            }
            if size < k + 2 {
                return Err(below(&spec, k, "k", size, format!("k >= {}", k + 2)));
            }
            caterpillar_polynomial::<T>(size as i64, k).to_integer()
        }
        FamilySpec::Sunlet { k: size } => {
            if !(3..=6).contains(&k) {
                return Err(no_form());
            }
            if size < k + 1 {
                return Err(below(&spec, k, "k", size, format!("k >= {}", k + 1)));
            }
            sunlet_polynomial::<T>(size as i64, k).to_integer()
        }
        FamilySpec::Complete { .. } | FamilySpec::CompleteBipartite { .. } => return Err(no_form()),
    };
    Ok(MatchCount::exact(k, value, Method::Formula))
}

fn below(spec: &FamilySpec, k: usize, param: &'static str, value: usize, need: String) -> FamilyError {
    FamilyError::BelowThreshold { family: spec.name(), k, param, value, need }
}

/// Matchings of the caterpillar `P_{k,k-4}` by size `r` (2..=5), valid for
/// `k >= r + 2`.
fn caterpillar_polynomial<T: ExactInt>(k: i64, r: usize) -> Ratio<T> {
    let k_ = int::<T>(k);
    let c = |x: i64| int::<T>(x);
    match r {
        2 => q(&(c(2) * k_.clone() * (k_ - c(7)) + c(25))),
        3 => frac::<T>(1, 3) * q(&((c(2 * k - 9)) * c(2 * k * k - 18 * k + 43))),
        4 => frac::<T>(2, 3) * q(&(k_.clone() * c(k - 11) * c(k * k - 11 * k + 64))) + q(&c(681)),
        5 => {
            let quartic = 2 * k.pow(4) - 52 * k.pow(3) + 522 * k * k - 2392 * k + 4215;
            frac::<T>(1, 15) * q(&(c(2 * k - 13) * c(quartic)))
        }
        _ => unreachable!("caterpillar closed forms cover r = 2..=5"),
    }
}

/// Matchings of the sunlet `C_{k,k}` by size `r` (3..=6), valid for
/// `k >= r + 1`.
fn sunlet_polynomial<T: ExactInt>(k: i64, r: usize) -> Ratio<T> {
    let c = |x: i64| q(&int::<T>(x));
    match r {
        3 => frac::<T>(2, 3) * c(k) * c(2 * k * k - 12 * k + 19),
        4 => frac::<T>(2, 3) * c(k) * c(k - 4) * c(k * k - 8 * k + 18),
        5 => {
            let quartic = 2 * k.pow(4) - 40 * k.pow(3) + 310 * k * k - 1100 * k + 1503;
            frac::<T>(2, 15) * c(k) * c(quartic)
        }
        6 => {
            let quartic = 2 * k.pow(4) - 48 * k.pow(3) + 452 * k * k - 1968 * k + 3335;
            frac::<T>(2, 45) * c(k) * c(k - 6) * c(quartic)
        }
        _ => unreachable!("sunlet closed forms cover r = 3..=6"),
    }
}

/// The expanded cycle polynomials `p(C_n; k)` for `k` in 3..=6, e.g.
/// `n (n-4)(n-5) / 6` for `k = 3`. Each agrees with the binomial form for
/// `n >= k + 1`.
pub fn cycle_polynomial<T: ExactInt>(n: usize, k: usize) -> Result<T, FamilyError> {
    if !(3..=6).contains(&k) {
        return Err(FamilyError::NoClosedForm { family: "cycle", k });
    }
    if n < k + 1 || n < 3 {
        return Err(FamilyError::BelowThreshold {
            family: "cycle",
            k,
            param: "n",
            value: n,
            need: format!("n >= {}", (k + 1).max(3)),
        });
    }
    let n = n as i64;
    let den = [6, 24, 120, 720][k - 3];
    let prod = (k as i64 + 1..2 * k as i64).fold(n, |acc, j| acc * (n - j));
    Ok((Ratio::new(int::<T>(prod), int::<T>(den))).to_integer())
}

/// `p(C_{k,k}; r) = (k / r) [p(P_{k+1,k-3}; r-1) + p(P_{k,k-4}; r-1)]`, with
/// the caterpillar counts taken from the oracle. Needs `k >= 4`, `r >= 1`.
pub fn sunlet_via_caterpillars<T: ExactInt>(k: usize, r: usize) -> Result<T, FamilyError> {
    if r == 0 {
        return Err(FamilyError::NoClosedForm { family: "sunlet", k: r });
    }
    let big = generate(&FamilySpec::Caterpillar { k: k + 1 })?;
    let small = generate(&FamilySpec::Caterpillar { k })?;
    let sum: T = count_matchings_oracle::<T>(&big, r - 1).value + count_matchings_oracle::<T>(&small, r - 1).value;
    let scaled = sum * T::of(k);
    let (value, rem) = scaled.div_rem(&T::of(r));
    if !rem.is_zero() {
        return Err(FamilyError::InexactDivision { family: "sunlet", k: r, sum: scaled.to_string() });
    }
    Ok(value)
}
