//! Counting k-matchings: a brute-force oracle, the vertex-pair deletion
//! recurrence, and the degree-based closed forms for `k <= 5`.

mod closed_form;
mod formula;
mod lemmas;
mod oracle;
mod recurrence;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Girth, GraphError};
use crate::scalar::ExactInt;

pub use formula::{formula_girth_bound, p_formula, p_formula_rational, FormulaInputs};
pub use lemmas::{lemma_sums, Aux5, LemmaClosedForms, LemmaSums};
pub use oracle::{count_containing_edge, count_matchings_oracle, matching_polynomial, MatchingPolynomial};
pub use recurrence::count_matchings_recurrence;

/// How a count was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Recurrence,
    Formula,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Recurrence => "recurrence",
            Method::Formula => "formula",
        })
    }
}

/// `p(G; k)` together with its provenance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct MatchCount<T: ExactInt> {
    pub k: usize,
    #[serde(serialize_with = "crate::report::decimal")]
    pub value: T,
    pub method: Method,
    /// Whether the girth hypothesis of the producing method held. Always
    /// true for the oracle and the recurrence.
    pub girth_ok: bool,
}

impl<T: ExactInt> MatchCount<T> {
    pub(crate) fn exact(k: usize, value: T, method: Method) -> Self {
        MatchCount { k, value, method, girth_ok: true }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("closed form for p(G, {k}) requires girth >= {required}, graph has girth {actual}")]
    Girth { k: usize, required: u32, actual: Girth },
    #[error("no closed form for p(G, {0}); formulas cover k = 2..=5")]
    NoFormula(usize),
    #[error("closed form for p(G, {k}) evaluated to {value}, not a non-negative integer")]
    NotACount { k: usize, value: String },
    #[error("recurrence at k = {k}: edge sum {sum} is not divisible by k")]
    InexactDivision { k: usize, sum: String },
    #[error("edge {0} {1} is not in the graph")]
    NoSuchEdge(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
