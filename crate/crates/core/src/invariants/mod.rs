//! Degree-based and incidence-based invariants, computed exactly.
//!
//! Notation used throughout: `d(u)` is the vertex degree and, for an edge
//! `e = uv`, `d(e) = d(u) + d(v) - 2` is its degree in the line graph. Two
//! edges are *incident* (`e ~ f`) when they share a vertex; each unordered
//! incident pair is visited once, at its shared vertex.

mod degree;
mod incidence;

use thiserror::Error;

pub use degree::{average_neighbor_degree, degree_invariants, degree_invariants_with, neighbor_degree_sum, DegreeInvariants};
pub use incidence::{incidence_invariants, incidence_invariants_with, IncidenceInvariants};

/// Largest exponent accepted for the general Zagreb sums.
pub const MAX_LAMBDA: u32 = 8;

/// Exponents always computed: the matching formulas need `M1^4`, `M1^5`,
/// `M2^2` and `alpha_2`.
pub const REQUIRED_LAMBDAS: [u32; 5] = [1, 2, 3, 4, 5];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("exponent {0} exceeds the supported maximum {MAX_LAMBDA}")]
    ExponentTooLarge(u32),
}
