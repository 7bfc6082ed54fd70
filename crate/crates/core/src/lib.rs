//! Exact k-matching counts from degree-based graph invariants.
//!
//! The number of k-matchings `p(G; k)` of a simple graph is computed three
//! ways: by brute-force enumeration ([`matching::count_matchings_oracle`]),
//! by the vertex-pair deletion recurrence
//! ([`matching::count_matchings_recurrence`]), and for `k <= 5` by closed
//! forms in Zagreb-type invariants ([`matching::p_formula`]), which hold
//! under a girth hypothesis. [`families`] has closed forms for paths,
//! cycles, caterpillars and sunlets, and [`verify`] cross-checks everything
//! on seeded random graphs.
//!
//! All arithmetic is exact. Every computation is generic over an integer
//! scalar ([`ExactInt`]); the aliases below fix it to [`num_bigint::BigInt`].
//!
//! ```
//! use kmatch::graph::{generate, FamilySpec};
//! use kmatch::matching::{count_matchings_oracle, p_formula};
//! use kmatch::Count;
//!
//! let c12 = generate(&FamilySpec::Cycle { n: 12 }).unwrap();
//! let by_formula: Count = p_formula(&c12, 5, false).unwrap();
//! let by_oracle: Count = count_matchings_oracle(&c12, 5);
//! assert_eq!(by_formula.value, by_oracle.value);
//! assert_eq!(by_formula.value, 36.into());
//! ```

pub mod families;
pub mod graph;
pub mod invariants;
pub mod matching;
pub mod report;
pub mod scalar;
pub mod verify;

pub use graph::{Girth, Graph, GraphError};
pub use scalar::ExactInt;

/// Arbitrary-precision integer scalar.
pub type Int = num_bigint::BigInt;
/// Exact rationals over [`Int`].
pub type Rational = num_rational::BigRational;

pub type Count = matching::MatchCount<Int>;
pub type Degrees = invariants::DegreeInvariants<Int>;
pub type Incidence = invariants::IncidenceInvariants<Int>;
pub type Lemmas = matching::LemmaSums<Int>;
pub type Polynomial = matching::MatchingPolynomial<Int>;
