//! Error type shared across the crate.

use crate::exponent::ExponentVector;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A polynomial with no terms where a Newton polytope is required.
    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    /// Inputs of different ambient dimensions were mixed.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The Minkowski sum is not full-dimensional, so its face lattice
    /// cannot support flag counting or the determinant formulas.
    #[error("Minkowski sum has dimension {dim} < ambient {ambient}")]
    DegenerateSum { dim: usize, ambient: usize },

    /// The polytopes fail the generic-relative-position test. The witness
    /// is an inner normal of an unlocked facet of the sum: no summand
    /// polytope is supported at a vertex in that direction.
    #[error("polytopes are not in generic relative position{}", witness_note(.witness))]
    NotGeneric { witness: Option<ExponentVector> },

    /// Combinatorial coefficients are only defined at critical vertices.
    #[error("vertex {vertex} is not critical")]
    NotCritical { vertex: ExponentVector },

    /// A summand polytope is a single point, so no admissible flags exist
    /// (the top face of every flag needs all summands positive-dimensional).
    #[error("summand polytope {index} is a point; no admissible flags exist")]
    PointSummand { index: usize },

    /// Laurent expansions are only defined at vertices of the Newton
    /// polytope of the denominator product.
    #[error("{point} is not a vertex of the product's Newton polytope")]
    NotVertex { point: ExponentVector },

    /// The given exponent set does not span a pointed cone, so no integer
    /// functional is strictly positive on all of it.
    #[error("exponent set does not span a pointed cone")]
    NotPointed,

    /// The variable named in a query does not exist in the system.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// Malformed input (file format, rational literal, exponent length).
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal identity failed; indicates a bug, not bad input.
    #[error("consistency error: {0}")]
    Inconsistent(String),
}

fn witness_note(witness: &Option<ExponentVector>) -> String {
    match witness {
        Some(xi) => format!(" (witness functional {xi})"),
        None => String::new(),
    }
}
