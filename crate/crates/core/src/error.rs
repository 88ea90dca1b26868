//! Shared error type for algebra construction and homological routines.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ideal not admissible at length bound {length}: surviving paths {surviving:?}")]
    NotAdmissibleAtBound { length: usize, surviving: Vec<String> },

    #[error("malformed relation: {0}")]
    MalformedRelation(String),

    #[error("malformed morphism: {0}")]
    MalformedMorphism(String),

    #[error("projective dimension exceeds {bound} for term in degree {degree}")]
    PdimExceeded { bound: usize, degree: isize },

    #[error("term in degree {degree} is not projective")]
    NonProjectiveTerm { degree: isize },

    #[error("dimension sequence did not become periodic within bound {bound}: {dims:?}")]
    NonStabilizing { bound: usize, dims: Vec<usize> },

    #[error("bimodule syzygy at step {step} does not restrict to a projective module")]
    BimoduleSyzygyNotLambdaProjective { step: usize },

    #[error("enumeration inconclusive: {0}")]
    NotEnumerable(String),

    #[error("shift window [{lo}, {hi}] too small: {reason}")]
    WindowTooSmall { lo: i64, hi: i64, reason: String },

    #[error("maps at positions {at} and {} do not compose", at + 1)]
    MismatchedChain { at: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
