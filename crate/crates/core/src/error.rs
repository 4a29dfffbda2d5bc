use thiserror::Error;

use crate::hemiring::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    Malformed(String),

    #[error("structure violates the Gamma-hemiring axioms ({} violation(s))", .0.violations.len())]
    InvalidStructure(ValidationReport),

    #[error("carrier of size {0} exceeds the supported maximum of {max}", max = crate::hemiring::MAX_CARRIER)]
    CarrierTooLarge(usize),

    #[error("grade {0} lies outside [0,1]")]
    GradeOutOfRange(String),

    #[error("cannot parse grade {0:?}")]
    BadGrade(String),

    #[error("fuzzy subset has {found} grades but the carrier has {expected} elements")]
    SizeMismatch { expected: usize, found: usize },

    #[error("element {0} is outside the carrier")]
    ElementOutOfRange(usize),

    #[error("Gamma index {0} is outside the Gamma carrier")]
    GammaOutOfRange(usize),

    #[error("homomorphism endpoints do not share one Gamma component")]
    GammaMismatch,

    #[error("ideals are nonempty")]
    EmptySubset,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown claim {0:?}")]
    UnknownClaim(String),

    #[error("invalid instance family: {0}")]
    Family(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
