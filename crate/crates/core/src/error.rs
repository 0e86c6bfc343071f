use thiserror::Error;

use crate::quiver::DimVec3;

/// Everything that can go wrong in the library. Variant names double as the
/// diagnostic tags printed by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("InvalidModulus: {0} is not a prime in [5, 2^32)")]
    InvalidModulus(u64),
    #[error("FieldMismatch: operands live over different fields")]
    FieldMismatch,
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("UnsupportedField: {0}")]
    UnsupportedField(&'static str),
    #[error("Parse: {0}")]
    Parse(String),

    #[error("InvalidArrows: preprojective recursion needs at least 2 arrows, got {0}")]
    InvalidArrows(u64),
    #[error("ArrowMismatch: representations of Q({0}) and Q({1})")]
    ArrowMismatch(u64, u64),
    #[error("NotSquare: matrix is {0}x{1}")]
    NotSquare(usize, usize),
    #[error("DecompositionSearch: no preprojective cone found for ({0},{1}) over Q({2})")]
    DecompositionSearch(u64, u64, u64),

    #[error("NoValidTwist: chi(E(j)) >= 0 for every twist j")]
    NoValidTwist,
    #[error("TwistOutOfRange: normalizing twist exceeds |j| <= 10^6")]
    TwistOutOfRange,
    #[error("RankTooSmall: dimension vector yields rank {0} < 1")]
    RankTooSmall(i64),
    #[error("RelationViolated: A12[{j}]*A01[{i}] != A02[mu({i},{j})]")]
    RelationViolated { i: usize, j: usize },
    #[error("DimensionInfeasible: left general sampling needs a <= b and (a, b) != (1, 1), got {0}")]
    DimensionInfeasible(DimVec3),
    #[error("GenericityFailure: {0}")]
    GenericityFailure(String),

    #[error("NonPositiveEuler: reduction produced negative arrow count {0}")]
    NonPositiveEuler(i64),
    #[error("IterationCap: reduction exceeded {0} iterations")]
    IterationCap(usize),
    #[error("NegativeCount: 1 - chi(beta, beta) = {0} < 0")]
    NegativeCount(i64),
    #[error("NonDivisible: {h} does not divide {alpha}")]
    NonDivisible { alpha: DimVec3, h: u64 },
    #[error("DepthMismatch: depth {chern} from Chern data but {alpha} from dimension vector")]
    DepthMismatch { chern: u64, alpha: u64 },
}

impl Error {
    /// The bare variant name, e.g. `"NoValidTwist"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::FieldMismatch => "FieldMismatch",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::UnsupportedField(_) => "UnsupportedField",
            Error::Parse(_) => "Parse",
            Error::InvalidArrows(_) => "InvalidArrows",
            Error::ArrowMismatch(..) => "ArrowMismatch",
            Error::NotSquare(..) => "NotSquare",
            Error::DecompositionSearch(..) => "DecompositionSearch",
            Error::NoValidTwist => "NoValidTwist",
            Error::TwistOutOfRange => "TwistOutOfRange",
            Error::RankTooSmall(_) => "RankTooSmall",
            Error::RelationViolated { .. } => "RelationViolated",
            Error::DimensionInfeasible(_) => "DimensionInfeasible",
            Error::GenericityFailure(_) => "GenericityFailure",
            Error::NonPositiveEuler(_) => "NonPositiveEuler",
            Error::IterationCap(_) => "IterationCap",
            Error::NegativeCount(_) => "NegativeCount",
            Error::NonDivisible { .. } => "NonDivisible",
            Error::DepthMismatch { .. } => "DepthMismatch",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
