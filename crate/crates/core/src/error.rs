use thiserror::Error;

/// Everything that can go wrong while building or checking a problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("the polarization element vanishes on every root; the flag is a point")]
    TrivialFlag,
    #[error("root {root:?} of R_m^+ restricts to zero on z(k)")]
    DegenerateFunctional { root: Vec<i64> },

    #[error("ray {index} {ray:?} is zero or not primitive")]
    NonPrimitiveRay { index: usize, ray: Vec<i64> },
    #[error("cone {index} is not unimodular (determinant {det})")]
    NonUnimodularCone { index: usize, det: String },
    #[error("fan is not complete: {reason}")]
    IncompleteFan { reason: String },
    #[error("malformed fan: {reason}")]
    MalformedFan { reason: String },
    #[error("the toric fiber is not Fano")]
    NotFano,

    #[error("twist basis vector {index} does not annihilate root {root:?} of R_o")]
    NotInCenter { index: usize, root: Vec<i64> },
    #[error("twist basis is not a basis of z(k): {reason}")]
    NotABasis { reason: String },
    #[error("twist image has rank {rank}, fiber dimension is {dim}")]
    RankDeficient { rank: usize, dim: usize },

    #[error("syntax error at {path}: {reason}")]
    Syntax { path: String, reason: String },
    #[error("bad rational {value:?} at {path}")]
    BadRational { path: String, value: String },
    #[error("dimension mismatch at {path}: expected {expected}, found {found}")]
    DimensionMismatch {
        path: String,
        expected: usize,
        found: usize,
    },
    #[error("preset parameter n = {n} is too small (need n >= {min})")]
    RankTooSmall { n: u64, min: u64 },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
