use thiserror::Error;

use crate::geometry::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cone is not pointed: {combination} sums to zero, so the cone contains a line")]
    NotPointed { combination: String },

    #[error("cone is not full-dimensional: generators span a subspace of dimension {rank} < {dim}")]
    NotFullDimensional { rank: usize, dim: usize },

    #[error("zero vector is not a valid ray")]
    ZeroRay,

    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("scale factor {0} is negative")]
    NegativeScale(String),

    #[error("point {0} lies outside the semigroup")]
    PointOutsideSemigroup(LatticePoint),

    #[error("ideals live over different semigroups")]
    AmbientMismatch,

    #[error("operation is undefined on the zero ideal")]
    ZeroIdeal,

    #[error("power must be at least 1, got {0}")]
    InvalidPower(u64),

    #[error("minimal point search did not terminate: {0}")]
    UnboundedMinimalSet(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("Frobenius exponent e must be at least 1")]
    ZeroExponent,

    #[error("p^e overflows: p={p}, e={e}")]
    Overflow { p: u64, e: u32 },

    #[error("t = {t} has {p} in its denominator; the exponent t must have denominator coprime to p")]
    PDividesDenominator { t: String, p: u64 },

    #[error("t = {0} is negative")]
    NegativeExponent(String),

    #[error("exponent n = {n} is not admissible: t(p^(en)-1) is an integer only for multiples of {period}")]
    InadmissibleExponent { n: u32, period: u32 },

    #[error("no stabilization after {iterations} iterations; chain: {chain}")]
    NoStabilization { iterations: usize, chain: String },

    #[error("expected {expected} divisor coefficients (one per facet), found {found}")]
    CoefficientCount { expected: usize, found: usize },

    #[error(
        "K_X + Delta is not Q-Cartier for this data: the system <w, v_i> = (1-p^e)(d_i - 1) has no rational solution"
    )]
    NotPrincipal,

    #[error(
        "(1-p^e)(K_X + Delta) is not Cartier: solution {0} is not integral (index not coprime to p, or no valid e)"
    )]
    IndexNotCoprime(String),

    #[error("divisor has negative coefficient {value} on facet {facet}")]
    NotEffective { facet: usize, value: String },

    #[error("face lattice has {0} faces; at most 64 are supported")]
    TooManyFaces(usize),

    #[error("every fixed ideal is zero")]
    AllFixedIdealsZero,

    #[error("candidate pool has {size} points, above the cap of {cap}")]
    PoolTooLarge { size: usize, cap: usize },

    #[error("perturbed non-LC ideal {perturbed} differs from the face ideal {face}")]
    PerturbationMismatch { perturbed: String, face: String },
}

pub type Result<T> = std::result::Result<T, Error>;
