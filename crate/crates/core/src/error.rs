use thiserror::Error;

/// Everything that can go wrong while building semigroups or evaluating
/// formulas on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),

    #[error("not a numerical semigroup (infinite complement): gcd of generators is {gcd}")]
    NotNumericalSemigroup { gcd: i64 },

    #[error("Apéry modulus must lie in S, got {0}")]
    AperyModulusNotInSemigroup(i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("semigroup too large: genus {genus} exceeds the limit of {limit}")]
    TooLarge { genus: i64, limit: i64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("semigroup is not {d}-symmetric: gap {gap} has F(S)-{gap} outside S")]
    NotDSymmetric { d: i64, gap: i64 },

    #[error("H_S has a pole at x = 1 (root index {index} is divisible by d = {d})")]
    Pole { d: i64, index: i64 },

    #[error("floating evaluation for d = {d} is {residual:e} away from an integer")]
    NumericalFailure { d: i64, residual: f64 },

    #[error(
        "insufficient samples in residue class {residue} mod {d}: found {found}, need {required}"
    )]
    InsufficientSamples {
        residue: i64,
        d: i64,
        found: usize,
        required: usize,
    },

    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
