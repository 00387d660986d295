use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd undefined: both arguments are zero")]
    GcdUndefined,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{element} is not in {space}")]
    NotInSpace { element: String, space: &'static str },
    #[error("not in J(A,Δ): {0}")]
    NotInJAlgebra(String),
    #[error("z ∉ M: {0}")]
    NotInModule(String),
    #[error("seed must be nonzero")]
    ZeroSeed,
    #[error("split into homogeneous parts first")]
    Inhomogeneous,
    #[error("input must have even support: {0}")]
    OddSupport(String),
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
