use thiserror::Error;

/// Every failure the solvers can report.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("identically zero: condition holds for all parameter values")]
    IdenticallyZero,
    #[error("parameter a hits nonpositive integer (a = {a}, n = {n})")]
    HypergeometricPole { a: String, n: u32 },
    #[error("factorization claim violated: remainder {remainder} for l = {l}, n = {n}")]
    FactorizationViolated { l: i64, n: u32, remainder: String },
    #[error("unphysical: a²w must be positive (got {0})")]
    Unphysical(String),
    #[error("no real l branch (discriminant {0})")]
    NoRealBranch(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("insufficient series depth: degree {degree} cannot absorb another derivative")]
    InsufficientDepth { degree: usize },
    #[error("no stabilized root after t0 schedule {tried:?}: {detail}")]
    NotStabilized { tried: Vec<String>, detail: String },
    #[error("cutoff L too small: eigenvalue {index} moved by {shift:e} when the box shrank")]
    CutoffTooSmall { index: usize, shift: f64 },
    #[error("grid too coarse: eigenvalue {index} drifted by {drift:e} between refinements")]
    GridTooCoarse { index: usize, drift: f64 },
    #[error("closed forms not proportional: {left} vs {right}")]
    NotProportional { left: String, right: String },
    #[error("engines disagree: expected {expected}, found {found}")]
    Disagreement { expected: String, found: String },
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("scaling roundtrip mismatch at r = {r}: {lhs} vs {rhs}")]
    ScalingMismatch { r: String, lhs: String, rhs: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
