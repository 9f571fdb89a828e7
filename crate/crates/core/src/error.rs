//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("matrices do not commute: defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    NotCommuting { defect: f64, tol: f64 },
    #[error("joint triangularization stalled: lower-triangular residual {residual:.3e}")]
    DegenerateDeflation { residual: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("quadrature node too close to the spectrum: min |xi - lambda| = {0:.3e}")]
    SingularResolvent(f64),
    #[error("point outside the open unit polydisc: coordinate modulus {0}")]
    OutsideDomain(f64),
    #[error("joint spectral radius {0} is not strictly inside the unit polydisc")]
    SpectrumOnBoundary(f64),
    #[error("kernel specs disagree: {0}")]
    SpecMismatch(String),
    #[error("subspace has numeric rank zero")]
    RankZero,
    #[error("block Gram is singular")]
    SingularGram,
    #[error("subspaces overlap within tolerance: {0}")]
    DegenerateSplit(String),
    #[error("Gram too ill-conditioned for this truncation: lambda_min {lambda_min:.3e} vs tail error {tail:.3e}")]
    IllConditioned { lambda_min: f64, tail: f64 },
    #[error("the new kernel vector already lies in the node span")]
    KernelInSpan,
    #[error("point outside the open row-norm unit ball: row norm {0}")]
    OutsideBall(f64),
    #[error("families are not pairwise orthogonal: max cross inner product {0:.3e}")]
    NotOrthogonal(f64),
    #[error("nilpotent pair parameter at index {0} is zero")]
    ZeroParameter(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
