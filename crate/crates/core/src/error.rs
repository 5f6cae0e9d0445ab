use crate::exactmath::DensePolynomial;

/// Everything that can go wrong in the core crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cyclotomic exponents admit no (1 - t^i) product form (negative exponent at i = {index})")]
    NoProductForm { index: usize },
    #[error("series of order {order} is too short, need at least {required}")]
    InsufficientOrder { order: usize, required: usize },
    #[error("reconstruction failed: nonzero coefficient at degree {degree}")]
    ReconstructionFailed { degree: usize },
    #[error("reconstructed numerator has degree {found:?}, expected {expected}")]
    NumeratorDegree { expected: usize, found: Option<usize> },
    #[error("functional equation violated")]
    FunctionalEquationViolated { residual: DensePolynomial },
    #[error("pole order at t = 1 is {found}, expected {expected}")]
    PoleOrderMismatch { expected: usize, found: usize },
    #[error("pole at primitive {root}-th roots of unity has order {order}, not below {dominant}")]
    DominanceViolated { root: usize, order: usize, dominant: usize },
    #[error("invalid problem: {0}")]
    InvalidProblem(&'static str),
    #[error("malformed rational literal")]
    ParseRational,
    #[error("the Laurent table grew to {terms} terms, over the configured limit")]
    TermLimit { terms: usize },
    #[error("computation cancelled")]
    Cancelled,
}
