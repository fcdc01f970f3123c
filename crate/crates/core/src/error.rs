use thiserror::Error;

use crate::spectral::Structure;

pub type Result<T> = std::result::Result<T, GammaError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GammaError {
    #[error("invalid order {n}: {reason}")]
    InvalidOrder { n: usize, reason: &'static str },

    #[error("vector is not {expected}: deviation {deviation:e} at index {index}")]
    Structure {
        expected: Structure,
        index: usize,
        deviation: f64,
    },

    #[error("reverse-circulant constraint violated: {which} = {value:e}")]
    Constraint { which: &'static str, value: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not a gamma-matrix: reconstruction error {deviation:e}")]
    NotGammaMatrix { deviation: f64 },

    #[error("singular matrix: eigenvalue {index} = {value:e} is below threshold {threshold:e}")]
    Singular {
        index: usize,
        value: f64,
        threshold: f64,
    },

    #[error("matrix is not symmetric: deviation {deviation:e}")]
    Asymmetric { deviation: f64 },

    #[error("matrix is not positive definite: curvature {curvature:e} at iteration {iteration}")]
    Indefinite { iteration: usize, curvature: f64 },

    #[error("preconditioner is not positive definite: eigenvalue {index} = {value:e}")]
    PreconditionerNotPositive { index: usize, value: f64 },

    #[error("gamma approximation violates stationarity by {violation:e}")]
    FormulaDiscrepancy {
        violation: f64,
        formula: (Vec<f64>, Vec<f64>),
        oracle: Option<(Vec<f64>, Vec<f64>)>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
