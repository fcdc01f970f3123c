//! Gamma-matrix algebra.
//!
//! A gamma-matrix is a real `n x n` matrix diagonalized by the orthonormal
//! sine-cosine basis `Q_n`. Every such matrix splits uniquely into a real
//! symmetric circulant and a constrained symmetric reverse circulant, and is
//! stored here as the pair of first rows `(c, b)`.
//!
//! The crate provides
//!
//! - [`spectral`]: the basis `Q_n`, vector symmetry and the elementary folds
//!   (reversal, symmetrize/antisymmetrize, even/odd decimation);
//! - [`transforms`]: the recursive `CS`/`SN` kernels, the IDSCT (`Q_n^T x`) and
//!   DSCT (`Q_n t`) transforms with exact operation counting;
//! - [`algebra`]: the [`GammaMatrix`] type with fast products, eigenvalues,
//!   inversion and class membership;
//! - [`toeplitz`]: the Frobenius-optimal gamma approximation of a real
//!   symmetric Toeplitz matrix and clustering diagnostics;
//! - [`pcg`]: preconditioned conjugate gradient for Toeplitz systems;
//! - [`dense`]: brute-force reference implementations used as test oracles.

pub mod algebra;
pub mod dense;
pub mod error;
pub mod pcg;
pub mod spectral;
pub mod toeplitz;
pub mod transforms;

pub use algebra::{decompose_spectrum, GammaClass, GammaMatrix, GammaSpectrum};
pub use dense::DenseMatrix;
pub use error::{GammaError, Result};
pub use pcg::{pcg, PcgOptions, SolveOutcome};
pub use spectral::{BasisVectorSet, Structure, StructuredVector};
pub use toeplitz::{ClusterReport, GeneratorSeq, SymToeplitz};
pub use transforms::{OpCounter, TransformCounts, TransformPlan};
