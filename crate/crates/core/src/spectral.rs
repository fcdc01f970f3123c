//! The sine-cosine eigenvector basis and vector symmetry.
//!
//! Columns of `Q_n` are, in order,
//!
//! ```text
//! q(0)     = u(0) / sqrt(n)
//! q(j)     = sqrt(2/n) u(j),   1 <= j <= (n-1)/2      u(j)_k = cos(2 pi j k / n)
//! q(n/2)   = u(n/2) / sqrt(n)  (n even)
//! q(n-j)   = sqrt(2/n) v(j),   1 <= j <= (n-1)/2      v(j)_k = sin(2 pi j k / n)
//! ```
//!
//! The fast transforms never materialize `Q_n`; [`BasisVectorSet`] exists for
//! the reference path and tests.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{GammaError, Result};

/// Absolute tolerance for structure checks, scaled by `max(1, |x|_inf)`.
pub const STRUCTURE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Structure {
    General,
    /// `x[j] == x[n - j]` for `1 <= j <= n/2`.
    Symmetric,
    /// `x[j] == -x[n - j]` for `1 <= j <= n/2`; forces `x[0] == 0`.
    Asymmetric,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Structure::General => "general",
            Structure::Symmetric => "symmetric",
            Structure::Asymmetric => "asymmetric",
        })
    }
}

/// Scale constant of column `j` of `Q_n`: `1/sqrt(n)` for `j = 0` and for
/// `j = n/2` when `n` is even, `sqrt(2/n)` otherwise.
pub fn scale_constant(n: usize, j: usize) -> f64 {
    if j == 0 || (n % 2 == 0 && j == n / 2) {
        1.0 / (n as f64).sqrt()
    } else {
        (2.0 / n as f64).sqrt()
    }
}

/// Largest deviation from the requested structure, and where it occurs.
pub fn structure_deviation(x: &[f64], structure: Structure) -> (usize, f64) {
    let n = x.len();
    let mut worst = (0, 0.0_f64);
    let mut note = |idx: usize, d: f64| {
        if d > worst.1 {
            worst = (idx, d);
        }
    };
    match structure {
        Structure::General => {}
        Structure::Symmetric => {
            for j in 1..=n / 2 {
                note(j, (x[j] - x[n - j]).abs());
            }
        }
        Structure::Asymmetric => {
            note(0, x[0].abs());
            for j in 1..=n / 2 {
                note(j, (x[j] + x[n - j]).abs());
            }
        }
    }
    worst
}

pub(crate) fn scaled_tolerance(x: &[f64], tol: f64) -> f64 {
    let scale = x.iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    tol * scale
}

/// Checks `x` against `structure` with [`STRUCTURE_TOL`] scaled by the
/// vector's magnitude.
pub fn check_structure(x: &[f64], structure: Structure) -> Result<()> {
    let (index, deviation) = structure_deviation(x, structure);
    if deviation > scaled_tolerance(x, STRUCTURE_TOL) {
        return Err(GammaError::Structure {
            expected: structure,
            index,
            deviation,
        });
    }
    Ok(())
}

/// A vector whose symmetry flag has been verified on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct StructuredVector {
    entries: Vec<f64>,
    structure: Structure,
}

impl StructuredVector {
    pub fn new(entries: Vec<f64>, structure: Structure) -> Result<Self> {
        if entries.is_empty() {
            return Err(GammaError::InvalidOrder {
                n: 0,
                reason: "vector must be non-empty",
            });
        }
        check_structure(&entries, structure)?;
        Ok(Self { entries, structure })
    }

    pub fn general(entries: Vec<f64>) -> Self {
        Self {
            entries,
            structure: Structure::General,
        }
    }

    pub fn symmetric(entries: Vec<f64>) -> Result<Self> {
        Self::new(entries, Structure::Symmetric)
    }

    pub fn asymmetric(entries: Vec<f64>) -> Result<Self> {
        Self::new(entries, Structure::Asymmetric)
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.entries
    }
}

/// Reverses every component except the first: `(x0, x_{n-1}, ..., x1)`.
pub fn reflect(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    (0..n).map(|j| x[(n - j) % n]).collect()
}

fn check_min_len(x: &[f64]) -> Result<()> {
    if x.len() < 2 {
        return Err(GammaError::InvalidOrder {
            n: x.len(),
            reason: "length must be at least 2",
        });
    }
    Ok(())
}

/// `x + reflect(x)`, twice the symmetric part of `x`.
pub fn symmetrize(x: &[f64]) -> Result<StructuredVector> {
    check_min_len(x)?;
    let n = x.len();
    let entries = (0..n).map(|j| x[j] + x[(n - j) % n]).collect();
    Ok(StructuredVector {
        entries,
        structure: Structure::Symmetric,
    })
}

/// `x - reflect(x)`, twice the asymmetric part of `x`.
pub fn antisymmetrize(x: &[f64]) -> Result<StructuredVector> {
    check_min_len(x)?;
    let n = x.len();
    let entries = (0..n).map(|j| x[j] - x[(n - j) % n]).collect();
    Ok(StructuredVector {
        entries,
        structure: Structure::Asymmetric,
    })
}

fn check_even(x: &[f64]) -> Result<()> {
    if x.len() % 2 != 0 || x.is_empty() {
        return Err(GammaError::InvalidOrder {
            n: x.len(),
            reason: "decimation requires an even length",
        });
    }
    Ok(())
}

/// Components at even indices `0, 2, ..., n-2`.
pub fn even_part(x: &[f64]) -> Result<Vec<f64>> {
    check_even(x)?;
    Ok(x.iter().step_by(2).copied().collect())
}

/// Components at odd indices `1, 3, ..., n-1`.
pub fn odd_part(x: &[f64]) -> Result<Vec<f64>> {
    check_even(x)?;
    Ok(x.iter().skip(1).step_by(2).copied().collect())
}

/// Dense `Q_n`, column-major: `columns[j]` is `q(j)`.
#[derive(Debug, Clone)]
pub struct BasisVectorSet {
    n: usize,
    columns: Vec<Vec<f64>>,
}

impl BasisVectorSet {
    /// Evaluates the entry rule of `Q_n` directly. `O(n^2)`.
    pub fn build(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(GammaError::InvalidOrder {
                n,
                reason: "basis order must be at least 2",
            });
        }
        let half = n / 2;
        let columns = (0..n)
            .map(|j| {
                let alpha = scale_constant(n, j);
                (0..n)
                    .map(|k| {
                        // reduce k*j mod n first so the angle stays in [0, 2 pi)
                        if j <= half {
                            let r = (k * j) % n;
                            alpha * (2.0 * PI * r as f64 / n as f64).cos()
                        } else {
                            let r = (k * (n - j)) % n;
                            alpha * (2.0 * PI * r as f64 / n as f64).sin()
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { n, columns })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn column(&self, j: usize) -> &[f64] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<f64>] {
        &self.columns
    }

    /// Entry `(k, j)` of `Q_n`.
    pub fn entry(&self, k: usize, j: usize) -> f64 {
        self.columns[j][k]
    }

    /// `max |Q^T Q - I|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.n {
            for j in i..self.n {
                let dot: f64 = self.columns[i]
                    .iter()
                    .zip(&self.columns[j])
                    .map(|(a, b)| a * b)
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}
