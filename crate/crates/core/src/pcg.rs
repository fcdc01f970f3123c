//! Preconditioned conjugate gradient for symmetric Toeplitz systems.

use serde::Serialize;

use crate::algebra::{inverse_apply_with_spectrum, GammaMatrix};
use crate::error::{GammaError, Result};
use crate::toeplitz::SymToeplitz;
use crate::transforms::{TransformCounts, TransformPlan};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PcgOptions {
    /// Stop once `|r_k| / |rhs| <= tol`.
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for PcgOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iterations: 1000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveOutcome {
    pub solution: Vec<f64>,
    pub iterations: usize,
    /// `|r_k| / |rhs|` for `k = 0..=iterations`.
    pub residual_history: Vec<f64>,
    pub converged: bool,
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn norm(x: &[f64]) -> f64 {
    dot(x, x).sqrt()
}

/// Solves `T x = rhs` from `x_0 = 0`, optionally preconditioned by a
/// positive definite gamma-matrix applied through its spectrum.
pub fn pcg(t: &SymToeplitz, rhs: &[f64], precond: Option<&GammaMatrix>, opts: &PcgOptions) -> Result<SolveOutcome> {
    let n = t.order();
    if rhs.len() != n {
        return Err(GammaError::DimensionMismatch {
            expected: n,
            found: rhs.len(),
        });
    }
    if !(opts.tol > 0.0) {
        return Err(GammaError::InvalidArgument(format!("tolerance must be positive, got {}", opts.tol)));
    }

    let prepared = match precond {
        Some(g) => {
            if g.order() != n {
                return Err(GammaError::DimensionMismatch {
                    expected: n,
                    found: g.order(),
                });
            }
            let plan = TransformPlan::new(n)?;
            let spectrum = g.eigenvalues(&plan)?.clone();
            if let Some((index, value)) = spectrum.values().iter().enumerate().find(|(_, l)| **l <= 0.0) {
                return Err(GammaError::PreconditionerNotPositive { index, value: *value });
            }
            Some((plan, spectrum))
        }
        None => None,
    };
    let mut counts = TransformCounts::new();
    let mut apply_m = |r: &[f64]| -> Result<Vec<f64>> {
        match &prepared {
            Some((plan, spectrum)) => inverse_apply_with_spectrum(spectrum, r, plan, None, &mut counts),
            None => Ok(r.to_vec()),
        }
    };

    let rhs_norm = norm(rhs);
    let mut x = vec![0.0; n];
    if rhs_norm == 0.0 {
        return Ok(SolveOutcome {
            solution: x,
            iterations: 0,
            residual_history: vec![0.0],
            converged: true,
        });
    }
    let mut r = rhs.to_vec();
    let mut history = vec![1.0];
    let mut z = apply_m(&r)?;
    let mut p = z.clone();
    let mut rz = dot(&r, &z);

    for k in 1..=opts.max_iterations {
        let tp = t.matvec(&p)?;
        let curvature = dot(&p, &tp);
        if curvature <= 0.0 {
            return Err(GammaError::Indefinite { iteration: k, curvature });
        }
        let alpha = rz / curvature;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * tp[i];
        }
        let rel = norm(&r) / rhs_norm;
        history.push(rel);
        if rel <= opts.tol {
            return Ok(SolveOutcome {
                solution: x,
                iterations: k,
                residual_history: history,
                converged: true,
            });
        }
        z = apply_m(&r)?;
        let rz_next = dot(&r, &z);
        let beta = rz_next / rz;
        rz = rz_next;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    Ok(SolveOutcome {
        solution: x,
        iterations: opts.max_iterations,
        converged: history.last().is_some_and(|r| *r <= opts.tol),
        residual_history: history,
    })
}
