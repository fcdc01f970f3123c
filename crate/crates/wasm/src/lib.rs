//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes a generator `t_0, t_1, ...` and an order `n` (a power of
//! two), builds the symmetric Toeplitz matrix and its optimal gamma
//! approximation, and returns plain number arrays for plotting.

use gamma_core::toeplitz::{gamma_approx, preconditioned_spectrum, toeplitz_spectrum};
use gamma_core::{pcg, GeneratorSeq, PcgOptions, Result, SymToeplitz, TransformPlan};
use wasm_bindgen::prelude::*;

fn build(coeffs: &[f64], n: usize) -> Result<SymToeplitz> {
    SymToeplitz::from_generator(&GeneratorSeq::new(coeffs.to_vec())?, n)
}

/// `[outliers, min, max, eigenvalues...]` of `G^{-1} T` (or of `T` when
/// `precond` is false).
pub fn spectrum_report(coeffs: &[f64], n: usize, epsilon: f64, precond: bool) -> Result<Vec<f64>> {
    let t = build(coeffs, n)?;
    let report = if precond {
        let plan = TransformPlan::new(n)?;
        let g = gamma_approx(&t)?;
        preconditioned_spectrum(&t, &g, epsilon, &plan)?
    } else {
        toeplitz_spectrum(&t, epsilon)?
    };
    let mut out = vec![report.outliers as f64, report.min, report.max];
    out.extend(report.spectrum);
    Ok(out)
}

/// Relative residuals of CG on `T x = T 1`.
pub fn residuals(coeffs: &[f64], n: usize, precond: bool, max_iterations: usize) -> Result<Vec<f64>> {
    let t = build(coeffs, n)?;
    let rhs = t.matvec(&vec![1.0; n])?;
    let g = if precond { Some(gamma_approx(&t)?) } else { None };
    let opts = PcgOptions {
        tol: 1e-10,
        max_iterations,
    };
    Ok(pcg(&t, &rhs, g.as_ref(), &opts)?.residual_history)
}

/// `[c..., b...]` of the optimal gamma approximation.
pub fn approximation(coeffs: &[f64], n: usize) -> Result<Vec<f64>> {
    let g = gamma_approx(&build(coeffs, n)?)?;
    Ok([g.c(), g.b()].concat())
}

fn js<T>(r: Result<T>) -> std::result::Result<T, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = spectrumReport)]
pub fn spectrum_report_js(coeffs: &[f64], n: usize, epsilon: f64, precond: bool) -> std::result::Result<Vec<f64>, JsError> {
    js(spectrum_report(coeffs, n, epsilon, precond))
}

#[wasm_bindgen(js_name = residuals)]
pub fn residuals_js(coeffs: &[f64], n: usize, precond: bool, max_iterations: usize) -> std::result::Result<Vec<f64>, JsError> {
    js(residuals(coeffs, n, precond, max_iterations))
}

#[wasm_bindgen(js_name = approximation)]
pub fn approximation_js(coeffs: &[f64], n: usize) -> std::result::Result<Vec<f64>, JsError> {
    js(approximation(coeffs, n))
}
