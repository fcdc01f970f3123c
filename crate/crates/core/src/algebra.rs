//! The gamma-matrix type.
//!
//! `G = circ(c) + rcirc(b)` with `c` symmetric and `b` symmetric satisfying
//! `sum b_t = 0` and, for even `n`, `sum (-1)^t b_t = 0`. Every such matrix is
//! diagonalized by `Q_n`:
//!
//! - `lambda_0 = C_0(c)`, `lambda_m = C_m(c)`;
//! - `lambda_j = C_j(c) + C_j(b)` and `lambda_{n-j} = C_j(c) - C_j(b)` for `0 < j < n/2`.
//!
//! Construction and structural queries work for any `n >= 2`. Products,
//! eigenvalues and inversion go through the fast transforms and need `n` to be
//! a power of two `>= 4`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::dense::DenseMatrix;
use crate::error::{GammaError, Result};
use crate::spectral::{check_structure, scale_constant, scaled_tolerance, structure_deviation, Structure};
use crate::transforms::{self, TransformCounts, TransformPlan};

/// Tolerance on the reverse-circulant linear constraints, relative to `max(1, |b|_1)`.
pub const CONSTRAINT_TOL: f64 = 1e-12;
/// Looser tolerance for vectors produced by floating-point pipelines.
const DERIVED_TOL: f64 = 1e-8;
/// Default classification tolerance, relative to the largest component entry.
pub const CLASSIFY_TOL: f64 = 1e-10;
/// Orders up to this are validated by full reconstruction in `extract_components`.
const FULL_CHECK_MAX: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GammaClass {
    /// Real symmetric circulants.
    C,
    /// Constrained symmetric reverse circulants.
    B,
    /// Circulants whose spectrum vanishes at `0` and `n/2`.
    D,
    /// Checkerboard matrices.
    E,
}

impl fmt::Display for GammaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GammaClass::C => "C_n",
            GammaClass::B => "B_n",
            GammaClass::D => "D_n",
            GammaClass::E => "E_n",
        };
        f.write_str(s)
    }
}

/// Eigenvalues in `Q_n` column order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GammaSpectrum {
    lambdas: Vec<f64>,
}

impl GammaSpectrum {
    pub fn new(lambdas: Vec<f64>) -> Self {
        Self { lambdas }
    }

    pub fn values(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    /// Spectrum of the circulant part.
    pub fn circulant_part(&self) -> Vec<f64> {
        decompose_spectrum(&self.lambdas).0
    }

    /// Spectrum of the reverse-circulant part.
    pub fn reverse_part(&self) -> Vec<f64> {
        decompose_spectrum(&self.lambdas).1
    }

    pub fn min(&self) -> f64 {
        self.lambdas.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.lambdas.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.lambdas.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn sorted(&self) -> Vec<f64> {
        let mut v = self.lambdas.clone();
        v.sort_by(f64::total_cmp);
        v
    }
}

/// Splits a spectrum into its symmetric and asymmetric halves.
pub fn decompose_spectrum(lambda: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = lambda.len();
    let mut sym = Vec::with_capacity(n);
    let mut asym = Vec::with_capacity(n);
    for j in 0..n {
        let r = lambda[(n - j) % n];
        sym.push((lambda[j] + r) / 2.0);
        asym.push((lambda[j] - r) / 2.0);
    }
    (sym, asym)
}

#[derive(Debug, Clone)]
pub struct GammaMatrix {
    c: Vec<f64>,
    b: Vec<f64>,
    spectrum: OnceLock<GammaSpectrum>,
}

impl PartialEq for GammaMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.b == other.b
    }
}

fn check_constraints(b: &[f64], tol: f64) -> Result<()> {
    let n = b.len();
    let scale = b.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
    let sum: f64 = b.iter().sum();
    if sum.abs() > tol * scale {
        return Err(GammaError::Constraint {
            which: "sum of b",
            value: sum,
        });
    }
    if n % 2 == 0 {
        let alt: f64 = b
            .iter()
            .enumerate()
            .map(|(t, v)| if t % 2 == 0 { *v } else { -*v })
            .sum();
        if alt.abs() > tol * scale {
            return Err(GammaError::Constraint {
                which: "alternating sum of b",
                value: alt,
            });
        }
    }
    Ok(())
}

fn check_order(n: usize) -> Result<()> {
    if n < 2 {
        return Err(GammaError::InvalidOrder {
            n,
            reason: "gamma-matrices need n >= 2",
        });
    }
    Ok(())
}

fn symmetrized(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    (0..n).map(|j| 0.5 * (x[j] + x[(n - j) % n])).collect()
}

/// Removes the components of `b` along `1` and, for even `n`, along `(-1)^t`.
fn project_constraints(b: &mut [f64]) {
    let n = b.len() as f64;
    let mean = b.iter().sum::<f64>() / n;
    b.iter_mut().for_each(|v| *v -= mean);
    if b.len() % 2 == 0 {
        let alt = b
            .iter()
            .enumerate()
            .map(|(t, v)| if t % 2 == 0 { *v } else { -*v })
            .sum::<f64>()
            / n;
        for (t, v) in b.iter_mut().enumerate() {
            *v -= if t % 2 == 0 { alt } else { -alt };
        }
    }
}

impl GammaMatrix {
    /// Validates `(c, b)` with tolerance `1e-12` and stores them as given.
    pub fn from_components(c: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        check_order(c.len())?;
        if b.len() != c.len() {
            return Err(GammaError::DimensionMismatch {
                expected: c.len(),
                found: b.len(),
            });
        }
        check_structure(&c, Structure::Symmetric)?;
        check_structure(&b, Structure::Symmetric)?;
        check_constraints(&b, CONSTRAINT_TOL)?;
        Ok(Self::raw(c, b))
    }

    /// Accepts components computed in floating point: checks them against a
    /// loose tolerance, then makes symmetry and constraints hold exactly.
    pub(crate) fn from_derived(c: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        check_order(c.len())?;
        for (v, s) in [(&c, Structure::Symmetric), (&b, Structure::Symmetric)] {
            let (index, deviation) = structure_deviation(v, s);
            if deviation > scaled_tolerance(v, DERIVED_TOL) {
                return Err(GammaError::Structure {
                    expected: s,
                    index,
                    deviation,
                });
            }
        }
        check_constraints(&b, DERIVED_TOL)?;
        let c = symmetrized(&c);
        let mut b = symmetrized(&b);
        project_constraints(&mut b);
        Ok(Self::raw(c, b))
    }

    fn raw(c: Vec<f64>, b: Vec<f64>) -> Self {
        Self {
            c,
            b,
            spectrum: OnceLock::new(),
        }
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_order(n)?;
        let mut c = vec![0.0; n];
        c[0] = 1.0;
        Ok(Self::raw(c, vec![0.0; n]))
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self::raw(vec![0.0; n], vec![0.0; n]))
    }

    /// First row of the circulant part.
    pub fn c(&self) -> &[f64] {
        &self.c
    }

    /// First row of the reverse-circulant part.
    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn order(&self) -> usize {
        self.c.len()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::render(self)
    }

    /// Recovers `(c, b)` from a dense matrix, reading only the first row, the
    /// diagonal and the first superdiagonal.
    ///
    /// On the diagonal `g_kk = c_0 + b_{2k}` and on the superdiagonal
    /// `g_{k,k+1} = c_1 + b_{2k+1}`. For even `n` the constraints on `b` say the
    /// even-index and the odd-index entries each sum to zero, which pins `c_0`
    /// and `c_1` as averages; for odd `n` the diagonal alone visits every `b_t`.
    pub fn extract_components(g: &DenseMatrix) -> Result<Self> {
        let n = g.order();
        check_order(n)?;
        let mut b = vec![0.0; n];
        if n % 2 == 0 {
            let m = n / 2;
            let c0 = (0..m).map(|k| g.get(k, k)).sum::<f64>() / m as f64;
            let c1 = (0..m).map(|k| g.get(k, k + 1)).sum::<f64>() / m as f64;
            for k in 0..m {
                b[2 * k] = g.get(k, k) - c0;
                b[2 * k + 1] = g.get(k, k + 1) - c1;
            }
        } else {
            let c0 = (0..n).map(|k| g.get(k, k)).sum::<f64>() / n as f64;
            for k in 0..n {
                b[(2 * k) % n] = g.get(k, k) - c0;
            }
        }
        let c: Vec<f64> = (0..n).map(|l| g.get(0, l) - b[l]).collect();

        let candidate = Self::raw(c.clone(), b.clone());
        let deviation = candidate.reconstruction_error(g);
        let scale = g.row(0).iter().fold(1.0_f64, |m, v| m.max(v.abs()));
        if deviation > DERIVED_TOL * scale {
            return Err(GammaError::NotGammaMatrix { deviation });
        }
        Self::from_derived(c, b).map_err(|_| GammaError::NotGammaMatrix { deviation })
    }

    fn reconstruction_error(&self, g: &DenseMatrix) -> f64 {
        let n = self.order();
        let entry = |k: usize, l: usize| self.c[(l + n - k) % n] + self.b[(k + l) % n];
        if n <= FULL_CHECK_MAX {
            let mut dev = 0.0_f64;
            for k in 0..n {
                for l in 0..n {
                    dev = dev.max((g.get(k, l) - entry(k, l)).abs());
                }
            }
            dev
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
            (0..8 * n)
                .map(|_| {
                    let (k, l) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    (g.get(k, l) - entry(k, l)).abs()
                })
                .fold(0.0, f64::max)
        }
    }

    /// Eigenvalues in `Q_n` column order, computed once and cached.
    pub fn eigenvalues(&self, plan: &TransformPlan) -> Result<&GammaSpectrum> {
        plan.require(self.order())?;
        Ok(self
            .spectrum
            .get_or_init(|| self.compute_spectrum(plan, &mut TransformCounts::new())))
    }

    /// Uncached eigenvalue computation with operation counting (two `cs` calls).
    pub fn eigenvalues_counted(&self, plan: &TransformPlan, counts: &mut TransformCounts) -> Result<GammaSpectrum> {
        plan.require(self.order())?;
        Ok(self.compute_spectrum(plan, counts))
    }

    fn compute_spectrum(&self, plan: &TransformPlan, counts: &mut TransformCounts) -> GammaSpectrum {
        let (dc, db) = self.component_spectra(plan, counts);
        let n = self.order();
        let m = n / 2;
        let mut lambda = vec![0.0; n];
        lambda[0] = dc[0];
        lambda[m] = dc[m];
        for j in 1..m {
            lambda[j] = dc[j] + db[j];
            lambda[n - j] = dc[j] - db[j];
        }
        GammaSpectrum::new(lambda)
    }

    /// `(C_j(c), C_j(b))` for `j = 0..=m`, with the reverse part forced to zero
    /// at `0` and `m` where the constraints make it vanish.
    fn component_spectra(&self, plan: &TransformPlan, counts: &mut TransformCounts) -> (Vec<f64>, Vec<f64>) {
        let dc = transforms::cs_kernel(&self.c, plan, &mut counts.cs);
        let mut db = transforms::cs_kernel(&self.b, plan, &mut counts.cs);
        counts.cs_calls += 2;
        let m = self.order() / 2;
        db[0] = 0.0;
        db[m] = 0.0;
        (dc, db)
    }

    /// The gamma-matrix with eigenvalues `lambda` (any real vector is admissible).
    pub fn from_spectrum(lambda: &[f64], plan: &TransformPlan) -> Result<Self> {
        let n = lambda.len();
        plan.require(n)?;
        let (sym, asym) = decompose_spectrum(lambda);
        let mut counts = TransformCounts::new();
        let c = transforms::dsct_cosine_half(&first_column_weights(&sym), plan, &mut counts);
        let b = transforms::dsct_cosine_half(&first_column_weights(&asym), plan, &mut counts);
        let g = Self::from_derived(c, b)?;
        let _ = g.spectrum.set(GammaSpectrum::new(lambda.to_vec()));
        Ok(g)
    }

    /// `G x` as `Q_n (Lambda (Q_n^T x))`.
    pub fn matvec(&self, x: &[f64], plan: &TransformPlan, counts: &mut TransformCounts) -> Result<Vec<f64>> {
        self.check_len(x.len())?;
        let lambda = self.eigenvalues(plan)?.values();
        let mut z = transforms::idsct(x, plan, counts)?;
        for (v, l) in z.iter_mut().zip(lambda) {
            *v *= l;
        }
        counts.glue.multiplications += z.len() as u64;
        transforms::dsct(&z, plan, counts)
    }

    /// Product of two gamma-matrices, returned in component form.
    ///
    /// The four component spectra take four `cs` calls; the circulant and
    /// reverse parts of the product are then the images under `Q_n` of
    /// `Lambda^(G1) Lambda^(G2) Q_n^T e_0`, split by symmetry.
    pub fn matmul(&self, other: &GammaMatrix, plan: &TransformPlan, counts: &mut TransformCounts) -> Result<GammaMatrix> {
        self.check_len(other.order())?;
        plan.require(self.order())?;
        let n = self.order();
        let m = n / 2;
        let (c1, b1) = self.component_spectra(plan, counts);
        let (c2, b2) = other.component_spectra(plan, counts);
        let mut s_c = vec![0.0; n];
        let mut s_b = vec![0.0; n];
        for j in 0..=m {
            let w = scale_constant(n, j);
            s_c[j] = w * (c1[j] * c2[j] + b1[j] * b2[j]);
            s_b[j] = w * (c1[j] * b2[j] + b1[j] * c2[j]);
        }
        counts.glue.multiplications += 6 * (m as u64 + 1);
        counts.glue.additions += 2 * (m as u64 + 1);
        let c = transforms::dsct_cosine_half(&s_c, plan, counts);
        let b = transforms::dsct_cosine_half(&s_b, plan, counts);
        Self::from_derived(c, b)
    }

    pub fn add(&self, other: &GammaMatrix) -> Result<GammaMatrix> {
        self.check_len(other.order())?;
        let c = self.c.iter().zip(&other.c).map(|(x, y)| x + y).collect();
        let b = self.b.iter().zip(&other.b).map(|(x, y)| x + y).collect();
        Ok(Self::raw(c, b))
    }

    pub fn scale(&self, a: f64) -> GammaMatrix {
        Self::raw(
            self.c.iter().map(|v| a * v).collect(),
            self.b.iter().map(|v| a * v).collect(),
        )
    }

    /// Solves `G y = x`. The default singularity threshold is
    /// `1e-12 * max |lambda|`.
    pub fn inverse_apply(&self, x: &[f64], plan: &TransformPlan, threshold: Option<f64>) -> Result<Vec<f64>> {
        self.check_len(x.len())?;
        let spectrum = self.eigenvalues(plan)?;
        inverse_apply_with_spectrum(spectrum, x, plan, threshold, &mut TransformCounts::new())
    }

    /// Class memberships, testing components against `CLASSIFY_TOL` relative to
    /// the largest entry.
    pub fn classify(&self) -> BTreeSet<GammaClass> {
        self.classify_with(CLASSIFY_TOL)
    }

    pub fn classify_with(&self, tol: f64) -> BTreeSet<GammaClass> {
        let n = self.order();
        let scale = self
            .c
            .iter()
            .chain(&self.b)
            .fold(f64::MIN_POSITIVE, |m, v| m.max(v.abs()));
        let tol = tol * scale;
        let small = |v: &[f64]| v.iter().all(|x| x.abs() <= tol);
        let mut out = BTreeSet::new();
        if small(&self.c) {
            out.insert(GammaClass::B);
        }
        if small(&self.b) {
            out.insert(GammaClass::C);
            let sum: f64 = self.c.iter().sum();
            let alt: f64 = self
                .c
                .iter()
                .enumerate()
                .map(|(t, v)| if t % 2 == 0 { *v } else { -*v })
                .sum();
            let n_tol = tol * n as f64;
            if sum.abs() <= n_tol && (n % 2 == 1 || alt.abs() <= n_tol) {
                out.insert(GammaClass::D);
            }
            let checker = if n % 2 == 0 {
                self.c.iter().enumerate().all(|(t, v)| (v - self.c[t % 2]).abs() <= tol)
            } else {
                self.c.iter().all(|v| (v - self.c[0]).abs() <= tol)
            };
            if checker {
                out.insert(GammaClass::E);
            }
        }
        out
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found != self.order() {
            return Err(GammaError::DimensionMismatch {
                expected: self.order(),
                found,
            });
        }
        Ok(())
    }
}

/// `Lambda Q_n^T e_0`: the spectrum weighted by the first row of `Q_n`, which
/// vanishes on the sine columns.
fn first_column_weights(lambda: &[f64]) -> Vec<f64> {
    let n = lambda.len();
    let m = n / 2;
    (0..n)
        .map(|j| if j <= m { scale_constant(n, j) * lambda[j] } else { 0.0 })
        .collect()
}

/// Solves `G y = x` given the spectrum of `G`.
pub fn inverse_apply_with_spectrum(
    spectrum: &GammaSpectrum,
    x: &[f64],
    plan: &TransformPlan,
    threshold: Option<f64>,
    counts: &mut TransformCounts,
) -> Result<Vec<f64>> {
    let lambda = spectrum.values();
    if x.len() != lambda.len() {
        return Err(GammaError::DimensionMismatch {
            expected: lambda.len(),
            found: x.len(),
        });
    }
    let threshold = threshold.unwrap_or(1e-12 * spectrum.max_abs());
    if let Some((index, value)) = lambda
        .iter()
        .enumerate()
        .find(|(_, l)| l.abs() <= threshold)
    {
        return Err(GammaError::Singular {
            index,
            value: *value,
            threshold,
        });
    }
    let mut z = transforms::idsct(x, plan, counts)?;
    for (v, l) in z.iter_mut().zip(lambda) {
        *v /= l;
    }
    counts.glue.multiplications += z.len() as u64;
    transforms::dsct(&z, plan, counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn construction_examples() {
        let id = GammaMatrix::from_components(vec![1.0, 0.0, 0.0, 0.0], vec![0.0; 4]).unwrap();
        assert_eq!(id, GammaMatrix::identity(4).unwrap());
        assert!(GammaMatrix::from_components(vec![2.0, 1.0, 0.0, 1.0], vec![0.0; 4]).is_ok());
        let g = GammaMatrix::from_components(vec![0.0; 4], vec![1.0, 0.0, -1.0, 0.0]).unwrap();
        let ones = g.to_dense().matvec(&[1.0; 4]).unwrap();
        assert_eq!(ones, vec![0.0; 4]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            GammaMatrix::from_components(vec![1.0, 2.0, 0.0, 1.0], vec![0.0; 4]),
            Err(GammaError::Structure { .. })
        ));
        assert!(matches!(
            GammaMatrix::from_components(vec![0.0; 4], vec![1.0, 0.0, 0.0, 0.0]),
            Err(GammaError::Constraint { which: "sum of b", .. })
        ));
        assert!(matches!(
            GammaMatrix::from_components(vec![0.0; 4], vec![1.0, 1.0, -3.0, 1.0]),
            Err(GammaError::Constraint { which: "alternating sum of b", .. })
        ));
        assert!(matches!(
            GammaMatrix::from_components(vec![0.0; 4], vec![0.0; 8]),
            Err(GammaError::DimensionMismatch { .. })
        ));
        assert!(GammaMatrix::identity(1).is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let plan = TransformPlan::new(16).unwrap();
        let id = GammaMatrix::identity(16).unwrap();
        assert!(id.eigenvalues(&plan).unwrap().values().iter().all(|l| (l - 1.0).abs() < 1e-14));
        let g = GammaMatrix::from_components(vec![2.0, 1.0, 0.0, 1.0], vec![0.0; 4]).unwrap();
        let lambda = g.eigenvalues(&plan).unwrap().values().to_vec();
        assert!(close(&lambda, &[4.0, 2.0, 0.0, 2.0], 1e-14));
    }

    #[test]
    fn decompose_examples() {
        let (s, a) = decompose_spectrum(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(s, vec![1.0, 3.0, 3.0, 3.0]);
        assert_eq!(a, vec![0.0, -1.0, 0.0, 1.0]);
        let (s, a) = decompose_spectrum(&[5.0, 1.0, 2.0, 1.0]);
        assert_eq!(s, vec![5.0, 1.0, 2.0, 1.0]);
        assert_eq!(a, vec![0.0; 4]);
    }

    #[test]
    fn spectrum_round_trip() {
        let plan = TransformPlan::new(8).unwrap();
        let lambda = [3.0, -1.0, 2.0, 0.5, 4.0, 1.5, -2.0, 0.25];
        let g = GammaMatrix::from_spectrum(&lambda, &plan).unwrap();
        let fresh = GammaMatrix::from_components(g.c().to_vec(), g.b().to_vec()).unwrap();
        let back = fresh.eigenvalues(&plan).unwrap();
        assert!(close(back.values(), &lambda, 1e-13));
    }

    #[test]
    fn singular_index_reported() {
        let plan = TransformPlan::new(8).unwrap();
        let mut lambda = [1.0; 8];
        lambda[3] = 0.0;
        let g = GammaMatrix::from_spectrum(&lambda, &plan).unwrap();
        match g.inverse_apply(&[1.0; 8], &plan, None) {
            Err(GammaError::Singular { index, .. }) => assert_eq!(index, 3),
            other => panic!("expected singular error, got {other:?}"),
        }
    }

    #[test]
    fn classify_examples() {
        let id = GammaMatrix::identity(4).unwrap();
        assert_eq!(id.classify(), BTreeSet::from([GammaClass::C]));
        let e = GammaMatrix::from_components(vec![2.0, 5.0, 2.0, 5.0], vec![0.0; 4]).unwrap();
        assert_eq!(e.classify(), BTreeSet::from([GammaClass::C, GammaClass::E]));
        let b = GammaMatrix::from_components(vec![0.0; 4], vec![1.0, 0.0, -1.0, 0.0]).unwrap();
        assert_eq!(b.classify(), BTreeSet::from([GammaClass::B]));
        let d = GammaMatrix::from_components(vec![1.0, 0.0, -1.0, 0.0], vec![0.0; 4]).unwrap();
        assert_eq!(d.classify(), BTreeSet::from([GammaClass::C, GammaClass::D]));
    }

    #[test]
    fn add_and_scale() {
        let g = GammaMatrix::from_components(vec![2.0, 1.0, 0.0, 1.0], vec![1.0, 0.0, -1.0, 0.0]).unwrap();
        let z = g.add(&g.scale(-1.0)).unwrap();
        assert_eq!(z, GammaMatrix::zero(4).unwrap());
        let three = GammaMatrix::identity(4).unwrap().scale(3.0);
        assert_eq!(three.c(), &[3.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn extract_identity_and_odd_order() {
        let g = GammaMatrix::extract_components(&DenseMatrix::identity(8)).unwrap();
        assert_eq!(g, GammaMatrix::identity(8).unwrap());
        let c = vec![1.0, 0.5, -0.25, -0.25, 0.5];
        let b = vec![0.4, -0.1, -0.1, -0.1, -0.1];
        let g = GammaMatrix::from_components(c.clone(), b.clone()).unwrap();
        let back = GammaMatrix::extract_components(&g.to_dense()).unwrap();
        assert!(close(back.c(), &c, 1e-14));
        assert!(close(back.b(), &b, 1e-14));
    }
}
