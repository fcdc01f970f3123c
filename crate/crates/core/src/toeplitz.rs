//! Symmetric Toeplitz matrices and their optimal gamma approximation.
//!
//! For `T` with first column `t`, the Frobenius-nearest gamma-matrix
//! `G_n(T) = circ(c) + rcirc(b)` has `c_0 = t_0`,
//! `c_j = ((n - j) t_j + j t_{n-j}) / n` and a closed-form `b` whose shape
//! depends on the parities of `n` and `j`. [`gamma_approx`] evaluates those
//! formulas; [`frobenius_projection_oracle`] computes the same projection by
//! Gram-Schmidt in matrix space and exists to check them.

use serde::Serialize;

use crate::algebra::{inverse_apply_with_spectrum, GammaMatrix};
use crate::dense::DenseMatrix;
use crate::error::{GammaError, Result};
use crate::transforms::{self, TransformCounts, TransformPlan};

/// Largest order accepted by the projection oracle.
pub const ORACLE_MAX_N: usize = 128;
/// Stationarity violation above which [`gamma_approx`] refuses its own output.
pub const STATIONARITY_TOL: f64 = 1e-8;
/// Grid size used to sample the symbol of a generator.
pub const SYMBOL_GRID: usize = 4096;

/// Real symmetric Toeplitz matrix, stored as its first column.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymToeplitz {
    t: Vec<f64>,
}

impl SymToeplitz {
    pub fn new(t: Vec<f64>) -> Result<Self> {
        if t.is_empty() {
            return Err(GammaError::InvalidOrder {
                n: 0,
                reason: "Toeplitz matrix needs n >= 1",
            });
        }
        if t.iter().any(|v| !v.is_finite()) {
            return Err(GammaError::InvalidArgument("Toeplitz column has non-finite entries".into()));
        }
        Ok(Self { t })
    }

    pub fn from_generator(gen: &GeneratorSeq, n: usize) -> Result<Self> {
        let t = (0..n).map(|j| gen.coeffs.get(j).copied().unwrap_or(0.0)).collect();
        Self::new(t)
    }

    pub fn order(&self) -> usize {
        self.t.len()
    }

    pub fn first_column(&self) -> &[f64] {
        &self.t
    }

    pub fn to_dense(&self) -> DenseMatrix {
        DenseMatrix::toeplitz(&self.t)
    }

    /// Dense `O(n^2)` product without materializing the matrix.
    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        let n = self.order();
        if x.len() != n {
            return Err(GammaError::DimensionMismatch {
                expected: n,
                found: x.len(),
            });
        }
        Ok((0..n)
            .map(|k| (0..n).map(|l| self.t[k.abs_diff(l)] * x[l]).sum())
            .collect())
    }
}

/// Finitely supported coefficients `t_0, ..., t_K` of a symbol
/// `f(theta) = t_0 + 2 sum_j t_j cos(j theta)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorSeq {
    coeffs: Vec<f64>,
}

impl GeneratorSeq {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.iter().any(|v| !v.is_finite()) {
            return Err(GammaError::InvalidArgument(
                "generator needs at least one finite coefficient".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    /// `t_j = ratio^j` for `j = 0..=k`.
    pub fn geometric(ratio: f64, k: usize) -> Result<Self> {
        Self::new((0..=k).map(|j| ratio.powi(j as i32)).collect())
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn abs_sum(&self) -> f64 {
        self.coeffs.iter().map(|v| v.abs()).sum()
    }

    pub fn symbol(&self, theta: f64) -> f64 {
        self.coeffs[0]
            + 2.0
                * self.coeffs[1..]
                    .iter()
                    .enumerate()
                    .map(|(j, t)| t * ((j + 1) as f64 * theta).cos())
                    .sum::<f64>()
    }

    /// `(min f, max f)` sampled on a uniform grid of the unit circle.
    pub fn symbol_range(&self) -> (f64, f64) {
        (0..SYMBOL_GRID)
            .map(|i| self.symbol(2.0 * std::f64::consts::PI * i as f64 / SYMBOL_GRID as f64))
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
    }
}

/// Prefix sums of `w(k) (t_k' - t_{n-k'})` over one parity class, so each
/// bounded sum in the `b_j` formulas costs O(1).
struct ParitySums {
    odd: Vec<f64>,
    even: Vec<f64>,
}

impl ParitySums {
    fn new(t: &[f64]) -> Self {
        let n = t.len();
        let nf = n as f64;
        let mut odd = vec![0.0];
        let mut k = 0;
        while 2 * k + 1 < n {
            let i = 2 * k + 1;
            let v = i as f64 / nf * (t[i] - t[n - i]);
            odd.push(odd[k] + v);
            k += 1;
        }
        let mut even = vec![0.0, 0.0];
        let mut k = 1;
        while 2 * k < n {
            let i = 2 * k;
            let v = i as f64 / nf * (t[i] - t[n - i]);
            even.push(even[k] + v);
            k += 1;
        }
        Self { odd, even }
    }

    /// `sum_{k=lo}^{hi} (2k+1)/n (t_{2k+1} - t_{n-2k-1})`, empty when `hi < lo`.
    fn odd(&self, lo: isize, hi: isize) -> f64 {
        if hi < lo {
            return 0.0;
        }
        self.odd[hi as usize + 1] - self.odd[lo as usize]
    }

    /// `sum_{k=lo}^{hi} 2k/n (t_{2k} - t_{n-2k})`, empty when `hi < lo`.
    fn even(&self, lo: isize, hi: isize) -> f64 {
        if hi < lo {
            return 0.0;
        }
        self.even[hi as usize + 1] - self.even[lo as usize]
    }
}

/// Closed-form `(c, b)` of the optimal approximation, before any validation.
///
/// Defined for odd `n` and for `n` divisible by 4; the `b_{n/2}` formula has
/// no meaning when `n = 2 mod 4`.
pub fn gamma_approx_components(t: &SymToeplitz) -> Result<(Vec<f64>, Vec<f64>)> {
    let t = t.first_column();
    let n = t.len();
    if n < 2 {
        return Err(GammaError::InvalidOrder {
            n,
            reason: "gamma approximation needs n >= 2",
        });
    }
    if n % 4 == 2 {
        return Err(GammaError::InvalidOrder {
            n,
            reason: "closed-form approximation is undefined for n = 2 mod 4",
        });
    }
    let nf = n as f64;
    let ni = n as isize;

    let mut c = vec![0.0; n];
    c[0] = t[0];
    for j in 1..n {
        c[j] = ((n - j) as f64 * t[j] + j as f64 * t[n - j]) / nf;
    }

    let s = ParitySums::new(t);
    let mut b = vec![0.0; n];
    let lead = |j: usize| (4.0 * j as f64 - 2.0 * nf) / nf * (t[j] - t[n - j]);
    if n % 2 == 0 {
        let m = n / 2;
        b[0] = 2.0 / nf * s.even(1, ni / 2 - 1);
        b[m] = 4.0 / nf * s.even(1, ni / 4 - 1);
        for j in (1..n).filter(|&j| j != m) {
            let ji = j as isize;
            let tail = if j % 2 == 1 {
                // odd-index sums start at k = 0 in both halves
                s.odd(0, (ji - 3).div_euclid(2)) + s.odd(0, (ni - ji - 3).div_euclid(2))
            } else {
                s.even(1, ji / 2 - 1) + s.even(1, (ni - ji) / 2 - 1)
            };
            b[j] = (lead(j) + 4.0 * tail) / (2.0 * nf);
        }
    } else {
        b[0] = 2.0 / nf * s.odd(0, (ni - 3) / 2);
        for j in 1..n {
            let ji = j as isize;
            let tail = if j % 2 == 1 {
                s.odd(0, (ji - 3).div_euclid(2)) + s.even(1, (ni - ji) / 2 - 1)
            } else {
                s.even(1, ji / 2 - 1) + s.odd(0, (ni - ji - 3).div_euclid(2))
            };
            b[j] = (lead(j) + 4.0 * tail) / (2.0 * nf);
        }
    }
    Ok((c, b))
}

/// Largest violation of the stationarity identities satisfied by an optimal `b`:
/// `sum_{k<n/4} b_{2k+1} = 0` and `b_0 + 2 sum_{0<k<n/4} b_{2k} + b_{n/2} = 0`
/// for even `n`, `b_0 + 2 sum_{j=1}^{(n-1)/2} b_j = 0` for odd `n`.
pub fn stationarity_violation(b: &[f64]) -> f64 {
    let n = b.len();
    if n % 2 == 0 {
        let q = n / 4;
        let odd: f64 = (0..q).map(|k| b[2 * k + 1]).sum();
        let even: f64 = b[0] + 2.0 * (1..q).map(|k| b[2 * k]).sum::<f64>() + b[n / 2];
        odd.abs().max(even.abs())
    } else {
        (b[0] + 2.0 * b[1..=(n - 1) / 2].iter().sum::<f64>()).abs()
    }
}

/// The optimal Frobenius gamma approximation `G_n(T)` from the closed form.
///
/// Output whose stationarity violation exceeds `1e-8` (relative to `max |t|`)
/// is returned as a [`GammaError::FormulaDiscrepancy`] carrying the formula
/// output and, for `n <= 128`, the projection oracle's answer.
pub fn gamma_approx(t: &SymToeplitz) -> Result<GammaMatrix> {
    let (c, b) = gamma_approx_components(t)?;
    let scale = t.first_column().iter().fold(1.0_f64, |m, v| m.max(v.abs()));
    let violation = stationarity_violation(&b);
    if violation > STATIONARITY_TOL * scale {
        let oracle = if t.order() <= ORACLE_MAX_N {
            frobenius_projection_oracle(t)
                .ok()
                .map(|g| (g.c().to_vec(), g.b().to_vec()))
        } else {
            None
        };
        return Err(GammaError::FormulaDiscrepancy {
            violation,
            formula: (c, b),
            oracle,
        });
    }
    GammaMatrix::from_derived(c, b)
}

/// A matrix-space basis element together with the `(c, b)` it renders from.
struct Element {
    m: Vec<f64>,
    c: Vec<f64>,
    b: Vec<f64>,
}

impl Element {
    fn axpy(&mut self, a: f64, other: &Element) {
        for (x, y) in self.m.iter_mut().zip(&other.m) {
            *x += a * y;
        }
        for (x, y) in self.c.iter_mut().zip(&other.c) {
            *x += a * y;
        }
        for (x, y) in self.b.iter_mut().zip(&other.b) {
            *x += a * y;
        }
    }

    fn scale(&mut self, a: f64) {
        self.m.iter_mut().chain(&mut self.c).chain(&mut self.b).for_each(|v| *v *= a);
    }
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Orthogonal projection of `T` onto `C_n + B_n` in the trace inner product.
///
/// Spans `C_n` by `circ(f_j)` and `B_n` by `rcirc` of zero-sum differences
/// within each parity class, where `f_j` is the indicator of `{j, n - j}`;
/// orthonormalizes with two passes of modified Gram-Schmidt on the rendered
/// `n x n` matrices and sums the Fourier terms. Limited to `n <= 128`.
pub fn frobenius_projection_oracle(t: &SymToeplitz) -> Result<GammaMatrix> {
    let n = t.order();
    if !(2..=ORACLE_MAX_N).contains(&n) {
        return Err(GammaError::InvalidOrder {
            n,
            reason: "projection oracle supports 2 <= n <= 128",
        });
    }
    let half = n / 2;
    let indicator = |j: usize| {
        let mut f = vec![0.0; n];
        f[j] = 1.0;
        f[(n - j) % n] = 1.0;
        f
    };
    let circ = |c: &[f64]| DenseMatrix::circ(c).as_slice().to_vec();
    let rcirc = |b: &[f64]| DenseMatrix::rcirc(b).as_slice().to_vec();

    let mut raw = Vec::new();
    for j in 0..=half {
        let c = indicator(j);
        raw.push(Element {
            m: circ(&c),
            c,
            b: vec![0.0; n],
        });
    }
    let classes: Vec<Vec<usize>> = if n % 2 == 0 {
        vec![
            (0..=half).filter(|j| j % 2 == 0).collect(),
            (0..=half).filter(|j| j % 2 == 1).collect(),
        ]
    } else {
        vec![(0..=half).collect()]
    };
    for class in classes {
        let unit = |j: usize| {
            let f = indicator(j);
            let w: f64 = f.iter().sum();
            f.into_iter().map(|v| v / w).collect::<Vec<_>>()
        };
        let anchor = unit(class[0]);
        for &j in &class[1..] {
            let b: Vec<f64> = unit(j).iter().zip(&anchor).map(|(x, y)| x - y).collect();
            raw.push(Element {
                m: rcirc(&b),
                c: vec![0.0; n],
                b,
            });
        }
    }

    let mut basis: Vec<Element> = Vec::with_capacity(raw.len());
    for mut e in raw {
        for _pass in 0..2 {
            for q in &basis {
                let a = dot(&e.m, &q.m);
                e.axpy(-a, q);
            }
        }
        let norm = dot(&e.m, &e.m).sqrt();
        if norm > 1e-10 {
            e.scale(1.0 / norm);
            basis.push(e);
        }
    }

    let tm = t.to_dense();
    let mut c = vec![0.0; n];
    let mut b = vec![0.0; n];
    for q in &basis {
        let a = dot(tm.as_slice(), &q.m);
        for (x, y) in c.iter_mut().zip(&q.c) {
            *x += a * y;
        }
        for (x, y) in b.iter_mut().zip(&q.b) {
            *x += a * y;
        }
    }
    GammaMatrix::from_derived(c, b)
}

/// Eigenvalues of a preconditioned operator and the count outside `[1-eps, 1+eps]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClusterReport {
    pub epsilon: f64,
    pub n: usize,
    pub outliers: usize,
    pub min: f64,
    pub max: f64,
    pub spectrum: Vec<f64>,
}

impl ClusterReport {
    pub fn from_eigenvalues(mut spectrum: Vec<f64>, epsilon: f64) -> Result<Self> {
        check_epsilon(epsilon)?;
        spectrum.sort_by(f64::total_cmp);
        let outliers = spectrum.iter().filter(|l| (*l - 1.0).abs() > epsilon).count();
        Ok(Self {
            epsilon,
            n: spectrum.len(),
            outliers,
            min: spectrum.first().copied().unwrap_or(f64::NAN),
            max: spectrum.last().copied().unwrap_or(f64::NAN),
            spectrum,
        })
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(GammaError::InvalidArgument(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    Ok(())
}

/// Spectrum of `G^{-1} T`.
///
/// With `G` positive definite this is the spectrum of the symmetric
/// `Lambda^{-1/2} Q_n^T T Q_n Lambda^{-1/2}`, where `Q_n^T T Q_n` comes from
/// applying the IDSCT to the columns and then the rows of `T`. Otherwise `T`
/// must be positive definite, and the spectrum is that of `L^T G^{-1} L` with
/// `T = L L^T`.
pub fn preconditioned_spectrum(t: &SymToeplitz, g: &GammaMatrix, epsilon: f64, plan: &TransformPlan) -> Result<ClusterReport> {
    check_epsilon(epsilon)?;
    let n = t.order();
    if g.order() != n {
        return Err(GammaError::DimensionMismatch {
            expected: n,
            found: g.order(),
        });
    }
    let spectrum = g.eigenvalues(plan)?;
    let lambda = spectrum.values();
    let threshold = 1e-12 * spectrum.max_abs();
    if let Some((index, value)) = lambda.iter().enumerate().find(|(_, l)| l.abs() <= threshold) {
        return Err(GammaError::Singular {
            index,
            value: *value,
            threshold,
        });
    }

    let dense_t = t.to_dense();
    let eig = if lambda.iter().all(|l| *l > 0.0) {
        let mut counts = TransformCounts::new();
        let mut a = DenseMatrix::zeros(n);
        for l in 0..n {
            let col = transforms::idsct(dense_t.row(l), plan, &mut counts)?;
            for (k, v) in col.into_iter().enumerate() {
                a.set(k, l, v);
            }
        }
        let inv_sqrt: Vec<f64> = lambda.iter().map(|l| 1.0 / l.sqrt()).collect();
        let mut s = DenseMatrix::zeros(n);
        for k in 0..n {
            let row = transforms::idsct(a.row(k), plan, &mut counts)?;
            for (l, v) in row.into_iter().enumerate() {
                s.set(k, l, v * inv_sqrt[k] * inv_sqrt[l]);
            }
        }
        symmetrize_in_place(&mut s);
        s.eigenvalues_symmetric()?
    } else {
        let l = dense_t.cholesky()?;
        let mut counts = TransformCounts::new();
        let mut ginv_l = DenseMatrix::zeros(n);
        for j in 0..n {
            let col = inverse_apply_with_spectrum(spectrum, &l.column(j), plan, None, &mut counts)?;
            for (k, v) in col.into_iter().enumerate() {
                ginv_l.set(k, j, v);
            }
        }
        let mut s = l.transpose().matmul(&ginv_l)?;
        symmetrize_in_place(&mut s);
        s.eigenvalues_symmetric()?
    };
    ClusterReport::from_eigenvalues(eig, epsilon)
}

/// Clustering of the unpreconditioned matrix around 1.
pub fn toeplitz_spectrum(t: &SymToeplitz, epsilon: f64) -> Result<ClusterReport> {
    check_epsilon(epsilon)?;
    ClusterReport::from_eigenvalues(t.to_dense().eigenvalues_symmetric()?, epsilon)
}

fn symmetrize_in_place(s: &mut DenseMatrix) {
    let n = s.order();
    for k in 0..n {
        for l in k + 1..n {
            let v = 0.5 * (s.get(k, l) + s.get(l, k));
            s.set(k, l, v);
            s.set(l, k, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_examples() {
        let id = SymToeplitz::from_generator(&GeneratorSeq::new(vec![1.0]).unwrap(), 4).unwrap();
        assert_eq!(id.to_dense(), DenseMatrix::identity(4));
        let lap = SymToeplitz::from_generator(&GeneratorSeq::new(vec![2.0, 1.0]).unwrap(), 4).unwrap();
        assert_eq!(lap.first_column(), &[2.0, 1.0, 0.0, 0.0]);
        let geo = GeneratorSeq::geometric(0.5, 20).unwrap();
        let t = SymToeplitz::from_generator(&geo, 64).unwrap();
        assert_eq!(t.first_column()[3], 0.125);
        assert_eq!(t.first_column()[21], 0.0);
        assert!((geo.abs_sum() - (2.0 - 0.5f64.powi(20))).abs() < 1e-15);
    }

    #[test]
    fn symbol_range_of_laplacian() {
        let g = GeneratorSeq::new(vec![2.0, 1.0]).unwrap();
        let (lo, hi) = g.symbol_range();
        assert!(lo.abs() < 1e-12);
        assert!((hi - 4.0).abs() < 1e-12);
    }

    #[test]
    fn approx_of_identity() {
        let t = SymToeplitz::new(vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let g = gamma_approx(&t).unwrap();
        assert_eq!(g, GammaMatrix::identity(8).unwrap());
    }

    #[test]
    fn approx_small_example() {
        let t = SymToeplitz::new(vec![0.0, 1.0, 0.0, 0.0]).unwrap();
        let (c, _) = gamma_approx_components(&t).unwrap();
        assert_eq!(c, vec![0.0, 0.75, 0.0, 0.75]);
        let oracle = frobenius_projection_oracle(&t).unwrap();
        for (a, b) in oracle.c().iter().zip(&c) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_two_mod_four() {
        let t = SymToeplitz::new(vec![1.0; 6]).unwrap();
        assert!(matches!(gamma_approx(&t), Err(GammaError::InvalidOrder { n: 6, .. })));
        assert!(frobenius_projection_oracle(&t).is_ok());
    }

    #[test]
    fn cluster_report_counts() {
        let r = ClusterReport::from_eigenvalues(vec![1.2, 0.95, 1.0, 0.5], 0.1).unwrap();
        assert_eq!(r.outliers, 2);
        assert_eq!(r.spectrum, vec![0.5, 0.95, 1.0, 1.2]);
        assert!(ClusterReport::from_eigenvalues(vec![1.0], 0.0).is_err());
        assert!(ClusterReport::from_eigenvalues(vec![1.0], -1.0).is_err());
    }

    #[test]
    fn self_preconditioned_spectrum_is_one() {
        let plan = TransformPlan::new(16).unwrap();
        let t = SymToeplitz::new((0..16).map(|j| if j == 0 { 3.0 } else { 0.0 }).collect()).unwrap();
        let g = gamma_approx(&t).unwrap();
        let r = preconditioned_spectrum(&t, &g, 0.1, &plan).unwrap();
        assert_eq!(r.outliers, 0);
        assert!(r.spectrum.iter().all(|l| (l - 1.0).abs() < 1e-12));
    }
}
