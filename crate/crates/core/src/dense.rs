//! Brute-force reference implementations.
//!
//! Everything here works on materialized `n x n` matrices and accepts any
//! order `n >= 1` (or `n >= 2` where `Q_n` is involved). None of it shares code
//! with the fast paths; the test suites use these as oracles.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};

use crate::algebra::GammaMatrix;
use crate::error::{GammaError, Result};
use crate::spectral::BasisVectorSet;

/// Symmetry tolerance accepted by the dense eigensolver, relative to `max |a_ij|`.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |k, l| if k == l { 1.0 } else { 0.0 })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for k in 0..n {
            for l in 0..n {
                data.push(f(k, l));
            }
        }
        Self { n, data }
    }

    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(GammaError::DimensionMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(GammaError::InvalidArgument("matrix has non-finite entries".into()));
        }
        Ok(Self { n, data })
    }

    /// `circ(c)`: row `k` is `c` shifted cyclically `k` places to the right.
    pub fn circ(c: &[f64]) -> Self {
        let n = c.len();
        Self::from_fn(n, |k, l| c[(l + n - k) % n])
    }

    /// `rcirc(b)`: row `k` is `b` shifted cyclically `k` places to the left.
    pub fn rcirc(b: &[f64]) -> Self {
        let n = b.len();
        Self::from_fn(n, |k, l| b[(k + l) % n])
    }

    /// Symmetric Toeplitz matrix with first column `t`.
    pub fn toeplitz(t: &[f64]) -> Self {
        Self::from_fn(t.len(), |k, l| t[k.abs_diff(l)])
    }

    /// `circ(c) + rcirc(b)`.
    pub fn render(g: &GammaMatrix) -> Self {
        let (c, b) = (g.c(), g.b());
        let n = c.len();
        Self::from_fn(n, |k, l| c[(l + n - k) % n] + b[(k + l) % n])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, k: usize, l: usize) -> f64 {
        self.data[k * self.n + l]
    }

    pub fn set(&mut self, k: usize, l: usize, v: f64) {
        self.data[k * self.n + l] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, k: usize) -> &[f64] {
        &self.data[k * self.n..(k + 1) * self.n]
    }

    pub fn column(&self, l: usize) -> Vec<f64> {
        (0..self.n).map(|k| self.get(k, l)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |k, l| self.get(l, k))
    }

    pub fn matvec(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x.len())?;
        Ok((0..self.n)
            .map(|k| self.row(k).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn matmul(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.check_len(other.n)?;
        let n = self.n;
        let mut out = DenseMatrix::zeros(n);
        for k in 0..n {
            for j in 0..n {
                let a = self.get(k, j);
                if a == 0.0 {
                    continue;
                }
                let src = other.row(j);
                let dst = &mut out.data[k * n..(k + 1) * n];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += a * s;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.check_len(other.n)?;
        Ok(Self {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &DenseMatrix) -> Result<DenseMatrix> {
        self.check_len(other.n)?;
        Ok(Self {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, a: f64) -> DenseMatrix {
        Self {
            n: self.n,
            data: self.data.iter().map(|v| a * v).collect(),
        }
    }

    /// Trace inner product `<A, B> = sum_ij a_ij b_ij`.
    pub fn frobenius_inner(&self, other: &DenseMatrix) -> Result<f64> {
        self.check_len(other.n)?;
        Ok(self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> Result<f64> {
        self.check_len(other.n)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|k| self.get(k, k)).sum()
    }

    /// `max |a_ij - a_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let mut dev = 0.0_f64;
        for k in 0..self.n {
            for l in k + 1..self.n {
                dev = dev.max((self.get(k, l) - self.get(l, k)).abs());
            }
        }
        dev
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found != self.n {
            return Err(GammaError::DimensionMismatch {
                expected: self.n,
                found,
            });
        }
        Ok(())
    }

    fn check_symmetric(&self) -> Result<()> {
        let dev = self.asymmetry();
        if dev > SYMMETRY_TOL * self.max_abs().max(1.0) {
            return Err(GammaError::Asymmetric { deviation: dev });
        }
        Ok(())
    }

    fn to_nalgebra(&self) -> DMatrix<f64> {
        DMatrix::from_row_slice(self.n, self.n, &self.data)
    }

    fn from_nalgebra(m: &DMatrix<f64>) -> Self {
        Self::from_fn(m.nrows(), |k, l| m[(k, l)])
    }

    /// Eigenvalues of a symmetric matrix in ascending order.
    pub fn eigenvalues_symmetric(&self) -> Result<Vec<f64>> {
        self.check_symmetric()?;
        if self.n == 0 {
            return Ok(Vec::new());
        }
        let mut vals: Vec<f64> = self.to_nalgebra().symmetric_eigenvalues().iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        Ok(vals)
    }

    /// Ascending eigenvalues with the matching orthonormal eigenvectors as columns.
    pub fn eigensystem_symmetric(&self) -> Result<(Vec<f64>, DenseMatrix)> {
        self.check_symmetric()?;
        let eig = self.to_nalgebra().symmetric_eigen();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let vals = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let vecs = Self::from_fn(self.n, |k, l| eig.eigenvectors[(k, order[l])]);
        Ok((vals, vecs))
    }

    /// Lower Cholesky factor `L` with `A = L L^T`.
    pub fn cholesky(&self) -> Result<DenseMatrix> {
        self.check_symmetric()?;
        match self.to_nalgebra().cholesky() {
            Some(ch) => Ok(Self::from_nalgebra(&ch.l())),
            None => Err(GammaError::Indefinite {
                iteration: 0,
                curvature: self.eigenvalues_symmetric()?.first().copied().unwrap_or(0.0),
            }),
        }
    }

    /// Solves `A x = rhs` by LU with partial pivoting.
    pub fn solve(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        self.check_len(rhs.len())?;
        let lu = self.to_nalgebra().lu();
        lu.solve(&DVector::from_column_slice(rhs))
            .map(|x| x.iter().copied().collect())
            .ok_or(GammaError::Singular {
                index: 0,
                value: 0.0,
                threshold: 0.0,
            })
    }
}

/// Materialized `Q_n` as a dense matrix.
pub fn dense_q(n: usize) -> Result<DenseMatrix> {
    let q = BasisVectorSet::build(n)?;
    Ok(DenseMatrix::from_fn(n, |k, j| q.entry(k, j)))
}

/// `Q_n^T x` by explicit summation, any `n >= 2`.
pub fn dense_idsct(x: &[f64]) -> Result<Vec<f64>> {
    let q = BasisVectorSet::build(x.len())?;
    Ok(q.columns()
        .iter()
        .map(|col| col.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect())
}

/// `Q_n t` by explicit summation, any `n >= 2`.
pub fn dense_dsct(t: &[f64]) -> Result<Vec<f64>> {
    let n = t.len();
    let q = BasisVectorSet::build(n)?;
    Ok((0..n)
        .map(|k| (0..n).map(|j| q.entry(k, j) * t[j]).sum())
        .collect())
}

/// `x . u(j)`, with `u(j)_k = cos(2 pi k j / n)`.
pub fn direct_cos_coeff(x: &[f64], j: usize) -> f64 {
    let n = x.len();
    x.iter()
        .enumerate()
        .map(|(k, v)| v * (2.0 * PI * ((k * j) % n) as f64 / n as f64).cos())
        .sum()
}

/// `x . v(j)`, with `v(j)_k = sin(2 pi k j / n)`.
pub fn direct_sin_coeff(x: &[f64], j: usize) -> f64 {
    let n = x.len();
    x.iter()
        .enumerate()
        .map(|(k, v)| v * (2.0 * PI * ((k * j) % n) as f64 / n as f64).sin())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> DenseMatrix {
        let mut a = DenseMatrix::zeros(n);
        for k in 0..n {
            for l in k..n {
                let v = rng.gen_range(-1.0..1.0);
                a.set(k, l, v);
                a.set(l, k, v);
            }
        }
        a
    }

    // plain cyclic Jacobi, kept here as an independent check of the library solver
    fn jacobi_eigenvalues(a: &DenseMatrix) -> Vec<f64> {
        let n = a.order();
        let mut m = a.clone();
        for _sweep in 0..100 {
            let off: f64 = (0..n)
                .flat_map(|k| (0..n).filter(move |&l| l != k).map(move |l| (k, l)))
                .map(|(k, l)| m.get(k, l).powi(2))
                .sum();
            if off < 1e-26 {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = m.get(p, q);
                    if apq.abs() < 1e-300 {
                        continue;
                    }
                    let theta = (m.get(q, q) - m.get(p, p)) / (2.0 * apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let t = if theta == 0.0 { 1.0 } else { t };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let (akp, akq) = (m.get(k, p), m.get(k, q));
                        m.set(k, p, c * akp - s * akq);
                        m.set(k, q, s * akp + c * akq);
                    }
                    for k in 0..n {
                        let (apk, aqk) = (m.get(p, k), m.get(q, k));
                        m.set(p, k, c * apk - s * aqk);
                        m.set(q, k, s * apk + c * aqk);
                    }
                }
            }
        }
        let mut v: Vec<f64> = (0..n).map(|k| m.get(k, k)).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn circ_and_rcirc_layouts() {
        let c = [1.0, 2.0, 3.0, 4.0];
        let m = DenseMatrix::circ(&c);
        assert_eq!(m.row(0), &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m.row(1), &[4.0, 1.0, 2.0, 3.0]);
        let r = DenseMatrix::rcirc(&c);
        assert_eq!(r.row(0), &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(r.row(1), &[2.0, 3.0, 4.0, 1.0]);
        assert_eq!(r.asymmetry(), 0.0);
        assert_eq!(DenseMatrix::circ(&[1.0, 0.0, 0.0, 0.0, 0.0]), DenseMatrix::identity(5));
    }

    #[test]
    fn dense_idsct_unit_vector() {
        let y = dense_idsct(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        let expect = [0.5, 1.0 / 2f64.sqrt(), 0.5, 0.0];
        for (a, b) in y.iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn dense_round_trip_any_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [2usize, 3, 5, 6, 7, 8, 12, 17] {
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let y = dense_dsct(&dense_idsct(&x).unwrap()).unwrap();
            for (a, b) in x.iter().zip(&y) {
                assert!((a - b).abs() < 1e-12, "n={n}");
            }
        }
        assert!(dense_idsct(&[1.0]).is_err());
    }

    #[test]
    fn eigenvalues_of_diagonal_and_circulant() {
        let d = DenseMatrix::from_fn(4, |k, l| if k == l { [3.0, -1.0, 2.0, 0.5][k] } else { 0.0 });
        assert_eq!(d.eigenvalues_symmetric().unwrap(), vec![-1.0, 0.5, 2.0, 3.0]);
        let c = DenseMatrix::circ(&[2.0, 1.0, 0.0, 1.0]);
        let ev = c.eigenvalues_symmetric().unwrap();
        for (a, b) in ev.iter().zip([0.0, 2.0, 2.0, 4.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn eigenvalues_trace_and_jacobi_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in [3usize, 8, 16, 24] {
            let a = random_symmetric(n, &mut rng);
            let ev = a.eigenvalues_symmetric().unwrap();
            assert!((ev.iter().sum::<f64>() - a.trace()).abs() < 1e-9);
            let jac = jacobi_eigenvalues(&a);
            for (x, y) in ev.iter().zip(&jac) {
                assert!((x - y).abs() < 1e-10 * a.max_abs().max(1.0), "n={n}");
            }
        }
    }

    #[test]
    fn eigensystem_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_symmetric(10, &mut rng);
        let (vals, vecs) = a.eigensystem_symmetric().unwrap();
        for (j, lambda) in vals.iter().enumerate() {
            let v = vecs.column(j);
            let av = a.matvec(&v).unwrap();
            for (x, y) in av.iter().zip(&v) {
                assert!((x - lambda * y).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn asymmetric_input_rejected() {
        let mut a = DenseMatrix::identity(3);
        a.set(0, 1, 1e-3);
        assert!(matches!(a.eigenvalues_symmetric(), Err(GammaError::Asymmetric { .. })));
    }

    #[test]
    fn cholesky_and_solve() {
        let t = DenseMatrix::toeplitz(&[2.0, 1.0, 0.0, 0.0, 0.0]);
        let l = t.cholesky().unwrap();
        let back = l.matmul(&l.transpose()).unwrap();
        assert!(back.max_abs_diff(&t).unwrap() < 1e-14);
        let rhs = [1.0, 2.0, 3.0, 4.0, 5.0];
        let x = t.solve(&rhs).unwrap();
        let r = t.matvec(&x).unwrap();
        for (a, b) in r.iter().zip(rhs) {
            assert!((a - b).abs() < 1e-12);
        }
        let indefinite = DenseMatrix::toeplitz(&[1.0, 2.0]);
        assert!(indefinite.cholesky().is_err());
    }

    #[test]
    fn direct_coefficients() {
        let x = [1.0, 2.0, 3.0, 2.0];
        assert!((direct_cos_coeff(&x, 0) - 8.0).abs() < 1e-14);
        assert!((direct_cos_coeff(&x, 1) + 2.0).abs() < 1e-14);
        assert!(direct_sin_coeff(&x, 1).abs() < 1e-14);
    }
}
