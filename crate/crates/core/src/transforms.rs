//! Recursive sine-cosine kernels and the IDSCT/DSCT transforms.
//!
//! For `n = 2^r`, `m = n/2`, `nu = n/4`:
//!
//! - `cs` maps a symmetric `x` to `C_j(x) = x . u(j)` for `j = 0..=m`;
//! - `sn` maps an asymmetric `x` to `S_j(x) = x . v(j)` for `j = 1..m`;
//! - `idsct(x) = Q_n^T x` and `dsct(t) = Q_n t` are assembled from one call of
//!   each kernel plus `O(n)` folding and scaling.
//!
//! Operation counting follows the kernel listings literally: one addition per
//! binary `+`/`-`, one multiplication per product by a stored secant, by `2` or
//! by `1/2`. Index arithmetic, copies and sign flips of stored values are free.
//! Under that discipline one `cs` call costs exactly
//! `3/4 n log2 n - n/2 + 1` additions and `1/4 n log2 n + n/2 - 2`
//! multiplications, and one `sn` call `n log2 n - 11/4 n + 3` additions and
//! `1/4 n log2 n - n/4` multiplications.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{GammaError, Result};
use crate::spectral::{check_structure, scale_constant, Structure, StructuredVector};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OpCounter {
    pub additions: u64,
    pub multiplications: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    fn add(&mut self, k: u64) {
        self.additions += k;
    }

    #[inline]
    fn mul(&mut self, k: u64) {
        self.multiplications += k;
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }

    pub fn merge(&mut self, other: &OpCounter) {
        self.additions += other.additions;
        self.multiplications += other.multiplications;
    }

    pub fn as_pair(&self) -> (u64, u64) {
        (self.additions, self.multiplications)
    }
}

/// Per-stage tallies of a composite transform.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TransformCounts {
    /// Inside `cs` kernel calls.
    pub cs: OpCounter,
    /// Inside `sn` kernel calls.
    pub sn: OpCounter,
    /// Folding, scaling and assembly around the kernels.
    pub glue: OpCounter,
    pub cs_calls: u32,
    pub sn_calls: u32,
}

impl TransformCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn total(&self) -> OpCounter {
        let mut t = self.cs;
        t.merge(&self.sn);
        t.merge(&self.glue);
        t
    }

    pub fn merge(&mut self, other: &TransformCounts) {
        self.cs.merge(&other.cs);
        self.sn.merge(&other.sn);
        self.glue.merge(&other.glue);
        self.cs_calls += other.cs_calls;
        self.sn_calls += other.sn_calls;
    }
}

fn log2_exact(n: usize) -> Option<u32> {
    (n.is_power_of_two()).then(|| n.trailing_zeros())
}

pub(crate) fn check_fast_order(n: usize) -> Result<u32> {
    match log2_exact(n) {
        Some(r) if r >= 2 => Ok(r),
        _ => Err(GammaError::InvalidOrder {
            n,
            reason: "fast transforms need a power of two >= 4",
        }),
    }
}

/// Closed-form operation count of one `cs` call: `(additions, multiplications)`.
pub fn predicted_counts_cs(n: usize) -> Result<(u64, u64)> {
    let r = check_fast_order(n)? as u64;
    let n = n as u64;
    // 3/4 n r - n/2 + 1 and 1/4 n r + n/2 - 2; n divisible by 4 keeps these integral
    Ok((3 * n * r / 4 - n / 2 + 1, n * r / 4 + n / 2 - 2))
}

/// Closed-form operation count of one `sn` call: `(additions, multiplications)`.
pub fn predicted_counts_sn(n: usize) -> Result<(u64, u64)> {
    let r = check_fast_order(n)? as u64;
    let n = n as u64;
    Ok((n * r + 3 - 11 * n / 4, n * r / 4 - n / 4))
}

/// Stored secants `1/(2 cos(2 pi k / s))` for every level `s = 4, 8, ..., n`.
#[derive(Debug, Clone)]
pub struct TransformPlan {
    n: usize,
    /// `levels[r]` holds the table for `s = 2^r`, entries for `k = 1..s/4`.
    levels: Vec<Vec<f64>>,
}

impl TransformPlan {
    pub fn new(n: usize) -> Result<Self> {
        let r_max = check_fast_order(n)?;
        let levels = (0..=r_max)
            .map(|r| {
                let s = 1usize << r;
                (1..s / 4)
                    .map(|k| 1.0 / (2.0 * (2.0 * PI * k as f64 / s as f64).cos()))
                    .collect()
            })
            .collect();
        Ok(Self { n, levels })
    }

    /// Largest supported size.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn supports(&self, n: usize) -> bool {
        check_fast_order(n).is_ok() && n <= self.n
    }

    /// Secant table for level `s`; index `k - 1` holds `1/(2 cos(2 pi k / s))`.
    pub fn secants(&self, s: usize) -> &[f64] {
        &self.levels[s.trailing_zeros() as usize]
    }

    pub(crate) fn require(&self, n: usize) -> Result<()> {
        check_fast_order(n)?;
        if n > self.n {
            return Err(GammaError::InvalidOrder {
                n,
                reason: "transform plan is too small for this size",
            });
        }
        Ok(())
    }
}

/// `C_0(x), ..., C_m(x)` of a symmetric vector.
#[derive(Debug, Clone, PartialEq)]
pub struct CosCoeffs(pub Vec<f64>);

/// `S_1(x), ..., S_{m-1}(x)` of an asymmetric vector; `get(j)` is `S_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SinCoeffs(pub Vec<f64>);

impl CosCoeffs {
    pub fn get(&self, j: usize) -> f64 {
        self.0[j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl SinCoeffs {
    pub fn get(&self, j: usize) -> f64 {
        self.0[j - 1]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// Cosine coefficients of a symmetric vector of power-of-two length `>= 4`.
pub fn cs(x: &StructuredVector, plan: &TransformPlan, counter: &mut OpCounter) -> Result<CosCoeffs> {
    plan.require(x.len())?;
    if x.structure() != Structure::Symmetric {
        check_structure(x.entries(), Structure::Symmetric)?;
    }
    Ok(CosCoeffs(cs_kernel(x.entries(), plan, counter)))
}

/// Sine coefficients of an asymmetric vector of power-of-two length `>= 4`.
pub fn sn(x: &StructuredVector, plan: &TransformPlan, counter: &mut OpCounter) -> Result<SinCoeffs> {
    plan.require(x.len())?;
    if x.structure() != Structure::Asymmetric {
        check_structure(x.entries(), Structure::Asymmetric)?;
    }
    let mut s = sn_kernel(x.entries(), plan, counter);
    let m = x.len() / 2;
    s.truncate(m);
    s.remove(0);
    Ok(SinCoeffs(s))
}

/// Returns `C_0..=C_m`. Caller guarantees `x` symmetric with supported length.
pub(crate) fn cs_kernel(x: &[f64], plan: &TransformPlan, counter: &mut OpCounter) -> Vec<f64> {
    let n = x.len();
    if n == 4 {
        counter.add(5);
        counter.mul(2);
        return vec![
            x[0] + 2.0 * x[1] + x[2],
            x[0] - x[2],
            x[0] - 2.0 * x[1] + x[2],
        ];
    }
    let m = n / 2;
    let nu = n / 4;

    let even: Vec<f64> = x.iter().step_by(2).copied().collect();

    // sigma(zeta x): odd samples folded with their reflection
    let odd: Vec<f64> = x.iter().skip(1).step_by(2).copied().collect();
    let mut folded = vec![0.0; m];
    folded[0] = 2.0 * odd[0];
    folded[nu] = 2.0 * odd[nu];
    counter.mul(2);
    for j in 1..nu {
        let v = odd[j] + odd[m - j];
        folded[j] = v;
        folded[m - j] = v;
    }
    counter.add(nu as u64 - 1);

    let c_even = cs_kernel(&even, plan, counter);
    let c_odd = cs_kernel(&folded, plan, counter);

    let sec = plan.secants(n);
    let mut c = vec![0.0; m + 1];
    for k in 1..nu {
        let aux = sec[k - 1] * c_odd[k];
        c[k] = c_even[k] + aux;
        c[m - k] = c_even[k] - aux;
    }
    counter.mul(nu as u64 - 1);
    counter.add(2 * (nu as u64 - 1));

    let aux = c_odd[0] * 0.5;
    c[0] = c_even[0] + aux;
    c[nu] = c_even[nu];
    c[m] = c_even[0] - aux;
    counter.mul(1);
    counter.add(2);
    c
}

/// Returns a length `m + 1` buffer with `S_j` at index `j` for `1 <= j < m`
/// and zeros at both ends. Caller guarantees `x` asymmetric.
pub(crate) fn sn_kernel(x: &[f64], plan: &TransformPlan, counter: &mut OpCounter) -> Vec<f64> {
    let n = x.len();
    let m = n / 2;
    if n == 4 {
        counter.mul(1);
        return vec![0.0, 2.0 * x[1], 0.0];
    }
    let nu = n / 4;

    let even: Vec<f64> = x.iter().step_by(2).copied().collect();

    // alpha(zeta x): entries 0 and nu vanish identically
    let odd: Vec<f64> = x.iter().skip(1).step_by(2).copied().collect();
    let mut folded = vec![0.0; m];
    for j in 1..nu {
        let v = odd[j] - odd[m - j];
        folded[j] = v;
        folded[m - j] = -v;
    }
    counter.add(nu as u64 - 1);

    let s_even = sn_kernel(&even, plan, counter);
    let s_odd = sn_kernel(&folded, plan, counter);

    let sec = plan.secants(n);
    let mut s = vec![0.0; m + 1];
    for k in 1..nu {
        let aux = sec[k - 1] * s_odd[k];
        s[k] = s_even[k] + aux;
        s[m - k] = aux - s_even[k];
    }
    counter.mul(nu as u64 - 1);
    counter.add(2 * (nu as u64 - 1));

    let mut mid = 0.0;
    for j in (0..nu - 1).step_by(2) {
        mid = mid + x[2 * j + 1] - x[2 * j + 3];
    }
    counter.add(nu as u64);
    s[nu] = 2.0 * mid;
    counter.mul(1);
    s
}

/// `Q_n^T x` for `n = 2^r >= 4`.
pub fn idsct(x: &[f64], plan: &TransformPlan, counts: &mut TransformCounts) -> Result<Vec<f64>> {
    let n = x.len();
    plan.require(n)?;
    let m = n / 2;

    // sigma x and alpha x; both are determined by their first half
    let mut sym = vec![0.0; n];
    let mut asym = vec![0.0; n];
    sym[0] = 2.0 * x[0];
    sym[m] = 2.0 * x[m];
    counts.glue.mul(2);
    for j in 1..m {
        let s = x[j] + x[n - j];
        let a = x[j] - x[n - j];
        sym[j] = s;
        sym[n - j] = s;
        asym[j] = a;
        asym[n - j] = -a;
    }
    counts.glue.add(2 * (m as u64 - 1));

    let c = cs_kernel(&sym, plan, &mut counts.cs);
    let s = sn_kernel(&asym, plan, &mut counts.sn);
    counts.cs_calls += 1;
    counts.sn_calls += 1;

    let y = (0..n)
        .map(|j| {
            let half_alpha = 0.5 * scale_constant(n, j);
            if j <= m {
                half_alpha * c[j]
            } else {
                half_alpha * s[n - j]
            }
        })
        .collect();
    counts.glue.mul(n as u64);
    Ok(y)
}

/// `Q_n t` for `n = 2^r >= 4`.
pub fn dsct(t: &[f64], plan: &TransformPlan, counts: &mut TransformCounts) -> Result<Vec<f64>> {
    plan.require(t.len())?;
    Ok(dsct_inner(t, plan, counts, true))
}

/// `Q_n t` for a `t` whose sine half `t[m+1..]` is zero, so the `sn` call is
/// skipped. Used by the gamma-matrix product.
pub(crate) fn dsct_cosine_half(t: &[f64], plan: &TransformPlan, counts: &mut TransformCounts) -> Vec<f64> {
    debug_assert!(t[t.len() / 2 + 1..].iter().all(|v| *v == 0.0));
    dsct_inner(t, plan, counts, false)
}

fn dsct_inner(t: &[f64], plan: &TransformPlan, counts: &mut TransformCounts, with_sine: bool) -> Vec<f64> {
    let n = t.len();
    let m = n / 2;

    // phi(t): mirror of the cosine half; theta(t): antisymmetric sine fold
    let mut bar = vec![0.0; n];
    bar[..=m].copy_from_slice(&t[..=m]);
    for k in 1..m {
        bar[n - k] = t[k];
    }
    let cos_part = cs_kernel(&bar, plan, &mut counts.cs);
    counts.cs_calls += 1;

    let sin_part = if with_sine {
        let mut tilde = vec![0.0; n];
        for k in 1..m {
            tilde[k] = t[n - k];
            tilde[n - k] = -t[n - k];
        }
        counts.sn_calls += 1;
        sn_kernel(&tilde, plan, &mut counts.sn)
    } else {
        vec![0.0; m + 1]
    };

    let a_bar = scale_constant(n, 0);
    let half_a_tilde = 0.5 * scale_constant(n, 1);
    // j even / odd variants of t0 +- tm and of their scaled copies
    let r_even = t[0] + t[m];
    let r_odd = t[0] - t[m];
    let base_even = a_bar * r_even;
    let base_odd = a_bar * r_odd;
    counts.glue.add(2);
    counts.glue.mul(2);

    let mut y = vec![0.0; n];
    y[0] = half_a_tilde * (cos_part[0] - r_even) + base_even;
    y[m] = half_a_tilde * (cos_part[m] - r_even) + base_even;
    counts.glue.add(4);
    counts.glue.mul(2);
    for j in 1..m {
        let (r, base) = if j % 2 == 0 {
            (r_even, base_even)
        } else {
            (r_odd, base_odd)
        };
        let shifted = cos_part[j] - r;
        if with_sine {
            y[j] = half_a_tilde * (shifted + sin_part[j]) + base;
            y[n - j] = half_a_tilde * (shifted - sin_part[j]) + base;
            counts.glue.add(5);
        } else {
            let v = half_a_tilde * shifted + base;
            y[j] = v;
            y[n - j] = v;
            counts.glue.add(2);
        }
        counts.glue.mul(if with_sine { 2 } else { 1 });
    }
    y
}
