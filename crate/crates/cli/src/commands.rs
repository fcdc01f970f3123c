use std::path::PathBuf;
use std::time::Instant;

use gamma_core::toeplitz::{
    frobenius_projection_oracle, gamma_approx, preconditioned_spectrum, toeplitz_spectrum, ORACLE_MAX_N,
};
use gamma_core::transforms::{self, predicted_counts_cs, predicted_counts_sn};
use gamma_core::{
    pcg, ClusterReport, GammaError, GammaMatrix, GeneratorSeq, OpCounter, PcgOptions, SymToeplitz,
    TransformCounts, TransformPlan,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::CliError;
use crate::io::{read_vector, to_json, write_json, write_text, write_vector, format_vector};

/// Tolerance on the componentwise gap between the closed form and the projection oracle.
pub const ORACLE_DEVIATION_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Timings {
    pub elapsed_ms: f64,
}

impl Timings {
    fn since(start: Instant) -> Self {
        Self {
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Pair {
    pub additions: u64,
    pub multiplications: u64,
}

impl From<OpCounter> for Pair {
    fn from(c: OpCounter) -> Self {
        Self {
            additions: c.additions,
            multiplications: c.multiplications,
        }
    }
}

impl From<(u64, u64)> for Pair {
    fn from((additions, multiplications): (u64, u64)) -> Self {
        Self {
            additions,
            multiplications,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Checked {
    pub measured: Pair,
    pub predicted: Pair,
}

impl Checked {
    pub fn matches(&self) -> bool {
        self.measured == self.predicted
    }
}

fn require_fast_order(n: usize) -> Result<(), CliError> {
    if n < 4 || !n.is_power_of_two() {
        return Err(CliError::Usage(format!("length must be a power of two >= 4, got {n}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Idsct,
    Dsct,
}

#[derive(Debug, Serialize)]
pub struct TransformCountsReport {
    pub cs: Checked,
    pub sn: Checked,
    pub glue: Pair,
    pub total: Pair,
}

#[derive(Debug, Serialize)]
pub struct TransformReport {
    pub command: &'static str,
    pub op: Op,
    pub n: usize,
    pub counts: TransformCountsReport,
    pub timings: Timings,
}

pub fn transform(op: Op, input: &PathBuf, output: &PathBuf, with_counts: bool) -> Result<(), CliError> {
    let x = read_vector(input)?;
    let n = x.len();
    require_fast_order(n)?;
    let plan = TransformPlan::new(n)?;
    let start = Instant::now();
    let mut counts = TransformCounts::new();
    let y = match op {
        Op::Idsct => transforms::idsct(&x, &plan, &mut counts)?,
        Op::Dsct => transforms::dsct(&x, &plan, &mut counts)?,
    };
    let timings = Timings::since(start);
    if !with_counts {
        return write_vector(output, &y);
    }
    let report = TransformReport {
        command: "transform",
        op,
        n,
        counts: TransformCountsReport {
            cs: Checked {
                measured: counts.cs.into(),
                predicted: predicted_counts_cs(n)?.into(),
            },
            sn: Checked {
                measured: counts.sn.into(),
                predicted: predicted_counts_sn(n)?.into(),
            },
            glue: counts.glue.into(),
            total: counts.total().into(),
        },
        timings,
    };
    let mut text = format_vector(&y);
    for (name, c) in [("cs", report.counts.cs), ("sn", report.counts.sn)] {
        text.push_str(&format!(
            "# counts {name} additions={} predicted={}\n# counts {name} multiplications={} predicted={}\n",
            c.measured.additions, c.predicted.additions, c.measured.multiplications, c.predicted.multiplications
        ));
    }
    text.push_str(&format!(
        "# counts total additions={} multiplications={}\n",
        report.counts.total.additions, report.counts.total.multiplications
    ));
    write_text(output, &text)?;
    print!("{}", to_json(&report));
    if !(report.counts.cs.matches() && report.counts.sn.matches()) {
        return Err(CliError::CountMismatch(format!("operation counts differ from the closed forms at n={n}")));
    }
    Ok(())
}

/// Measured additions of one fast gamma-matrix/vector product (spectrum
/// already known) next to the two leading-order predictions in circulation.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MatvecCounts {
    pub measured: Pair,
    pub predicted_additions_7_4_n_log2_n: f64,
    pub predicted_additions_5_n_log2_n: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub cs: Checked,
    pub sn: Checked,
    pub matvec: MatvecCounts,
}

impl CountRow {
    pub fn passes(&self) -> bool {
        self.cs.matches() && self.sn.matches()
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub command: &'static str,
    pub max_n: usize,
    pub seed: u64,
    pub pass: bool,
    pub rows: Vec<CountRow>,
}

pub fn count_rows(max_n: usize, seed: u64) -> Result<Vec<CountRow>, CliError> {
    require_fast_order(max_n)?;
    let plan = TransformPlan::new(max_n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut n = 4;
    while n <= max_n {
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let sym = gamma_core::spectral::symmetrize(&x)?;
        let asym = gamma_core::spectral::antisymmetrize(&x)?;
        let mut c = OpCounter::new();
        transforms::cs(&sym, &plan, &mut c)?;
        let mut s = OpCounter::new();
        transforms::sn(&asym, &plan, &mut s)?;

        let g = GammaMatrix::from_components(sym.entries().to_vec(), vec![0.0; n])?;
        g.eigenvalues(&plan)?;
        let mut mv = TransformCounts::new();
        g.matvec(&x, &plan, &mut mv)?;
        let nlogn = n as f64 * (n as f64).log2();

        rows.push(CountRow {
            n,
            cs: Checked {
                measured: c.into(),
                predicted: predicted_counts_cs(n)?.into(),
            },
            sn: Checked {
                measured: s.into(),
                predicted: predicted_counts_sn(n)?.into(),
            },
            matvec: MatvecCounts {
                measured: mv.total().into(),
                predicted_additions_7_4_n_log2_n: 1.75 * nlogn,
                predicted_additions_5_n_log2_n: 5.0 * nlogn,
            },
        });
        n *= 2;
    }
    Ok(rows)
}

pub fn format_count_table(rows: &[CountRow]) -> String {
    let mut out = format!(
        "{:>6} {:>10} {:>10} {:>8} {:>8} {:>10} {:>10} {:>8} {:>8} {:>11} {:>11} {:>11}  {}\n",
        "n", "cs_add", "pred", "cs_mul", "pred", "sn_add", "pred", "sn_mul", "pred", "matvec_add", "7/4nlogn", "5nlogn", "status"
    );
    for r in rows {
        out.push_str(&format!(
            "{:>6} {:>10} {:>10} {:>8} {:>8} {:>10} {:>10} {:>8} {:>8} {:>11} {:>11.0} {:>11.0}  {}\n",
            r.n,
            r.cs.measured.additions,
            r.cs.predicted.additions,
            r.cs.measured.multiplications,
            r.cs.predicted.multiplications,
            r.sn.measured.additions,
            r.sn.predicted.additions,
            r.sn.measured.multiplications,
            r.sn.predicted.multiplications,
            r.matvec.measured.additions,
            r.matvec.predicted_additions_7_4_n_log2_n,
            r.matvec.predicted_additions_5_n_log2_n,
            if r.passes() { "ok" } else { "MISMATCH" }
        ));
    }
    out
}

pub fn verify_counts(max_n: usize, seed: u64, output: Option<&PathBuf>) -> Result<(), CliError> {
    let rows = count_rows(max_n, seed)?;
    print!("{}", format_count_table(&rows));
    let pass = rows.iter().all(CountRow::passes);
    if let Some(path) = output {
        write_json(
            path,
            &VerifyReport {
                command: "verify-counts",
                max_n,
                seed,
                pass,
                rows: rows.clone(),
            },
        )?;
    }
    if !pass {
        let bad: Vec<String> = rows.iter().filter(|r| !r.passes()).map(|r| r.n.to_string()).collect();
        return Err(CliError::CountMismatch(format!("count mismatch at n = {}", bad.join(", "))));
    }
    Ok(())
}

fn read_toeplitz(path: &PathBuf) -> Result<SymToeplitz, CliError> {
    Ok(SymToeplitz::new(read_vector(path)?)?)
}

#[derive(Debug, Serialize)]
pub struct OracleCheck {
    pub max_deviation: f64,
    pub tolerance: f64,
    pub c: Vec<f64>,
    pub b: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct PrecondReport {
    pub command: &'static str,
    pub n: usize,
    pub c: Vec<f64>,
    pub b: Vec<f64>,
    pub oracle: Option<OracleCheck>,
    pub timings: Timings,
}

pub fn precond(toeplitz: &PathBuf, output: &PathBuf, oracle_check: bool) -> Result<(), CliError> {
    let t = read_toeplitz(toeplitz)?;
    let n = t.order();
    if oracle_check && n > ORACLE_MAX_N {
        return Err(CliError::Usage(format!("--oracle-check supports n <= {ORACLE_MAX_N}, got {n}")));
    }
    let start = Instant::now();
    let g = match gamma_approx(&t) {
        Ok(g) => g,
        Err(GammaError::FormulaDiscrepancy {
            violation,
            formula,
            oracle,
        }) => {
            eprintln!("formula c = {:?}\nformula b = {:?}", formula.0, formula.1);
            if let Some((c, b)) = oracle {
                eprintln!("oracle c = {c:?}\noracle b = {b:?}");
            }
            return Err(CliError::Numerical(format!("closed form violates stationarity by {violation:e}")));
        }
        Err(e) => return Err(e.into()),
    };
    let oracle = if oracle_check {
        let p = frobenius_projection_oracle(&t)?;
        let max_deviation = g
            .c()
            .iter()
            .zip(p.c())
            .chain(g.b().iter().zip(p.b()))
            .fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()));
        Some(OracleCheck {
            max_deviation,
            tolerance: ORACLE_DEVIATION_TOL,
            c: p.c().to_vec(),
            b: p.b().to_vec(),
        })
    } else {
        None
    };
    let report = PrecondReport {
        command: "precond",
        n,
        c: g.c().to_vec(),
        b: g.b().to_vec(),
        oracle,
        timings: Timings::since(start),
    };
    write_json(output, &report)?;
    if let Some(o) = &report.oracle {
        if o.max_deviation > ORACLE_DEVIATION_TOL {
            eprintln!("formula c = {:?}\nformula b = {:?}", report.c, report.b);
            eprintln!("oracle c = {:?}\noracle b = {:?}", o.c, o.b);
            return Err(CliError::Numerical(format!(
                "closed form and projection oracle differ by {:e}",
                o.max_deviation
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct SpectrumReport {
    pub command: &'static str,
    pub n: usize,
    pub epsilon: f64,
    pub outliers: usize,
    pub unpreconditioned_outliers: usize,
    pub preconditioned: ClusterReport,
    pub timings: Timings,
}

pub fn spectrum(toeplitz: &PathBuf, epsilon: f64, output: &PathBuf) -> Result<(), CliError> {
    if !(epsilon.is_finite() && epsilon > 0.0) {
        return Err(CliError::Usage(format!("--epsilon must be positive, got {epsilon}")));
    }
    let t = read_toeplitz(toeplitz)?;
    let n = t.order();
    require_fast_order(n)?;
    let start = Instant::now();
    let plan = TransformPlan::new(n)?;
    let g = gamma_approx(&t)?;
    let pre = preconditioned_spectrum(&t, &g, epsilon, &plan)?;
    let plain = toeplitz_spectrum(&t, epsilon)?;
    write_json(
        output,
        &SpectrumReport {
            command: "spectrum",
            n,
            epsilon,
            outliers: pre.outliers,
            unpreconditioned_outliers: plain.outliers,
            preconditioned: pre,
            timings: Timings::since(start),
        },
    )
}

#[derive(Debug, Serialize)]
pub struct SolveReport {
    pub command: &'static str,
    pub n: usize,
    pub preconditioned: bool,
    pub tol: f64,
    pub max_iterations: usize,
    pub iterations: usize,
    pub converged: bool,
    pub residual_history: Vec<f64>,
    pub solution: Vec<f64>,
    pub timings: Timings,
}

pub fn solve(
    toeplitz: &PathBuf,
    rhs: &PathBuf,
    no_precond: bool,
    tol: f64,
    maxit: usize,
    output: &PathBuf,
) -> Result<(), CliError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
    }
    let t = read_toeplitz(toeplitz)?;
    let b = read_vector(rhs)?;
    let n = t.order();
    if b.len() != n {
        return Err(CliError::Usage(format!("rhs has length {} but the matrix has order {n}", b.len())));
    }
    let start = Instant::now();
    let g = if no_precond {
        None
    } else {
        require_fast_order(n)?;
        Some(gamma_approx(&t)?)
    };
    let opts = PcgOptions {
        tol,
        max_iterations: maxit,
    };
    let out = pcg(&t, &b, g.as_ref(), &opts)?;
    let converged = out.converged;
    let iterations = out.iterations;
    write_json(
        output,
        &SolveReport {
            command: "solve",
            n,
            preconditioned: !no_precond,
            tol,
            max_iterations: maxit,
            iterations: out.iterations,
            converged: out.converged,
            residual_history: out.residual_history,
            solution: out.solution,
            timings: Timings::since(start),
        },
    )?;
    if !converged {
        return Err(CliError::NotConverged(format!("no convergence after {iterations} iterations")));
    }
    Ok(())
}

pub fn toeplitz(coeffs: Option<&[f64]>, geometric: Option<(f64, usize)>, n: usize, output: &PathBuf) -> Result<(), CliError> {
    let gen = match (coeffs, geometric) {
        (Some(c), None) => GeneratorSeq::new(c.to_vec())?,
        (None, Some((ratio, k))) => GeneratorSeq::geometric(ratio, k)?,
        _ => return Err(CliError::Usage("give exactly one of --coeffs or --geometric".into())),
    };
    let t = SymToeplitz::from_generator(&gen, n)?;
    write_vector(output, t.first_column())
}

pub fn random(n: usize, seed: u64, output: &PathBuf) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    write_vector(output, &v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_pass_up_to_256() {
        let rows = count_rows(256, 7).unwrap();
        assert_eq!(rows.len(), 7);
        assert!(rows.iter().all(CountRow::passes));
        assert_eq!(rows[0].cs.measured, Pair::from((5, 2)));
        assert_eq!(rows[0].sn.measured, Pair::from((0, 1)));
    }

    #[test]
    fn table_flags_mismatch() {
        let mut rows = count_rows(8, 0).unwrap();
        rows[1].cs.measured.additions += 1;
        let table = format_count_table(&rows);
        assert!(table.lines().nth(2).unwrap().ends_with("MISMATCH"));
        assert!(table.lines().nth(1).unwrap().ends_with("ok"));
    }

    #[test]
    fn rejects_bad_max_n() {
        assert!(matches!(count_rows(12, 0), Err(CliError::Usage(_))));
        assert!(matches!(count_rows(2, 0), Err(CliError::Usage(_))));
    }
}
