mod common;

use common::*;
use gamma_core::toeplitz::gamma_approx;
use gamma_core::{pcg, GeneratorSeq, PcgOptions, SymToeplitz};

fn opts() -> PcgOptions {
    PcgOptions {
        tol: 1e-10,
        max_iterations: 5000,
    }
}

#[test]
fn preconditioning_reduces_iterations() {
    let mut rng = rng(50);
    let t = SymToeplitz::from_generator(&GeneratorSeq::new(vec![2.0, 1.0]).unwrap(), 64).unwrap();
    let rhs = random_vec(64, &mut rng);
    let g = gamma_approx(&t).unwrap();
    let plain = pcg(&t, &rhs, None, &opts()).unwrap();
    let pre = pcg(&t, &rhs, Some(&g), &opts()).unwrap();
    assert!(plain.converged && pre.converged);
    assert!(pre.iterations < plain.iterations, "{} vs {}", pre.iterations, plain.iterations);
    let direct = t.to_dense().solve(&rhs).unwrap();
    assert!(max_abs_diff(&pre.solution, &direct) < 1e-8);
    assert!(max_abs_diff(&plain.solution, &direct) < 1e-8);
}

#[test]
fn residual_history_is_consistent() {
    let mut rng = rng(51);
    let t = SymToeplitz::from_generator(&GeneratorSeq::geometric(0.5, 30).unwrap(), 128).unwrap();
    let rhs = random_vec(128, &mut rng);
    let out = pcg(&t, &rhs, Some(&gamma_approx(&t).unwrap()), &opts()).unwrap();
    assert_eq!(out.residual_history.len(), out.iterations + 1);
    assert_eq!(out.residual_history[0], 1.0);
    assert!(*out.residual_history.last().unwrap() <= 1e-10);
    let r: Vec<f64> = t
        .matvec(&out.solution)
        .unwrap()
        .iter()
        .zip(&rhs)
        .map(|(a, b)| a - b)
        .collect();
    assert!(norm2(&r) / norm2(&rhs) <= 1e-9);
}

#[test]
fn geometric_generator_iterations_are_flat() {
    let gen = GeneratorSeq::geometric(0.5, 30).unwrap();
    let mut counts = Vec::new();
    for n in [64usize, 256, 1024] {
        let mut rng = rng(52);
        let t = SymToeplitz::from_generator(&gen, n).unwrap();
        let rhs = random_vec(n, &mut rng);
        let out = pcg(&t, &rhs, Some(&gamma_approx(&t).unwrap()), &opts()).unwrap();
        assert!(out.converged);
        counts.push(out.iterations);
    }
    let spread = counts.iter().max().unwrap() - counts.iter().min().unwrap();
    assert!(spread <= 5, "{counts:?}");
}

#[test]
fn exact_preconditioner_converges_immediately() {
    let mut rng = rng(53);
    // a symmetric circulant is both Toeplitz and a gamma-matrix
    let mut t = vec![0.0; 32];
    t[0] = 4.0;
    t[1] = 1.0;
    t[31] = 1.0;
    let t = SymToeplitz::new(t).unwrap();
    let g = gamma_approx(&t).unwrap();
    let rhs = random_vec(32, &mut rng);
    let out = pcg(&t, &rhs, Some(&g), &opts()).unwrap();
    assert!(out.converged);
    assert!(out.iterations <= 2);
}
