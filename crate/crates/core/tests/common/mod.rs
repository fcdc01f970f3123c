#![allow(dead_code)]

use gamma_core::GammaMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vec(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn random_symmetric_vec(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut x = vec![0.0; n];
    for j in 0..=n / 2 {
        let v = rng.gen_range(-1.0..1.0);
        x[j] = v;
        x[(n - j) % n] = v;
    }
    x
}

/// Symmetric `b` with zero sum and, for even `n`, zero alternating sum.
pub fn random_reverse_part(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut b = random_symmetric_vec(n, rng);
    let mean = b.iter().sum::<f64>() / n as f64;
    b.iter_mut().for_each(|v| *v -= mean);
    if n % 2 == 0 {
        let alt = b
            .iter()
            .enumerate()
            .map(|(t, v)| if t % 2 == 0 { *v } else { -*v })
            .sum::<f64>()
            / n as f64;
        for (t, v) in b.iter_mut().enumerate() {
            *v -= if t % 2 == 0 { alt } else { -alt };
        }
    }
    b
}

pub fn random_gamma(n: usize, rng: &mut ChaCha8Rng) -> GammaMatrix {
    GammaMatrix::from_components(random_symmetric_vec(n, rng), random_reverse_part(n, rng)).unwrap()
}

pub fn random_circulant(n: usize, rng: &mut ChaCha8Rng) -> GammaMatrix {
    GammaMatrix::from_components(random_symmetric_vec(n, rng), vec![0.0; n]).unwrap()
}

pub fn random_reverse(n: usize, rng: &mut ChaCha8Rng) -> GammaMatrix {
    GammaMatrix::from_components(vec![0.0; n], random_reverse_part(n, rng)).unwrap()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

pub fn max_abs(a: &[f64]) -> f64 {
    a.iter().fold(0.0, |m, v| m.max(v.abs()))
}

pub fn norm2(a: &[f64]) -> f64 {
    a.iter().map(|v| v * v).sum::<f64>().sqrt()
}
