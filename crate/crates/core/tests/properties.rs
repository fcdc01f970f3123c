use gamma_core::algebra::decompose_spectrum;
use gamma_core::transforms::{dsct, idsct};
use gamma_core::{GammaMatrix, TransformCounts, TransformPlan};
use proptest::prelude::*;

fn vector(n: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-100.0f64..100.0, n)
}

fn order() -> impl Strategy<Value = usize> {
    (2u32..=8).prop_map(|r| 1usize << r)
}

fn sized_vector() -> impl Strategy<Value = Vec<f64>> {
    order().prop_flat_map(vector)
}

fn symmetric(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    (0..n).map(|j| 0.5 * (x[j] + x[(n - j) % n])).collect()
}

fn gamma_from(raw_c: &[f64], raw_lambda_b: &[f64], plan: &TransformPlan) -> GammaMatrix {
    // reverse parts are easiest to generate through an asymmetric spectrum
    let (_, asym) = decompose_spectrum(raw_lambda_b);
    let b = GammaMatrix::from_spectrum(&asym, plan).unwrap();
    GammaMatrix::from_components(symmetric(raw_c), b.b().to_vec()).unwrap()
}

proptest! {
    #[test]
    fn transforms_invert_each_other(x in sized_vector()) {
        let plan = TransformPlan::new(x.len()).unwrap();
        let y = idsct(&x, &plan, &mut TransformCounts::new()).unwrap();
        let back = dsct(&y, &plan, &mut TransformCounts::new()).unwrap();
        let scale = x.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        for (a, b) in back.iter().zip(&x) {
            prop_assert!((a - b).abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn spectrum_halves_recompose(x in sized_vector()) {
        let (s, a) = decompose_spectrum(&x);
        let n = x.len();
        prop_assert_eq!(a[0], 0.0);
        prop_assert_eq!(a[n / 2], 0.0);
        for j in 0..n {
            prop_assert!((s[j] + a[j] - x[j]).abs() <= 1e-13 * x[j].abs().max(1.0));
        }
    }

    #[test]
    fn matvec_is_linear((c, lb, x, y) in order().prop_flat_map(|n| (vector(n), vector(n), vector(n), vector(n))), alpha in -3.0f64..3.0) {
        let plan = TransformPlan::new(c.len()).unwrap();
        let g = gamma_from(&c, &lb, &plan);
        let mix: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + alpha * b).collect();
        let lhs = g.matvec(&mix, &plan, &mut TransformCounts::new()).unwrap();
        let gx = g.matvec(&x, &plan, &mut TransformCounts::new()).unwrap();
        let gy = g.matvec(&y, &plan, &mut TransformCounts::new()).unwrap();
        let scale = lhs.iter().chain(&gx).chain(&gy).fold(1.0f64, |m, v| m.max(v.abs()));
        for j in 0..lhs.len() {
            prop_assert!((lhs[j] - gx[j] - alpha * gy[j]).abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn products_commute((c1, l1, c2, l2) in order().prop_flat_map(|n| (vector(n), vector(n), vector(n), vector(n)))) {
        let plan = TransformPlan::new(c1.len()).unwrap();
        let g1 = gamma_from(&c1, &l1, &plan);
        let g2 = gamma_from(&c2, &l2, &plan);
        let p = g1.matmul(&g2, &plan, &mut TransformCounts::new()).unwrap();
        let q = g2.matmul(&g1, &plan, &mut TransformCounts::new()).unwrap();
        let scale = p.c().iter().chain(p.b()).fold(1.0f64, |m, v| m.max(v.abs()));
        for j in 0..p.order() {
            prop_assert!((p.c()[j] - q.c()[j]).abs() <= 1e-10 * scale);
            prop_assert!((p.b()[j] - q.b()[j]).abs() <= 1e-10 * scale);
        }
    }
}
