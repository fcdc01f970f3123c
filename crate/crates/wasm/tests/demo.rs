use gamma_wasm::{approximation, residuals, spectrum_report};

const GEN: [f64; 4] = [2.0, 0.5, 0.25, 0.125];

#[test]
fn preconditioned_spectrum_clusters() {
    let p = spectrum_report(&GEN, 64, 0.1, true).unwrap();
    let u = spectrum_report(&GEN, 64, 0.1, false).unwrap();
    assert_eq!(p.len(), 67);
    assert!(p[0] < u[0], "{} vs {}", p[0], u[0]);
    assert!(p[3..].windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(p[1], p[3]);
    assert_eq!(p[2], p[66]);
}

#[test]
fn residual_histories() {
    let p = residuals(&GEN, 128, true, 500).unwrap();
    let u = residuals(&GEN, 128, false, 500).unwrap();
    assert_eq!(p[0], 1.0);
    assert!(*p.last().unwrap() <= 1e-10);
    assert!(p.len() < u.len());
}

#[test]
fn approximation_layout() {
    let cb = approximation(&[1.0], 16).unwrap();
    assert_eq!(cb.len(), 32);
    assert_eq!(cb[0], 1.0);
    assert!(cb[1..].iter().all(|v| *v == 0.0));
}

#[test]
fn bad_order_is_an_error() {
    assert!(spectrum_report(&GEN, 12, 0.1, true).is_err());
    assert!(residuals(&GEN, 0, true, 10).is_err());
}
