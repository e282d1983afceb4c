use std::f64::consts::E;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zetalab::quadrature::{fermi_mellin, g_of_b, m_bound, m_star, m_star_derivative, omega0};
use zetalab::special_functions::{eta, gamma, StripPoint};

const TOL: f64 = 1e-10;

fn f_abs(s: Complex64) -> f64 {
    let p = if s.re < 1.0 { StripPoint::new(s) } else { StripPoint::closed_upper(s) };
    fermi_mellin(p.unwrap(), TOL).unwrap().value.norm()
}

#[test]
fn bound_chain_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let top = m_star(0.5, TOL).unwrap();
    let ceiling = m_bound(0.5).unwrap();
    assert!(top < ceiling);
    for _ in 0..1000 {
        let s = Complex64::new(rng.gen_range(0.5..=1.0), rng.gen_range(-50.0..=50.0));
        let ms = m_star(s.re, TOL).unwrap();
        assert!(f_abs(s) <= ms + TOL, "at {s}");
        assert!(ms <= top + TOL);
    }
}

#[test]
fn closed_form_bound_on_full_strip() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..1000 {
        let s = Complex64::new(rng.gen_range(0.001..0.999), rng.gen_range(-50.0..=50.0));
        assert!(f_abs(s) <= m_bound(s.re).unwrap() + TOL, "at {s}");
    }
}

#[test]
fn closed_form_bound_values() {
    assert!((m_bound(0.5).unwrap() - (1.0 + 1.0 / E)).abs() < 1e-15);
    assert!((m_bound(1.0).unwrap() - (0.5 + 1.0 / E)).abs() < 1e-15);
    assert!(m_bound(0.0).is_err());
}

#[test]
fn m_star_decreases_on_grid() {
    let values: Vec<f64> = (0..50).map(|k| m_star(0.5 + 0.5 * k as f64 / 49.0, TOL).unwrap()).collect();
    assert!(values.windows(2).all(|w| w[1] - w[0] < 0.0));
}

#[test]
fn m_star_values_against_closed_forms() {
    // M*(1/2) = √π η(1/2), M*(1) = log 2, and d/ds[Γ(s)η(s)] at 1 = −(log 2)²/2.
    let root_pi = std::f64::consts::PI.sqrt();
    assert!((m_star(0.5, 1e-12).unwrap() - root_pi * eta(Complex64::new(0.5, 0.0)).unwrap().re).abs() < 1e-11);
    assert!((m_star(1.0, 1e-12).unwrap() - std::f64::consts::LN_2).abs() < 1e-11);
    let l2 = std::f64::consts::LN_2;
    assert!((m_star_derivative(1.0, 1, 1e-12).unwrap() + 0.5 * l2 * l2).abs() < 1e-10);
}

#[test]
fn product_identity_grid() {
    for i in 0..7 {
        for j in 0..7 {
            let s = Complex64::new(0.45 + 0.5 * i as f64 / 6.0, 5.0 * j as f64);
            let f = fermi_mellin(StripPoint::new(s).unwrap(), TOL).unwrap().value;
            let p = gamma(s).unwrap() * eta(s).unwrap();
            assert!((f - p).norm() < 1e-8, "at {s}");
        }
    }
}

#[test]
fn g_is_increasing() {
    let values: Vec<f64> = (1..=50).map(|k| g_of_b(k as f64 / 51.0, TOL).unwrap()).collect();
    assert!(values.windows(2).all(|w| w[1] > w[0]));
    assert!((g_of_b(1.0 - 1e-9, TOL).unwrap() - m_star(0.5, TOL).unwrap()).abs() < 1e-6);
}

#[test]
fn omega0_closed_form() {
    assert!((omega0(1e-12) - 0.25).abs() < 1e-12);
    assert!(omega0(1.0 - 1e-12).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn convexity_chords(a1 in 0.5f64..=1.0, a2 in 0.5f64..=1.0, t in 0.0f64..=1.0) {
        let mid = m_star(t * a1 + (1.0 - t) * a2, TOL).unwrap();
        let chord = t * m_star(a1, TOL).unwrap() + (1.0 - t) * m_star(a2, TOL).unwrap();
        prop_assert!(mid <= chord + 1e-8);
    }

    #[test]
    fn derivative_signs(alpha in 0.5f64..=1.0) {
        prop_assert!(m_star_derivative(alpha, 1, TOL).unwrap() < 0.0);
        prop_assert!(m_star_derivative(alpha, 2, TOL).unwrap() > 0.0);
    }

    #[test]
    fn m_star_below_m(alpha in 0.01f64..=1.0) {
        prop_assert!(m_star(alpha, TOL).unwrap() < m_bound(alpha).unwrap());
    }
}
