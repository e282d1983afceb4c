use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use zetalab::quadrature::{g_of_b, m_star};
use zetalab::strip_map::{
    b_for_delta, disk_modulus_H, phi, phi_inverse, theta, theta_inverse, DiskPoint, HalfStripPoint, MapParam,
};

fn disk(r: f64, a: f64) -> DiskPoint {
    DiskPoint::new(Complex64::from_polar(r, a)).unwrap()
}

fn param(b: f64) -> MapParam {
    MapParam::new(b).unwrap()
}

#[test]
fn centring_closed_form_and_limit() {
    let origin = disk(0.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 1..1000 {
        let b = k as f64 / 1000.0;
        let w = phi(origin, param(b)).value();
        assert!((w.re - (0.25 - b.atan() / PI)).abs() < 1e-15);
        assert!(w.im.abs() < 1e-15);
        assert!(w.re < last);
        last = w.re;
    }
    assert!(phi(origin, param(1.0 - 1e-5)).value().norm() < 1e-5);
}

#[test]
fn b_for_delta_exists() {
    let top = m_star(0.5, 1e-10).unwrap();
    for delta in [0.5, 0.9, 0.99] {
        let b = b_for_delta(delta, 1e-10).unwrap().value();
        assert!(b > 0.0 && b < 1.0);
        assert!(delta * top < g_of_b(b, 1e-10).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn theta_is_a_self_map(r in 0.0f64..0.99999, a in -PI..PI, b in 0.0001f64..0.9999) {
        prop_assert!(theta(disk(r, a), param(b)).value().norm() < 1.0);
    }

    #[test]
    fn phi_lands_in_the_half_strip(r in 0.0f64..0.99999, a in -PI..PI, b in 0.0001f64..0.9999) {
        let z = disk(r, a);
        let w = phi(z, param(b)).value();
        prop_assert!(w.re > 0.0 && w.re < 0.5);
        let t = theta(z, param(b)).value();
        prop_assert!(((1.0 + t) / (1.0 - t)).arg().abs() < PI / 2.0);
    }

    #[test]
    fn h_matches_inverse_modulus(r in 0.0f64..0.99999, a in -PI..PI, b in 0.0001f64..0.9999) {
        let t = disk(r, a);
        let direct = theta_inverse(t, param(b)).value().norm();
        prop_assert!((disk_modulus_H(t, param(b)) - direct).abs() < 1e-12);
    }

    #[test]
    fn phi_after_inverse(re in 0.001f64..0.499, im in -1.0f64..1.0, b in 0.001f64..0.999) {
        let w = HalfStripPoint::new(Complex64::new(re, im)).unwrap();
        let back = phi(phi_inverse(w, param(b)).unwrap(), param(b)).value();
        prop_assert!((back - w.value()).norm() < 1e-10);
    }

    #[test]
    fn inverse_after_phi(r in 0.0f64..0.9, a in -PI..PI, b in 0.001f64..0.999) {
        let z = disk(r, a);
        let w = phi(z, param(b));
        let back = phi_inverse(w, param(b)).unwrap().value();
        prop_assert!((back - z.value()).norm() < 1e-10);
    }

    #[test]
    fn theta_round_trip(r in 0.0f64..0.999, a in -PI..PI, b in 0.001f64..0.999) {
        let z = disk(r, a);
        prop_assert!((theta_inverse(theta(z, param(b)), param(b)).value() - z.value()).norm() < 1e-10);
    }
}
