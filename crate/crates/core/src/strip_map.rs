//! Conformal map from the unit disk onto the half strip `0 < Re(ω) < 1/2`.
//!
//! `φ(z; b) = 1/4 − (i/2π) Log[(1 + θ)/(1 − θ)]` with the disk automorphism
//! `θ(z; b) = (z − bi)/(1 + z b i)`. Since `(1 + θ)/(1 − θ)` lies in the open
//! right half plane for `|θ| < 1`, the principal Log is continuous and
//! `Re(φ) ∈ (0, 1/2)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::quadrature::{self, m_star_half};
use crate::special_functions::ComplexValue;

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint(ComplexValue);

impl DiskPoint {
    pub fn new(z: ComplexValue) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return domain(format!("non-finite disk point {z}"));
        }
        if !(z.norm() < 1.0) {
            return domain(format!("|z| = {} is not < 1", z.norm()));
        }
        Ok(Self(z))
    }

    pub fn value(self) -> ComplexValue {
        self.0
    }
}

/// A point `ω` of the closed half strip `0 ≤ Re(ω) ≤ 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfStripPoint(ComplexValue);

impl HalfStripPoint {
    pub fn new(omega: ComplexValue) -> Result<Self> {
        if !(omega.re.is_finite() && omega.im.is_finite()) {
            return domain(format!("non-finite half-strip point {omega}"));
        }
        if !(0.0..=0.5).contains(&omega.re) {
            return domain(format!("Re(omega) = {} outside [0, 1/2]", omega.re));
        }
        Ok(Self(omega))
    }

    pub fn value(self) -> ComplexValue {
        self.0
    }
}

/// The map parameter `b ∈ (0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct MapParam(f64);

impl MapParam {
    pub fn new(b: f64) -> Result<Self> {
        if !(b > 0.0 && b < 1.0) {
            return domain(format!("b = {b} outside (0, 1)"));
        }
        Ok(Self(b))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `θ(z; b) = (z − bi)/(1 + z b i)`.
pub fn theta(z: DiskPoint, b: MapParam) -> DiskPoint {
    let bi = I * b.0;
    let t = (z.0 - bi) / (1.0 + z.0 * bi);
    // Rounding can only push |t| to 1 when |z| is within an ulp of 1.
    DiskPoint(clamp_into_disk(t))
}

/// `θ⁻¹(t; b) = (t + bi)/(1 − t b i)`.
pub fn theta_inverse(t: DiskPoint, b: MapParam) -> DiskPoint {
    let bi = I * b.0;
    DiskPoint(clamp_into_disk((t.0 + bi) / (1.0 - t.0 * bi)))
}

fn clamp_into_disk(t: Complex64) -> Complex64 {
    let r = t.norm();
    if r < 1.0 {
        t
    } else {
        t * ((1.0 - f64::EPSILON) / r)
    }
}

/// `φ(z; b)`.
pub fn phi(z: DiskPoint, b: MapParam) -> HalfStripPoint {
    let t = theta(z, b).0;
    let q = (1.0 + t) / (1.0 - t);
    let re = 0.25 + q.arg() / (2.0 * PI);
    let im = -q.norm().ln() / (2.0 * PI);
    HalfStripPoint(Complex64::new(re.clamp(0.0, 0.5), im))
}

/// The θ-level inverse: `W = exp(2πi(ω − 1/4))`, `θ = (W − 1)/(W + 1)`.
/// Independent of `b`.
pub fn phi_inverse_theta(omega: HalfStripPoint) -> Result<DiskPoint> {
    let w = omega.0;
    if w.re <= 0.0 || w.re >= 0.5 {
        return domain(format!("Re(omega) = {} is on the strip boundary", w.re));
    }
    let q = (2.0 * PI * I * (w - 0.25)).exp();
    let t = (q - 1.0) / (q + 1.0);
    DiskPoint::new(t)
}

/// `φ⁻¹(ω; b) = θ⁻¹(θ̂(ω); b)`.
pub fn phi_inverse(omega: HalfStripPoint, b: MapParam) -> Result<DiskPoint> {
    Ok(theta_inverse(phi_inverse_theta(omega)?, b))
}

/// `H(θ; b) = sqrt[(b² + |θ|² + 2b Im θ)/(1 + b²|θ|² + 2b Im θ)]`, the modulus of `θ⁻¹(θ; b)`.
#[allow(non_snake_case)]
pub fn disk_modulus_H(t: DiskPoint, b: MapParam) -> f64 {
    // Both quadratics regrouped as sums of squares to avoid cancellation near |θ| = 1.
    let (b, x, y) = (b.0, t.0.re, t.0.im);
    let num = x * x + (y + b) * (y + b);
    let den = (1.0 + b * y) * (1.0 + b * y) + (b * x) * (b * x);
    (num / den).sqrt()
}

/// `F_z^φ(z; b) = F_ω(φ(z; b))`.
pub fn f_on_disk(z: DiskPoint, b: MapParam, tol: f64) -> Result<ComplexValue> {
    Ok(quadrature::f_shifted(phi(z, b), tol)?.value)
}

/// Smallest `b` (to bisection accuracy) with `δ M*(1/2) < G(b)`.
///
/// `G` increases to `M*(1/2)` as `b → 1`, so such a `b` exists for every `δ < 1`.
pub fn b_for_delta(delta: f64, tol: f64) -> Result<MapParam> {
    if !(delta > 0.0 && delta < 1.0) {
        return domain(format!("delta = {delta} outside (0, 1)"));
    }
    let target = delta * m_star_half();
    let holds = |b: f64| quadrature::g_of_b(b, tol).map(|g| g > target);
    let mut lo = 1e-9;
    if holds(lo)? {
        return MapParam::new(lo);
    }
    let mut hi = 1.0 - 1e-12;
    if !holds(hi)? {
        return Err(crate::Error::NonConvergence(format!(
            "no b in (0, 1) with G(b) > {target} at tolerance {tol}"
        )));
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if holds(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    MapParam::new(hi)
}
