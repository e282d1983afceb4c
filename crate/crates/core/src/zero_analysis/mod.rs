//! Zero counting and location: argument-principle winding, critical-line
//! zeros of η, Jensen's formula, the Titchmarsh disk bound, the Blaschke-type
//! neutraliser `L(ω)` and the Rouché boundary scan.

mod rouche;
mod winding;

use std::f64::consts::{E, PI};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::quadrature::m_star_half;
use crate::special_functions::{eta, ComplexValue};

pub use rouche::{
    rouche_scan, rouche_scan_with, rouche_survey, rouche_zero_list, RoucheOptions, RoucheScanResult,
    EXCLUSION_TOL, POLE_TOL,
};
pub use winding::{
    trace_boundary, winding_count, winding_count_with, BoundaryTrace, TraceOptions, TraceSample,
    DEFAULT_BOUNDARY_MIN_MODULUS, SAMPLES_PER_UNIT,
};

/// An axis-aligned closed rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectangleRegion {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl RectangleRegion {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        let finite = [re_min, re_max, im_min, im_max].iter().all(|v| v.is_finite());
        if !finite || !(re_min < re_max) || !(im_min < im_max) {
            return domain(format!("degenerate rectangle [{re_min}, {re_max}] x [{im_min}, {im_max}]"));
        }
        Ok(Self { re_min, re_max, im_min, im_max })
    }

    /// Corners in counter-clockwise order starting at the lower left.
    pub fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re_min, self.im_min),
            Complex64::new(self.re_max, self.im_min),
            Complex64::new(self.re_max, self.im_max),
            Complex64::new(self.re_min, self.im_max),
        ]
    }
}

/// Default distance kept from `Re(s) = 0` and `Re(s) = 1` when counting zeros of η.
pub const DEFAULT_STRIP_MARGIN: f64 = 0.02;

/// `[margin, 1 − margin] × [im_min, im_max]` in `s` coordinates.
pub fn strip_rect(im_min: f64, im_max: f64, margin: f64) -> Result<RectangleRegion> {
    if !(margin > 0.0 && margin < 0.5) {
        return domain(format!("strip margin {margin} outside (0, 1/2)"));
    }
    RectangleRegion::new(margin, 1.0 - margin, im_min, im_max)
}

/// η as an analytic handle.
pub fn eta_handle(s: Complex64) -> Result<Complex64> {
    eta(s)
}

/// Imaginary parts of the zeros of η on `Re(s) = 1/2` up to `tau`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticalZeroList {
    pub betas: Vec<f64>,
    pub tau: f64,
    /// Final cell height; each β is the centre of its cell.
    pub resolution: f64,
    /// Half-width of the cells around `Re(s) = 1/2`.
    pub cell_half_width: f64,
    /// Winding count of η over the full strip rectangle.
    pub strip_count: i64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroSearchOptions {
    pub strip_margin: f64,
    pub samples_per_side: usize,
    pub trace: TraceOptions,
}

impl Default for ZeroSearchOptions {
    fn default() -> Self {
        Self { strip_margin: DEFAULT_STRIP_MARGIN, samples_per_side: 64, trace: TraceOptions::default() }
    }
}

/// Locate every zero of η with `0 < Im(s) ≤ tau` by bisecting thin cells
/// `[1/2 − zero_tol/2, 1/2 + zero_tol/2] × [lo, hi]`, each certified by its
/// winding count, and cross-check the total against the full strip.
pub fn critical_line_zeros(tau: f64, zero_tol: f64) -> Result<CriticalZeroList> {
    critical_line_zeros_with(tau, zero_tol, ZeroSearchOptions::default())
}

pub fn critical_line_zeros_with(tau: f64, zero_tol: f64, opts: ZeroSearchOptions) -> Result<CriticalZeroList> {
    if !(tau > 0.0 && tau.is_finite()) {
        return domain(format!("tau = {tau} must be positive"));
    }
    if !(zero_tol > 0.0 && zero_tol < 0.5) {
        return domain(format!("zero_tol = {zero_tol} outside (0, 1/2)"));
    }
    let strip = strip_rect(0.0, tau, opts.strip_margin)?;
    let strip_count = winding_count_with(&eta_handle, &strip, opts.samples_per_side, opts.trace)?;

    let half_width = zero_tol / 2.0;
    let resolution = zero_tol / 64.0;
    let count = |lo: f64, hi: f64| -> Result<i64> {
        let cell = RectangleRegion::new(0.5 - half_width, 0.5 + half_width, lo, hi)?;
        winding_count_with(&eta_handle, &cell, opts.samples_per_side.min(16), opts.trace)
    };

    let line_count = count(0.0, tau)?;
    if line_count != strip_count {
        return Err(Error::CountMismatch { strip: strip_count, line: line_count });
    }

    let mut active = if line_count > 0 { vec![(0.0, tau, line_count)] } else { Vec::new() };
    let mut found = Vec::new();
    while !active.is_empty() {
        let next: Vec<Vec<(f64, f64, i64)>> = active
            .par_iter()
            .map(|&(lo, hi, n)| {
                if hi - lo < resolution {
                    return Err(Error::MultiplicityAmbiguity { im_lo: lo, im_hi: hi, winding: n });
                }
                split_cell(lo, hi, n, &count)
            })
            .collect::<Result<_>>()?;
        active.clear();
        for (lo, hi, n) in next.into_iter().flatten() {
            if n == 1 && hi - lo < resolution {
                found.push(0.5 * (lo + hi));
            } else if n > 0 {
                active.push((lo, hi, n));
            }
        }
    }
    found.sort_by(|a, b| a.total_cmp(b));
    Ok(CriticalZeroList { betas: found, tau, resolution, cell_half_width: half_width, strip_count })
}

/// Split `[lo, hi]` near its midpoint, moving the cut if it runs through a zero.
fn split_cell(
    lo: f64,
    hi: f64,
    n: i64,
    count: &(dyn Fn(f64, f64) -> Result<i64> + Sync),
) -> Result<Vec<(f64, f64, i64)>> {
    let h = hi - lo;
    let mut last = None;
    for shift in [0.0, 0.0173, -0.0291, 0.0419] {
        let mid = lo + h * (0.5 + shift);
        let halves = count(lo, mid).and_then(|a| Ok((a, count(mid, hi)?)));
        match halves {
            Ok((a, b)) if a + b == n => return Ok(vec![(lo, mid, a), (mid, hi, b)]),
            Ok((a, b)) => {
                last = Some(Error::NonConvergence(format!(
                    "cell [{lo}, {hi}] counts {n} but halves count {a} + {b}"
                )))
            }
            Err(e @ Error::BoundaryZero(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one split attempted"))
}

/// `N(T) = (T/2π) ln(T/2πe) + 7/8`.
pub fn riemann_von_mangoldt(t: f64) -> Result<f64> {
    if !(t > 2.0 * PI * E) || !t.is_finite() {
        return domain(format!("T = {t} must exceed 2*pi*e"));
    }
    Ok(t / (2.0 * PI) * (t / (2.0 * PI * E)).ln() + 0.875)
}

/// Jensen's formula, both sides.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JensenSides {
    pub lhs: f64,
    pub rhs: f64,
}

/// Threshold for `|f(0)|` and for zeros touching the circle.
pub const JENSEN_TOL: f64 = 1e-12;

/// `lhs = ln|f(0)| + Σ ln(R/|zᵢ|)` against the trapezoidal circle mean of `ln|f(R e^{iθ})|`.
pub fn jensen_check<F>(f: &F, zeros: &[ComplexValue], radius: f64, samples: usize) -> Result<JensenSides>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    if !(radius > 0.0 && radius.is_finite()) || samples == 0 {
        return domain("Jensen check needs R > 0 and at least one sample");
    }
    for z in zeros {
        let r = z.norm();
        if (r - radius).abs() < JENSEN_TOL {
            return Err(Error::BoundaryZero(*z));
        }
        if r > radius {
            return domain(format!("zero {z} lies outside |z| < {radius}"));
        }
    }
    let f0 = f(Complex64::new(0.0, 0.0))?.norm();
    if !(f0 >= JENSEN_TOL) {
        return Err(Error::ZeroAtCenter);
    }
    let lhs = f0.ln() + zeros.iter().map(|z| (radius / z.norm()).ln()).sum::<f64>();
    let logs: Vec<f64> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let p = Complex64::from_polar(radius, 2.0 * PI * k as f64 / samples as f64);
            f(p).map(|v| v.norm().ln())
        })
        .collect::<Result<_>>()?;
    let rhs = logs.iter().sum::<f64>() / samples as f64;
    Ok(JensenSides { lhs, rhs })
}

fn check_titchmarsh_inputs(m: f64, f0_abs: f64, delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta < 1.0) {
        return domain(format!("delta = {delta} outside (0, 1)"));
    }
    if !(f0_abs > 0.0) || !(f0_abs <= m) || !m.is_finite() {
        return domain(format!("need 0 < |f(0)| <= M, got |f(0)| = {f0_abs}, M = {m}"));
    }
    Ok(())
}

/// `ln(M/|f(0)|) / ln(1/δ)`, an upper bound on the zeros in `|z| ≤ δR` when `M` bounds `|f|` on `|z| = R`.
pub fn titchmarsh_zero_bound(m: f64, f0_abs: f64, delta: f64) -> Result<f64> {
    check_titchmarsh_inputs(m, f0_abs, delta)?;
    Ok((m / f0_abs).ln() / (1.0 / delta).ln())
}

/// `δM < |f(0)|`, under which the bound is below one and `|z| ≤ δR` is zero-free.
pub fn titchmarsh_zero_free(m: f64, f0_abs: f64, delta: f64) -> Result<bool> {
    check_titchmarsh_inputs(m, f0_abs, delta)?;
    Ok(delta * m < f0_abs)
}

/// `L(ω) = Π (ω̄ + iβⱼ)/(ω − iβⱼ)`.
pub fn blaschke_l(omega: ComplexValue, zeros: &[f64]) -> Result<ComplexValue> {
    blaschke_l_with(omega, zeros, POLE_TOL)
}

pub fn blaschke_l_with(omega: ComplexValue, zeros: &[f64], pole_tol: f64) -> Result<ComplexValue> {
    let mut acc = Complex64::new(1.0, 0.0);
    for &beta in zeros {
        let d = omega - Complex64::new(0.0, beta);
        if d.norm() < pole_tol {
            return Err(Error::PoleProximity { omega, beta });
        }
        acc *= d.conj() / d;
    }
    Ok(acc)
}

/// `λ = (M*(1/2) + ν)/(|ϑ| ε)`.
pub fn lambda_choice(theta_abs: f64, epsilon: f64, nu: f64) -> Result<f64> {
    if !(theta_abs > 0.0 && epsilon > 0.0 && nu > 0.0) {
        return domain("lambda_choice needs positive |theta|, epsilon and nu");
    }
    Ok((m_star_half() + nu) / (theta_abs * epsilon))
}

/// `|w| + |v| − |w + v|`, computed without cancellation.
pub fn triangle_defect(w: ComplexValue, v: ComplexValue) -> f64 {
    let (a, b, s) = (w.norm(), v.norm(), (w + v).norm());
    let denom = a + b + s;
    if denom == 0.0 {
        return 0.0;
    }
    (2.0 * (a * b - (w * v.conj()).re) / denom).max(0.0)
}

/// Whether `|w| + |v| = |w + v|` within `tol`.
pub fn triangle_equality_condition(w: ComplexValue, v: ComplexValue, tol: f64) -> bool {
    triangle_defect(w, v) < tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::m_star;
    use crate::strip_map::{b_for_delta, f_on_disk, DiskPoint, MapParam};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rectangle_validation() {
        assert!(RectangleRegion::new(0.0, 0.0, 0.0, 1.0).is_err());
        assert!(RectangleRegion::new(0.0, 1.0, 2.0, 1.0).is_err());
        assert!(RectangleRegion::new(0.0, f64::NAN, 0.0, 1.0).is_err());
    }

    #[test]
    fn eta_winding_examples() {
        let r = strip_rect(0.0, 30.0, DEFAULT_STRIP_MARGIN).unwrap();
        assert_eq!(winding_count(&eta_handle, &r, 64).unwrap(), 3);
        let r = strip_rect(13.0, 15.0, DEFAULT_STRIP_MARGIN).unwrap();
        assert_eq!(winding_count(&eta_handle, &r, 64).unwrap(), 1);
        let r = strip_rect(0.0, 10.0, DEFAULT_STRIP_MARGIN).unwrap();
        assert_eq!(winding_count(&eta_handle, &r, 64).unwrap(), 0);
    }

    #[test]
    fn zeros_below_twenty() {
        let z = critical_line_zeros(20.0, 1e-4).unwrap();
        assert_eq!(z.betas.len(), 1);
        assert!((z.betas[0] - 14.134725142).abs() < 1e-3);
        assert!(eta(c(0.5, z.betas[0])).unwrap().norm() < 1e-5);
        assert!(critical_line_zeros(10.0, 1e-4).unwrap().betas.is_empty());
    }

    #[test]
    fn zero_search_domain() {
        assert!(critical_line_zeros(0.0, 1e-4).is_err());
        assert!(critical_line_zeros(10.0, 0.0).is_err());
    }

    #[test]
    fn rvm_values() {
        assert!((riemann_von_mangoldt(2.0 * PI * E * (1.0 + 1e-15)).unwrap() - 0.875).abs() < 1e-12);
        assert!((riemann_von_mangoldt(30.0).unwrap() - 3.5640).abs() < 1e-3);
        assert!((riemann_von_mangoldt(50.0).unwrap() - 9.4228).abs() < 1e-3);
        assert!(riemann_von_mangoldt(2.0 * PI * E).is_err());
    }

    #[test]
    fn jensen_examples() {
        let f = |z: Complex64| Ok(z - 0.5);
        let j = jensen_check(&f, &[c(0.5, 0.0)], 1.0, 256).unwrap();
        assert!(j.lhs.abs() < 1e-15);
        assert!(j.rhs.abs() < 1e-8);
        let g = |z: Complex64| Ok((z - 0.3) * (z + c(0.0, 0.4)));
        let j = jensen_check(&g, &[c(0.3, 0.0), c(0.0, -0.4)], 1.0, 256).unwrap();
        assert!((j.lhs - j.rhs).abs() < 1e-8);
        // A missing zero shows up as a mismatch.
        let j = jensen_check(&g, &[c(0.3, 0.0)], 1.0, 256).unwrap();
        assert!((j.lhs - j.rhs).abs() > 0.5);
    }

    #[test]
    fn jensen_errors() {
        let f = |z: Complex64| Ok(z);
        assert_eq!(jensen_check(&f, &[], 1.0, 16), Err(Error::ZeroAtCenter));
        let g = |z: Complex64| Ok(z - 1.0);
        assert!(matches!(jensen_check(&g, &[c(1.0, 0.0)], 1.0, 16), Err(Error::BoundaryZero(_))));
    }

    #[test]
    fn jensen_on_mapped_fermi_integral() {
        let b = MapParam::new(0.9).unwrap();
        let f = |z: Complex64| f_on_disk(DiskPoint::new(z)?, b, 1e-11);
        let j = jensen_check(&f, &[], 0.95, 2048).unwrap();
        assert!((j.lhs - j.rhs).abs() < 1e-4, "{j:?}");
    }

    #[test]
    fn titchmarsh_examples() {
        assert_eq!(titchmarsh_zero_bound(2.0, 2.0, 0.5).unwrap(), 0.0);
        let bound = titchmarsh_zero_bound(1.25, 0.25, 0.6).unwrap();
        assert!((bound - 3.1507).abs() < 1e-3);
        assert!(titchmarsh_zero_bound(1.0, 2.0, 0.5).is_err());
        assert!(titchmarsh_zero_bound(1.0, 0.5, 1.0).is_err());
        for delta in [0.5, 0.9, 0.99] {
            let b = b_for_delta(delta, 1e-10).unwrap();
            let g = crate::quadrature::g_of_b(b.value(), 1e-10).unwrap();
            assert!(titchmarsh_zero_free(m_star(0.5, 1e-10).unwrap(), g, delta).unwrap());
        }
    }

    #[test]
    fn blaschke_examples() {
        assert_eq!(blaschke_l(c(0.3, 0.2), &[]).unwrap(), c(1.0, 0.0));
        assert!((blaschke_l(c(0.3, 0.2), &[14.1347]).unwrap().norm() - 1.0).abs() < 1e-12);
        let zeros = [14.134725, 21.022040, 25.010858];
        let v = blaschke_l(c(0.1, 14.1), &zeros).unwrap();
        assert!((v.norm() - 1.0).abs() < 1e-12);
        let expected: f64 = zeros.iter().map(|b| 2.0 * ((b - 14.1) / 0.1f64).atan()).sum();
        let wrapped = expected - 2.0 * PI * (expected / (2.0 * PI)).round();
        assert!((v.arg() - wrapped).abs() < 1e-12);
        assert!(wrapped.abs() > 0.5);
        assert!(matches!(blaschke_l(c(0.0, 14.1347), &[14.1347]), Err(Error::PoleProximity { .. })));
    }

    #[test]
    fn lambda_examples() {
        assert!((lambda_choice(1.0, 0.1, 0.01).unwrap() - 10.8215).abs() < 1e-3);
        let a = lambda_choice(2.0, 0.3, 0.05).unwrap();
        let b = lambda_choice(2.0, 0.6, 0.05).unwrap();
        assert!((a - 2.0 * b).abs() < 1e-12);
        assert!((lambda_choice(1.0, 1.0, 1e-12).unwrap() - 1.07215).abs() < 1e-4);
        assert!(lambda_choice(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn triangle_examples() {
        let v = c(1.0, 1.0);
        assert!(triangle_equality_condition(2.0 * v, v, 1e-12));
        assert!(!triangle_equality_condition(c(0.0, 1.0), c(1.0, 0.0), 1e-6));
        assert!(!triangle_equality_condition(-c(1.0, 0.0), c(1.0, 0.0), 1e-6));
        assert!((triangle_defect(c(0.0, 1.0), c(1.0, 0.0)) - (2.0 - 2f64.sqrt())).abs() < 1e-15);
    }
}
