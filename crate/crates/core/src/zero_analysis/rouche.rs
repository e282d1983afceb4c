//! Rouché boundary scan on `K(τ) = [0, 1/2] × [0, τ]` in `ω = s − 1/2`.
//!
//! `f(ω) = F_ω(ω) L(ω)` and `g(ω) = λ(ε + ω)`. Within `pole_tol` of a
//! neutralised zero `iβⱼ` the factor `F_ω(ω)/(ω − iβⱼ)` is evaluated by a
//! Cauchy integral over a ring around `iβⱼ`, so `f` stays finite there.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::winding::{trace_boundary, TraceOptions, DEFAULT_BOUNDARY_MIN_MODULUS};
use super::{blaschke_l_with, critical_line_zeros, triangle_defect, RectangleRegion};
use crate::error::{domain, Error, Result};
use crate::quadrature::{log_moment, QuadOptions, DEFAULT_BUDGET};
use crate::special_functions::ComplexValue;

/// Radius around `iβⱼ` inside which the removable-singularity formula is used.
pub const POLE_TOL: f64 = 1e-3;

/// Minimum distance kept between `τ` and any `βⱼ`.
pub const EXCLUSION_TOL: f64 = 1e-2;

const RING_NODES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoucheOptions {
    pub samples_per_side: usize,
    /// Relative quadrature tolerance for `F_ω`.
    pub quad_rel_tol: f64,
    pub eval_budget: usize,
    pub zero_tol: f64,
    pub pole_tol: f64,
    pub exclusion_tol: f64,
    pub boundary_min_modulus: f64,
}

impl Default for RoucheOptions {
    fn default() -> Self {
        Self {
            samples_per_side: 64,
            quad_rel_tol: 1e-8,
            eval_budget: DEFAULT_BUDGET,
            zero_tol: 1e-4,
            pole_tol: POLE_TOL,
            exclusion_tol: EXCLUSION_TOL,
            boundary_min_modulus: DEFAULT_BOUNDARY_MIN_MODULUS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RoucheScanResult {
    /// Height actually scanned after the genericity shift.
    pub tau: f64,
    pub tau_requested: f64,
    pub lambda: f64,
    pub epsilon: f64,
    /// Minimum of `|f| + |g| − |f + g|` over the boundary samples.
    pub min_margin: f64,
    pub argmin_omega: ComplexValue,
    pub boundary_samples: usize,
    /// Minimum of `|f|` away from the neutralised zeros.
    pub min_abs_f: f64,
    pub argmin_abs_f: ComplexValue,
    /// The neutralised zeros `βⱼ ≤ τ`.
    pub zeros: Vec<f64>,
    /// Points of `∂K(τ)` where `f` vanishes outside the neutralised neighbourhoods.
    pub boundary_zeros: Vec<ComplexValue>,
}

/// Zeros to neutralise and the height to scan: `τ` is moved up by
/// `5·exclusion_tol` while any `βⱼ` lies within `exclusion_tol` of it.
pub fn rouche_zero_list(tau: f64, opts: &RoucheOptions) -> Result<(f64, Vec<f64>)> {
    let look_ahead = 1.0;
    let list = critical_line_zeros(tau + look_ahead, opts.zero_tol)?;
    let mut t = tau;
    while list.betas.iter().any(|b| (b - t).abs() < opts.exclusion_tol) {
        t += 5.0 * opts.exclusion_tol;
        if t > tau + look_ahead - opts.exclusion_tol {
            return Err(Error::NonConvergence(format!("no generic height found above tau = {tau}")));
        }
    }
    Ok((t, list.betas.into_iter().filter(|b| *b <= t).collect()))
}

struct Ring {
    beta: f64,
    nodes: Vec<Complex64>,
    values: Vec<Complex64>,
}

impl Ring {
    /// `F_ω(ω)/(ω − iβ)` by the mean value of the Cauchy integrand.
    fn quotient(&self, omega: Complex64) -> Complex64 {
        let centre = Complex64::new(0.0, self.beta);
        let sum: Complex64 = self
            .nodes
            .iter()
            .zip(&self.values)
            .map(|(z, h)| h * (z - centre) / (z - omega))
            .sum();
        sum / self.nodes.len() as f64
    }
}

/// Scan `∂K(τ)`, reporting boundary zeros instead of failing on them.
pub fn rouche_survey(tau: f64, lambda: f64, epsilon: f64, opts: &RoucheOptions) -> Result<RoucheScanResult> {
    if !(tau > 0.0 && tau.is_finite()) || !(lambda > 0.0) || !(epsilon > 0.0) {
        return domain("rouche scan needs positive tau, lambda and epsilon");
    }
    let (t, zeros) = rouche_zero_list(tau, opts)?;
    let quad = QuadOptions { abs_tol: 1e-30, rel_tol: opts.quad_rel_tol, budget: opts.eval_budget };
    let f_omega = |w: Complex64| log_moment(w + 0.5, 0, quad).map(|e| e.value);

    let ring_radius = 2.0 * opts.pole_tol;
    let rings: Vec<Ring> = zeros
        .par_iter()
        .map(|&beta| {
            let centre = Complex64::new(0.0, beta);
            let nodes: Vec<Complex64> = (0..RING_NODES)
                .map(|k| centre + Complex64::from_polar(ring_radius, 2.0 * PI * k as f64 / RING_NODES as f64))
                .collect();
            let values = nodes
                .iter()
                .map(|z| f_omega(*z).map(|v| v / (z - centre)))
                .collect::<Result<_>>()?;
            Ok(Ring { beta, nodes, values })
        })
        .collect::<Result<_>>()?;

    let near = |w: Complex64| rings.iter().position(|r| (w - Complex64::new(0.0, r.beta)).norm() < opts.pole_tol);
    let f = |w: Complex64| -> Result<Complex64> {
        match near(w) {
            Some(j) => {
                let others: Vec<f64> = zeros.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, b)| *b).collect();
                let d = w - Complex64::new(0.0, rings[j].beta);
                Ok(d.conj() * rings[j].quotient(w) * blaschke_l_with(w, &others, opts.pole_tol)?)
            }
            None => Ok(f_omega(w)? * blaschke_l_with(w, &zeros, opts.pole_tol)?),
        }
    };
    let exclude = |w: Complex64| near(w).is_some();

    let rect = RectangleRegion::new(0.0, 0.5, 0.0, t)?;
    let trace_opts = TraceOptions { boundary_min_modulus: opts.boundary_min_modulus, ..TraceOptions::default() };
    let trace = trace_boundary(&f, &rect, opts.samples_per_side, &exclude, trace_opts)?;

    let mut min_margin = f64::INFINITY;
    let mut argmin_omega = Complex64::new(0.0, 0.0);
    let mut min_abs_f = f64::INFINITY;
    let mut argmin_abs_f = Complex64::new(0.0, 0.0);
    for s in &trace.samples {
        let g = lambda * (epsilon + s.point);
        let m = triangle_defect(s.value, g);
        if m < min_margin {
            min_margin = m;
            argmin_omega = s.point;
        }
        if !s.excluded && s.value.norm() < min_abs_f {
            min_abs_f = s.value.norm();
            argmin_abs_f = s.point;
        }
    }

    Ok(RoucheScanResult {
        tau: t,
        tau_requested: tau,
        lambda,
        epsilon,
        min_margin,
        argmin_omega,
        boundary_samples: trace.samples.len(),
        min_abs_f,
        argmin_abs_f,
        zeros,
        boundary_zeros: trace.boundary_zeros,
    })
}

/// As [`rouche_survey`], failing with `ZeroOnBoundary` if `f` vanishes on `∂K(τ)`.
pub fn rouche_scan(tau: f64, lambda: f64, epsilon: f64, samples_per_side: usize, tol: f64) -> Result<RoucheScanResult> {
    let opts = RoucheOptions { samples_per_side, quad_rel_tol: tol, ..RoucheOptions::default() };
    rouche_scan_with(tau, lambda, epsilon, &opts)
}

pub fn rouche_scan_with(tau: f64, lambda: f64, epsilon: f64, opts: &RoucheOptions) -> Result<RoucheScanResult> {
    let report = rouche_survey(tau, lambda, epsilon, opts)?;
    match report.boundary_zeros.first() {
        Some(z) => Err(Error::ZeroOnBoundary(*z)),
        None => Ok(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_functions::{eta, gamma};

    #[test]
    fn ring_quotient_matches_product_oracle() {
        let beta = 14.134725142;
        let opts = RoucheOptions::default();
        let quad = QuadOptions { abs_tol: 1e-30, rel_tol: 1e-10, budget: DEFAULT_BUDGET };
        let f_omega = |w: Complex64| log_moment(w + 0.5, 0, quad).unwrap().value;
        let centre = Complex64::new(0.0, beta);
        let nodes: Vec<Complex64> = (0..RING_NODES)
            .map(|k| centre + Complex64::from_polar(2.0 * opts.pole_tol, 2.0 * PI * k as f64 / RING_NODES as f64))
            .collect();
        let values = nodes.iter().map(|z| f_omega(*z) / (z - centre)).collect();
        let ring = Ring { beta, nodes, values };
        let w = Complex64::new(0.0, beta + 4e-4);
        let s = w + 0.5;
        let via_eta = gamma(s).unwrap() * eta(s).unwrap() / (w - centre);
        assert!((ring.quotient(w) - via_eta).norm() / via_eta.norm() < 1e-5);
    }

    #[test]
    fn clean_boundary_below_first_edge_zero() {
        let r = rouche_scan(8.0, 10.0, 0.1, 64, 1e-8).unwrap();
        assert!(r.zeros.is_empty());
        assert_eq!(r.tau, 8.0);
        assert!(r.min_margin >= -1e-12);
        assert!(r.min_abs_f > 0.0);
    }

    #[test]
    fn right_edge_zero_is_detected() {
        // F_ω(1/2 + iβ) = Γ(1 + iβ) η(1 + iβ) vanishes at β = 2π/ln 2.
        let edge = Complex64::new(0.5, 2.0 * PI / std::f64::consts::LN_2);
        match rouche_scan(10.0, 10.0, 0.1, 64, 1e-8) {
            Err(Error::ZeroOnBoundary(z)) => assert!((z - edge).norm() < 1e-5, "{z}"),
            other => panic!("expected ZeroOnBoundary, got {other:?}"),
        }
    }

    #[test]
    fn survey_above_first_zero_neutralises_it() {
        let r = rouche_survey(16.0, 10.8215, 0.1, &RoucheOptions::default()).unwrap();
        assert_eq!(r.zeros.len(), 1);
        assert!((r.zeros[0] - 14.134725).abs() < 1e-3);
        assert!(r.min_margin >= -1e-12);
        assert_eq!(r.boundary_zeros.len(), 1);
        assert!((r.boundary_zeros[0].im - 9.0647).abs() < 1e-3);
    }

    #[test]
    fn genericity_shift() {
        let opts = RoucheOptions::default();
        let (t, zeros) = rouche_zero_list(14.1347, &opts).unwrap();
        assert!((t - 14.1347).abs() > opts.exclusion_tol - 1e-12);
        assert!(zeros.iter().all(|b| (b - t).abs() >= opts.exclusion_tol));
        assert!(t > 14.1347);
    }
}
