//! The Fermi–Mellin integral `F(s) = ∫₀^∞ x^{s-1} / (e^x + 1) dx`, its
//! log-weighted moments, and the bounds built from them.
//!
//! The integral is split at `x = 1`. On `[0, 1]` the Fermi factor is replaced
//! by its Taylor series (radius of convergence π) and integrated term by term,
//! which absorbs both the `x^{Re(s)-1}` endpoint singularity and the
//! `x^{i Im(s)}` oscillation near the origin. On `[1, X]` the integrand is
//! taken in `t = ln x`, where the oscillation has constant frequency, and
//! handed to adaptive Gauss–Kronrod. The tail beyond `X = max(40, -ln(tol/10))`
//! is bounded by the `e^{-x}` majorant.

mod gauss_kronrod;

use std::f64::consts::{E, PI};
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::special_functions::{ComplexValue, StripPoint};
use crate::strip_map::HalfStripPoint;

/// Default adaptive evaluation budget per integral.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Number of Taylor terms of `1 / (e^x + 1)` used on `[0, 1]`.
const SERIES_TERMS: usize = 64;

/// An integral value with an absolute error estimate and the number of
/// integrand evaluations spent on it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureEstimate {
    pub value: ComplexValue,
    pub abs_error: f64,
    pub n_evals: usize,
}

/// Tolerances for one integral. `rel_tol` is zero for the plain operations;
/// scans that need relative accuracy where `F` is tiny set it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub budget: usize,
}

impl QuadOptions {
    pub fn absolute(tol: f64) -> Self {
        Self { abs_tol: tol, rel_tol: 0.0, budget: DEFAULT_BUDGET }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }
}

/// One row of the bound tables: `M(α)`, `M*(α)` and the first two derivatives of `M*`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundsSample {
    pub alpha: f64,
    pub m: f64,
    pub m_star: f64,
    pub m_star_d1: f64,
    pub m_star_d2: f64,
}

/// Taylor coefficients of `1 / (e^x + 1)` about 0.
///
/// From `(e^x + 1) c(x) = 1`: `c_0 = 1/2`, `c_k = -(1/2) Σ_{j=1..k} c_{k-j} / j!`.
/// `c(x) - 1/2` is odd, so even coefficients past the first are exactly zero.
pub(crate) fn fermi_taylor_coefficients() -> &'static [f64; SERIES_TERMS + 1] {
    static COEFFS: OnceLock<[f64; SERIES_TERMS + 1]> = OnceLock::new();
    COEFFS.get_or_init(|| {
        let mut inv_fact = [0.0f64; SERIES_TERMS + 1];
        inv_fact[0] = 1.0;
        for j in 1..=SERIES_TERMS {
            inv_fact[j] = inv_fact[j - 1] / j as f64;
        }
        let mut c = [0.0f64; SERIES_TERMS + 1];
        c[0] = 0.5;
        for k in 1..=SERIES_TERMS {
            if k % 2 == 0 {
                continue;
            }
            let acc: f64 = (1..=k).map(|j| c[k - j] * inv_fact[j]).sum();
            c[k] = -0.5 * acc;
        }
        c
    })
}

/// `∫₀¹ x^{a-1} lnᵐ(x) dx = (-1)^m m! / a^{m+1}`.
fn unit_log_moment(a: Complex64, m: u32) -> Complex64 {
    let fact: f64 = (1..=m).map(f64::from).product();
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    (sign * fact) / a.powu(m + 1)
}

fn fermi(x: f64) -> f64 {
    let e = (-x).exp();
    e / (1.0 + e)
}

/// `∫₀^∞ x^{s-1} lnᵐ(x) / (e^x + 1) dx` for `Re(s) > 0`.
pub(crate) fn log_moment(s: Complex64, m: u32, opts: QuadOptions) -> Result<QuadratureEstimate> {
    if !(s.re > 0.0) || !s.im.is_finite() || !s.re.is_finite() {
        return domain(format!("Fermi-Mellin integral requires 0 < Re(s) finite, got {s}"));
    }
    if !(opts.abs_tol > 0.0) {
        return domain("tolerance must be positive");
    }

    // [0, 1]: term-wise integration of the Taylor series.
    let coeffs = fermi_taylor_coefficients();
    let mut series = Complex64::new(0.0, 0.0);
    for (k, ck) in coeffs.iter().enumerate().rev() {
        if *ck != 0.0 {
            series += unit_log_moment(s + k as f64, m) * *ck;
        }
    }
    // |c_k| <= 2 λ(k+1) / π^{k+1} <= 2.47 / π^{k+1} and |s + k| >= k.
    let m_fact: f64 = (1..=m).map(f64::from).product();
    let k_next = (SERIES_TERMS + 1) as f64;
    let series_bound = m_fact * 2.47 * PI.powf(-(k_next + 1.0)) / k_next.powi(m as i32 + 1)
        / (1.0 - 1.0 / PI);

    // [X, ∞): x^{α-1} |ln x|^m e^{-x} majorant.
    let x_max = 40f64.max(-(opts.abs_tol / 10.0).ln());
    let tail_bound =
        2.0 * x_max.powf(s.re - 1.0).max(1.0) * x_max.ln().powi(m as i32) * (-x_max).exp();

    // [1, X] in t = ln x: integrand e^{s t} tᵐ / (e^{e^t} + 1).
    let t_max = x_max.ln();
    let integrand = |t: f64| {
        let x = t.exp();
        (s * t).exp() * (t.powi(m as i32) * fermi(x))
    };
    let panels = (t_max * (1.0 + s.im.abs()) / 2.0).ceil().max(4.0) as usize;
    let int_tol = (opts.abs_tol - series_bound - tail_bound).max(0.5 * opts.abs_tol);
    let out =
        gauss_kronrod::integrate(&integrand, 0.0, t_max, panels, int_tol, opts.rel_tol, opts.budget)?;

    Ok(QuadratureEstimate {
        value: series + out.value,
        abs_error: out.error + series_bound + tail_bound,
        n_evals: out.n_evals,
    })
}

/// `F(s) = ∫₀^∞ x^{s-1} / (e^x + 1) dx` to absolute tolerance `tol`.
pub fn fermi_mellin(s: StripPoint, tol: f64) -> Result<QuadratureEstimate> {
    fermi_mellin_with(s, QuadOptions::absolute(tol))
}

pub fn fermi_mellin_with(s: StripPoint, opts: QuadOptions) -> Result<QuadratureEstimate> {
    log_moment(s.value(), 0, opts)
}

/// `F_ω(ω) = ∫₀^∞ x^{-1/2} x^ω / (e^x + 1) dx`, i.e. `F(ω + 1/2)`.
pub fn f_shifted(omega: HalfStripPoint, tol: f64) -> Result<QuadratureEstimate> {
    f_shifted_with(omega, QuadOptions::absolute(tol))
}

pub fn f_shifted_with(omega: HalfStripPoint, opts: QuadOptions) -> Result<QuadratureEstimate> {
    log_moment(omega.value() + 0.5, 0, opts)
}

/// Closed-form bound `M(α) = 1/(2α) + e^{-1}` on `|F(s)|`, `α = Re(s)`.
pub fn m_bound(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return domain(format!("alpha = {alpha} outside (0, 1]"));
    }
    Ok(1.0 / (2.0 * alpha) + 1.0 / E)
}

/// `M*(α) = ∫₀^∞ x^{α-1} / (e^x + 1) dx`, the real-axis value of `F`.
pub fn m_star(alpha: f64, tol: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return domain(format!("alpha = {alpha} outside (0, 1]"));
    }
    let est = log_moment(Complex64::new(alpha, 0.0), 0, QuadOptions::absolute(tol))?;
    debug_assert!(est.value.im.abs() < tol);
    Ok(est.value.re)
}

/// `dᵏM*/dαᵏ = ∫₀^∞ x^{α-1} lnᵏ(x) / (e^x + 1) dx` for `k ∈ {1, 2}` on `[1/2, 1]`.
pub fn m_star_derivative(alpha: f64, order: u32, tol: f64) -> Result<f64> {
    if !(0.5..=1.0).contains(&alpha) {
        return domain(format!("alpha = {alpha} outside [1/2, 1]"));
    }
    if !(order == 1 || order == 2) {
        return domain(format!("derivative order {order} not in {{1, 2}}"));
    }
    Ok(log_moment(Complex64::new(alpha, 0.0), order, QuadOptions::absolute(tol))?.value.re)
}

/// `ω₀(b) = 1/4 + Arg[(1 - bi)/(1 + bi)] / 2π = 1/4 - arctan(b)/π`.
pub fn omega0(b: f64) -> f64 {
    0.25 - b.atan() / PI
}

/// `dω₀/db = -1 / (π (1 + b²))`.
pub fn omega0_derivative(b: f64) -> f64 {
    -1.0 / (PI * (1.0 + b * b))
}

/// `G(b) = F_ω(ω₀(b)) = M*(ω₀(b) + 1/2)`.
pub fn g_of_b(b: f64, tol: f64) -> Result<f64> {
    if !(b > 0.0 && b < 1.0) {
        return domain(format!("b = {b} outside (0, 1)"));
    }
    m_star(omega0(b) + 0.5, tol)
}

/// All four bound quantities at `alpha ∈ (0, 1]`.
pub fn bounds_sample(alpha: f64, tol: f64) -> Result<BoundsSample> {
    bounds_sample_with(alpha, QuadOptions::absolute(tol))
}

pub fn bounds_sample_with(alpha: f64, opts: QuadOptions) -> Result<BoundsSample> {
    let m = m_bound(alpha)?;
    let s = Complex64::new(alpha, 0.0);
    Ok(BoundsSample {
        alpha,
        m,
        m_star: log_moment(s, 0, opts)?.value.re,
        m_star_d1: log_moment(s, 1, opts)?.value.re,
        m_star_d2: log_moment(s, 2, opts)?.value.re,
    })
}

/// `M*(1/2)` at full double precision, computed once.
pub fn m_star_half() -> f64 {
    static VALUE: OnceLock<f64> = OnceLock::new();
    *VALUE.get_or_init(|| m_star(0.5, 1e-14).expect("M*(1/2) quadrature converges"))
}
