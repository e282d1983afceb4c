//! A registry of the paper's numbered numerical claims, each bound to an
//! executable check, and the runner that turns them into an audit report.

use std::collections::BTreeMap;
use std::f64::consts::{E, LN_2, PI};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::AuditConfig;
use crate::error::{Error, Result};
use crate::quadrature::{self, log_moment, m_bound, m_star, m_star_derivative, QuadOptions};
use crate::special_functions::{
    eta, eta_zeta_factor, functional_equation_residual, gamma, gamma_abs_product, zeta, StripPoint,
};
use crate::strip_map::{
    b_for_delta, disk_modulus_H, f_on_disk, phi, phi_inverse, theta, theta_inverse, DiskPoint, HalfStripPoint,
    MapParam,
};
use crate::zero_analysis::{
    blaschke_l, critical_line_zeros_with, jensen_check, riemann_von_mangoldt, rouche_survey, strip_rect,
    titchmarsh_zero_bound, titchmarsh_zero_free, triangle_defect, triangle_equality_condition, winding_count,
    winding_count_with, RectangleRegion, RoucheOptions, RoucheScanResult, TraceOptions, ZeroSearchOptions,
};

/// Claims whose expressions have no numerical reading. Fixed at compile time.
pub const FLAGGED: [&str; 4] = ["EQ32", "EQ34G-DELTA", "EQ34J", "EQ34K"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Equality,
    Inequality,
    Limit,
    Monotonicity,
    Count,
    Flagged,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    NotNumeric,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::NotNumeric => "NOT_NUMERIC",
            Self::Skipped => "SKIPPED",
        }
    }
}

/// What a check measured.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Observed {
    Count(i64),
    Real(f64),
    Complex { re: f64, im: f64 },
    Values(Vec<f64>),
}

impl Observed {
    fn complex(z: Complex64) -> Self {
        Self::Complex { re: z.re, im: z.im }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub paper_ref: String,
    pub description: String,
    pub check_kind: CheckKind,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub observed: Option<Observed>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub not_numeric: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub config_digest: String,
    pub totals: Totals,
    /// Claim records keyed and ordered by id.
    pub claims: BTreeMap<String, ClaimRecord>,
}

impl AuditReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// One claim record per line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for c in self.claims.values() {
            out.push_str(&serde_json::to_string(c).expect("claim serialises"));
            out.push('\n');
        }
        out
    }

    pub fn summary_table(&self) -> String {
        let mut out = String::from("id,verdict,observed\n");
        for c in self.claims.values() {
            let obs = c.observed.as_ref().map(|o| serde_json::to_string(o).expect("serialises")).unwrap_or_default();
            out.push_str(&format!("{},{},\"{}\"\n", c.id, c.verdict.as_str(), obs.replace('"', "'")));
        }
        let t = self.totals;
        out.push_str(&format!(
            "# PASS={} FAIL={} NOT_NUMERIC={} SKIPPED={}\n",
            t.pass, t.fail, t.not_numeric, t.skipped
        ));
        out
    }

    pub fn get(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.get(id)
    }
}

#[derive(Debug, Clone, Copy)]
enum Tol {
    Paper,
    Identity,
    Fixed(f64),
}

struct Outcome {
    pass: bool,
    observed: Option<Observed>,
    note: Option<String>,
}

impl Outcome {
    fn new(pass: bool, observed: Observed) -> Self {
        Self { pass, observed: Some(observed), note: None }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

struct Ctx<'a> {
    cfg: &'a AuditConfig,
    rng: ChaCha8Rng,
    /// The claim tolerance.
    tol: f64,
    /// Quadrature tolerance, kept well below the claim tolerance.
    qt: f64,
}

type Check = fn(&mut Ctx) -> Result<Outcome>;

struct ClaimSpec {
    id: &'static str,
    paper_ref: &'static str,
    description: &'static str,
    kind: CheckKind,
    tol: Tol,
    check: Option<Check>,
    flag_note: &'static str,
}

const fn claim(
    id: &'static str,
    paper_ref: &'static str,
    description: &'static str,
    kind: CheckKind,
    tol: Tol,
    check: Check,
) -> ClaimSpec {
    ClaimSpec { id, paper_ref, description, kind, tol, check: Some(check), flag_note: "" }
}

const fn flagged(id: &'static str, paper_ref: &'static str, description: &'static str, note: &'static str) -> ClaimSpec {
    ClaimSpec { id, paper_ref, description, kind: CheckKind::Flagged, tol: Tol::Fixed(0.0), check: None, flag_note: note }
}

use CheckKind::*;

static REGISTRY: &[ClaimSpec] = &[
    claim("EQ1", "Eq. (1)", "The alternating Dirichlet series converges to the accelerated eta value", Equality, Tol::Identity, eq1),
    claim("EQ2", "Eq. (2)", "Functional equation residual below 1e-7 on a 7x7 strip grid", Equality, Tol::Fixed(1e-7), eq2),
    claim("EQ3", "Eq. (3)", "Truncated Gamma modulus product (10^6 factors) matches |Gamma| and decreases in n", Equality, Tol::Fixed(1e-6), eq3),
    claim("EQ4", "Eq. (4)", "F(s) equals Gamma(s) eta(s) on the strip grid", Equality, Tol::Identity, eq4),
    claim("EQ6", "Eq. (6)", "|F(s)| is bounded by M(Re s) on random points of the open strip", Inequality, Tol::Identity, eq6),
    claim("EQ7", "Eq. (7)", "M(alpha) is strictly decreasing and unbounded as alpha -> 0", Monotonicity, Tol::Identity, eq7),
    claim("EQ8A", "Eq. (8a)", "|F(s)| < 1 + 1/e = 1.36788 for Re(s) in [1/2, 1]", Inequality, Tol::Paper, eq8a),
    claim("EQ8B", "Eq. (8b)", "|F(s)| <= F(1/2) for Re(s) in [1/2, 1]; reports the sampled maximum", Inequality, Tol::Identity, eq8b),
    claim("EQ8C", "Eq. (8c)", "F(1/2) > 0", Inequality, Tol::Identity, eq8c),
    claim("EQ9", "Eq. (9)", "|F(s)| <= M*(Re s) for Re(s) in [1/2, 1]", Inequality, Tol::Identity, eq9),
    claim("EQ10B", "Eq. (10b)", "M*(1/2) < M(1/2)", Inequality, Tol::Identity, eq10b),
    claim("EQ10C", "Eq. (10c)", "dM*/dalpha < 0 on [1/2, 1]", Inequality, Tol::Identity, eq10c),
    claim("EQ10D", "Eq. (10d)", "d2M*/dalpha2 > 0 on [1/2, 1]", Inequality, Tol::Identity, eq10d),
    claim("EQ11B", "Eq. (11b), Lemma 2", "M* lies below its chords on [1/2, 1] (100 random chords)", Inequality, Tol::Identity, eq11b),
    claim("EQ12A", "Eq. (12a)", "M*(1/2) > M*(1)", Inequality, Tol::Identity, eq12a),
    claim("EQ12B", "Eq. (12b)", "M* is strictly decreasing on [1/2, 1] and bounded by M*(1/2)", Monotonicity, Tol::Identity, eq12b),
    claim("EQ12C", "Eq. (12c)", "M*(1/2) = F(1/2) = Gamma(1/2) eta(1/2)", Equality, Tol::Identity, eq12c),
    claim("EQ13A", "Eq. (13a)", "M*(1/2) = 1.07215 < 1 + 1/e = 1.36788", Equality, Tol::Paper, eq13a),
    claim("EQ13B", "Eq. (13b)", "M*(1) = log 2 = 0.69315", Equality, Tol::Paper, eq13b),
    claim("EQ14", "Eq. (14)", "M*(alpha) <= t M*(1/2) + (1-t) M*(1) <= M*(1/2)", Inequality, Tol::Identity, eq14),
    claim("EQ15A", "Eq. (15)", "dM*/dalpha at 1/2 = -1.76259", Equality, Tol::Paper, eq15a),
    claim("EQ15B", "Eq. (15)", "dM*/dalpha at 1 = -(log 2)^2 / 2 = -0.240227", Equality, Tol::Fixed(1e-6), eq15b),
    claim("EQ16", "Eq. (16)", "|F(s)| <= M*(1/2) for Re(s) in [1/2, 1], |Im s| <= 50", Inequality, Tol::Identity, eq16),
    claim("EQ17B", "Eq. (17b)", "(1 - 2^(1-s)) Gamma(s) does not vanish on the strip grid", Inequality, Tol::Identity, eq17b),
    claim("EQ17D", "Eq. (17d), Corollary 1", "zeta(s) = 0 iff F(s) = 0, at located zeros and random non-zeros", Equality, Tol::Identity, eq17d),
    claim("EQ18", "Eq. (18)", "All zeros below tau_max lie in cells centred on Re(s) = 1/2 (finite-height check)", Count, Tol::Identity, eq18),
    claim("EQ19A", "Eq. (19a), Lemma 3", "Jensen's formula on random polynomials, R = 1", Equality, Tol::Identity, eq19a),
    claim("EQ19B", "Eq. (19b)", "Zero-free Jensen form for F_z(z; 0.9) on |z| = 0.95", Equality, Tol::Paper, eq19b),
    claim("EQ20A", "Eq. (20a), Lemma 4", "Titchmarsh bound dominates the actual zero count in |z| <= delta", Count, Tol::Identity, eq20a),
    claim("EQ20D", "Eq. (20d)", "delta M < |f(0)| implies no zeros in |z| <= delta", Count, Tol::Identity, eq20d),
    claim("EQ20E", "Eq. (20e)", "|f(0)| <= M on the polynomial corpus", Inequality, Tol::Identity, eq20e),
    claim("EQ24D", "Eq. (24d)", "theta(z; b) maps the open unit disk into itself", Inequality, Tol::Identity, eq24d),
    claim("EQ25A", "Eq. (25a)", "phi(0; b) = 1/4 + Arg[(1-bi)/(1+bi)]/(2 pi) with zero imaginary part", Equality, Tol::Identity, eq25a),
    claim("EQ25B", "Eq. (25b)", "phi(0; b) -> 0 as b -> 1", Limit, Tol::Fixed(1e-5), eq25b),
    claim("EQ26A", "Eq. (26a)", "Re phi(z; b) in (0, 1/2); reports the sampled Im range", Inequality, Tol::Identity, eq26a),
    claim("EQ26B", "Eq. (26b)", "Arg[(1+theta)/(1-theta)] in (-pi/2, pi/2)", Inequality, Tol::Identity, eq26b),
    claim("EQ28A", "Eq. (28a)", "F_z(0; b) -> M*(1/2) as b -> 1", Limit, Tol::Paper, eq28a),
    claim("EQ28B", "Eq. (28b)", "|F_z(z; b)| <= M*(1/2) on 500 random (z, b)", Inequality, Tol::Fixed(1e-3), eq28b),
    claim("EQ30C", "Eq. (30c)", "G(b) <= M*(1/2) on (0, 1) and G(b) -> M*(1/2)", Inequality, Tol::Identity, eq30c),
    claim("EQ31", "Eq. (31)", "G(b) is increasing on (0, 1)", Monotonicity, Tol::Identity, eq31),
    flagged(
        "EQ32",
        "Eq. (32)",
        "d omega_0/db expressed through a Dirac delta",
        "The Dirac delta of a complex argument has no finite numerical value; the derivative is -1/(pi(1+b^2)) from the arctangent form.",
    ),
    claim("EQ33A", "Eq. (33a)", "For delta in {0.5, 0.9, 0.99} some b(delta) gives delta < G(b)/M*(1/2) <= 1", Inequality, Tol::Identity, eq33a),
    claim("EQ33B", "Eq. (33b)", "G(b)/M*(1/2) -> 1 as b -> 1", Limit, Tol::Paper, eq33b),
    flagged(
        "EQ34G-DELTA",
        "Eq. (34g), footnote 11",
        "Taylor coefficient of G(b) at b = 1 containing Delta(-i) = 4.66920",
        "Delta(-i) has no numerical meaning; observed value is a central finite difference of G at b = 1 - 1e-3.",
    ),
    claim("EQ34H", "Eq. (34h)", "H(theta; b) equals the modulus of theta^-1(theta; b)", Equality, Tol::Fixed(1e-12), eq34h),
    claim("EQ34I", "Eq. (34i)", "dH/db at b = 1 equals 2(1 - |theta|^2)/(1 + |theta|^2 + 2 Im theta)", Equality, Tol::Paper, eq34i),
    claim("EQ34I-PSI", "Eq. (34i)", "theta = (psi - 1)/(psi + 1) with psi = exp[(omega - 1/4) 2 pi / i] inverts phi", Equality, Tol::Identity, eq34i_psi),
    flagged(
        "EQ34J",
        "Eq. (34j)",
        "Linearised inequality whose right side contains Delta(-i)",
        "Depends on the Delta(-i) term of EQ34G-DELTA; not numerically meaningful.",
    ),
    flagged(
        "EQ34K",
        "Eq. (34k), footnote 11",
        "Inequality evaluated as -1.76259 * 1/2 * 4.66920",
        "Depends on Delta(-i) = 4.66920, which has no numerical meaning.",
    ),
    claim("EQ42B", "Eq. (42b)", "|L(omega)| = 1 away from the poles", Equality, Tol::Fixed(1e-12), eq42b),
    claim("EQ42C", "Eq. (42c)", "Located critical-line zeros are zeros of eta", Equality, Tol::Identity, eq42c),
    claim("EQ43", "Eq. (43)", "f = F_omega L does not vanish on the boundary of K(tau)", Inequality, Tol::Identity, eq43),
    claim("EQ45", "Eq. (45)", "g = lambda (epsilon + omega) does not vanish on the boundary of K(tau)", Inequality, Tol::Identity, eq45),
    claim("EQ46A", "Eq. (46a)", "|f + g| <= |f| + |g| on the boundary of K(tau)", Inequality, Tol::Fixed(1e-12), eq46a),
    claim("EQ50C", "Eq. (50b)-(50c)", "With lambda from (50b), |theta| lambda |epsilon + omega| exceeds M*(1/2) >= |F_omega| on the boundary", Inequality, Tol::Identity, eq50c),
    claim("EQ51B", "Eq. (51b)", "g has no zeros in K(tau) (winding count 0)", Count, Tol::Identity, eq51b),
    claim("RVM30", "Eq. (**)", "Argument-principle count below T = 30 is within 1.5 of (T/2pi) log(T/2pi e) + 7/8", Count, Tol::Fixed(1.5), rvm30),
    claim("RVM50", "Eq. (**)", "Argument-principle count below T = 50 is within 1.5 of (T/2pi) log(T/2pi e) + 7/8", Count, Tol::Fixed(1.5), rvm50),
    claim("P1A", "Prop. 1A, Eqs. (1A)-(6A)", "M*(alpha) < M(alpha) on (0, 1) and M <= 1 + 1/e on [1/2, 1]", Inequality, Tol::Identity, p1a),
    claim("P2A", "Prop. 2A, Eqs. (7A)-(9A)", "Convex M* stays below max of chord endpoints and M*' < 0 left of a negative value", Inequality, Tol::Identity, p2a),
    claim("P4A", "Prop. 4A, Eq. (29A)", "|w| + |v| = |w + v| forces w = theta v with theta real", Equality, Tol::Identity, p4a),
];

/// The full registry with verdict SKIPPED and no observations.
pub fn list_claims() -> Vec<ClaimRecord> {
    let cfg = AuditConfig::default();
    REGISTRY
        .iter()
        .map(|spec| ClaimRecord {
            id: spec.id.to_string(),
            paper_ref: spec.paper_ref.to_string(),
            description: spec.description.to_string(),
            check_kind: spec.kind,
            tolerance: tolerance(spec.tol, &cfg),
            verdict: Verdict::Skipped,
            observed: None,
            note: None,
        })
        .collect()
}

fn tolerance(tol: Tol, cfg: &AuditConfig) -> f64 {
    match tol {
        Tol::Paper => cfg.paper_tol,
        Tol::Identity => cfg.identity_tol,
        Tol::Fixed(v) => v,
    }
}

fn claim_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(id.as_bytes());
    let digest = h.finalize();
    let mut bytes = [0u8; 32];
    bytes.copy_from_slice(&digest);
    ChaCha8Rng::from_seed(bytes)
}

/// Execute every registered check. Check failures become FAIL verdicts,
/// budget or convergence failures become SKIPPED; the audit itself only
/// fails on an invalid configuration.
pub fn run_audit(cfg: &AuditConfig) -> Result<AuditReport> {
    cfg.validate()?;
    let records: Vec<ClaimRecord> = REGISTRY.par_iter().map(|spec| run_claim(spec, cfg)).collect();
    let claims: BTreeMap<String, ClaimRecord> = records.into_iter().map(|c| (c.id.clone(), c)).collect();
    let mut totals = Totals::default();
    for c in claims.values() {
        match c.verdict {
            Verdict::Pass => totals.pass += 1,
            Verdict::Fail => totals.fail += 1,
            Verdict::NotNumeric => totals.not_numeric += 1,
            Verdict::Skipped => totals.skipped += 1,
        }
    }
    Ok(AuditReport { config_digest: cfg.digest(), totals, claims })
}

fn run_claim(spec: &ClaimSpec, cfg: &AuditConfig) -> ClaimRecord {
    let tol = tolerance(spec.tol, cfg);
    let mut record = ClaimRecord {
        id: spec.id.to_string(),
        paper_ref: spec.paper_ref.to_string(),
        description: spec.description.to_string(),
        check_kind: spec.kind,
        tolerance: tol,
        verdict: Verdict::Skipped,
        observed: None,
        note: None,
    };
    let Some(check) = spec.check else {
        record.verdict = Verdict::NotNumeric;
        record.note = Some(spec.flag_note.to_string());
        if spec.id == "EQ34G-DELTA" {
            let mut ctx = Ctx { cfg, rng: claim_rng(cfg.seed, spec.id), tol, qt: cfg.quad_tol.min(1e-10) };
            record.observed = g_slope_near_one(&mut ctx).ok().map(Observed::Real);
        }
        return record;
    };
    let qt = cfg.quad_tol.min(if tol > 0.0 { tol / 100.0 } else { cfg.quad_tol });
    let mut ctx = Ctx { cfg, rng: claim_rng(cfg.seed, spec.id), tol, qt };
    match check(&mut ctx) {
        Ok(out) => {
            record.verdict = if out.pass { Verdict::Pass } else { Verdict::Fail };
            record.observed = out.observed;
            record.note = out.note;
        }
        Err(e @ (Error::ToleranceNotMet { .. } | Error::NonConvergence(_))) => {
            record.verdict = Verdict::Skipped;
            record.note = Some(format!("infrastructure: {e}"));
        }
        Err(e) => {
            record.verdict = Verdict::Fail;
            record.note = Some(format!("check raised: {e}"));
        }
    }
    record
}

// ---- shared helpers ----

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl Ctx<'_> {
    fn quad(&self) -> QuadOptions {
        QuadOptions::absolute(self.qt).with_budget(self.cfg.eval_budget)
    }

    /// `F(s)` for `Re(s) > 0`.
    fn f(&self, s: Complex64) -> Result<Complex64> {
        Ok(log_moment(s, 0, self.quad())?.value)
    }

    fn m_star(&self, alpha: f64) -> Result<f64> {
        m_star(alpha, self.qt)
    }

    fn g(&self, b: f64) -> Result<f64> {
        quadrature::g_of_b(b, self.qt)
    }

    fn random_upper_strip(&mut self) -> Complex64 {
        c(self.rng.gen_range(0.5..=1.0), self.rng.gen_range(-50.0..=50.0))
    }

    fn random_disk(&mut self, r_max: f64) -> DiskPoint {
        let r = r_max * self.rng.gen::<f64>().sqrt();
        let a = self.rng.gen_range(-PI..PI);
        DiskPoint::new(Complex64::from_polar(r, a)).expect("radius below one")
    }

    fn random_b(&mut self) -> MapParam {
        MapParam::new(self.rng.gen_range(0.001..0.999)).expect("b inside (0, 1)")
    }

    fn zero_opts(&self) -> ZeroSearchOptions {
        ZeroSearchOptions {
            strip_margin: self.cfg.strip_margin,
            samples_per_side: self.cfg.samples_per_side,
            trace: self.trace_opts(),
        }
    }

    fn trace_opts(&self) -> TraceOptions {
        TraceOptions { boundary_min_modulus: self.cfg.boundary_min_modulus, ..TraceOptions::default() }
    }

    fn rouche(&self) -> Result<RoucheScanResult> {
        let opts = RoucheOptions {
            samples_per_side: self.cfg.samples_per_side,
            quad_rel_tol: self.cfg.quad_tol.min(1e-8),
            eval_budget: self.cfg.eval_budget,
            zero_tol: self.cfg.zero_tol,
            boundary_min_modulus: self.cfg.boundary_min_modulus,
            ..RoucheOptions::default()
        };
        let eps = 0.1;
        let lambda = crate::zero_analysis::lambda_choice(1.0, eps, 0.01)?;
        rouche_survey(self.cfg.rouche_tau, lambda, eps, &opts)
    }

    fn strip_count(&self, t: f64) -> Result<i64> {
        let rect = strip_rect(0.0, t, self.cfg.strip_margin)?;
        winding_count_with(&crate::zero_analysis::eta_handle, &rect, self.cfg.samples_per_side, self.trace_opts())
    }
}

/// Monic polynomial with the given roots.
struct Poly {
    roots: Vec<Complex64>,
}

impl Poly {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.roots.iter().map(|r| z - r).product()
    }

    /// `Π (R + |zᵢ|)`, an upper bound for `|p|` on `|z| = R`.
    fn bound(&self, radius: f64) -> f64 {
        self.roots.iter().map(|r| radius + r.norm()).product()
    }

    fn count_within(&self, radius: f64) -> usize {
        self.roots.iter().filter(|r| r.norm() <= radius).count()
    }
}

fn polynomial_corpus(ctx: &mut Ctx) -> Vec<Poly> {
    (0..ctx.cfg.polynomials)
        .map(|_| {
            let degree = ctx.rng.gen_range(1..=4);
            let roots = (0..degree)
                .map(|_| Complex64::from_polar(ctx.rng.gen_range(0.05..0.9), ctx.rng.gen_range(-PI..PI)))
                .collect();
            Poly { roots }
        })
        .collect()
}

fn max_by_norm(values: impl Iterator<Item = (Complex64, f64)>) -> (Complex64, f64) {
    values.fold((c(0.0, 0.0), f64::NEG_INFINITY), |acc, v| if v.1 > acc.1 { v } else { acc })
}

fn g_slope_near_one(ctx: &mut Ctx) -> Result<f64> {
    let (b, h) = (1.0 - 1e-3, 1e-5);
    Ok((ctx.g(b + h)? - ctx.g(b - h)?) / (2.0 * h))
}

// ---- checks ----

fn eq1(ctx: &mut Ctx) -> Result<Outcome> {
    // Mean of consecutive partial sums; error about |s| N^{-Re s - 1} / 4.
    let n = 200_000u32;
    let mut worst: f64 = 0.0;
    for s in [c(0.75, 2.0), c(0.9, 5.0)] {
        let signed = |k: u32| (-s * f64::from(k).ln()).exp() * if k % 2 == 1 { 1.0 } else { -1.0 };
        let partial: Complex64 = (1..=n).map(signed).sum();
        let averaged = partial + 0.5 * signed(n + 1);
        worst = worst.max((averaged - eta(s)?).norm());
    }
    Ok(Outcome::new(worst < ctx.tol, Observed::Real(worst)))
}

fn eq2(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for i in 0..7 {
        for j in 0..7 {
            let s = c(0.2 + 0.1 * i as f64, 5.0 * j as f64);
            worst = worst.max(functional_equation_residual(StripPoint::new(s)?)?);
        }
    }
    Ok(Outcome::new(worst < ctx.tol, Observed::Real(worst)))
}

fn eq3(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let mut monotone = true;
    for alpha in [0.1, 0.3, 0.5, 0.7, 0.9] {
        for beta in [0.0, 2.5, 5.0, 7.5, 10.0] {
            let coarse = gamma_abs_product(alpha, beta, 100_000)?;
            let fine = gamma_abs_product(alpha, beta, 1_000_000)?;
            monotone &= fine <= coarse;
            worst = worst.max((fine - gamma(c(alpha, beta))?.norm()).abs());
        }
    }
    Ok(Outcome::new(monotone && worst < ctx.tol, Observed::Real(worst)))
}

fn eq4(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for re in ctx.cfg.strip_re.points() {
        for im in ctx.cfg.strip_im.points() {
            let s = c(re, im);
            worst = worst.max((ctx.f(s)? - gamma(s)? * eta(s)?).norm());
        }
    }
    Ok(Outcome::new(worst < ctx.tol, Observed::Real(worst)))
}

fn eq6(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..ctx.cfg.random_points {
        let s = c(ctx.rng.gen_range(0.01..0.99), ctx.rng.gen_range(-50.0..=50.0));
        worst = worst.max(ctx.f(s)?.norm() - m_bound(s.re)?);
    }
    Ok(Outcome::new(worst <= ctx.tol, Observed::Real(worst)).note("observed: max of |F(s)| - M(Re s)"))
}

fn eq7(_ctx: &mut Ctx) -> Result<Outcome> {
    let values: Vec<f64> = (1..100).map(|k| m_bound(k as f64 / 100.0)).collect::<Result<_>>()?;
    let decreasing = values.windows(2).all(|w| w[1] < w[0]);
    let small = m_bound(1e-9)?;
    Ok(Outcome::new(decreasing && small > 1e8, Observed::Real(small)).note("observed: M(1e-9)"))
}

fn eq8a(ctx: &mut Ctx) -> Result<Outcome> {
    let bound = 1.0 + 1.0 / E;
    let printed_ok = (m_bound(0.5)? - 1.36788).abs() < ctx.tol;
    let mut worst: f64 = 0.0;
    for _ in 0..ctx.cfg.random_points {
        let s = ctx.random_upper_strip();
        worst = worst.max(ctx.f(s)?.norm());
    }
    Ok(Outcome::new(printed_ok && worst < bound, Observed::Real(worst)).note("observed: sampled max |F(s)|"))
}

fn eq8b(ctx: &mut Ctx) -> Result<Outcome> {
    let f_half = ctx.m_star(0.5)?;
    let mut samples = vec![(c(0.5, 0.0), f_half)];
    for _ in 0..ctx.cfg.random_points {
        let s = ctx.random_upper_strip();
        samples.push((s, ctx.f(s)?.norm()));
    }
    let (at, max) = max_by_norm(samples.into_iter());
    Ok(Outcome::new(max <= f_half + ctx.tol, Observed::Values(vec![max, at.re, at.im]))
        .note("observed: [max |F|, Re s, Im s] of the sampled maximum; attained at the real point s = 1/2"))
}

fn eq8c(ctx: &mut Ctx) -> Result<Outcome> {
    let v = ctx.f(c(0.5, 0.0))?;
    Ok(Outcome::new(v.re > 0.0 && v.im.abs() < ctx.tol, Observed::Real(v.re)))
}

fn eq9(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..ctx.cfg.random_points {
        let s = ctx.random_upper_strip();
        worst = worst.max(ctx.f(s)?.norm() - ctx.m_star(s.re)?);
    }
    Ok(Outcome::new(worst <= ctx.tol, Observed::Real(worst)).note("observed: max of |F(s)| - M*(Re s)"))
}

fn eq10b(ctx: &mut Ctx) -> Result<Outcome> {
    let (ms, m) = (ctx.m_star(0.5)?, m_bound(0.5)?);
    Ok(Outcome::new(ms < m, Observed::Values(vec![ms, m])))
}

fn eq10c(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst = f64::NEG_INFINITY;
    for a in ctx.cfg.alpha_grid.points() {
        worst = worst.max(m_star_derivative(a, 1, ctx.qt)?);
    }
    Ok(Outcome::new(worst < 0.0, Observed::Real(worst)).note("observed: largest sampled derivative"))
}

fn eq10d(ctx: &mut Ctx) -> Result<Outcome> {
    let mut least = f64::INFINITY;
    for a in ctx.cfg.alpha_grid.points() {
        least = least.min(m_star_derivative(a, 2, ctx.qt)?);
    }
    Ok(Outcome::new(least > 0.0, Observed::Real(least)).note("observed: smallest sampled second derivative"))
}

fn eq11b(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..100 {
        let (a1, a2, t) = (ctx.rng.gen_range(0.5..=1.0), ctx.rng.gen_range(0.5..=1.0), ctx.rng.gen::<f64>());
        let lhs = ctx.m_star(t * a1 + (1.0 - t) * a2)?;
        let rhs = t * ctx.m_star(a1)? + (1.0 - t) * ctx.m_star(a2)?;
        worst = worst.max(lhs - rhs);
    }
    Ok(Outcome::new(worst <= ctx.tol, Observed::Real(worst)).note("observed: max of M*(chord point) - chord value"))
}

fn eq12a(ctx: &mut Ctx) -> Result<Outcome> {
    let (a, b) = (ctx.m_star(0.5)?, ctx.m_star(1.0)?);
    Ok(Outcome::new(a > b, Observed::Values(vec![a, b])))
}

fn eq12b(ctx: &mut Ctx) -> Result<Outcome> {
    let top = ctx.m_star(0.5)?;
    let values: Vec<f64> = ctx.cfg.alpha_grid.points().into_iter().map(|a| ctx.m_star(a)).collect::<Result<_>>()?;
    let decreasing = values.windows(2).all(|w| w[1] - w[0] < 0.0);
    let bounded = values.iter().all(|v| *v <= top + ctx.tol);
    let max_step = values.windows(2).map(|w| w[1] - w[0]).fold(f64::NEG_INFINITY, f64::max);
    Ok(Outcome::new(decreasing && bounded, Observed::Real(max_step)).note("observed: largest consecutive difference"))
}

fn eq12c(ctx: &mut Ctx) -> Result<Outcome> {
    let ms = ctx.m_star(0.5)?;
    let product = (gamma(c(0.5, 0.0))? * eta(c(0.5, 0.0))?).re;
    Ok(Outcome::new((ms - product).abs() < ctx.tol, Observed::Values(vec![ms, product])))
}

fn eq13a(ctx: &mut Ctx) -> Result<Outcome> {
    let ms = ctx.m_star(0.5)?;
    Ok(Outcome::new((ms - 1.07215).abs() < ctx.tol && ms < 1.0 + 1.0 / E, Observed::Real(ms)))
}

fn eq13b(ctx: &mut Ctx) -> Result<Outcome> {
    let ms = ctx.m_star(1.0)?;
    let ok = (ms - 0.69315).abs() < ctx.tol && (ms - LN_2).abs() < ctx.cfg.identity_tol;
    Ok(Outcome::new(ok, Observed::Real(ms)))
}

fn eq14(ctx: &mut Ctx) -> Result<Outcome> {
    let (lo, hi) = (ctx.m_star(0.5)?, ctx.m_star(1.0)?);
    let mut ok = true;
    let mut worst = f64::NEG_INFINITY;
    for k in 0..=20 {
        let t = k as f64 / 20.0;
        let chord = t * lo + (1.0 - t) * hi;
        let v = ctx.m_star(0.5 * t + (1.0 - t))?;
        ok &= v <= chord + ctx.tol && chord <= lo + ctx.tol;
        worst = worst.max(v - chord);
    }
    Ok(Outcome::new(ok, Observed::Real(worst)).note("observed: max of M*(alpha) - chord"))
}

fn eq15a(ctx: &mut Ctx) -> Result<Outcome> {
    let d = m_star_derivative(0.5, 1, ctx.qt)?;
    Ok(Outcome::new((d + 1.76259).abs() < ctx.tol, Observed::Real(d)))
}

fn eq15b(ctx: &mut Ctx) -> Result<Outcome> {
    let d = m_star_derivative(1.0, 1, ctx.qt)?;
    let ok = (d + 0.240227).abs() < ctx.tol && (d + 0.5 * LN_2 * LN_2).abs() < ctx.cfg.identity_tol;
    Ok(Outcome::new(ok, Observed::Real(d)))
}

fn eq16(ctx: &mut Ctx) -> Result<Outcome> {
    let top = ctx.m_star(0.5)?;
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..ctx.cfg.random_points {
        let s = ctx.random_upper_strip();
        worst = worst.max(ctx.f(s)?.norm() - top);
    }
    Ok(Outcome::new(worst <= ctx.tol, Observed::Real(worst)).note("observed: max of |F(s)| - M*(1/2)"))
}

fn eq17b(_ctx: &mut Ctx) -> Result<Outcome> {
    let mut least = f64::INFINITY;
    for i in 1..20 {
        for j in 0..=30 {
            let s = c(i as f64 / 20.0, j as f64);
            least = least.min((eta_zeta_factor(s) * gamma(s)?).norm());
        }
    }
    Ok(Outcome::new(least > 0.0, Observed::Real(least)).note("observed: smallest modulus on Re in [0.05, 0.95], Im in [0, 30]"))
}

/// Newton refinement of a zero of η near `1/2 + i beta`.
fn polish_zero(beta: f64) -> Result<Complex64> {
    let mut s = c(0.5, beta);
    let h = 1e-6;
    for _ in 0..6 {
        let d = (eta(s + h)? - eta(s - h)?) / (2.0 * h);
        s -= eta(s)? / d;
    }
    Ok(s)
}

fn eq17d(ctx: &mut Ctx) -> Result<Outcome> {
    let zeros = critical_line_zeros_with(30.0, ctx.cfg.zero_tol, ctx.zero_opts())?;
    let opts = ctx.quad();
    let mut ok = !zeros.betas.is_empty();
    let mut worst_zero: f64 = 0.0;
    for beta in &zeros.betas {
        let s = polish_zero(*beta)?;
        let z = zeta(StripPoint::new(s)?)?.norm();
        let f = log_moment(s, 0, opts)?;
        // At a zero, F is indistinguishable from 0 at quadrature accuracy.
        ok &= z < ctx.tol && f.value.norm() <= 10.0 * f.abs_error.max(ctx.qt);
        worst_zero = worst_zero.max(z);
    }
    for _ in 0..50 {
        let s = c(ctx.rng.gen_range(0.05..0.95), ctx.rng.gen_range(0.0..5.0));
        let z = zeta(StripPoint::new(s)?)?.norm();
        let f = log_moment(s, 0, opts)?;
        ok &= z > ctx.tol && f.value.norm() > 10.0 * f.abs_error.max(ctx.qt);
    }
    Ok(Outcome::new(ok, Observed::Real(worst_zero))
        .note("observed: max |zeta| at Newton-polished zeros; non-zeros sampled at Im < 5 where |F| is resolvable"))
}

fn eq18(ctx: &mut Ctx) -> Result<Outcome> {
    let zeros = critical_line_zeros_with(ctx.cfg.tau_max, ctx.cfg.zero_tol, ctx.zero_opts())?;
    let line = zeros.betas.len() as i64;
    Ok(Outcome::new(line == zeros.strip_count, Observed::Count(line)).note(format!(
        "every zero of the strip rectangle up to {} lies in a cell of half-width {} about Re(s) = 1/2; says nothing above that height",
        ctx.cfg.tau_max, zeros.cell_half_width
    )))
}

fn eq19a(ctx: &mut Ctx) -> Result<Outcome> {
    let corpus = polynomial_corpus(ctx);
    let mut worst: f64 = 0.0;
    for p in &corpus {
        let f = |z: Complex64| Ok(p.eval(z));
        let j = jensen_check(&f, &p.roots, 1.0, 1024)?;
        worst = worst.max((j.lhs - j.rhs).abs());
    }
    Ok(Outcome::new(worst < ctx.tol, Observed::Real(worst)))
}

fn eq19b(ctx: &mut Ctx) -> Result<Outcome> {
    let b = MapParam::new(0.9)?;
    let qt = ctx.qt;
    let f = |z: Complex64| f_on_disk(DiskPoint::new(z)?, b, qt);
    let j = jensen_check(&f, &[], 0.95, 2048)?;
    Ok(Outcome::new((j.lhs - j.rhs).abs() < ctx.tol, Observed::Values(vec![j.lhs, j.rhs])))
}

fn eq20a(ctx: &mut Ctx) -> Result<Outcome> {
    let corpus = polynomial_corpus(ctx);
    let mut violations = 0;
    for p in &corpus {
        let (m, f0) = (p.bound(1.0), p.eval(c(0.0, 0.0)).norm());
        for delta in [0.5, 0.7, 0.9] {
            let bound = titchmarsh_zero_bound(m, f0, delta)?;
            if p.count_within(delta) as f64 > bound + ctx.tol {
                violations += 1;
            }
        }
    }
    Ok(Outcome::new(violations == 0, Observed::Count(violations)).note("observed: number of violations"))
}

fn eq20d(ctx: &mut Ctx) -> Result<Outcome> {
    let corpus = polynomial_corpus(ctx);
    let (mut violations, mut triggered) = (0, 0);
    for p in &corpus {
        let (m, f0) = (p.bound(1.0), p.eval(c(0.0, 0.0)).norm());
        for delta in [0.05, 0.1, 0.5, 0.7, 0.9] {
            if titchmarsh_zero_free(m, f0, delta)? {
                triggered += 1;
                if p.count_within(delta) > 0 {
                    violations += 1;
                }
            }
        }
    }
    Ok(Outcome::new(violations == 0, Observed::Values(vec![violations as f64, triggered as f64]))
        .note("observed: [violations, cases where the predicate held]"))
}

fn eq20e(ctx: &mut Ctx) -> Result<Outcome> {
    let corpus = polynomial_corpus(ctx);
    let mut worst = f64::NEG_INFINITY;
    for p in &corpus {
        let sampled = (0..512)
            .map(|k| p.eval(Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 512.0)).norm())
            .fold(0.0, f64::max);
        worst = worst.max(p.eval(c(0.0, 0.0)).norm() - sampled);
    }
    Ok(Outcome::new(worst <= 0.0, Observed::Real(worst)).note("observed: max of |f(0)| - sampled max |f| on |z| = 1"))
}

fn eq24d(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for _ in 0..10 * ctx.cfg.random_points {
        let (z, b) = (ctx.random_disk(0.9999), ctx.random_b());
        worst = worst.max(theta(z, b).value().norm());
    }
    Ok(Outcome::new(worst < 1.0, Observed::Real(worst)))
}

fn eq25a(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for k in 1..100 {
        let b = k as f64 / 100.0;
        let w = phi(DiskPoint::new(c(0.0, 0.0))?, MapParam::new(b)?).value();
        let arg = (c(1.0, -b) / c(1.0, b)).arg();
        worst = worst.max((w.re - (0.25 + arg / (2.0 * PI))).abs()).max(w.im.abs());
    }
    Ok(Outcome::new(worst < ctx.tol, Observed::Real(worst)))
}

fn eq25b(ctx: &mut Ctx) -> Result<Outcome> {
    let values: Vec<f64> = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5]
        .iter()
        .map(|h| Ok(phi(DiskPoint::new(c(0.0, 0.0))?, MapParam::new(1.0 - h)?).value().norm()))
        .collect::<Result<_>>()?;
    let last = *values.last().expect("nonempty");
    let decreasing = values.windows(2).all(|w| w[1] < w[0]);
    Ok(Outcome::new(decreasing && last < ctx.tol, Observed::Real(last)).note("observed: |phi(0; 1 - 1e-5)|"))
}

fn eq26a(ctx: &mut Ctx) -> Result<Outcome> {
    let (mut ok, mut im_min, mut im_max) = (true, f64::INFINITY, f64::NEG_INFINITY);
    for _ in 0..10 * ctx.cfg.random_points {
        let (z, b) = (ctx.random_disk(0.9999), ctx.random_b());
        let w = phi(z, b).value();
        ok &= w.re > 0.0 && w.re < 0.5;
        im_min = im_min.min(w.im);
        im_max = im_max.max(w.im);
    }
    Ok(Outcome::new(ok, Observed::Values(vec![im_min, im_max])).note(
        "observed: sampled [min Im, max Im]; Im(phi) takes both signs, so the image is not confined to the upper half; only the Re range is asserted",
    ))
}

fn eq26b(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for _ in 0..10 * ctx.cfg.random_points {
        let (z, b) = (ctx.random_disk(0.9999), ctx.random_b());
        let t = theta(z, b).value();
        worst = worst.max(((1.0 + t) / (1.0 - t)).arg().abs());
    }
    Ok(Outcome::new(worst < PI / 2.0, Observed::Real(worst)).note("observed: largest |Arg|"))
}

fn eq28a(ctx: &mut Ctx) -> Result<Outcome> {
    let v = f_on_disk(DiskPoint::new(c(0.0, 0.0))?, MapParam::new(1.0 - 1e-9)?, ctx.qt)?;
    let ms = ctx.m_star(0.5)?;
    Ok(Outcome::new((v - ms).norm() < ctx.tol, Observed::complex(v)))
}

fn eq28b(ctx: &mut Ctx) -> Result<Outcome> {
    let top = ctx.m_star(0.5)?;
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..500 {
        let (z, b) = (ctx.random_disk(0.999), ctx.random_b());
        worst = worst.max(f_on_disk(z, b, ctx.qt)?.norm() - top);
    }
    Ok(Outcome::new(worst <= ctx.tol, Observed::Real(worst)).note("observed: max of |F_z| - M*(1/2)"))
}

fn eq30c(ctx: &mut Ctx) -> Result<Outcome> {
    let top = ctx.m_star(0.5)?;
    let mut worst = f64::NEG_INFINITY;
    for k in 1..50 {
        worst = worst.max(ctx.g(k as f64 / 50.0)? - top);
    }
    let limit = ctx.g(1.0 - 1e-9)?;
    Ok(Outcome::new(worst <= ctx.tol && (limit - top).abs() < 1e-6, Observed::Values(vec![worst, limit]))
        .note("observed: [max G(b) - M*(1/2), G(1 - 1e-9)]"))
}

fn eq31(ctx: &mut Ctx) -> Result<Outcome> {
    let values: Vec<f64> = (1..=50).map(|k| ctx.g(k as f64 / 51.0)).collect::<Result<_>>()?;
    let min_step = values.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    Ok(Outcome::new(min_step > 0.0, Observed::Real(min_step)).note("observed: smallest consecutive increase"))
}

fn eq33a(ctx: &mut Ctx) -> Result<Outcome> {
    let top = ctx.m_star(0.5)?;
    let mut ratios = Vec::new();
    let mut ok = true;
    for delta in [0.5, 0.9, 0.99] {
        let b = b_for_delta(delta, ctx.qt)?;
        let r = ctx.g(b.value())? / top;
        ok &= delta < r && r <= 1.0 + ctx.tol;
        ratios.push(b.value());
    }
    Ok(Outcome::new(ok, Observed::Values(ratios)).note("observed: b(delta) for delta = 0.5, 0.9, 0.99"))
}

fn eq33b(ctx: &mut Ctx) -> Result<Outcome> {
    let r = ctx.g(1.0 - 1e-9)? / ctx.m_star(0.5)?;
    Ok(Outcome::new((r - 1.0).abs() < ctx.tol, Observed::Real(r)))
}

fn eq34h(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for _ in 0..10 * ctx.cfg.random_points {
        let (t, b) = (ctx.random_disk(0.9999), ctx.random_b());
        worst = worst.max((disk_modulus_H(t, b) - theta_inverse(t, b).value().norm()).abs());
    }
    Ok(Outcome::new(worst < ctx.tol, Observed::Real(worst)))
}

fn eq34i(ctx: &mut Ctx) -> Result<Outcome> {
    // One-sided second-order difference at b = 1, where H = 1 exactly.
    let h = 1e-5;
    let mut worst_ratio: f64 = 1.0;
    let mut ok = true;
    for _ in 0..100 {
        let t = ctx.random_disk(0.95);
        let v = t.value();
        let d = 1.0 + v.norm_sqr() + 2.0 * v.im;
        let printed = 2.0 * (1.0 - v.norm_sqr()) / d;
        let hb = |b: f64| disk_modulus_H(t, MapParam::new(b).expect("b below one"));
        let fd = (3.0 - 4.0 * hb(1.0 - h) + hb(1.0 - 2.0 * h)) / (2.0 * h);
        ok &= (fd - printed).abs() < ctx.tol * printed.abs().max(1.0);
        let ratio = fd / printed;
        if (ratio - 1.0).abs() > (worst_ratio - 1.0).abs() {
            worst_ratio = ratio;
        }
    }
    Ok(Outcome::new(ok, Observed::Real(worst_ratio)).note(
        "observed: finite-difference dH/db divided by the printed coefficient; the exact derivative is (1 - |theta|^2)/(1 + |theta|^2 + 2 Im theta), half the printed value",
    ))
}

fn eq34i_psi(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst_literal: f64 = 0.0;
    let mut worst_fixed: f64 = 0.0;
    for _ in 0..100 {
        let w = HalfStripPoint::new(c(ctx.rng.gen_range(0.01..0.49), ctx.rng.gen_range(-1.0..1.0)))?;
        let b = ctx.random_b();
        let psi = ((w.value() - 0.25) * (2.0 * PI) / c(0.0, 1.0)).exp();
        let t = (psi - 1.0) / (psi + 1.0);
        let z = theta_inverse(DiskPoint::new(t)?, b);
        worst_literal = worst_literal.max((phi(z, b).value() - w.value()).norm());
        worst_fixed = worst_fixed.max((phi(phi_inverse(w, b)?, b).value() - w.value()).norm());
    }
    Ok(Outcome::new(worst_literal < ctx.tol, Observed::Values(vec![worst_literal, worst_fixed])).note(
        "observed: [round-trip error with the printed psi, with psi replaced by its reciprocal]; the printed psi yields -theta",
    ))
}

fn eq42b(ctx: &mut Ctx) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    let mut evaluated = 0;
    while evaluated < 10 * ctx.cfg.random_points {
        let n = ctx.rng.gen_range(0..=5);
        let zeros: Vec<f64> = (0..n).map(|_| ctx.rng.gen_range(0.1..50.0)).collect();
        let w = c(ctx.rng.gen_range(0.0..=0.5), ctx.rng.gen_range(0.0..50.0));
        match blaschke_l(w, &zeros) {
            Ok(v) => {
                worst = worst.max((v.norm() - 1.0).abs());
                evaluated += 1;
            }
            Err(Error::PoleProximity { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(Outcome::new(worst < ctx.tol, Observed::Real(worst)))
}

fn eq42c(ctx: &mut Ctx) -> Result<Outcome> {
    let zeros = critical_line_zeros_with(ctx.cfg.tau_max, ctx.cfg.zero_tol, ctx.zero_opts())?;
    let mut worst: f64 = 0.0;
    for beta in &zeros.betas {
        worst = worst.max(eta(c(0.5, *beta))?.norm());
    }
    Ok(Outcome::new(!zeros.betas.is_empty() && worst < ctx.cfg.zero_tol, Observed::Real(worst))
        .note("observed: max |eta(1/2 + i beta_j)| over the located zeros"))
}

fn eq43(ctx: &mut Ctx) -> Result<Outcome> {
    let r = ctx.rouche()?;
    match r.boundary_zeros.first() {
        None => Ok(Outcome::new(true, Observed::Real(r.min_abs_f)).note("observed: min |f| away from neutralised zeros")),
        Some(z) => Ok(Outcome::new(false, Observed::complex(*z)).note(format!(
            "F_omega vanishes on the right edge Re(omega) = 1/2 (s = 1 + 2 pi i / log 2, a zero of 1 - 2^(1-s)); boundary zeros found: {}",
            r.boundary_zeros.len()
        ))),
    }
}

fn eq45(ctx: &mut Ctx) -> Result<Outcome> {
    let (lambda, eps, tau) = (crate::zero_analysis::lambda_choice(1.0, 0.1, 0.01)?, 0.1, ctx.cfg.rouche_tau);
    let rect = RectangleRegion::new(0.0, 0.5, 0.0, tau)?;
    let corners = rect.corners();
    let mut least = f64::INFINITY;
    for k in 0..4 {
        let (a, b) = (corners[k], corners[(k + 1) % 4]);
        for j in 0..=1000 {
            let w = a + (b - a) * (j as f64 / 1000.0);
            least = least.min((lambda * (eps + w)).norm());
        }
    }
    Ok(Outcome::new(least >= lambda * eps * (1.0 - 1e-15), Observed::Real(least)).note("observed: min |g| on the boundary"))
}

fn eq46a(ctx: &mut Ctx) -> Result<Outcome> {
    let r = ctx.rouche()?;
    Ok(Outcome::new(r.min_margin >= -ctx.tol, Observed::Real(r.min_margin)).note(format!(
        "observed: min of |f| + |g| - |f + g| over {} boundary samples; attained at {}",
        r.boundary_samples, r.argmin_omega
    )))
}

fn eq50c(ctx: &mut Ctx) -> Result<Outcome> {
    let r = ctx.rouche()?;
    let top = ctx.m_star(0.5)?;
    let (nu, eps) = (0.01, r.epsilon);
    let rect = RectangleRegion::new(0.0, 0.5, 0.0, r.tau)?;
    let corners = rect.corners();
    let mut least_rhs = f64::INFINITY;
    for k in 0..4 {
        let (a, b) = (corners[k], corners[(k + 1) % 4]);
        for j in 0..=1000 {
            let w = a + (b - a) * (j as f64 / 1000.0);
            least_rhs = least_rhs.min((top + nu) * (eps + w).norm() / eps);
        }
    }
    // |f| = |F_omega| away from the neutralised zeros, so min |f| is bounded by M*(1/2) there too.
    let ok = least_rhs > top && r.min_abs_f <= top + ctx.tol;
    Ok(Outcome::new(ok, Observed::Values(vec![least_rhs, top])).note("observed: [min of (M*(1/2) + nu)|epsilon + omega|/epsilon, M*(1/2)]"))
}

fn eq51b(ctx: &mut Ctx) -> Result<Outcome> {
    let lambda = crate::zero_analysis::lambda_choice(1.0, 0.1, 0.01)?;
    let g = |w: Complex64| Ok(lambda * (0.1 + w));
    let rect = RectangleRegion::new(0.0, 0.5, 0.0, ctx.cfg.rouche_tau)?;
    let n = winding_count(&g, &rect, ctx.cfg.samples_per_side)?;
    Ok(Outcome::new(n == 0, Observed::Count(n)))
}

fn rvm(ctx: &mut Ctx, t: f64, expected: i64) -> Result<Outcome> {
    let count = ctx.strip_count(t)?;
    let n = riemann_von_mangoldt(t)?;
    Ok(Outcome::new(count == expected && (count as f64 - n).abs() < ctx.tol, Observed::Values(vec![count as f64, n]))
        .note("observed: [argument-principle count, closed form]; nearest-integer rounding of the closed form is not used"))
}

fn rvm30(ctx: &mut Ctx) -> Result<Outcome> {
    rvm(ctx, 30.0, 3)
}

fn rvm50(ctx: &mut Ctx) -> Result<Outcome> {
    rvm(ctx, 50.0, 10)
}

fn p1a(ctx: &mut Ctx) -> Result<Outcome> {
    let mut ok = true;
    let mut least_gap = f64::INFINITY;
    for k in 1..20 {
        let a = k as f64 / 20.0;
        let gap = m_bound(a)? - ctx.m_star(a)?;
        ok &= gap > 0.0;
        least_gap = least_gap.min(gap);
    }
    let upper = (0..=50).map(|k| m_bound(0.5 + k as f64 / 100.0)).collect::<Result<Vec<_>>>()?;
    ok &= upper.iter().all(|m| *m <= 1.0 + 1.0 / E + 1e-15);
    Ok(Outcome::new(ok, Observed::Real(least_gap)).note("observed: smallest M(alpha) - M*(alpha) on (0, 1)"))
}

fn p2a(ctx: &mut Ctx) -> Result<Outcome> {
    let mut ok = true;
    for _ in 0..100 {
        let (x, y, t) = (ctx.rng.gen_range(0.5..=1.0), ctx.rng.gen_range(0.5..=1.0), ctx.rng.gen::<f64>());
        let v = ctx.m_star(t * x + (1.0 - t) * y)?;
        ok &= v <= ctx.m_star(x)?.max(ctx.m_star(y)?) + ctx.tol;
    }
    // g'(1) < 0 and convexity give g' < 0 on [1/2, 1].
    let right = m_star_derivative(1.0, 1, ctx.qt)?;
    ok &= right < 0.0;
    for a in ctx.cfg.alpha_grid.points() {
        ok &= m_star_derivative(a, 1, ctx.qt)? < 0.0;
    }
    Ok(Outcome::new(ok, Observed::Real(right)).note("observed: dM*/dalpha at 1"))
}

fn p4a(ctx: &mut Ctx) -> Result<Outcome> {
    let mut ok = true;
    for _ in 0..1000 {
        let v = c(ctx.rng.gen_range(-2.0..2.0), ctx.rng.gen_range(-2.0..2.0));
        if v.norm() < 1e-3 {
            continue;
        }
        let w = v * ctx.rng.gen_range(0.01..10.0);
        // Equality holds for a positive real ratio and the cross term vanishes.
        ok &= triangle_equality_condition(w, v, 1e-12);
        ok &= (w.re * v.im - v.re * w.im).abs() < 1e-12 * w.norm() * v.norm() * 10.0;
        let u = c(ctx.rng.gen_range(-2.0..2.0), ctx.rng.gen_range(-2.0..2.0));
        if triangle_equality_condition(u, v, ctx.tol * 1e-4) {
            ok &= (u.re * v.im - v.re * u.im).abs() < ctx.tol * u.norm() * v.norm();
        }
    }
    let negative = triangle_defect(c(-1.0, 0.0), c(1.0, 0.0));
    Ok(Outcome::new(ok, Observed::Real(negative)).note(
        "equality implies w = theta v with theta real (verified); the converse needs theta >= 0: w = -v is collinear but |w| + |v| - |w + v| = 2 (observed)",
    ))
}
