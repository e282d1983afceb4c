//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::f64::consts::{E, LN_2, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zetalab::claim_audit::{run_audit, Verdict};
use zetalab::config::AuditConfig;
use zetalab::quadrature::{fermi_mellin, m_bound, m_star, m_star_derivative};
use zetalab::special_functions::{eta, functional_equation_residual, gamma, StripPoint};
use zetalab::strip_map::{
    disk_modulus_H, f_on_disk, phi, phi_inverse, theta, theta_inverse, DiskPoint, HalfStripPoint, MapParam,
};
use zetalab::zero_analysis::{
    blaschke_l, critical_line_zeros, eta_handle, jensen_check, lambda_choice, riemann_von_mangoldt, rouche_scan_with,
    rouche_survey, strip_rect, titchmarsh_zero_bound, titchmarsh_zero_free, winding_count, RoucheOptions,
    DEFAULT_STRIP_MARGIN,
};
use zetalab::Error;

type Check = Result<String, String>;

const QUAD_TOL: f64 = 1e-10;
const SEED: u64 = 20_240_917;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: Error) -> String {
    format!("error: {e}")
}

fn timed(limit: Duration, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    let detail = f()?;
    let elapsed = start.elapsed();
    ensure(elapsed < limit, format!("{detail}; took {elapsed:.2?}, limit {limit:?}"))?;
    Ok(format!("{detail}; {elapsed:.2?}"))
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn c1() -> Check {
    timed(secs(1), || {
        let v = m_star(0.5, QUAD_TOL).map_err(err)?;
        ensure((v - 1.07215).abs() < 1e-4, format!("M*(1/2) = {v}"))?;
        Ok(format!("M*(1/2) = {v:.12}"))
    })
}

fn c2() -> Check {
    timed(secs(1), || {
        let v = m_star(1.0, 1e-12).map_err(err)?;
        ensure((v - LN_2).abs() < 1e-10, format!("M*(1) = {v}"))?;
        Ok(format!("|M*(1) - log 2| = {:.2e}", (v - LN_2).abs()))
    })
}

fn c3() -> Check {
    let half = timed(secs(1), || {
        let d = m_star_derivative(0.5, 1, QUAD_TOL).map_err(err)?;
        ensure((d + 1.76259).abs() < 1e-4, format!("M*'(1/2) = {d}"))?;
        Ok(format!("M*'(1/2) = {d:.10}"))
    })?;
    let one = timed(secs(1), || {
        let d = m_star_derivative(1.0, 1, QUAD_TOL).map_err(err)?;
        ensure((d + 0.240227).abs() < 1e-6, format!("M*'(1) = {d}"))?;
        Ok(format!("M*'(1) = {d:.10}"))
    })?;
    Ok(format!("{half}; {one}"))
}

fn c4() -> Check {
    let m = m_bound(0.5).map_err(err)?;
    ensure((m - (1.0 + 1.0 / E)).abs() < 1e-10, format!("M(1/2) = {m}"))?;
    // The printed five-digit value agrees to its last digit.
    ensure((m - 1.36788).abs() < 5e-6, format!("M(1/2) = {m} vs printed 1.36788"))?;
    Ok(format!("M(1/2) = {m:.12}"))
}

fn c5() -> Check {
    timed(secs(30), || {
        let mut worst: f64 = 0.0;
        for i in 0..7 {
            for j in 0..7 {
                let s = c(0.45 + 0.5 * i as f64 / 6.0, 30.0 * j as f64 / 6.0);
                let f = fermi_mellin(StripPoint::new(s).map_err(err)?, QUAD_TOL).map_err(err)?.value;
                let p = gamma(s).map_err(err)? * eta(s).map_err(err)?;
                worst = worst.max((f - p).norm());
            }
        }
        ensure(worst < 1e-8, format!("max |F - Gamma eta| = {worst:.3e}"))?;
        Ok(format!("max |F - Gamma eta| = {worst:.3e}"))
    })
}

fn c6() -> Check {
    timed(secs(120), || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let top = m_star(0.5, QUAD_TOL).map_err(err)?;
        let mut worst_lower = f64::NEG_INFINITY;
        let mut worst_upper = f64::NEG_INFINITY;
        for _ in 0..1000 {
            let s = c(rng.gen_range(0.5..=1.0), rng.gen_range(-50.0..=50.0));
            let p = StripPoint::closed_upper(s).map_err(err)?;
            let f = fermi_mellin(p, QUAD_TOL).map_err(err)?.value.norm();
            let ms = m_star(s.re, QUAD_TOL).map_err(err)?;
            worst_lower = worst_lower.max(f - (ms + 1e-6));
            worst_upper = worst_upper.max(ms - top);
        }
        ensure(worst_lower <= 0.0 && worst_upper <= 0.0, format!("chain violated: {worst_lower:e}, {worst_upper:e}"))?;
        let mut worst_disk = f64::NEG_INFINITY;
        for _ in 0..200 {
            let z = Complex64::from_polar(0.999 * rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI));
            let b = MapParam::new(rng.gen_range(0.001..0.999)).map_err(err)?;
            let v = f_on_disk(DiskPoint::new(z).map_err(err)?, b, QUAD_TOL).map_err(err)?.norm();
            worst_disk = worst_disk.max(v - (top + 1e-6));
        }
        ensure(worst_disk <= 0.0, format!("|F_z| exceeds M*(1/2) by {worst_disk:e}"))?;
        Ok(format!("max |F| - M*(Re s) = {:.3e}; max |F_z| - M*(1/2) = {:.3e}", worst_lower + 1e-6, worst_disk + 1e-6))
    })
}

fn c7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let ms = |a: f64| m_star(a, QUAD_TOL).map_err(err);
    let mut worst_chord = f64::NEG_INFINITY;
    for _ in 0..100 {
        let (a1, a2, t): (f64, f64, f64) = (rng.gen_range(0.5..=1.0), rng.gen_range(0.5..=1.0), rng.gen());
        worst_chord = worst_chord.max(ms(t * a1 + (1.0 - t) * a2)? - (t * ms(a1)? + (1.0 - t) * ms(a2)?));
    }
    ensure(worst_chord <= 1e-8, format!("chord violated by {worst_chord:e}"))?;
    let grid: Vec<f64> = (0..50).map(|k| 0.5 + 0.5 * k as f64 / 49.0).collect();
    let values: Vec<f64> = grid.iter().map(|a| ms(*a)).collect::<Result<_, _>>()?;
    let max_step = values.windows(2).map(|w| w[1] - w[0]).fold(f64::NEG_INFINITY, f64::max);
    ensure(max_step < 0.0, format!("M* not decreasing: step {max_step:e}"))?;
    for a in &grid {
        let d1 = m_star_derivative(*a, 1, QUAD_TOL).map_err(err)?;
        let d2 = m_star_derivative(*a, 2, QUAD_TOL).map_err(err)?;
        ensure(d1 < 0.0 && d2 > 0.0, format!("derivative signs at {a}: {d1}, {d2}"))?;
    }
    Ok(format!("max chord excess {worst_chord:.3e}; largest grid step {max_step:.3e}"))
}

fn c8() -> Check {
    timed(secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
        let mut disk = |r: f64| DiskPoint::new(Complex64::from_polar(r * rng.gen::<f64>().sqrt(), rng.gen_range(-PI..PI)));
        let mut rng_b = ChaCha8Rng::seed_from_u64(SEED + 80);
        let mut param = || MapParam::new(rng_b.gen_range(0.001..0.999));
        let (mut phi_rt, mut theta_rt, mut h_err) = (0.0f64, 0.0f64, 0.0f64);
        for _ in 0..10_000 {
            let z = disk(0.9999).map_err(err)?;
            let b = param().map_err(err)?;
            let w = phi(z, b).value();
            ensure(w.re > 0.0 && w.re < 0.5, format!("Re phi = {} at z = {}", w.re, z.value()))?;
            let t = theta(z, b);
            let forward = (theta_inverse(t, b).value() - z.value()).norm();
            let backward = (theta(theta_inverse(t, b), b).value() - t.value()).norm();
            theta_rt = theta_rt.max(forward).max(backward);
            h_err = h_err.max((disk_modulus_H(t, b) - theta_inverse(t, b).value().norm()).abs());
        }
        let mut rng_w = ChaCha8Rng::seed_from_u64(SEED + 81);
        for _ in 0..10_000 {
            let w = HalfStripPoint::new(c(rng_w.gen_range(0.001..0.499), rng_w.gen_range(-1.0..1.0))).map_err(err)?;
            let b = param().map_err(err)?;
            phi_rt = phi_rt.max((phi(phi_inverse(w, b).map_err(err)?, b).value() - w.value()).norm());
        }
        ensure(phi_rt < 1e-10, format!("phi round trip {phi_rt:e}"))?;
        ensure(theta_rt < 1e-10, format!("theta round trip {theta_rt:e}"))?;
        ensure(h_err < 1e-12, format!("H mismatch {h_err:e}"))?;
        let origin = DiskPoint::new(c(0.0, 0.0)).map_err(err)?;
        let lim = phi(origin, MapParam::new(1.0 - 1e-5).map_err(err)?).value().norm();
        ensure(lim < 1e-5, format!("|phi(0; 1 - 1e-5)| = {lim:e}"))?;
        Ok(format!("phi rt {phi_rt:.2e}, theta rt {theta_rt:.2e}, H {h_err:.2e}, |phi(0)| {lim:.2e}"))
    })
}

fn c9() -> Check {
    timed(secs(300), || {
        let zero_tol = 1e-4;
        let list = critical_line_zeros(30.0, zero_tol).map_err(err)?;
        ensure(list.betas.len() == 3, format!("found {} zeros below 30", list.betas.len()))?;
        for (b, e) in list.betas.iter().zip([14.1347, 21.0220, 25.0109]) {
            ensure((b - e).abs() < 1e-3, format!("zero {b} vs {e}"))?;
        }
        ensure(list.cell_half_width < zero_tol, "cell wider than zero_tol")?;
        let rect = strip_rect(0.0, 50.0, DEFAULT_STRIP_MARGIN).map_err(err)?;
        let n = winding_count(&eta_handle, &rect, 64).map_err(err)?;
        let rvm = riemann_von_mangoldt(50.0).map_err(err)?;
        ensure(n == 10, format!("winding count {n} below 50"))?;
        ensure((n as f64 - rvm).abs() < 1.5, format!("count {n} vs N(50) = {rvm}"))?;
        Ok(format!("betas {:?}; N(50) count {n} vs {rvm:.4}", list.betas))
    })
}

struct Poly {
    roots: Vec<Complex64>,
}

impl Poly {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.roots.iter().map(|r| z - r).product()
    }
}

fn corpus() -> Vec<Poly> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    (0..100)
        .map(|_| {
            let n = rng.gen_range(1..=4);
            Poly {
                roots: (0..n).map(|_| Complex64::from_polar(rng.gen_range(0.05..0.9), rng.gen_range(-PI..PI))).collect(),
            }
        })
        .collect()
}

fn c10() -> Check {
    let mut worst: f64 = 0.0;
    for p in corpus() {
        let f = |z: Complex64| Ok(p.eval(z));
        let j = jensen_check(&f, &p.roots, 1.0, 1024).map_err(err)?;
        worst = worst.max((j.lhs - j.rhs).abs());
    }
    ensure(worst < 1e-8, format!("polynomial Jensen mismatch {worst:e}"))?;
    let b = MapParam::new(0.9).map_err(err)?;
    let f = |z: Complex64| f_on_disk(DiskPoint::new(z)?, b, QUAD_TOL);
    let j = jensen_check(&f, &[], 0.95, 2048).map_err(err)?;
    ensure((j.lhs - j.rhs).abs() < 1e-4, format!("zero-free form mismatch {:e}", j.lhs - j.rhs))?;
    Ok(format!("polynomials {worst:.2e}; F_z {:.2e}", (j.lhs - j.rhs).abs()))
}

fn c11() -> Check {
    let (mut checked, mut zero_free) = (0, 0);
    for p in corpus() {
        // Π(1 + |zᵢ|) bounds |p| on the unit circle.
        let m: f64 = p.roots.iter().map(|r| 1.0 + r.norm()).product();
        let f0 = p.eval(c(0.0, 0.0)).norm();
        for delta in [0.5, 0.7, 0.9] {
            let actual = p.roots.iter().filter(|r| r.norm() <= delta).count();
            let bound = titchmarsh_zero_bound(m, f0, delta).map_err(err)?;
            ensure(actual as f64 <= bound + 1e-12, format!("{actual} zeros exceed bound {bound} at delta {delta}"))?;
            if titchmarsh_zero_free(m, f0, delta).map_err(err)? {
                zero_free += 1;
                ensure(actual == 0, format!("zero-free predicate violated at delta {delta}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} cases, zero-free predicate held in {zero_free}"))
}

fn c12() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 12);
    let (mut worst, mut done) = (0.0f64, 0);
    while done < 10_000 {
        let n = rng.gen_range(0..=6);
        let zeros: Vec<f64> = (0..n).map(|_| rng.gen_range(0.1..60.0)).collect();
        let w = c(rng.gen_range(0.0..=0.5), rng.gen_range(0.0..60.0));
        match blaschke_l(w, &zeros) {
            Ok(v) => {
                worst = worst.max((v.norm() - 1.0).abs());
                done += 1;
            }
            Err(Error::PoleProximity { .. }) => {}
            Err(e) => return Err(err(e)),
        }
    }
    ensure(worst < 1e-12, format!("| |L| - 1 | = {worst:e}"))?;
    Ok(format!("max ||L| - 1| = {worst:.2e}"))
}

fn c13() -> Check {
    timed(secs(300), || {
        let lambda = lambda_choice(1.0, 0.1, 0.01).map_err(err)?;
        let opts = RoucheOptions::default();
        match rouche_scan_with(16.0, lambda, 0.1, &opts) {
            Ok(r) => {
                ensure(r.min_margin >= -1e-12, format!("min_margin = {:e}", r.min_margin))?;
                Ok(format!("min_margin {:.3e}, {} zeros neutralised", r.min_margin, r.zeros.len()))
            }
            Err(Error::ZeroOnBoundary(z)) => {
                let survey = rouche_survey(16.0, lambda, 0.1, &opts).map_err(err)?;
                Err(format!(
                    "f vanishes on the boundary at omega = {z} (the edge zero s = 1 + 2 pi i / log 2 of 1 - 2^(1-s)); \
                     survey: min_margin {:.3e}, {} neutralised zero(s), {} boundary zero(s)",
                    survey.min_margin,
                    survey.zeros.len(),
                    survey.boundary_zeros.len()
                ))
            }
            Err(e) => Err(err(e)),
        }
    })
}

fn c14() -> Check {
    let mut worst: f64 = 0.0;
    for i in 0..7 {
        for j in 0..7 {
            let s = c(0.2 + 0.1 * i as f64, 5.0 * j as f64);
            worst = worst.max(functional_equation_residual(StripPoint::new(s).map_err(err)?).map_err(err)?);
        }
    }
    ensure(worst < 1e-7, format!("residual {worst:e}"))?;
    Ok(format!("max residual {worst:.2e}"))
}

fn c15() -> Check {
    timed(secs(900), || {
        let cfg = AuditConfig::default();
        let first = run_audit(&cfg).map_err(err)?;
        let second = run_audit(&cfg).map_err(err)?;
        let t = first.totals;
        ensure(t.pass >= 25, format!("only {} PASS", t.pass))?;
        ensure(t.not_numeric == 4, format!("{} NOT_NUMERIC", t.not_numeric))?;
        ensure(t.skipped == 0, format!("{} SKIPPED", t.skipped))?;
        let flagged: Vec<&str> =
            first.claims.values().filter(|c| c.verdict == Verdict::NotNumeric).map(|c| c.id.as_str()).collect();
        ensure(flagged == ["EQ32", "EQ34G-DELTA", "EQ34J", "EQ34K"], format!("flagged {flagged:?}"))?;
        ensure(first.to_json() == second.to_json(), "two runs differ")?;
        Ok(format!("PASS {} FAIL {} NOT_NUMERIC {} SKIPPED {}; deterministic", t.pass, t.fail, t.not_numeric, t.skipped))
    })
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 15] = [
        ("M*(1/2) = 1.07215", c1),
        ("M*(1) = log 2", c2),
        ("dM*/dalpha at 1/2 and 1", c3),
        ("M(1/2) = 1 + 1/e", c4),
        ("product identity on 7x7 grid", c5),
        ("bound chain on 1000 random points", c6),
        ("convexity and monotone decrease of M*", c7),
        ("conformal-map suite", c8),
        ("zero location and counting", c9),
        ("Jensen suite", c10),
        ("Titchmarsh soundness", c11),
        ("Blaschke unimodularity", c12),
        ("Rouche scan on K(16)", c13),
        ("functional-equation residual", c14),
        ("full audit", c15),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {reason}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
