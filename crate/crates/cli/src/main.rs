//! `zetalab`: batch checks, plottable tables and the claim audit.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use zetalab::claim_audit::run_audit;
use zetalab::config::{AuditConfig, OutputFormat};
use zetalab::quadrature::{bounds_sample_with, fermi_mellin_with, f_shifted_with, QuadOptions};
use zetalab::special_functions::{eta_with_bound, eta_zeta_factor, gamma, zeta, StripPoint};
use zetalab::strip_map::{disk_modulus_H, f_on_disk, phi, phi_inverse, theta, DiskPoint, HalfStripPoint, MapParam};
use zetalab::zero_analysis::{
    critical_line_zeros_with, jensen_check, lambda_choice, riemann_von_mangoldt, rouche_survey, RoucheOptions,
    TraceOptions, ZeroSearchOptions,
};
use zetalab::Error;

#[derive(Parser, Debug)]
#[command(name = "zetalab", version, about = "Numerical checks on the critical strip")]
struct Cli {
    /// Quadrature tolerance (overrides quad_tol from the config).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Evaluation budget per quadrature (overrides eval_budget).
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_parser = ["csv", "doc"])]
    format: Option<String>,
    /// Config file with key = value lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Function {
    #[value(name = "zeta")]
    Zeta,
    #[value(name = "eta")]
    Eta,
    #[value(name = "gamma")]
    Gamma,
    #[value(name = "F")]
    F,
    #[value(name = "F_shifted")]
    FShifted,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a function at re + i im.
    Eval {
        function: Function,
        #[arg(allow_hyphen_values = true)]
        re: f64,
        #[arg(allow_hyphen_values = true)]
        im: f64,
    },
    /// Table of M, M*, dM*/dalpha and d2M*/dalpha2 over an alpha grid.
    Bounds {
        #[arg(long, default_value_t = 0.5)]
        from: f64,
        #[arg(long, default_value_t = 1.0)]
        to: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
    },
    /// Disk-to-strip map at z = re + i im, or its inverse at omega = re + i im.
    Map {
        #[arg(allow_hyphen_values = true)]
        re: f64,
        #[arg(allow_hyphen_values = true)]
        im: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        inverse: bool,
    },
    /// Zeros of eta on the critical line up to tau, with the counting-formula estimate.
    Zeros {
        tau: f64,
        #[arg(long)]
        zero_tol: Option<f64>,
    },
    /// Jensen's formula for the mapped integral on |z| = radius.
    Jensen {
        #[arg(long, default_value_t = 0.9)]
        b: f64,
        #[arg(long, default_value_t = 0.95)]
        radius: f64,
        #[arg(long, default_value_t = 2048)]
        samples: usize,
    },
    /// Rouché boundary scan on [0, 1/2] x [0, tau].
    Rouche {
        tau: f64,
        /// Defaults to (M*(1/2) + nu)/epsilon.
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        #[arg(long, default_value_t = 0.01)]
        nu: f64,
    },
    /// Run the claim audit and write audit_report.json and audit_report.jsonl.
    Audit {
        /// Config file (alternative to --config).
        config_path: Option<PathBuf>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) | Error::Domain(_) => Failure::Usage(e.to_string()),
            other => Failure::Numerical(other.to_string()),
        }
    }
}

struct Settings {
    cfg: AuditConfig,
    format: OutputFormat,
}

impl Settings {
    fn quad(&self) -> QuadOptions {
        QuadOptions::absolute(self.cfg.quad_tol).with_budget(self.cfg.eval_budget)
    }

    fn trace(&self) -> TraceOptions {
        TraceOptions { boundary_min_modulus: self.cfg.boundary_min_modulus, ..TraceOptions::default() }
    }
}

fn load_settings(cli: &Cli, path: Option<&PathBuf>) -> Result<Settings, Failure> {
    let mut cfg = match path {
        Some(p) => {
            let text = fs::read_to_string(p)
                .map_err(|e| Failure::Usage(format!("cannot read config file {}: {e}", p.display())))?;
            AuditConfig::parse(&text)?
        }
        None => AuditConfig::default(),
    };
    if let Some(t) = cli.tol {
        cfg.set("quad_tol", &t.to_string())?;
    }
    if let Some(b) = cli.budget {
        cfg.set("eval_budget", &b.to_string())?;
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(f) = &cli.format {
        cfg.set("format", f)?;
    }
    cfg.validate()?;
    Ok(Settings { format: cfg.format, cfg })
}

fn num(x: f64) -> String {
    format!("{x:.12e}")
}

fn cplx(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

fn doc(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serialises");
    s.push('\n');
    s
}

/// Printed text and whether any FAIL verdict was produced.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, failed: false }
    }
}

fn cmd_eval(st: &Settings, function: Function, re: f64, im: f64) -> Result<Output, Failure> {
    let s = Complex64::new(re, im);
    let (name, value, error): (&str, Complex64, Option<f64>) = match function {
        Function::Zeta => {
            let v = zeta(StripPoint::new(s)?)?;
            let e = eta_with_bound(s)?.bound / eta_zeta_factor(s).norm();
            ("zeta", v, Some(e))
        }
        Function::Eta => {
            let e = eta_with_bound(s)?;
            ("eta", e.value, Some(e.bound))
        }
        Function::Gamma => ("gamma", gamma(s)?, None),
        Function::F => {
            let p = if re < 1.0 { StripPoint::new(s)? } else { StripPoint::closed_upper(s)? };
            let e = fermi_mellin_with(p, st.quad())?;
            ("F", e.value, Some(e.abs_error))
        }
        Function::FShifted => {
            let e = f_shifted_with(HalfStripPoint::new(s)?, st.quad())?;
            ("F_shifted", e.value, Some(e.abs_error))
        }
    };
    let text = match st.format {
        OutputFormat::Csv => csv(
            &["function", "arg_re", "arg_im", "value_re", "value_im", "modulus", "error_estimate"],
            &[vec![
                name.to_string(),
                num(re),
                num(im),
                num(value.re),
                num(value.im),
                num(value.norm()),
                error.map(num).unwrap_or_default(),
            ]],
        ),
        OutputFormat::Doc => doc(&json!({
            "function": name,
            "argument": cplx(s),
            "value": cplx(value),
            "modulus": value.norm(),
            "error_estimate": error,
        })),
    };
    Ok(Output::ok(text))
}

fn cmd_bounds(st: &Settings, from: f64, to: f64, step: f64) -> Result<Output, Failure> {
    if !(step > 0.0) || !(from <= to) {
        return Err(Failure::Usage("bounds needs from <= to and step > 0".into()));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize + 1;
    let mut samples = Vec::with_capacity(n);
    for k in 0..n {
        let alpha = if k + 1 == n && ((to - from) / step - (n - 1) as f64).abs() < 1e-9 { to } else { from + k as f64 * step };
        samples.push(bounds_sample_with(alpha, st.quad())?);
    }
    let text = match st.format {
        OutputFormat::Csv => csv(
            &["alpha", "m", "m_star", "m_star_d1", "m_star_d2"],
            &samples
                .iter()
                .map(|b| vec![num(b.alpha), num(b.m), num(b.m_star), num(b.m_star_d1), num(b.m_star_d2)])
                .collect::<Vec<_>>(),
        ),
        OutputFormat::Doc => doc(&json!({
            "samples": samples.iter().map(|b| json!({
                "alpha": b.alpha, "m": b.m, "m_star": b.m_star, "m_star_d1": b.m_star_d1, "m_star_d2": b.m_star_d2,
            })).collect::<Vec<_>>(),
        })),
    };
    Ok(Output::ok(text))
}

fn cmd_map(st: &Settings, re: f64, im: f64, b: f64, inverse: bool) -> Result<Output, Failure> {
    let b = MapParam::new(b)?;
    let (z, omega) = if inverse {
        let omega = HalfStripPoint::new(Complex64::new(re, im))?;
        (phi_inverse(omega, b)?, omega)
    } else {
        let z = DiskPoint::new(Complex64::new(re, im))?;
        (z, phi(z, b))
    };
    let t = theta(z, b);
    let h = disk_modulus_H(t, b);
    let f = f_on_disk(z, b, st.cfg.quad_tol)?;
    let text = match st.format {
        OutputFormat::Csv => csv(
            &["b", "z_re", "z_im", "theta_re", "theta_im", "omega_re", "omega_im", "h", "f_re", "f_im"],
            &[vec![
                num(b.value()),
                num(z.value().re),
                num(z.value().im),
                num(t.value().re),
                num(t.value().im),
                num(omega.value().re),
                num(omega.value().im),
                num(h),
                num(f.re),
                num(f.im),
            ]],
        ),
        OutputFormat::Doc => doc(&json!({
            "b": b.value(),
            "z": cplx(z.value()),
            "theta": cplx(t.value()),
            "omega": cplx(omega.value()),
            "h": h,
            "f_on_disk": cplx(f),
        })),
    };
    Ok(Output::ok(text))
}

fn cmd_zeros(st: &Settings, tau: f64, zero_tol: Option<f64>) -> Result<Output, Failure> {
    let opts = ZeroSearchOptions {
        strip_margin: st.cfg.strip_margin,
        samples_per_side: st.cfg.samples_per_side,
        trace: st.trace(),
    };
    let list = critical_line_zeros_with(tau, zero_tol.unwrap_or(st.cfg.zero_tol), opts)?;
    let rvm = riemann_von_mangoldt(tau).ok();
    let text = match st.format {
        OutputFormat::Csv => {
            eprintln!(
                "count = {}, counting formula = {}",
                list.betas.len(),
                rvm.map_or("n/a (tau <= 2 pi e)".to_string(), |v| format!("{v:.6}"))
            );
            csv(
                &["index", "beta", "cell_height"],
                &list
                    .betas
                    .iter()
                    .enumerate()
                    .map(|(k, b)| vec![(k + 1).to_string(), num(*b), num(list.resolution)])
                    .collect::<Vec<_>>(),
            )
        }
        OutputFormat::Doc => doc(&json!({
            "tau": list.tau,
            "betas": list.betas,
            "count": list.betas.len(),
            "strip_count": list.strip_count,
            "resolution": list.resolution,
            "cell_half_width": list.cell_half_width,
            "riemann_von_mangoldt": rvm,
        })),
    };
    Ok(Output::ok(text))
}

fn cmd_jensen(st: &Settings, b: f64, radius: f64, samples: usize) -> Result<Output, Failure> {
    let b = MapParam::new(b)?;
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Failure::Usage(format!("radius {radius} must lie in (0, 1)")));
    }
    let tol = st.cfg.quad_tol;
    let f = |z: Complex64| f_on_disk(DiskPoint::new(z)?, b, tol);
    let j = jensen_check(&f, &[], radius, samples)?;
    let text = match st.format {
        OutputFormat::Csv => csv(
            &["b", "radius", "samples", "lhs", "rhs", "difference"],
            &[vec![num(b.value()), num(radius), samples.to_string(), num(j.lhs), num(j.rhs), num(j.lhs - j.rhs)]],
        ),
        OutputFormat::Doc => doc(&json!({
            "b": b.value(), "radius": radius, "samples": samples,
            "lhs": j.lhs, "rhs": j.rhs, "difference": j.lhs - j.rhs,
        })),
    };
    Ok(Output::ok(text))
}

fn cmd_rouche(st: &Settings, tau: f64, lambda: Option<f64>, epsilon: f64, nu: f64) -> Result<Output, Failure> {
    let lambda = match lambda {
        Some(l) => l,
        None => lambda_choice(1.0, epsilon, nu)?,
    };
    let opts = RoucheOptions {
        samples_per_side: st.cfg.samples_per_side,
        quad_rel_tol: st.cfg.quad_tol,
        eval_budget: st.cfg.eval_budget,
        zero_tol: st.cfg.zero_tol,
        boundary_min_modulus: st.cfg.boundary_min_modulus,
        ..RoucheOptions::default()
    };
    let r = rouche_survey(tau, lambda, epsilon, &opts)?;
    let text = match st.format {
        OutputFormat::Csv => csv(
            &["tau", "lambda", "epsilon", "min_margin", "argmin_re", "argmin_im", "min_abs_f", "zeros", "boundary_zeros", "samples"],
            &[vec![
                num(r.tau),
                num(r.lambda),
                num(r.epsilon),
                num(r.min_margin),
                num(r.argmin_omega.re),
                num(r.argmin_omega.im),
                num(r.min_abs_f),
                r.zeros.len().to_string(),
                r.boundary_zeros.len().to_string(),
                r.boundary_samples.to_string(),
            ]],
        ),
        OutputFormat::Doc => doc(&serde_json::to_value(&r).expect("scan result serialises")),
    };
    if let Some(z) = r.boundary_zeros.first() {
        print!("{text}");
        return Err(Failure::Numerical(Error::ZeroOnBoundary(*z).to_string()));
    }
    Ok(Output::ok(text))
}

fn cmd_audit(st: &Settings, out: &PathBuf) -> Result<Output, Failure> {
    let report = run_audit(&st.cfg)?;
    fs::create_dir_all(out).map_err(|e| Failure::Usage(format!("cannot create {}: {e}", out.display())))?;
    let write = |name: &str, body: String| {
        let p = out.join(name);
        fs::write(&p, body).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display())))
    };
    write("audit_report.json", report.to_json())?;
    write("audit_report.jsonl", report.to_jsonl())?;
    let text = match st.format {
        OutputFormat::Csv => report.summary_table(),
        OutputFormat::Doc => {
            let mut s = format!("config digest {}\n", report.config_digest);
            for c in report.claims.values() {
                s.push_str(&format!("{:<12} {:<11} {}\n", c.id, c.verdict.as_str(), c.description));
            }
            let t = report.totals;
            s.push_str(&format!(
                "PASS {}  FAIL {}  NOT_NUMERIC {}  SKIPPED {}\n",
                t.pass, t.fail, t.not_numeric, t.skipped
            ));
            s
        }
    };
    Ok(Output { text, failed: report.totals.fail > 0 })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let config_path = match &cli.command {
        Command::Audit { config_path: Some(p), .. } => Some(p),
        _ => cli.config.as_ref(),
    };
    let st = load_settings(cli, config_path)?;
    match &cli.command {
        Command::Eval { function, re, im } => cmd_eval(&st, *function, *re, *im),
        Command::Bounds { from, to, step } => cmd_bounds(&st, *from, *to, *step),
        Command::Map { re, im, b, inverse } => cmd_map(&st, *re, *im, *b, *inverse),
        Command::Zeros { tau, zero_tol } => cmd_zeros(&st, *tau, *zero_tol),
        Command::Jensen { b, radius, samples } => cmd_jensen(&st, *b, *radius, *samples),
        Command::Rouche { tau, lambda, epsilon, nu } => cmd_rouche(&st, *tau, *lambda, *epsilon, *nu),
        Command::Audit { out, .. } => cmd_audit(&st, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            eprintln!("run `zetalab --help` for usage");
            ExitCode::from(3)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("numerical error: {msg}");
            ExitCode::from(2)
        }
    }
}
