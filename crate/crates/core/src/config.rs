//! Audit configuration: flat `key = value` text with `#` comments.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// What the CLI prints to stdout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Doc,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "doc" => Ok(Self::Doc),
            other => Err(Error::Config(format!("unknown format '{other}' (expected csv or doc)"))),
        }
    }
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Csv => "csv",
            Self::Doc => "doc",
        }
    }
}

/// An inclusive sampling range with a point count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.min],
            n => (0..n).map(|k| self.min + (self.max - self.min) * k as f64 / (n - 1) as f64).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub quad_tol: f64,
    pub zero_tol: f64,
    /// Tolerance for values printed to five or six digits.
    pub paper_tol: f64,
    /// Tolerance for identities with exact closed forms.
    pub identity_tol: f64,
    pub eval_budget: usize,
    pub tau_max: f64,
    pub rouche_tau: f64,
    pub seed: u64,
    pub boundary_min_modulus: f64,
    pub strip_margin: f64,
    pub samples_per_side: usize,
    /// Random points per sampled bound.
    pub random_points: usize,
    /// Random polynomials in the Jensen/Titchmarsh corpus.
    pub polynomials: usize,
    pub strip_re: GridSpec,
    pub strip_im: GridSpec,
    pub alpha_grid: GridSpec,
    pub format: OutputFormat,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            quad_tol: 1e-8,
            zero_tol: 1e-4,
            paper_tol: 1e-4,
            identity_tol: 1e-8,
            eval_budget: 1_000_000,
            tau_max: 50.0,
            rouche_tau: 16.0,
            seed: 20_240_917,
            boundary_min_modulus: 1e-14,
            strip_margin: 0.02,
            samples_per_side: 64,
            random_points: 1000,
            polynomials: 100,
            strip_re: GridSpec { min: 0.45, max: 0.95, count: 7 },
            strip_im: GridSpec { min: 0.0, max: 30.0, count: 7 },
            alpha_grid: GridSpec { min: 0.5, max: 1.0, count: 50 },
            format: OutputFormat::Doc,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.parse().map_err(|_| Error::Config(format!("cannot parse value '{value}' for key '{key}'")))
}

impl AuditConfig {
    /// Parse `key = value` lines over the defaults. Unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Self::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            cfg.set(key.trim(), value.trim())?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "quad_tol" => self.quad_tol = parse(key, value)?,
            "zero_tol" => self.zero_tol = parse(key, value)?,
            "paper_tol" => self.paper_tol = parse(key, value)?,
            "identity_tol" => self.identity_tol = parse(key, value)?,
            "eval_budget" => self.eval_budget = parse::<f64>(key, value)? as usize,
            "tau_max" => self.tau_max = parse(key, value)?,
            "rouche_tau" => self.rouche_tau = parse(key, value)?,
            "seed" => self.seed = parse(key, value)?,
            "boundary_min_modulus" => self.boundary_min_modulus = parse(key, value)?,
            "strip_margin" => self.strip_margin = parse(key, value)?,
            "samples_per_side" => self.samples_per_side = parse(key, value)?,
            "random_points" => self.random_points = parse(key, value)?,
            "polynomials" => self.polynomials = parse(key, value)?,
            "strip_re_min" => self.strip_re.min = parse(key, value)?,
            "strip_re_max" => self.strip_re.max = parse(key, value)?,
            "strip_re_count" => self.strip_re.count = parse(key, value)?,
            "strip_im_min" => self.strip_im.min = parse(key, value)?,
            "strip_im_max" => self.strip_im.max = parse(key, value)?,
            "strip_im_count" => self.strip_im.count = parse(key, value)?,
            "alpha_min" => self.alpha_grid.min = parse(key, value)?,
            "alpha_max" => self.alpha_grid.max = parse(key, value)?,
            "alpha_count" => self.alpha_grid.count = parse(key, value)?,
            "format" => self.format = value.parse()?,
            other => return Err(Error::Config(format!("unknown key '{other}'"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("quad_tol", self.quad_tol),
            ("zero_tol", self.zero_tol),
            ("paper_tol", self.paper_tol),
            ("identity_tol", self.identity_tol),
            ("tau_max", self.tau_max),
            ("rouche_tau", self.rouche_tau),
            ("boundary_min_modulus", self.boundary_min_modulus),
            ("strip_margin", self.strip_margin),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive, got {v}")));
            }
        }
        if self.eval_budget < 1000 {
            return Err(Error::Config(format!("eval_budget must be at least 1000, got {}", self.eval_budget)));
        }
        if self.strip_margin >= 0.5 || self.zero_tol >= 0.5 {
            return Err(Error::Config("strip_margin and zero_tol must be below 1/2".into()));
        }
        for (name, g) in [("strip_re", self.strip_re), ("strip_im", self.strip_im), ("alpha", self.alpha_grid)] {
            if g.count == 0 || !(g.min <= g.max) {
                return Err(Error::Config(format!("{name} grid is empty")));
            }
        }
        if !(self.strip_re.min > 0.0 && self.strip_re.max < 1.0) {
            return Err(Error::Config("strip_re grid must lie inside (0, 1)".into()));
        }
        if !(self.alpha_grid.min >= 0.5 && self.alpha_grid.max <= 1.0) {
            return Err(Error::Config("alpha grid must lie inside [1/2, 1]".into()));
        }
        if self.samples_per_side == 0 || self.random_points == 0 || self.polynomials == 0 {
            return Err(Error::Config("sample counts must be positive".into()));
        }
        Ok(())
    }

    /// Every setting in fixed order, one `key = value` per line.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        let mut put = |k: &str, v: String| {
            let _ = writeln!(out, "{k} = {v}");
        };
        put("quad_tol", format!("{:e}", self.quad_tol));
        put("zero_tol", format!("{:e}", self.zero_tol));
        put("paper_tol", format!("{:e}", self.paper_tol));
        put("identity_tol", format!("{:e}", self.identity_tol));
        put("eval_budget", self.eval_budget.to_string());
        put("tau_max", format!("{:e}", self.tau_max));
        put("rouche_tau", format!("{:e}", self.rouche_tau));
        put("seed", self.seed.to_string());
        put("boundary_min_modulus", format!("{:e}", self.boundary_min_modulus));
        put("strip_margin", format!("{:e}", self.strip_margin));
        put("samples_per_side", self.samples_per_side.to_string());
        put("random_points", self.random_points.to_string());
        put("polynomials", self.polynomials.to_string());
        put("strip_re_min", format!("{:e}", self.strip_re.min));
        put("strip_re_max", format!("{:e}", self.strip_re.max));
        put("strip_re_count", self.strip_re.count.to_string());
        put("strip_im_min", format!("{:e}", self.strip_im.min));
        put("strip_im_max", format!("{:e}", self.strip_im.max));
        put("strip_im_count", self.strip_im.count.to_string());
        put("alpha_min", format!("{:e}", self.alpha_grid.min));
        put("alpha_max", format!("{:e}", self.alpha_grid.max));
        put("alpha_count", self.alpha_grid.count.to_string());
        put("format", self.format.as_str().to_string());
        out
    }

    /// SHA-256 of the canonical text, hex encoded.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_text().as_bytes()))
    }
}
