//! Argument tracking along rectangle boundaries.

use std::f64::consts::PI;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_complex::Complex64;
use rayon::prelude::*;

use super::RectangleRegion;
use crate::error::{Error, Result};

/// Minimum boundary sample density per unit length.
pub const SAMPLES_PER_UNIT: f64 = 64.0;

/// Default threshold below which a sampled `|f|` counts as a boundary zero.
pub const DEFAULT_BOUNDARY_MIN_MODULUS: f64 = 1e-14;

/// Tuning for boundary traces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceOptions {
    pub boundary_min_modulus: f64,
    /// Segments shorter than this are not split further.
    pub min_segment: f64,
    /// Evaluation budget for adaptive refinement on top of the initial samples.
    pub max_refine_evals: usize,
}

impl Default for TraceOptions {
    fn default() -> Self {
        Self { boundary_min_modulus: DEFAULT_BOUNDARY_MIN_MODULUS, min_segment: 1e-7, max_refine_evals: 2_000_000 }
    }
}

/// One accepted boundary sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceSample {
    pub point: Complex64,
    pub value: Complex64,
    pub excluded: bool,
}

/// The result of walking the boundary counter-clockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryTrace {
    pub samples: Vec<TraceSample>,
    /// Accumulated change of `arg f` over the accepted segments.
    pub total_phase: f64,
    /// Points where `f` was found to vanish (up to `min_segment`).
    pub boundary_zeros: Vec<Complex64>,
    pub n_evals: usize,
}

impl BoundaryTrace {
    /// Winding number, requiring a clean boundary and a near-integer phase total.
    pub fn winding(&self) -> Result<i64> {
        if let Some(z) = self.boundary_zeros.first() {
            return Err(Error::BoundaryZero(*z));
        }
        let turns = self.total_phase / (2.0 * PI);
        let rounded = turns.round();
        if (turns - rounded).abs() > 0.1 {
            return Err(Error::NonConvergence(format!("phase total {turns} turns is not near an integer")));
        }
        Ok(rounded as i64)
    }
}

fn phase_step(a: Complex64, b: Complex64) -> f64 {
    // Normalise first so that huge moduli cannot overflow the product.
    ((b / b.norm()) * (a / a.norm()).conj()).arg()
}

struct Walker<'a, F> {
    f: &'a F,
    exclude: &'a (dyn Fn(Complex64) -> bool + Sync),
    opts: TraceOptions,
    evals: &'a AtomicUsize,
}

struct Segment {
    samples: Vec<TraceSample>,
    phase: f64,
    zeros: Vec<Complex64>,
}

impl<F> Walker<'_, F>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    fn sample(&self, p: Complex64) -> Result<TraceSample> {
        let value = (self.f)(p)?;
        Ok(TraceSample { point: p, value, excluded: (self.exclude)(p) })
    }

    fn is_small(&self, s: &TraceSample) -> bool {
        !s.excluded && !(s.value.norm() >= self.opts.boundary_min_modulus)
    }

    /// Phase change from `a` to `b`, appending accepted interior samples and `b`.
    fn walk(&self, a: TraceSample, b: TraceSample, out: &mut Segment) -> Result<()> {
        if self.is_small(&b) {
            out.zeros.push(b.point);
            out.samples.push(b);
            return Ok(());
        }
        if a.excluded || b.excluded || self.is_small(&a) {
            let step = phase_step(a.value, b.value);
            out.phase += if step.is_nan() { 0.0 } else { step };
            out.samples.push(b);
            return Ok(());
        }
        let step = phase_step(a.value, b.value);
        if step.is_nan() {
            return Err(Error::NonConvergence(format!("non-finite function value near {}", b.point)));
        }
        if step.abs() <= PI / 2.0 {
            out.phase += step;
            out.samples.push(b);
            return Ok(());
        }
        let len = (b.point - a.point).norm();
        if len < self.opts.min_segment {
            if step.abs() > 0.75 * PI {
                out.zeros.push(0.5 * (a.point + b.point));
            } else {
                out.phase += step;
            }
            out.samples.push(b);
            return Ok(());
        }
        if self.evals.fetch_add(1, Ordering::Relaxed) >= self.opts.max_refine_evals {
            return Err(Error::NonConvergence(format!(
                "refinement budget of {} evaluations exhausted near {}",
                self.opts.max_refine_evals, a.point
            )));
        }
        let mid = self.sample(0.5 * (a.point + b.point))?;
        self.walk(a, mid, out)?;
        self.walk(mid, b, out)
    }
}

/// Walk the boundary of `rect` counter-clockwise, sampling `f` at
/// `max(samples_per_side, 64·length)` points per side and bisecting any
/// segment whose phase step exceeds π/2. Points for which `exclude` is true
/// are neither refined nor tested for vanishing.
pub fn trace_boundary<F>(
    f: &F,
    rect: &RectangleRegion,
    samples_per_side: usize,
    exclude: &(dyn Fn(Complex64) -> bool + Sync),
    opts: TraceOptions,
) -> Result<BoundaryTrace>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    let corners = rect.corners();
    let mut nodes = Vec::new();
    for k in 0..4 {
        let (a, b) = (corners[k], corners[(k + 1) % 4]);
        let n = samples_per_side.max(1).max((SAMPLES_PER_UNIT * (b - a).norm()).ceil() as usize);
        nodes.extend((0..n).map(|j| a + (b - a) * (j as f64 / n as f64)));
    }
    nodes.push(corners[0]);

    let evals = AtomicUsize::new(0);
    let walker = Walker { f, exclude, opts, evals: &evals };
    let initial: Vec<TraceSample> = nodes.par_iter().map(|&p| walker.sample(p)).collect::<Result<_>>()?;

    let segments: Vec<Segment> = initial
        .par_windows(2)
        .map(|w| {
            let mut seg = Segment { samples: Vec::new(), phase: 0.0, zeros: Vec::new() };
            walker.walk(w[0], w[1], &mut seg)?;
            Ok(seg)
        })
        .collect::<Result<_>>()?;

    let mut trace = BoundaryTrace {
        samples: vec![initial[0]],
        total_phase: 0.0,
        boundary_zeros: Vec::new(),
        n_evals: initial.len() + evals.load(Ordering::Relaxed),
    };
    if walker.is_small(&initial[0]) {
        trace.boundary_zeros.push(initial[0].point);
    }
    for seg in segments {
        trace.total_phase += seg.phase;
        trace.samples.extend(seg.samples);
        for z in seg.zeros {
            if trace.boundary_zeros.last() != Some(&z) {
                trace.boundary_zeros.push(z);
            }
        }
    }
    // The closing sample duplicates the first.
    trace.samples.pop();
    Ok(trace)
}

/// Winding number of `f` around the boundary of `rect`.
pub fn winding_count<F>(f: &F, rect: &RectangleRegion, samples_per_side: usize) -> Result<i64>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    winding_count_with(f, rect, samples_per_side, TraceOptions::default())
}

pub fn winding_count_with<F>(
    f: &F,
    rect: &RectangleRegion,
    samples_per_side: usize,
    opts: TraceOptions,
) -> Result<i64>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    trace_boundary(f, rect, samples_per_side, &|_| false, opts)?.winding()
}
