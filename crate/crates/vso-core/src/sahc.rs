//! The SAHC comparator: repeated stochastic ascent hill-climbing runs over
//! the same saturation rule as VSO, with a population of randomly placed
//! points nudged by bounded random steps.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::objective::{Objective, UniformStream};
use crate::saturation::Saturation;
use crate::space::{BestRecord, DecisionSpace, PointSet, RunResult};
use crate::sweep::evaluate_sweep;
use crate::EngineError;

/// Tuning parameters for an SAHC run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SahcConfig {
    /// Population points per dimension.
    pub points_per_dim: usize,
    /// Number of restarts, each with its own random stream.
    pub num_runs: usize,
    /// Hard iteration cap per run (the initial placement is iteration 0).
    pub max_iterations: usize,
    /// Saturation tolerance on the gain across one checkpoint period.
    pub saturation_tol: f64,
    /// Iterations between saturation checkpoints.
    pub saturation_period: usize,
    /// Fraction band of each axis range used for initial placement.
    pub init_band: (f64, f64),
    /// Half-width of the random step, as a fraction of the diagonal length.
    pub tweak_scale: f64,
    /// Base seed; run `k` uses stream `k` of this seed.
    pub seed: u64,
    /// Carry the best record and saturation registers across runs (the
    /// default) instead of restarting each run independently.
    pub global_best_across_runs: bool,
}

impl Default for SahcConfig {
    fn default() -> Self {
        Self {
            points_per_dim: 140,
            num_runs: 1000,
            max_iterations: 15,
            saturation_tol: 0.001,
            saturation_period: 3,
            init_band: (0.05, 0.95),
            tweak_scale: 0.1,
            seed: 42,
            global_best_across_runs: true,
        }
    }
}

impl SahcConfig {
    /// Population size for an `nd`-dimensional space.
    pub fn np(&self, nd: usize) -> usize {
        self.points_per_dim * nd
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        let fail = |msg: String| Err(EngineError::InvalidConfig(msg));
        if self.points_per_dim < 1 {
            return fail("points_per_dim must be at least 1".into());
        }
        if self.num_runs < 1 {
            return fail("num_runs must be at least 1".into());
        }
        if self.max_iterations < 1 {
            return fail("max_iterations must be at least 1".into());
        }
        if self.saturation_tol.is_nan() || self.saturation_tol < 0.0 {
            return fail(format!(
                "saturation_tol must be non-negative, got {}",
                self.saturation_tol
            ));
        }
        if self.saturation_period < 1 {
            return fail("saturation_period must be at least 1".into());
        }
        let (a, b) = self.init_band;
        if !(0.0 <= a && a < b && b <= 1.0) {
            return fail(format!(
                "init_band must satisfy 0 <= {a} < {b} <= 1"
            ));
        }
        if self.tweak_scale.is_nan() || self.tweak_scale < 0.0 {
            return fail(format!(
                "tweak_scale must be non-negative, got {}",
                self.tweak_scale
            ));
        }
        Ok(())
    }
}

/// Places `np` points uniformly at random in the central band of the box:
/// each coordinate is `min + u (max - min)` with `u` drawn from
/// [0.05, 0.95). Draws are consumed point-major, coordinate-minor.
pub fn random_ispd(
    ds: &DecisionSpace,
    np: usize,
    rng: &mut impl UniformStream,
) -> PointSet {
    random_ispd_in_band(ds, np, (0.05, 0.95), rng)
}

pub(crate) fn random_ispd_in_band(
    ds: &DecisionSpace,
    np: usize,
    band: (f64, f64),
    rng: &mut impl UniformStream,
) -> PointSet {
    let nd = ds.nd();
    let mut positions = Vec::with_capacity(np * nd);
    for _ in 0..np {
        for i in 0..nd {
            let u = rng.next_in(band.0, band.1);
            positions.push(ds.mins()[i] + u * (ds.maxs()[i] - ds.mins()[i]));
        }
    }
    PointSet::from_flat(positions, np, nd, 0)
}

/// Nudges every coordinate by a random step of up to `scale` times the
/// diagonal length in either direction, clamping to the box. Draws are
/// consumed point-major, coordinate-minor.
pub fn tweak(
    points: &PointSet,
    ds: &DecisionSpace,
    rng: &mut impl UniformStream,
    scale: f64,
) -> PointSet {
    let nd = points.nd();
    let diag = ds.diag_length();
    let mut positions = points.as_flat().to_vec();
    for chunk in positions.chunks_exact_mut(nd) {
        for (i, x) in chunk.iter_mut().enumerate() {
            let step = rng.next_in(-scale, scale) * diag;
            *x = (*x + step).clamp(ds.mins()[i], ds.maxs()[i]);
        }
    }
    PointSet::from_flat(positions, points.np(), nd, points.iteration + 1)
}

/// Runs SAHC to completion, maximizing `objective`.
///
/// Each of the `num_runs` restarts places a fresh random population (stream
/// `k` of the base seed), scans it, then alternates tweak and rescan until
/// saturation or the iteration cap. With `global_best_across_runs` the best
/// record and saturation registers persist from run to run, so later runs
/// stop at the first checkpoint unless they beat the carried best; otherwise
/// every run starts cold and the best over all runs is reported.
pub fn run_sahc<O: Objective + ?Sized>(
    objective: &O,
    ds: &DecisionSpace,
    cfg: &SahcConfig,
) -> Result<RunResult, EngineError> {
    cfg.validate()?;
    let started = Instant::now();

    let np = cfg.np(ds.nd());
    let mut best: Option<BestRecord> = None;
    let mut done: Option<BestRecord> = None;
    let mut sat = Saturation::new();
    let mut n_eval = 0u64;
    let mut trace = Vec::new();
    let mut sweep = 0usize;
    let mut last_iteration = 0;

    let merge = |into: &mut Option<BestRecord>, from: Option<BestRecord>| {
        if let Some(b) = from {
            if into.as_ref().is_none_or(|i| b.fstar >= i.fstar) {
                *into = Some(b);
            }
        }
    };
    let reached =
        |best: &Option<BestRecord>, done: &Option<BestRecord>| -> f64 {
            let a = best.as_ref().map_or(f64::NEG_INFINITY, |b| b.fstar);
            let b = done.as_ref().map_or(f64::NEG_INFINITY, |b| b.fstar);
            a.max(b)
        };

    for run in 0..cfg.num_runs {
        if !cfg.global_best_across_runs {
            merge(&mut done, best.take());
            sat = Saturation::new();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(run as u64);

        let mut points = random_ispd_in_band(ds, np, cfg.init_band, &mut rng);
        evaluate_sweep(objective, &points, &mut best, &mut n_eval, Some(run), |b, _| {
            sat.reset(b.fstar)
        })?;
        trace.push((sweep, reached(&best, &done)));
        sweep += 1;
        last_iteration = 0;

        for j in 1..=cfg.max_iterations {
            points = tweak(&points, ds, &mut rng, cfg.tweak_scale);
            evaluate_sweep(objective, &points, &mut best, &mut n_eval, Some(run), |_, _| {})?;
            trace.push((sweep, reached(&best, &done)));
            sweep += 1;
            last_iteration = j;
            let fstar = best.as_ref().expect("population is never empty").fstar;
            if j % cfg.saturation_period == 0 && sat.shift(fstar, cfg.saturation_tol) {
                break;
            }
        }
    }

    merge(&mut done, best.take());
    Ok(RunResult {
        best: done.expect("at least one run"),
        n_eval,
        last_iteration,
        trace,
        wall_time: started.elapsed().as_secs_f64(),
    })
}
