//! The VSO engine: a deterministic scan of a structured initial distribution
//! followed by elitist contraction of the whole population toward the best
//! point found so far.

use std::time::Instant;

use serde::Serialize;

use crate::ispd::build_ispd;
use crate::objective::Objective;
use crate::saturation::Saturation;
use crate::space::{DecisionSpace, PointSet, RunResult};
use crate::sweep::evaluate_sweep;
use crate::EngineError;

/// Tuning parameters for a VSO run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VsoConfig {
    /// Fractional step toward the incumbent best on each repositioning.
    pub rho: f64,
    /// Points per probe line.
    pub points_per_dim: usize,
    /// Number of diagonal intersection points; even, split across two bands.
    pub num_gammas: usize,
    /// Hard iteration cap (the initial scan is iteration 0).
    pub max_iterations: usize,
    /// Saturation tolerance on the gain across one checkpoint period.
    pub saturation_tol: f64,
    /// Iterations between saturation checkpoints.
    pub saturation_period: usize,
    /// Gamma band below the excluded center, inclusive.
    pub gamma_band_low: (f64, f64),
    /// Gamma band above the excluded center, inclusive.
    pub gamma_band_high: (f64, f64),
}

impl Default for VsoConfig {
    fn default() -> Self {
        Self {
            rho: 0.5,
            points_per_dim: 14,
            num_gammas: 10,
            max_iterations: 15,
            saturation_tol: 0.001,
            saturation_period: 3,
            gamma_band_low: (0.05, 0.49),
            gamma_band_high: (0.51, 0.95),
        }
    }
}

impl VsoConfig {
    /// Population size for an `nd`-dimensional space.
    pub fn np(&self, nd: usize) -> usize {
        self.points_per_dim * nd * self.num_gammas
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        let fail = |msg: String| Err(EngineError::InvalidConfig(msg));
        if !(0.0..=1.0).contains(&self.rho) {
            return fail(format!("rho must lie in [0, 1], got {}", self.rho));
        }
        if self.points_per_dim < 2 || self.points_per_dim % 2 != 0 {
            return fail(format!(
                "points_per_dim must be an even number >= 2, got {}",
                self.points_per_dim
            ));
        }
        if self.num_gammas < 2 || self.num_gammas % 2 != 0 {
            return fail(format!(
                "num_gammas must be an even number >= 2, got {}",
                self.num_gammas
            ));
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
        let (a, b) = self.gamma_band_low;
        let (c, d) = self.gamma_band_high;
        let bands_ok =
            0.0 <= a && a <= b && b < 0.5 && 0.5 < c && c <= d && d <= 1.0;
        if !bands_ok {
            return fail(format!(
                "gamma bands must satisfy 0 <= {a} <= {b} < 0.5 < {c} <= {d} <= 1"
            ));
        }
        Ok(())
    }
}

/// Moves every point the fraction `rho` of the way toward `rstar`, without
/// clamping. `rho = 1` collapses the set onto `rstar` exactly.
pub fn reposition(
    points: &PointSet,
    rstar: &[f64],
    rho: f64,
) -> Result<PointSet, EngineError> {
    let nd = points.nd();
    if rstar.len() != nd {
        return Err(EngineError::DimensionMismatch {
            points_nd: nd,
            arg_nd: rstar.len(),
        });
    }
    debug_assert!((0.0..=1.0).contains(&rho));
    let mut positions = points.as_flat().to_vec();
    if rho == 1.0 {
        for chunk in positions.chunks_exact_mut(nd) {
            chunk.copy_from_slice(rstar);
        }
    } else if rho != 0.0 {
        for chunk in positions.chunks_exact_mut(nd) {
            for (x, r) in chunk.iter_mut().zip(rstar) {
                *x += rho * (r - *x);
            }
        }
    }
    Ok(PointSet::from_flat(
        positions,
        points.np(),
        nd,
        points.iteration + 1,
    ))
}

/// Runs VSO to saturation or the iteration cap, maximizing `objective`.
///
/// Iteration 0 scans the structured initial distribution; each later
/// iteration repositions the population toward the best point known at the
/// end of the previous iteration, then rescans. Every evaluation is counted.
pub fn run_vso<O: Objective + ?Sized>(
    objective: &O,
    ds: &DecisionSpace,
    cfg: &VsoConfig,
) -> Result<RunResult, EngineError> {
    cfg.validate()?;
    let started = Instant::now();

    let mut points = build_ispd(ds, cfg)?;
    let mut best = None;
    let mut sat = Saturation::new();
    let mut n_eval = 0u64;
    let mut trace = Vec::new();

    // Initial scan: any accepted update re-arms the saturation detector.
    evaluate_sweep(objective, &points, &mut best, &mut n_eval, None, |b, _| {
        sat.reset(b.fstar)
    })?;
    let mut record = best.clone().expect("population is never empty");
    trace.push((0, record.fstar));
    let mut last_iteration = 0;

    for j in 1..=cfg.max_iterations {
        // The contraction target is the best known at the end of the
        // previous iteration, frozen for the whole repositioning.
        points = reposition(&points, &record.rstar, cfg.rho)?;
        evaluate_sweep(objective, &points, &mut best, &mut n_eval, None, |_, _| {})?;
        record = best.clone().expect("population is never empty");
        trace.push((j, record.fstar));
        last_iteration = j;
        if j % cfg.saturation_period == 0 && sat.shift(record.fstar, cfg.saturation_tol) {
            break;
        }
    }

    Ok(RunResult {
        best: record,
        n_eval,
        last_iteration,
        trace,
        wall_time: started.elapsed().as_secs_f64(),
    })
}
