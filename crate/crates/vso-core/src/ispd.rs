//! Deterministic initial sample-point distribution: uniformly spaced points
//! on probe lines parallel to each axis, the lines intersecting at chosen
//! points on the decision space's principal diagonal.

use crate::space::{DecisionSpace, PointSet};
use crate::vso::VsoConfig;
use crate::EngineError;

/// The gamma values at which probe-line bundles are placed.
///
/// `num_gammas` must be even and at least 2. The first half of the schedule
/// spans `low` inclusive, the second half spans `high` inclusive; with one
/// point per band the outer endpoints are used, so the set stays symmetric
/// about the deliberately excluded center value 0.5.
pub fn gamma_schedule(
    num_gammas: usize,
    low: (f64, f64),
    high: (f64, f64),
) -> Result<Vec<f64>, EngineError> {
    if num_gammas < 2 || num_gammas % 2 != 0 {
        return Err(EngineError::InvalidConfig(format!(
            "num_gammas must be an even number >= 2, got {num_gammas}"
        )));
    }
    let per_band = num_gammas / 2;
    if per_band == 1 {
        return Ok(vec![low.0, high.1]);
    }
    let mut gammas = Vec::with_capacity(num_gammas);
    for &(a, b) in &[low, high] {
        let step = (b - a) / (per_band - 1) as f64;
        for k in 0..per_band {
            gammas.push(if k == per_band - 1 { b } else { a + k as f64 * step });
        }
    }
    Ok(gammas)
}

/// Builds the iteration-0 point set: for each gamma, a block of
/// `points_per_dim × nd` points, each line `i` holding `points_per_dim`
/// points that sweep coordinate `i` uniformly across the box while every
/// other coordinate sits at the diagonal point.
pub fn build_ispd(ds: &DecisionSpace, cfg: &VsoConfig) -> Result<PointSet, EngineError> {
    cfg.validate()?;
    let gammas = gamma_schedule(cfg.num_gammas, cfg.gamma_band_low, cfg.gamma_band_high)?;
    let nd = ds.nd();
    let ppd = cfg.points_per_dim;
    let block = ppd * nd;
    let np = block * gammas.len();
    let mut positions = Vec::with_capacity(np * nd);

    for &gamma in &gammas {
        let diag = ds.diagonal_point(gamma)?;
        let base = positions.len();
        for _ in 0..block {
            positions.extend_from_slice(&diag);
        }
        for i in 0..nd {
            let lo = ds.mins()[i];
            let hi = ds.maxs()[i];
            let step = (hi - lo) / (ppd - 1) as f64;
            for k in 0..ppd {
                // Point k of line i sweeps coordinate i; endpoints land on
                // the box faces exactly.
                let coord = match k {
                    0 => lo,
                    _ if k == ppd - 1 => hi,
                    _ => lo + k as f64 * step,
                };
                positions[base + (i * ppd + k) * nd + i] = coord;
            }
        }
    }
    Ok(PointSet::from_flat(positions, np, nd, 0))
}
