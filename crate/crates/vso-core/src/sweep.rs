//! One fitness sweep over a point set, with the best-record fold kept in
//! ascending point order so tie handling is identical in every build.

use crate::objective::Objective;
use crate::space::{BestRecord, PointSet};
use crate::EngineError;

/// Evaluates every point and folds the results into `best`, counting
/// evaluations as they are consumed.
///
/// A later point whose fitness equals the incumbent best replaces it, so the
/// record always refers to the highest point index among ties. `on_accept`
/// fires on every accepted update with a flag marking strict improvements;
/// the objective's own `on_new_best` hook fires only on strict ones.
///
/// Objectives that report `concurrent_safe` are evaluated in parallel into a
/// buffer and folded serially (the `parallel` feature); all others are
/// evaluated one point at a time so each call may observe the record left by
/// the previous one.
pub(crate) fn evaluate_sweep<O: Objective + ?Sized>(
    objective: &O,
    points: &PointSet,
    best: &mut Option<BestRecord>,
    n_eval: &mut u64,
    run: Option<usize>,
    mut on_accept: impl FnMut(&BestRecord, bool),
) -> Result<(), EngineError> {
    let iteration = points.iteration;
    let mut fold = |p: usize, x: &[f64], fitness: f64| {
        *n_eval += 1;
        let accepted = best.as_ref().is_none_or(|b| fitness >= b.fstar);
        if accepted {
            let strict = best.as_ref().is_none_or(|b| fitness > b.fstar);
            *best = Some(BestRecord {
                fstar: fitness,
                rstar: x.to_vec(),
                found_at_point: p,
                found_at_iteration: iteration,
            });
            let record = best.as_ref().expect("just set");
            on_accept(record, strict);
            if strict {
                objective.on_new_best(record);
            }
        }
    };

    #[cfg(feature = "parallel")]
    if objective.concurrent_safe() {
        use rayon::prelude::*;
        let fitnesses: Vec<Result<f64, _>> = points
            .as_flat()
            .par_chunks_exact(points.nd())
            .map(|x| objective.eval(x))
            .collect();
        for (p, fitness) in fitnesses.into_iter().enumerate() {
            let fitness = fitness.map_err(|source| EngineError::Eval {
                iteration,
                point: p,
                run,
                source,
            })?;
            fold(p, points.point(p), fitness);
        }
        return Ok(());
    }

    for p in 0..points.np() {
        let x = points.point(p);
        let fitness = objective.eval(x).map_err(|source| EngineError::Eval {
            iteration,
            point: p,
            run,
            source,
        })?;
        fold(p, x, fitness);
    }
    Ok(())
}
