//! VSO engine behavior: repositioning arithmetic, tie handling, saturation
//! exits, evaluation accounting, and parallel/serial equivalence.

use proptest::prelude::*;
use vso_core::{
    build_ispd, reposition, run_vso, BestRecord, DecisionSpace, EngineError, EvalError,
    FnObjective, Objective, PointSet, VsoConfig,
};

/// Forces the engine onto its serial evaluation path.
struct SerialOnly<O>(O);

impl<O: Objective> Objective for SerialOnly<O> {
    fn eval(&self, x: &[f64]) -> Result<f64, EvalError> {
        self.0.eval(x)
    }

    fn concurrent_safe(&self) -> bool {
        false
    }
}

fn sphere() -> FnObjective<impl Fn(&[f64]) -> f64 + Sync> {
    FnObjective::new(|x: &[f64]| -x.iter().map(|&v| v * v).sum::<f64>())
}

fn small_cfg() -> VsoConfig {
    VsoConfig {
        points_per_dim: 4,
        num_gammas: 2,
        ..VsoConfig::default()
    }
}

#[test]
fn reposition_midpoint_example_is_exact() {
    let points = PointSet::from_flat(vec![2.0, 0.0], 1, 2, 0);
    let moved = reposition(&points, &[0.0, 0.0], 0.5).unwrap();
    assert_eq!(moved.point(0), &[1.0, 0.0]);
    assert_eq!(moved.iteration, 1);
}

#[test]
fn reposition_extremes_are_exact() {
    let points = PointSet::from_flat(vec![0.3, -0.7, 1.1, 2.2], 2, 2, 3);
    let target = [0.123456789, -9.87654321];
    let frozen = reposition(&points, &target, 0.0).unwrap();
    assert_eq!(frozen.as_flat(), points.as_flat());
    let collapsed = reposition(&points, &target, 1.0).unwrap();
    for p in 0..2 {
        assert_eq!(collapsed.point(p), &target);
    }
}

#[test]
fn reposition_rejects_wrong_target_length() {
    let points = PointSet::from_flat(vec![0.0; 4], 2, 2, 0);
    assert!(matches!(
        reposition(&points, &[1.0], 0.5),
        Err(EngineError::DimensionMismatch {
            points_nd: 2,
            arg_nd: 1
        })
    ));
}

#[test]
fn constant_objective_saturates_at_iteration_six() {
    let constant = FnObjective::new(|_: &[f64]| 5.0);
    let ds = DecisionSpace::uniform(-1.0, 1.0, 2).unwrap();
    let cfg = small_cfg();
    let result = run_vso(&constant, &ds, &cfg).unwrap();
    // The first possible exit: the initial scan re-arms the detector, the
    // checkpoint at 3 swaps the sentinel out, the one at 6 sees no gain.
    assert_eq!(result.last_iteration, 6);
    let np = cfg.np(2) as u64;
    assert_eq!(result.n_eval, np * 7);
    assert_eq!(result.trace.len(), 7);
    assert!(result.trace.iter().all(|&(_, f)| f == 5.0));
    assert_eq!(result.best.fstar, 5.0);
}

#[test]
fn equal_fitness_ties_go_to_the_later_point() {
    let constant = FnObjective::new(|_: &[f64]| 5.0);
    let ds = DecisionSpace::uniform(-1.0, 1.0, 2).unwrap();
    let cfg = small_cfg();
    let result = run_vso(&constant, &ds, &cfg).unwrap();
    // Every sweep ties everywhere, so the record points at the last point
    // of the last completed iteration.
    assert_eq!(result.best.found_at_point, cfg.np(2) - 1);
    assert_eq!(result.best.found_at_iteration, result.last_iteration);
}

#[test]
fn sphere_run_converges_and_counts_every_evaluation() {
    let ds = DecisionSpace::uniform(-5.0, 5.0, 3).unwrap();
    let cfg = VsoConfig::default();
    let result = run_vso(&sphere(), &ds, &cfg).unwrap();
    assert!(result.best.fstar > -1e-6, "best {}", result.best.fstar);
    assert_eq!(
        result.n_eval,
        cfg.np(3) as u64 * (result.last_iteration as u64 + 1)
    );
    assert_eq!(result.trace.len(), result.last_iteration + 1);
    // The trace is the running best: non-decreasing.
    assert!(result.trace.windows(2).all(|w| w[1].1 >= w[0].1));
    // Saturation exits only at checkpoint iterations.
    if result.last_iteration < cfg.max_iterations {
        assert_eq!(result.last_iteration % cfg.saturation_period, 0);
    }
}

#[test]
fn runs_are_deterministic() {
    let ds = DecisionSpace::uniform(-5.12, 5.12, 4).unwrap();
    let rastrigin = FnObjective::new(vso_core::benchmarks::gso::f9_rastrigin);
    let a = run_vso(&rastrigin, &ds, &VsoConfig::default()).unwrap();
    let b = run_vso(&rastrigin, &ds, &VsoConfig::default()).unwrap();
    assert_eq!(a.best, b.best);
    assert_eq!(a.n_eval, b.n_eval);
    assert_eq!(a.trace, b.trace);
}

#[test]
fn serial_and_buffered_paths_agree_exactly() {
    // Tie-heavy objective to stress the fold order: a step function takes
    // few distinct values, so many points tie within one sweep.
    let step = FnObjective::new(vso_core::benchmarks::gso::f6_step);
    let ds = DecisionSpace::uniform(-100.0, 100.0, 3).unwrap();
    let cfg = VsoConfig::default();
    let buffered = run_vso(&step, &ds, &cfg).unwrap();
    let serial = run_vso(&SerialOnly(step), &ds, &cfg).unwrap();
    assert_eq!(buffered.best, serial.best);
    assert_eq!(buffered.n_eval, serial.n_eval);
    assert_eq!(buffered.trace, serial.trace);
}

#[test]
fn improving_objective_calls_best_hook_on_strict_gains_only() {
    use std::sync::atomic::{AtomicUsize, Ordering};

    struct Counting {
        hook_calls: AtomicUsize,
    }
    impl Objective for Counting {
        fn eval(&self, x: &[f64]) -> Result<f64, EvalError> {
            Ok(-x.iter().map(|&v| v * v).sum::<f64>())
        }
        fn concurrent_safe(&self) -> bool {
            false
        }
        fn on_new_best(&self, _best: &BestRecord) {
            self.hook_calls.fetch_add(1, Ordering::Relaxed);
        }
    }

    let objective = Counting {
        hook_calls: AtomicUsize::new(0),
    };
    let ds = DecisionSpace::uniform(-1.0, 1.0, 2).unwrap();
    run_vso(&objective, &ds, &small_cfg()).unwrap();
    let strict = objective.hook_calls.load(Ordering::Relaxed);
    assert!(strict >= 1);

    // A constant objective ties everywhere after the first point: exactly
    // one strict improvement ever.
    let constant = Counting {
        hook_calls: AtomicUsize::new(0),
    };
    struct ConstWrap<'a>(&'a Counting);
    impl Objective for ConstWrap<'_> {
        fn eval(&self, _: &[f64]) -> Result<f64, EvalError> {
            Ok(1.0)
        }
        fn concurrent_safe(&self) -> bool {
            false
        }
        fn on_new_best(&self, best: &BestRecord) {
            self.0.on_new_best(best);
        }
    }
    run_vso(&ConstWrap(&constant), &ds, &small_cfg()).unwrap();
    assert_eq!(constant.hook_calls.load(Ordering::Relaxed), 1);
}

#[test]
fn evaluation_failures_carry_their_location() {
    let failing = FnObjectiveErr;
    struct FnObjectiveErr;
    impl Objective for FnObjectiveErr {
        fn eval(&self, x: &[f64]) -> Result<f64, EvalError> {
            if x.len() != 3 {
                return Err(EvalError::DimensionMismatch {
                    expected: 3,
                    got: x.len(),
                });
            }
            Ok(0.0)
        }
    }
    let ds = DecisionSpace::uniform(-1.0, 1.0, 2).unwrap();
    let err = run_vso(&failing, &ds, &small_cfg()).unwrap_err();
    match err {
        EngineError::Eval {
            iteration: 0,
            point: 0,
            run: None,
            source: EvalError::DimensionMismatch { expected: 3, got: 2 },
        } => {}
        other => panic!("unexpected error {other:?}"),
    }
}

#[test]
fn invalid_configurations_are_rejected() {
    let bad = [
        VsoConfig { rho: 1.5, ..VsoConfig::default() },
        VsoConfig { rho: f64::NAN, ..VsoConfig::default() },
        VsoConfig { points_per_dim: 5, ..VsoConfig::default() },
        VsoConfig { points_per_dim: 0, ..VsoConfig::default() },
        VsoConfig { num_gammas: 3, ..VsoConfig::default() },
        VsoConfig { max_iterations: 0, ..VsoConfig::default() },
        VsoConfig { saturation_tol: -0.1, ..VsoConfig::default() },
        VsoConfig { saturation_period: 0, ..VsoConfig::default() },
        VsoConfig { gamma_band_low: (0.1, 0.6), ..VsoConfig::default() },
        VsoConfig { gamma_band_high: (0.4, 0.95), ..VsoConfig::default() },
    ];
    for cfg in bad {
        assert!(matches!(cfg.validate(), Err(EngineError::InvalidConfig(_))), "{cfg:?}");
    }
}

proptest! {
    /// Repositioning never increases the per-coordinate distance to the
    /// target for any contraction factor in [0, 1].
    #[test]
    fn reposition_is_a_per_coordinate_contraction(
        xs in prop::collection::vec(-1e6f64..1e6, 1..40),
        r in -1e6f64..1e6,
        rho in 0.0f64..=1.0,
    ) {
        let nd = xs.len();
        let points = PointSet::from_flat(xs.clone(), 1, nd, 0);
        let rstar = vec![r; nd];
        let moved = reposition(&points, &rstar, rho).unwrap();
        for (before, after) in xs.iter().zip(moved.point(0)) {
            prop_assert!((after - r).abs() <= (before - r).abs());
        }
    }

    /// Evaluation counts are always Np × (last_iteration + 1) and the exit
    /// iteration is a checkpoint unless the cap was hit.
    #[test]
    fn evaluation_accounting_invariant(
        nd in 1usize..4,
        ppd in 1usize..4,
        ng in 1usize..3,
        scale in 1.0f64..100.0,
    ) {
        let cfg = VsoConfig {
            points_per_dim: ppd * 2,
            num_gammas: ng * 2,
            ..VsoConfig::default()
        };
        let ds = DecisionSpace::uniform(-scale, scale, nd).unwrap();
        let result = run_vso(&sphere(), &ds, &cfg).unwrap();
        prop_assert_eq!(result.n_eval, cfg.np(nd) as u64 * (result.last_iteration as u64 + 1));
        if result.last_iteration < cfg.max_iterations {
            prop_assert_eq!(result.last_iteration % cfg.saturation_period, 0);
        }
        prop_assert!(result.trace.windows(2).all(|w| w[1].1 >= w[0].1));
    }

    /// ISPD points always lie inside the box, and the whole population
    /// contracts toward the best point without leaving the segment between
    /// old position and target.
    #[test]
    fn ispd_in_box_for_random_spaces(
        nd in 1usize..6,
        lo in -100.0f64..0.0,
        width in 0.1f64..200.0,
    ) {
        let ds = DecisionSpace::uniform(lo, lo + width, nd).unwrap();
        let points = build_ispd(&ds, &VsoConfig::default()).unwrap();
        for p in 0..points.np() {
            prop_assert!(ds.contains(points.point(p)));
        }
    }
}
