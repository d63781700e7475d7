//! Derivative-free global maximization over box-bounded real spaces.
//!
//! The crate provides two engines sharing one evaluation-counting core: VSO,
//! a fully deterministic search that scans a structured initial distribution
//! and contracts it toward the incumbent best, and SAHC, a restarted
//! stochastic hill-climber used as its baseline. Objectives implement the
//! [`Objective`] trait; built-in benchmark suites live in [`benchmarks`] and
//! external solvers can be driven through [`SubprocessObjective`].

use thiserror::Error;

pub mod benchmarks;
mod external;
mod ispd;
mod objective;
mod sahc;
mod saturation;
mod space;
mod sweep;
mod vso;

pub use external::{SubprocessObjective, SubprocessSpec};
pub use ispd::{build_ispd, gamma_schedule};
pub use objective::{EvalError, FnObjective, Objective, UniformStream};
pub use sahc::{random_ispd, run_sahc, tweak, SahcConfig};
pub use space::{BestRecord, DecisionSpace, PointSet, RunResult, SpaceError};
pub use vso::{reposition, run_vso, VsoConfig};

/// Errors from configuring or running an engine.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("dimension mismatch: point set is {points_nd}-dimensional, argument has {arg_nd} coordinates")]
    DimensionMismatch { points_nd: usize, arg_nd: usize },
    #[error("evaluation failed at iteration {iteration}, point {point}{}: {source}", run_label(*.run))]
    Eval {
        iteration: usize,
        point: usize,
        run: Option<usize>,
        #[source]
        source: EvalError,
    },
}

fn run_label(run: Option<usize>) -> String {
    run.map_or_else(String::new, |r| format!(", run {r}"))
}
