//! The objective-function contract shared by the engines, the benchmark
//! suites, and the subprocess adapter.

use std::path::PathBuf;

use thiserror::Error;

use crate::space::BestRecord;

/// Ways a single objective evaluation can fail.
///
/// Benchmark objectives only ever raise the first two variants; the rest
/// belong to external (subprocess) objectives, each failure mode kept
/// distinct so callers can tell a dead program from a silent one.
#[derive(Debug, Error)]
pub enum EvalError {
    #[error("dimension mismatch: objective expects {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("objective requires a noise stream but none was provided")]
    MissingNoise,
    #[error("failed to spawn `{command}`: {source}")]
    Spawn {
        command: String,
        #[source]
        source: std::io::Error,
    },
    #[error("`{command}` exited with {status}{}", fmt_stderr(.stderr))]
    NonzeroExit {
        command: String,
        status: String,
        stderr: String,
    },
    #[error("`{command}` timed out after {timeout_secs} s")]
    Timeout { command: String, timeout_secs: f64 },
    #[error("output file {path} missing after command exit")]
    MissingOutput { path: PathBuf },
    #[error("output not parsable as a decimal real: {line:?}")]
    UnparsableOutput { line: String },
    #[error("I/O failure on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn fmt_stderr(stderr: &str) -> String {
    if stderr.is_empty() {
        String::new()
    } else {
        format!("; stderr: {}", stderr.trim_end())
    }
}

/// A fitness function in maximization sense.
///
/// Implementations must never return NaN for in-box inputs. Evaluation takes
/// `&self`; objectives with internal state (a noise stream, a subprocess
/// round-trip) use interior mutability and report it via
/// [`concurrent_safe`](Objective::concurrent_safe) so the engines fall back
/// to the strictly sequential sweep.
pub trait Objective: Sync {
    /// Evaluates the objective at `x`.
    fn eval(&self, x: &[f64]) -> Result<f64, EvalError>;

    /// Whether distinct points may be evaluated concurrently.
    ///
    /// Return `false` when evaluation order matters: the engines then
    /// evaluate points one at a time in ascending index order and deliver
    /// [`on_new_best`](Objective::on_new_best) before the next evaluation.
    fn concurrent_safe(&self) -> bool {
        true
    }

    /// Called by the engines whenever the best record strictly improves.
    ///
    /// The default does nothing; the subprocess adapter uses this to
    /// snapshot its input file while it still holds the improving candidate.
    fn on_new_best(&self, _best: &BestRecord) {}
}

/// Wraps a plain closure as an infallible, concurrent-safe objective.
pub struct FnObjective<F> {
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    pub fn new(f: F) -> Self {
        Self { f }
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn eval(&self, x: &[f64]) -> Result<f64, EvalError> {
        Ok((self.f)(x))
    }
}

/// A stream of uniform draws in `[0, 1)`, the random primitive both the
/// SAHC engine and the noisy benchmark consume.
///
/// Implemented for every [`rand::Rng`]; tests substitute scripted streams.
pub trait UniformStream {
    /// Next uniform draw in `[0, 1)`.
    fn next_unit(&mut self) -> f64;

    /// Uniform draw in `[a, b)` as `a + u * (b - a)`.
    fn next_in(&mut self, a: f64, b: f64) -> f64 {
        a + self.next_unit() * (b - a)
    }
}

impl<R: rand::Rng> UniformStream for R {
    fn next_unit(&mut self) -> f64 {
        self.random::<f64>()
    }
}
