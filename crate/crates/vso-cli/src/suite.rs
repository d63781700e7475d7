//! Suite scheduling: runs benchmark functions under either engine, attaches
//! the matching published rows, and aggregates verdicts.

use std::fmt;

use vso_core::benchmarks::{lookup, registry, BenchmarkSpec};
use vso_core::{
    run_sahc, run_vso, DecisionSpace, EngineError, Objective, RunResult, SahcConfig,
    SubprocessObjective, SubprocessSpec, VsoConfig,
};

use crate::reference::{self, Judgement, RefAlgorithm, ReferenceEntry, Verdict};

/// Seed used when none is given, so suite output is stable run to run.
pub const DEFAULT_SEED: u64 = 42;

/// Which engine to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Vso,
    Sahc,
}

impl Algo {
    pub fn as_str(self) -> &'static str {
        match self {
            Algo::Vso => "vso",
            Algo::Sahc => "sahc",
        }
    }

    fn ref_algorithm(self) -> RefAlgorithm {
        match self {
            Algo::Vso => RefAlgorithm::Vso,
            Algo::Sahc => RefAlgorithm::Sahc,
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which benchmark suite to schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Vpso,
    Gso,
    All,
}

impl Suite {
    fn suite_names(self) -> &'static [&'static str] {
        match self {
            Suite::Vpso => &["vpso"],
            Suite::Gso => &["gso"],
            Suite::All => &["vpso", "gso"],
        }
    }
}

/// Command-line overrides applied on top of the default engine configs.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    /// Dimensions: the vpso suite runs 10/20/30 when unset; fixed-dimension
    /// functions always use their own.
    pub nd: Option<usize>,
    /// Base RNG seed for stochastic components.
    pub seed: Option<u64>,
    /// VSO repositioning fraction.
    pub rho: Option<f64>,
    /// SAHC restart count.
    pub runs: Option<usize>,
    /// Restart SAHC cold each run instead of carrying best and registers.
    pub reset_per_run: bool,
}

enum EngineSetup {
    Vso(VsoConfig),
    Sahc(SahcConfig),
}

impl EngineSetup {
    fn new(algo: Algo, ov: &Overrides) -> Result<Self, EngineError> {
        match algo {
            Algo::Vso => {
                let mut cfg = VsoConfig::default();
                if let Some(rho) = ov.rho {
                    cfg.rho = rho;
                }
                cfg.validate()?;
                Ok(EngineSetup::Vso(cfg))
            }
            Algo::Sahc => {
                let mut cfg = SahcConfig {
                    seed: ov.seed.unwrap_or(DEFAULT_SEED),
                    global_best_across_runs: !ov.reset_per_run,
                    ..SahcConfig::default()
                };
                if let Some(runs) = ov.runs {
                    cfg.num_runs = runs;
                }
                cfg.validate()?;
                Ok(EngineSetup::Sahc(cfg))
            }
        }
    }

    fn echo(&self, seed: u64) -> String {
        match self {
            EngineSetup::Vso(c) => format!(
                "algo=vso rho={} points_per_dim={} num_gammas={} max_iterations={} \
                 saturation_tol={} saturation_period={} seed={seed}",
                c.rho,
                c.points_per_dim,
                c.num_gammas,
                c.max_iterations,
                c.saturation_tol,
                c.saturation_period,
            ),
            EngineSetup::Sahc(c) => format!(
                "algo=sahc points_per_dim={} num_runs={} max_iterations={} \
                 saturation_tol={} saturation_period={} tweak_scale={} carry_best={} seed={seed}",
                c.points_per_dim,
                c.num_runs,
                c.max_iterations,
                c.saturation_tol,
                c.saturation_period,
                c.tweak_scale,
                c.global_best_across_runs,
            ),
        }
    }

    fn algo(&self) -> Algo {
        match self {
            EngineSetup::Vso(_) => Algo::Vso,
            EngineSetup::Sahc(_) => Algo::Sahc,
        }
    }

    /// Population size per sweep and restart count, for count verdicts.
    fn counting(&self, nd: usize) -> (u64, u64) {
        match self {
            EngineSetup::Vso(c) => (c.np(nd) as u64, 1),
            EngineSetup::Sahc(c) => (c.np(nd) as u64, c.num_runs as u64),
        }
    }

    fn run<O: Objective + ?Sized>(
        &self,
        objective: &O,
        ds: &DecisionSpace,
    ) -> Result<RunResult, EngineError> {
        match self {
            EngineSetup::Vso(c) => run_vso(objective, ds, c),
            EngineSetup::Sahc(c) => run_sahc(objective, ds, c),
        }
    }
}

/// Outcome of one scheduled entry: the run (or the error that replaced it),
/// the matching published row, and the verdict.
#[derive(Debug)]
pub struct EntryOutcome {
    pub id: String,
    pub label: String,
    pub nd: usize,
    /// Known optimum, absent for external objectives.
    pub fmax: Option<f64>,
    /// Published optimum as printed, empty when none is known.
    pub display_fmax: String,
    pub result: Result<RunResult, String>,
    pub reference: Option<&'static ReferenceEntry>,
    pub judgement: Judgement,
}

/// Verdict counts over a report.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Aggregate {
    pub pass: usize,
    pub pass_with_deviation: usize,
    pub fail: usize,
    pub no_reference: usize,
}

/// Results of a scheduled set of runs, in schedule order.
#[derive(Debug)]
pub struct SuiteReport {
    pub algo: Algo,
    pub seed: u64,
    pub config_echo: String,
    pub entries: Vec<EntryOutcome>,
}

impl SuiteReport {
    pub fn aggregate(&self) -> Aggregate {
        let mut agg = Aggregate::default();
        for e in &self.entries {
            match e.judgement.verdict {
                Verdict::Pass => agg.pass += 1,
                Verdict::PassWithDeviation => agg.pass_with_deviation += 1,
                Verdict::Fail => agg.fail += 1,
                Verdict::NoReference => agg.no_reference += 1,
            }
        }
        agg
    }

    /// True when nothing failed and count deviations stay within the
    /// suite-wide allowance of two.
    pub fn all_pass(&self) -> bool {
        let agg = self.aggregate();
        agg.fail == 0 && agg.pass_with_deviation <= 2
    }
}

/// Dimensions Table II publishes for the six-function suite.
const VPSO_DIMS: [usize; 3] = [10, 20, 30];

fn schedule(
    suite: Suite,
    ov: &Overrides,
) -> Result<Vec<(&'static BenchmarkSpec, usize)>, EngineError> {
    if let Some(nd) = ov.nd {
        if suite != Suite::Gso && !VPSO_DIMS.contains(&nd) {
            return Err(EngineError::InvalidConfig(format!(
                "the vpso suite is published at nd 10, 20, or 30, got {nd}"
            )));
        }
    }
    let mut rows = Vec::new();
    for name in suite.suite_names() {
        for spec in registry().iter().filter(|s| s.suite == *name) {
            if spec.nd_fixed {
                rows.push((spec, spec.nd_default));
            } else if *name == "vpso" {
                match ov.nd {
                    Some(nd) => rows.push((spec, nd)),
                    None => rows.extend(VPSO_DIMS.map(|nd| (spec, nd))),
                }
            } else {
                rows.push((spec, ov.nd.unwrap_or(spec.nd_default)));
            }
        }
    }
    Ok(rows)
}

fn run_entry(
    spec: &'static BenchmarkSpec,
    nd: usize,
    setup: &EngineSetup,
    seed: u64,
) -> EntryOutcome {
    let outcome = spec
        .space(nd)
        .and_then(|ds| setup.run(&spec.objective(seed), &ds));
    let reference = reference::find(setup.algo().ref_algorithm(), spec.id, nd);
    let fmax = spec.fmax(nd);
    let (result, judgement) = match outcome {
        Ok(run) => {
            let judgement = match reference {
                Some(row) => {
                    let (np, runs) = setup.counting(nd);
                    row.judge(run.best.fstar, run.n_eval, fmax, np, runs)
                }
                None => Judgement::no_reference(),
            };
            (Ok(run), judgement)
        }
        Err(e) => (
            Err(e.to_string()),
            Judgement::failed(format!("run error: {e}")),
        ),
    };
    let display_fmax = reference::display_fmax(spec.id, nd)
        .map_or_else(|| format!("{fmax}"), str::to_owned);
    EntryOutcome {
        id: spec.id.to_owned(),
        label: spec.label.to_owned(),
        nd,
        fmax: Some(fmax),
        display_fmax,
        result,
        reference,
        judgement,
    }
}

/// Runs every function of a suite under one engine. Fixed-dimension
/// functions ignore an `--nd` override; scheduled entries that fail at run
/// time become failed verdicts rather than dropped rows.
pub fn run_suite(suite: Suite, algo: Algo, ov: &Overrides) -> Result<SuiteReport, EngineError> {
    let setup = EngineSetup::new(algo, ov)?;
    let seed = ov.seed.unwrap_or(DEFAULT_SEED);
    let entries = schedule(suite, ov)?
        .into_iter()
        .map(|(spec, nd)| run_entry(spec, nd, &setup, seed))
        .collect();
    Ok(SuiteReport {
        algo,
        seed,
        config_echo: setup.echo(seed),
        entries,
    })
}

/// Runs a single benchmark function as a one-row report.
pub fn run_function(id: &str, algo: Algo, ov: &Overrides) -> Result<SuiteReport, EngineError> {
    let spec = lookup(id).ok_or_else(|| {
        EngineError::InvalidConfig(format!(
            "unknown function id '{id}'; ids look like vpso/ackley or gso/f8"
        ))
    })?;
    let nd = match ov.nd {
        Some(nd) if spec.nd_fixed && nd != spec.nd_default => {
            return Err(EngineError::InvalidConfig(format!(
                "{} is fixed at {} dimensions, got --nd {nd}",
                spec.id, spec.nd_default
            )));
        }
        Some(nd) => nd,
        None => spec.nd_default,
    };
    let setup = EngineSetup::new(algo, ov)?;
    let seed = ov.seed.unwrap_or(DEFAULT_SEED);
    let entries = vec![run_entry(spec, nd, &setup, seed)];
    Ok(SuiteReport {
        algo,
        seed,
        config_echo: setup.echo(seed),
        entries,
    })
}

/// Runs an external subprocess objective over the given box as a one-row
/// report. There is no published row to judge against, so a completed run
/// reports `no-reference`; a failed evaluation reports `fail`.
pub fn run_external(
    spec: SubprocessSpec,
    mins: Vec<f64>,
    maxs: Vec<f64>,
    algo: Algo,
    ov: &Overrides,
) -> Result<SuiteReport, EngineError> {
    let label = spec
        .command
        .file_name()
        .map_or_else(|| spec.command.display().to_string(), |n| n.to_string_lossy().into_owned());
    let ds = DecisionSpace::new(mins, maxs)?;
    let nd = ds.nd();
    let objective = SubprocessObjective::new(spec)?;
    let setup = EngineSetup::new(algo, ov)?;
    let seed = ov.seed.unwrap_or(DEFAULT_SEED);

    let (result, mut judgement) = match setup.run(&objective, &ds) {
        Ok(run) => (Ok(run), Judgement::no_reference()),
        Err(e) => (
            Err(e.to_string()),
            Judgement::failed(format!("run error: {e}")),
        ),
    };
    if let Some(e) = objective.take_snapshot_error() {
        judgement.detail = format!("{}; best-point snapshot failed: {e}", judgement.detail);
    }

    let entries = vec![EntryOutcome {
        id: "external".to_owned(),
        label,
        nd,
        fmax: None,
        display_fmax: String::new(),
        result,
        reference: None,
        judgement,
    }];
    Ok(SuiteReport {
        algo,
        seed,
        config_echo: setup.echo(seed),
        entries,
    })
}
