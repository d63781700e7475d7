//! `vso` command line: benchmark suite and single-function runs with report
//! emission, trace files, and external subprocess objectives.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use vso_cli::report::{emit_report, emit_trace, Format};
use vso_cli::suite::{run_external, run_function, run_suite, Algo, Overrides, Suite, SuiteReport};
use vso_core::SubprocessSpec;

#[derive(Parser)]
#[command(
    name = "vso",
    version,
    about = "Derivative-free global maximization: a deterministic VSO search, \
             an SAHC baseline, and benchmark reports judged against published results"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a benchmark suite, a single function, or an external objective
    Run(RunArgs),
}

#[derive(Args)]
#[command(group = ArgGroup::new("target").required(true).args(["suite", "function", "external_cmd"]))]
struct RunArgs {
    /// Search engine
    #[arg(long, value_enum, default_value_t = AlgoArg::Vso)]
    algo: AlgoArg,

    /// Benchmark suite to run
    #[arg(long, value_enum)]
    suite: Option<SuiteArg>,

    /// Single benchmark function id, e.g. gso/f8
    #[arg(long = "fn", value_name = "ID")]
    function: Option<String>,

    /// Dimensions (vpso suite: 10, 20, or 30; fixed-dimension functions keep their own)
    #[arg(long)]
    nd: Option<usize>,

    /// Base RNG seed for stochastic components (default 42)
    #[arg(long)]
    seed: Option<u64>,

    /// VSO repositioning fraction in [0, 1]
    #[arg(long)]
    rho: Option<f64>,

    /// SAHC restart count
    #[arg(long)]
    runs: Option<usize>,

    /// Restart SAHC cold each run instead of carrying the best across runs
    #[arg(long)]
    reset_per_run: bool,

    /// Report format
    #[arg(long, value_enum, default_value_t = EmitArg::Csv)]
    emit: EmitArg,

    /// Write the report to this file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Write a two-column iteration/best-fitness trace (single runs only)
    #[arg(long, value_name = "PATH")]
    trace: Option<PathBuf>,

    /// External objective: command run once per evaluation
    #[arg(long, value_name = "CMD")]
    external_cmd: Option<PathBuf>,

    /// Argument passed to the external command (repeatable)
    #[arg(long, value_name = "ARG", requires = "external_cmd")]
    external_arg: Vec<String>,

    /// File the engine writes each candidate point to
    #[arg(long, value_name = "PATH", requires = "external_cmd")]
    external_in: Option<PathBuf>,

    /// File the external command writes the fitness to
    #[arg(long, value_name = "PATH", requires = "external_cmd")]
    external_out: Option<PathBuf>,

    /// Per-evaluation timeout in seconds
    #[arg(long, value_name = "SECS", default_value_t = 30.0, requires = "external_cmd")]
    external_timeout: f64,

    /// Copy the best point file here on every improvement
    #[arg(long, value_name = "PATH", requires = "external_cmd")]
    snapshot_best: Option<PathBuf>,

    /// Axis bounds LO:HI; repeat per dimension or give once for all axes
    #[arg(long, value_name = "LO:HI", requires = "external_cmd")]
    external_bounds: Vec<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgoArg {
    Vso,
    Sahc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Vpso,
    Gso,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum EmitArg {
    Csv,
    Jsonl,
    Markdown,
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: Cli) -> Result<bool> {
    let Command::Run(args) = cli.command;
    let algo = match args.algo {
        AlgoArg::Vso => Algo::Vso,
        AlgoArg::Sahc => Algo::Sahc,
    };
    let overrides = Overrides {
        nd: args.nd,
        seed: args.seed,
        rho: args.rho,
        runs: args.runs,
        reset_per_run: args.reset_per_run,
    };
    if args.trace.is_some() && args.suite.is_some() {
        bail!("--trace needs a single run (--fn or --external-cmd), not a suite");
    }

    let report: SuiteReport = if let Some(cmd) = &args.external_cmd {
        let nd = args.nd.context("--external-cmd needs --nd")?;
        let (mins, maxs) = parse_bounds(&args.external_bounds, nd)?;
        if !(args.external_timeout > 0.0 && args.external_timeout.is_finite()) {
            bail!("--external-timeout must be a positive number of seconds");
        }
        let spec = SubprocessSpec {
            command: cmd.clone(),
            args: args.external_arg.clone(),
            input_path: args
                .external_in
                .clone()
                .context("--external-cmd needs --external-in")?,
            output_path: args
                .external_out
                .clone()
                .context("--external-cmd needs --external-out")?,
            timeout: Duration::from_secs_f64(args.external_timeout),
            best_artifact_path: args.snapshot_best.clone(),
        };
        run_external(spec, mins, maxs, algo, &overrides)?
    } else if let Some(id) = &args.function {
        run_function(id, algo, &overrides)?
    } else {
        let suite = match args.suite.expect("clap requires a target") {
            SuiteArg::Vpso => Suite::Vpso,
            SuiteArg::Gso => Suite::Gso,
            SuiteArg::All => Suite::All,
        };
        run_suite(suite, algo, &overrides)?
    };

    if let Some(path) = &args.trace {
        // A failed run has no trace; the report carries the error instead.
        if let Some(run) = report.entries.iter().find_map(|e| e.result.as_ref().ok()) {
            let file = File::create(path)
                .with_context(|| format!("creating trace file {}", path.display()))?;
            let mut out = BufWriter::new(file);
            emit_trace(run, &mut out)?;
            out.flush()?;
        }
    }

    let format = match args.emit {
        EmitArg::Csv => Format::Csv,
        EmitArg::Jsonl => Format::Jsonl,
        EmitArg::Markdown => Format::Markdown,
    };
    match &args.out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("creating report file {}", path.display()))?;
            let mut out = BufWriter::new(file);
            emit_report(&report, format, &mut out)?;
            out.flush()?;
        }
        None => {
            let stdout = io::stdout();
            emit_report(&report, format, &mut stdout.lock())?;
        }
    }
    Ok(report.all_pass())
}

fn parse_bounds(specs: &[String], nd: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if specs.is_empty() {
        bail!("--external-cmd needs --external-bounds LO:HI (once for all axes, or once per axis)");
    }
    if specs.len() != 1 && specs.len() != nd {
        bail!(
            "--external-bounds given {} times; expected 1 or {nd}",
            specs.len()
        );
    }
    let mut pairs = Vec::with_capacity(nd);
    for s in specs {
        let (lo, hi) = s
            .split_once(':')
            .with_context(|| format!("bad bounds '{s}'; expected LO:HI"))?;
        let lo: f64 = lo
            .trim()
            .parse()
            .with_context(|| format!("bad lower bound in '{s}'"))?;
        let hi: f64 = hi
            .trim()
            .parse()
            .with_context(|| format!("bad upper bound in '{s}'"))?;
        pairs.push((lo, hi));
    }
    if pairs.len() == 1 {
        pairs = vec![pairs[0]; nd];
    }
    Ok(pairs.into_iter().unzip())
}
