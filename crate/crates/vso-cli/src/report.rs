//! Report emission (csv, jsonl, markdown) and two-column trace files.

use std::io::{self, Write};

use serde::Serialize;
use vso_core::RunResult;

use crate::reference::{RefAlgorithm, Verdict};
use crate::suite::SuiteReport;

/// Report output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// Machine-readable table, 17 significant digits, no timing fields, so
    /// repeated runs are byte-identical.
    Csv,
    /// One JSON object per row; includes coordinates and wall time.
    Jsonl,
    /// Human-readable tables mirroring the published layout.
    Markdown,
}

/// Writes `report` to `w` in the chosen format.
pub fn emit_report(report: &SuiteReport, format: Format, w: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Csv => emit_csv(report, w),
        Format::Jsonl => emit_jsonl(report, w),
        Format::Markdown => emit_markdown(report, w),
    }
}

/// Full round-trip precision: 17 significant digits.
fn sig17(v: f64) -> String {
    format!("{v:.16e}")
}

fn emit_csv(report: &SuiteReport, w: &mut dyn Write) -> io::Result<()> {
    let mut csv = csv::Writer::from_writer(w);
    csv.write_record([
        "id",
        "label",
        "nd",
        "algo",
        "best",
        "n_eval",
        "last_iteration",
        "found_at_iteration",
        "fmax",
        "published_best",
        "published_n_eval",
        "verdict",
        "detail",
    ])
    .map_err(io::Error::other)?;
    for e in &report.entries {
        let run = e.result.as_ref().ok();
        let opt = |v: Option<String>| v.unwrap_or_default();
        csv.write_record([
            e.id.clone(),
            e.label.clone(),
            e.nd.to_string(),
            report.algo.as_str().to_owned(),
            opt(run.map(|r| sig17(r.best.fstar))),
            opt(run.map(|r| r.n_eval.to_string())),
            opt(run.map(|r| r.last_iteration.to_string())),
            opt(run.map(|r| r.best.found_at_iteration.to_string())),
            opt(e.fmax.map(sig17)),
            opt(e.reference.map(|r| sig17(r.best))),
            opt(e.reference.and_then(|r| r.n_eval).map(|n| n.to_string())),
            e.judgement.verdict.as_str().to_owned(),
            e.judgement.detail.clone(),
        ])
        .map_err(io::Error::other)?;
    }
    csv.flush()
}

#[derive(Serialize)]
struct JsonRow<'a> {
    id: &'a str,
    label: &'a str,
    nd: usize,
    algo: &'a str,
    seed: u64,
    config: &'a str,
    best: Option<f64>,
    x: Option<&'a [f64]>,
    n_eval: Option<u64>,
    last_iteration: Option<usize>,
    found_at_iteration: Option<usize>,
    found_at_point: Option<usize>,
    wall_time: Option<f64>,
    fmax: Option<f64>,
    published_best: Option<f64>,
    published_n_eval: Option<u64>,
    verdict: &'a str,
    detail: &'a str,
    error: Option<&'a str>,
}

fn emit_jsonl(report: &SuiteReport, w: &mut dyn Write) -> io::Result<()> {
    for e in &report.entries {
        let run = e.result.as_ref().ok();
        let row = JsonRow {
            id: &e.id,
            label: &e.label,
            nd: e.nd,
            algo: report.algo.as_str(),
            seed: report.seed,
            config: &report.config_echo,
            best: run.map(|r| r.best.fstar),
            x: run.map(|r| r.best.rstar.as_slice()),
            n_eval: run.map(|r| r.n_eval),
            last_iteration: run.map(|r| r.last_iteration),
            found_at_iteration: run.map(|r| r.best.found_at_iteration),
            found_at_point: run.map(|r| r.best.found_at_point),
            wall_time: run.map(|r| r.wall_time),
            fmax: e.fmax,
            published_best: e.reference.map(|r| r.best),
            published_n_eval: e.reference.and_then(|r| r.n_eval),
            verdict: e.judgement.verdict.as_str(),
            detail: &e.judgement.detail,
            error: e.result.as_ref().err().map(String::as_str),
        };
        serde_json::to_writer(&mut *w, &row)?;
        writeln!(w)?;
    }
    Ok(())
}

fn emit_markdown(report: &SuiteReport, w: &mut dyn Write) -> io::Result<()> {
    let agg = report.aggregate();
    writeln!(w, "# {} benchmark report", report.algo.as_str().to_uppercase())?;
    writeln!(w)?;
    writeln!(w, "- config: `{}`", report.config_echo)?;
    writeln!(w, "- seed: {}", report.seed)?;
    writeln!(
        w,
        "- verdicts: {} pass, {} pass-with-deviation, {} fail, {} no-reference",
        agg.pass, agg.pass_with_deviation, agg.fail, agg.no_reference
    )?;
    writeln!(w)?;
    writeln!(
        w,
        "| function | id | Nd | f_max | published best | best | published N_eval | N_eval | verdict |"
    )?;
    writeln!(w, "|---|---|---|---|---|---|---|---|---|")?;
    for e in &report.entries {
        let run = e.result.as_ref().ok();
        writeln!(
            w,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            e.label,
            e.id,
            e.nd,
            e.display_fmax,
            e.reference.map(|r| r.display_best.as_str()).unwrap_or(""),
            run.map(|r| r.best.fstar.to_string()).unwrap_or_default(),
            e.reference
                .and_then(|r| r.n_eval)
                .map(|n| n.to_string())
                .unwrap_or_default(),
            run.map(|r| r.n_eval.to_string()).unwrap_or_default(),
            e.judgement.verdict.as_str(),
        )?;
    }

    let notes: Vec<_> = report
        .entries
        .iter()
        .filter(|e| e.judgement.verdict != Verdict::Pass)
        .collect();
    if !notes.is_empty() {
        writeln!(w)?;
        writeln!(w, "## Notes")?;
        writeln!(w)?;
        for e in &notes {
            writeln!(w, "- `{}` (nd={}): {}", e.id, e.nd, e.judgement.detail)?;
        }
    }

    let comparators: Vec<_> = report
        .entries
        .iter()
        .flat_map(|e| {
            crate::reference::entries().iter().filter(|r| {
                r.algorithm == RefAlgorithm::OtherPublished && r.id == e.id && r.nd == e.nd
            })
        })
        .collect();
    if !comparators.is_empty() {
        writeln!(w)?;
        writeln!(w, "## Published comparators")?;
        writeln!(w)?;
        writeln!(w, "| id | Nd | source | published best | published N_eval |")?;
        writeln!(w, "|---|---|---|---|---|")?;
        for r in comparators {
            writeln!(
                w,
                "| {} | {} | {} | {} | {} |",
                r.id,
                r.nd,
                r.source,
                r.display_best,
                r.n_eval.map(|n| n.to_string()).unwrap_or_default(),
            )?;
        }
    }
    Ok(())
}

/// Writes one `iteration best-fitness` line per trace point, gnuplot-style.
pub fn emit_trace(result: &RunResult, w: &mut dyn Write) -> io::Result<()> {
    if result.trace.is_empty() {
        return Err(io::Error::new(io::ErrorKind::InvalidInput, "trace is empty"));
    }
    for (iteration, fitness) in &result.trace {
        writeln!(w, "{iteration} {fitness:.16e}")?;
    }
    Ok(())
}
