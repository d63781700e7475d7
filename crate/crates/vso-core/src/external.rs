//! File-based subprocess objective: each evaluation writes the point to an
//! input file, runs a user command, and reads the fitness back from an
//! output file. Lets the engines drive solvers written in any language.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::{Command, Stdio};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::objective::{EvalError, Objective};
use crate::space::BestRecord;
use crate::EngineError;

/// Where the files live and how the command is run.
#[derive(Debug, Clone)]
pub struct SubprocessSpec {
    /// Program to run once per evaluation.
    pub command: PathBuf,
    /// Arguments passed verbatim.
    pub args: Vec<String>,
    /// File the point is written to, one coordinate per line, full
    /// precision.
    pub input_path: PathBuf,
    /// File the command must write the fitness to (first line, decimal).
    pub output_path: PathBuf,
    /// Hard wall-clock limit per evaluation.
    pub timeout: Duration,
    /// If set, the input file is copied here on every strict improvement,
    /// so the best point found survives an aborted run.
    pub best_artifact_path: Option<PathBuf>,
}

/// An [`Objective`] backed by a subprocess. Evaluations share the input and
/// output files, so this objective reports itself concurrency-unsafe and the
/// engines evaluate it one point at a time.
#[derive(Debug)]
pub struct SubprocessObjective {
    spec: SubprocessSpec,
    snapshot_error: Mutex<Option<std::io::Error>>,
}

impl SubprocessObjective {
    pub fn new(spec: SubprocessSpec) -> Result<Self, EngineError> {
        if spec.input_path == spec.output_path {
            return Err(EngineError::InvalidConfig(format!(
                "input and output paths must differ, both are {}",
                spec.input_path.display()
            )));
        }
        if spec.timeout.is_zero() {
            return Err(EngineError::InvalidConfig(
                "timeout must be positive".into(),
            ));
        }
        Ok(Self {
            spec,
            snapshot_error: Mutex::new(None),
        })
    }

    /// Returns and clears the error from the most recent failed best-point
    /// snapshot, if any; snapshot failures never abort the search itself.
    pub fn take_snapshot_error(&self) -> Option<std::io::Error> {
        self.snapshot_error.lock().unwrap().take()
    }

    fn command_name(&self) -> String {
        self.spec.command.display().to_string()
    }

    fn write_input(&self, x: &[f64]) -> Result<(), EvalError> {
        let mut body = String::with_capacity(x.len() * 24);
        for v in x {
            // 17 significant digits: enough to round-trip any f64.
            body.push_str(&format!("{v:.16e}\n"));
        }
        fs::write(&self.spec.input_path, body).map_err(|source| EvalError::Io {
            path: self.spec.input_path.clone(),
            source,
        })
    }

    fn run_command(&self) -> Result<(), EvalError> {
        let spawn_err = |source| EvalError::Spawn {
            command: self.command_name(),
            source,
        };
        let mut child = Command::new(&self.spec.command)
            .args(&self.spec.args)
            .stdin(Stdio::null())
            .stdout(Stdio::null())
            .stderr(Stdio::piped())
            .spawn()
            .map_err(spawn_err)?;

        let deadline = Instant::now() + self.spec.timeout;
        let status = loop {
            match child.try_wait().map_err(spawn_err)? {
                Some(status) => break status,
                None if Instant::now() >= deadline => {
                    let _ = child.kill();
                    let _ = child.wait();
                    return Err(EvalError::Timeout {
                        command: self.command_name(),
                        timeout_secs: self.spec.timeout.as_secs_f64(),
                    });
                }
                None => std::thread::sleep(Duration::from_millis(1)),
            }
        };

        if !status.success() {
            let mut stderr = String::new();
            if let Some(mut pipe) = child.stderr.take() {
                let _ = pipe.read_to_string(&mut stderr);
            }
            return Err(EvalError::NonzeroExit {
                command: self.command_name(),
                status: status.code().map_or_else(
                    || "terminated by signal".into(),
                    |c| c.to_string(),
                ),
                stderr,
            });
        }
        Ok(())
    }

    fn read_output(&self) -> Result<f64, EvalError> {
        let path = &self.spec.output_path;
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                return Err(EvalError::MissingOutput { path: path.clone() })
            }
            Err(source) => {
                return Err(EvalError::Io {
                    path: path.clone(),
                    source,
                })
            }
        };
        let line = text.lines().next().unwrap_or("").trim();
        line.parse::<f64>().map_err(|_| EvalError::UnparsableOutput {
            line: line.to_string(),
        })
    }
}

impl Objective for SubprocessObjective {
    fn eval(&self, x: &[f64]) -> Result<f64, EvalError> {
        self.write_input(x)?;
        // Drop any stale output so a command that fails to write is caught
        // instead of its previous result being read back.
        match fs::remove_file(&self.spec.output_path) {
            Ok(()) => {}
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {}
            Err(source) => {
                return Err(EvalError::Io {
                    path: self.spec.output_path.clone(),
                    source,
                })
            }
        }
        self.run_command()?;
        self.read_output()
    }

    fn concurrent_safe(&self) -> bool {
        false
    }

    fn on_new_best(&self, _best: &BestRecord) {
        if let Some(artifact) = &self.spec.best_artifact_path {
            // The input file still holds the improving point: the engines
            // call this hook before the next evaluation overwrites it.
            if let Err(e) = fs::copy(&self.spec.input_path, artifact) {
                *self.snapshot_error.lock().unwrap() = Some(e);
            }
        }
    }
}
