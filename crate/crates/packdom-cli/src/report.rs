//! The one JSON document every subcommand emits.
//!
//! Reports are byte-stable: rerunning a command with the same inputs and
//! seed reproduces the output exactly. Wall-clock timing therefore goes to
//! stderr, never into the report.

use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub seed: Option<u64>,
    pub results: Value,
}

impl RunReport {
    pub fn new(command: &str, input_digest: String, seed: Option<u64>, results: Value) -> Self {
        RunReport {
            command: command.to_string(),
            input_digest,
            seed,
            results,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}

/// Output destinations shared by every subcommand: `--json` prints the
/// report to stdout instead of the human summary, `--out` always writes it
/// to a file.
#[derive(Debug, clap::Args)]
pub struct OutputOpts {
    /// Print the full JSON report on stdout.
    #[arg(long)]
    pub json: bool,
    /// Write the full JSON report to a file.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

impl OutputOpts {
    /// Emits the report; `human` is the one-line summary used when `--json`
    /// is off.
    pub fn emit(&self, report: &RunReport, human: &str) -> std::io::Result<()> {
        if let Some(path) = &self.out {
            std::fs::write(path, report.to_json())?;
        }
        let mut stdout = std::io::stdout().lock();
        if self.json {
            stdout.write_all(report.to_json().as_bytes())?;
        } else {
            writeln!(stdout, "{human}")?;
        }
        Ok(())
    }
}
