//! Front end for the `repgrowth` library: argument parsing, command
//! dispatch and serialization of results.

pub mod args;
pub mod commands;
pub mod output;
pub mod verify;

use serde::Serialize;

pub use args::Cli;
use args::{Command, Format};
use output::{record_to_csv, table_to_csv, to_json, ErrorReport};

/// What a command prints and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn record<T: Serialize>(v: &T, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => to_json(v),
        Format::Csv => record_to_csv(v),
    }
}

fn dispatch(cli: &Cli) -> anyhow::Result<Outcome> {
    let ok = |stdout| Outcome { stdout, code: 0 };
    match &cli.command {
        Command::Bound(a) => Ok(ok(record(&commands::cmd_bound(a, cli.prec)?, cli.format)?)),
        Command::Witness(a) => {
            let report = commands::cmd_witness(a)?;
            let code = if report.verified() { 0 } else { 1 };
            Ok(Outcome {
                stdout: record(&report, cli.format)?,
                code,
            })
        }
        Command::Enumerate(a) => {
            let table = commands::cmd_enumerate(a, cli.prec, cli.cap)?;
            let stdout = match cli.format {
                Format::Json => to_json(&table)?,
                Format::Csv => {
                    let rows: Vec<commands::EnumerationCsvRow> = table.rows.iter().map(Into::into).collect();
                    table_to_csv(&rows)?
                }
            };
            Ok(ok(stdout))
        }
        Command::Verify(a) => {
            let suite = verify::run_suite(a.suite, cli.scale, cli.precision());
            let stdout = match cli.format {
                Format::Json => to_json(&suite)?,
                Format::Csv => table_to_csv(&suite.csv_rows())?,
            };
            Ok(Outcome {
                stdout,
                code: suite.exit_code(),
            })
        }
        Command::Mullineux(a) => {
            let report = commands::cmd_mullineux(a)?;
            let code = if report.involution { 0 } else { 1 };
            Ok(Outcome {
                stdout: record(&report, cli.format)?,
                code,
            })
        }
    }
}

/// Runs a parsed command. Failures become an [`ErrorReport`] on stdout
/// with exit status 1.
pub fn run(cli: &Cli) -> Outcome {
    dispatch(cli).unwrap_or_else(|e| {
        let report = ErrorReport::from(&e);
        let stdout = record(&report, cli.format).unwrap_or_else(|_| format!("{e:#}\n"));
        Outcome { stdout, code: 1 }
    })
}
