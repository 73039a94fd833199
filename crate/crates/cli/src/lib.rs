//! Batch front end for `afflap-core`: spectra, homology, singular
//! characters and identity checks, rendered as JSON, CSV or text.

mod args;
mod commands;
mod error;
mod render;
mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::{Cli, Command, Format, RunConfig};
pub use error::CliError;
pub use report::{Envelope, ResultRecord};

/// Environment variable that overrides `--jobs`.
pub const JOBS_ENV: &str = "AFFLAP_JOBS";

/// Parses `argv`, runs the command and returns the process exit code:
/// 0 on success, 1 when a mathematical claim is falsified, 2 on usage errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome.exit_code(),
        Err(e) => {
            eprintln!("afflap: {e}");
            e.exit_code()
        }
    }
}

/// Whether every check behind a finished command passed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Passed => 0,
            Outcome::Failed => 1,
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let config = RunConfig::from_cli(cli, std::env::var(JOBS_ENV).ok().as_deref())?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", config.jobs)))?;
    let (envelope, outcome) = pool.install(|| commands::dispatch(&config))?;
    let bytes = render::render(&envelope, config.format)?;
    match &config.out {
        Some(path) => std::fs::write(path, &bytes).map_err(|e| CliError::Io(path.display().to_string(), e))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(&bytes).map_err(|e| CliError::Io("stdout".into(), e))?;
        }
    }
    if let Some(msg) = envelope.failure_summary() {
        eprintln!("afflap: {msg}");
    }
    Ok(outcome)
}
