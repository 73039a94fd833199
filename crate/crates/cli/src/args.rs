use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::CliError;
use afflap_core::identities::DEFAULT_ORDER;
use afflap_core::IdentityId;

#[derive(Parser, Debug)]
#[command(name = "afflap", version, about = "Laplacians, homology and q-series identities for the subalgebras L_k of affine sl2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact spectrum of the Laplacian on C^(h)(L_k) for every h up to --h-max.
    Spectrum(Common),
    /// Homology dimensions with explicit harmonic chains.
    Homology(Common),
    /// Check registered q-series identities.
    Verify(VerifyArgs),
    /// Dimensions of singular vectors for k = -1 mod 3.
    Singular(SingularArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, allow_negative_numbers = true)]
    pub k: i64,
    #[arg(long, default_value_t = 6, allow_negative_numbers = true)]
    pub h_max: i64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Identity to check; repeatable.
    #[arg(long = "id")]
    pub ids: Vec<String>,
    /// Check every registered identity (the default when no --id is given).
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug, Clone)]
pub struct SingularArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub k: i64,
    #[arg(long, default_value_t = 6, allow_negative_numbers = true)]
    pub h_max: i64,
    /// Also list a basis of singular chains for every block.
    #[arg(long)]
    pub vectors: bool,
    /// Clebsch-Gordan singular vectors in V(a/2) x V(b/2), given as doubled
    /// weights `a,b`; repeatable.
    #[arg(long, value_parser = parse_pair)]
    pub cg: Vec<(u32, u32)>,
    #[command(flatten)]
    pub output: Output,
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected `a,b`, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(a)?, parse(b)?))
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Spectrum,
    Homology,
    Verify,
    Singular,
}

/// Validated settings for one run.  The worker count is deliberately not
/// serialized so that output does not depend on it.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: Task,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_max: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub format: Format,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub identities: Vec<String>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub vectors: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cg: Vec<(u32, u32)>,
    #[serde(skip)]
    pub jobs: usize,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// Validates the parsed command line; `jobs_env` is the value of the
    /// override variable, if set.
    pub fn from_cli(cli: &Cli, jobs_env: Option<&str>) -> Result<Self, CliError> {
        let blank = |command, output: &Output| RunConfig {
            command,
            k: None,
            h_max: None,
            order: None,
            format: output.format,
            identities: Vec::new(),
            vectors: false,
            cg: Vec::new(),
            jobs: 0,
            out: output.out.clone(),
        };
        let (mut config, output) = match &cli.command {
            Command::Spectrum(c) | Command::Homology(c) => {
                let task = if matches!(cli.command, Command::Spectrum(_)) { Task::Spectrum } else { Task::Homology };
                let config = RunConfig { k: Some(c.k), h_max: Some(c.h_max), ..blank(task, &c.output) };
                (config, &c.output)
            }
            Command::Verify(v) => {
                if v.all && !v.ids.is_empty() {
                    return Err(CliError::Usage("--all and --id are mutually exclusive".into()));
                }
                let identities = if v.ids.is_empty() {
                    IdentityId::ALL.iter().map(|id| id.name().to_string()).collect()
                } else {
                    for name in &v.ids {
                        name.parse::<IdentityId>().map_err(|e| CliError::Usage(e.to_string()))?;
                    }
                    v.ids.clone()
                };
                (RunConfig { order: Some(v.order), identities, ..blank(Task::Verify, &v.output) }, &v.output)
            }
            Command::Singular(s) => {
                let config = RunConfig {
                    k: Some(s.k),
                    h_max: Some(s.h_max),
                    vectors: s.vectors,
                    cg: s.cg.clone(),
                    ..blank(Task::Singular, &s.output)
                };
                (config, &s.output)
            }
        };
        if let Some(k) = config.k {
            if k < -1 {
                return Err(CliError::Usage(format!("--k must be at least -1, got {k}")));
            }
        }
        if let Some(h) = config.h_max {
            if h < 0 {
                return Err(CliError::Usage(format!("--h-max must be non-negative, got {h}")));
            }
        }
        if config.order == Some(0) {
            return Err(CliError::Usage("--order must be at least 1".into()));
        }
        if config.command == Task::Singular && config.k.is_some_and(|k| (k + 1).rem_euclid(3) != 0) {
            return Err(CliError::Usage(format!(
                "singular vectors need an sl2-module; --k must be -1 mod 3, got {}",
                config.k.unwrap_or_default()
            )));
        }
        config.jobs = resolve_jobs(output.jobs, jobs_env)?;
        Ok(config)
    }
}

fn resolve_jobs(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    let from_env = match env.map(str::trim).filter(|s| !s.is_empty()) {
        Some(s) => Some(
            s.parse::<usize>()
                .map_err(|e| CliError::Usage(format!("{}={s}: {e}", crate::JOBS_ENV)))?,
        ),
        None => None,
    };
    let jobs = from_env.or(flag).unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if jobs == 0 {
        return Err(CliError::Usage("the worker count must be positive".into()));
    }
    Ok(jobs)
}
