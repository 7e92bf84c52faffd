//! Command-line flags and `key = value` config files.
//!
//! Values are kept as raw strings until a command resolves them, so a flag
//! and its config-file key go through the same parser and error path.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "scramble",
    version,
    about = "Information scrambling in random Clifford circuits"
)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<String>,
    /// Plain-text `key = value` file; flags take precedence over it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mean, deviation and standard error of χ or η for each subsystem size.
    Sweep(SweepArgs),
    /// Distance from the reference-depth curve over a depth schedule, with decay rates.
    Dynamics(DynamicsArgs),
    /// Exact global-Clifford averages from orbit counting.
    Exact(ExactArgs),
    /// Oracle self-checks.
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// holevo or coherent.
    #[arg(long)]
    pub mode: Option<String>,
    #[arg(long = "N")]
    pub num_qubits: Option<String>,
    /// H in Holevo mode, C in coherent mode.
    #[arg(long)]
    pub amount: Option<String>,
    /// Explicit depth.
    #[arg(long, conflicts_with = "t_mult")]
    pub t: Option<String>,
    /// Depth as a multiple of N (default 3).
    #[arg(long = "t-mult")]
    pub t_mult: Option<String>,
    /// Subsystem sizes, e.g. `1..19` or `4,9,10`.
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub samples: Option<String>,
    #[arg(long)]
    pub seed: Option<String>,
    /// brick-wall or global.
    #[arg(long)]
    pub ensemble: Option<String>,
    /// Samples between checkpoint flushes; 0 disables checkpoints.
    #[arg(long = "checkpoint-interval")]
    pub checkpoint_interval: Option<String>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct DynamicsArgs {
    #[arg(long)]
    pub mode: Option<String>,
    #[arg(long = "N")]
    pub num_qubits: Option<String>,
    /// Amounts to run, e.g. `2,6,10`.
    #[arg(long = "amount-range")]
    pub amount_range: Option<String>,
    /// Depths at which the distance is reported, e.g. `2..40`.
    #[arg(long = "t-schedule")]
    pub t_schedule: Option<String>,
    /// Reference depth as a multiple of N (default 3).
    #[arg(long = "ref-mult")]
    pub ref_mult: Option<String>,
    /// Decay-rate window `t,t'` (default 7,12).
    #[arg(long)]
    pub window: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub samples: Option<String>,
    #[arg(long)]
    pub seed: Option<String>,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long = "N")]
    pub num_qubits: Option<String>,
    #[arg(long = "H")]
    pub amount: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    /// Print the thermodynamic limit χ/H at `r_n,r_H`.
    #[arg(long)]
    pub thermo: Option<String>,
    /// Compare the closed-form orbit maximizer with exhaustive search.
    #[arg(long = "verify-argmax")]
    pub verify_argmax: bool,
    /// Check the KKT conditions of the maximizer.
    #[arg(long = "verify-kkt")]
    pub verify_kkt: bool,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Reduced sample counts.
    #[arg(long)]
    pub quick: bool,
    #[arg(long)]
    pub seed: Option<String>,
    #[arg(long = "inject-fault", hide = true)]
    pub inject_fault: Option<String>,
}

/// Values from an optional config file, looked up by flag name.
#[derive(Debug, Default)]
pub struct Settings {
    file: HashMap<String, String>,
    path: Option<PathBuf>,
}

impl Settings {
    pub fn load(path: Option<&Path>, allowed: &[&str]) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
        let mut file = HashMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!(
                    "{}:{}: expected `key = value`",
                    path.display(),
                    i + 1
                ))
            })?;
            let key = key.trim().replace('_', "-");
            if !allowed.contains(&key.as_str()) {
                return Err(CliError::Config(format!(
                    "{}:{}: unknown key `{key}`",
                    path.display(),
                    i + 1
                )));
            }
            file.insert(key, value.trim().to_string());
        }
        Ok(Self {
            file,
            path: Some(path.to_path_buf()),
        })
    }

    fn raw<'a>(&'a self, key: &str, flag: &'a Option<String>) -> Option<(&'a str, String)> {
        match flag {
            Some(v) => Some((v.as_str(), format!("--{key}"))),
            None => self.file.get(key).map(|v| {
                let origin = format!("`{key}` in {}", self.path.as_ref().unwrap().display());
                (v.as_str(), origin)
            }),
        }
    }

    pub fn parsed<T>(
        &self,
        key: &str,
        flag: &Option<String>,
        parse: impl Fn(&str) -> Result<T, String>,
    ) -> Result<Option<T>, CliError> {
        match self.raw(key, flag) {
            None => Ok(None),
            Some((v, origin)) => parse(v)
                .map(Some)
                .map_err(|e| CliError::Config(format!("invalid value '{v}' for {origin}: {e}"))),
        }
    }

    pub fn get<T: FromStr>(&self, key: &str, flag: &Option<String>) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        self.parsed(key, flag, |v| v.parse::<T>().map_err(|e| e.to_string()))
    }

    pub fn get_or<T: FromStr>(
        &self,
        key: &str,
        flag: &Option<String>,
        default: T,
    ) -> Result<T, CliError>
    where
        T::Err: std::fmt::Display,
    {
        Ok(self.get(key, flag)?.unwrap_or(default))
    }

    pub fn require<T: FromStr>(&self, key: &str, flag: &Option<String>) -> Result<T, CliError>
    where
        T::Err: std::fmt::Display,
    {
        self.get(key, flag)?.ok_or_else(|| missing(key))
    }

    /// A boolean switch: set by the flag or by `key = true` in the file.
    pub fn switch(&self, key: &str, flag: bool) -> Result<bool, CliError> {
        if flag {
            return Ok(true);
        }
        self.get_or(key, &None, false)
    }
}

pub fn missing(key: &str) -> CliError {
    CliError::Config(format!("missing required option --{key}"))
}

/// Parses `1..5,8,10..=12` into an ordered, duplicate-free list.
pub fn parse_list(text: &str) -> Result<Vec<usize>, String> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((a, b)) = item.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let a: usize = a
                .trim()
                .parse()
                .map_err(|_| format!("bad range start in `{item}`"))?;
            let b: usize = b
                .trim()
                .parse()
                .map_err(|_| format!("bad range end in `{item}`"))?;
            if a > b {
                return Err(format!("empty range `{item}`"));
            }
            out.extend(a..=b);
        } else {
            out.push(
                item.parse()
                    .map_err(|_| format!("`{item}` is not a non-negative integer"))?,
            );
        }
    }
    if out.is_empty() {
        return Err("empty list".into());
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|x| seen.insert(*x));
    Ok(out)
}

/// Parses `a,b` into two values.
pub fn parse_pair<T: FromStr>(text: &str) -> Result<(T, T), String> {
    let (a, b) = text
        .split_once(',')
        .ok_or("expected two comma-separated values")?;
    let a = a
        .trim()
        .parse()
        .map_err(|_| format!("bad value `{}`", a.trim()))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| format!("bad value `{}`", b.trim()))?;
    Ok((a, b))
}
