//! CSV tables and run manifests, written atomically.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use chrono::Utc;
use serde::Serialize;

use crate::error::CliError;

pub const SWEEP_HEADER: [&str; 9] = [
    "mode",
    "N",
    "amount",
    "t",
    "n",
    "samples",
    "mean_bits",
    "std_bits",
    "stderr_bits",
];
pub const DYNAMICS_HEADER: [&str; 4] = ["N", "amount", "t", "distance"];
pub const DECAY_HEADER: [&str; 7] = ["N", "amount", "t", "t_prime", "rate", "lower", "upper"];
pub const EXACT_HEADER: [&str; 6] = ["N", "H", "n", "chi_exact_bits", "es_nH_bits", "es_n0_bits"];

/// 17 significant digits, enough to round-trip any `f64`.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    let mut f = fs::File::create(&tmp).map_err(|e| io_err(&tmp, e))?;
    f.write_all(bytes).map_err(|e| io_err(&tmp, e))?;
    f.sync_all().map_err(|e| io_err(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| io_err(path, e))
}

/// Rows of string cells under a fixed header.
pub struct Table {
    header: &'static [&'static str],
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &'static [&'static str]) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| io_err(path, e))?;
        write_atomic(path, &bytes)
    }
}

/// Record of one command invocation.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub master_seed: Option<u64>,
    pub config: serde_json::Value,
    pub started: String,
    pub finished: Option<String>,
    pub files: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_base: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunManifest {
    pub fn start(command: &str, master_seed: Option<u64>, config: serde_json::Value) -> Self {
        Self {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            master_seed,
            config,
            started: Utc::now().to_rfc3339(),
            finished: None,
            files: Vec::new(),
            log_base: None,
            window: None,
            error: None,
        }
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        let json = serde_json::to_vec_pretty(self).map_err(|e| io_err(path, e))?;
        write_atomic(path, &json)
    }

    pub fn finish(&mut self, path: &Path) -> Result<(), CliError> {
        self.finished = Some(Utc::now().to_rfc3339());
        self.save(path)
    }
}

/// Creates the output directory if needed.
pub fn out_dir(out: Option<String>) -> Result<PathBuf, CliError> {
    let dir = PathBuf::from(out.unwrap_or_else(|| ".".into()));
    fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
    Ok(dir)
}

pub fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_round_trip() {
        for x in [0.1, 1.0 / 3.0, 2.0f64.sqrt(), 1e-300, 7.0] {
            assert_eq!(float(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(float(1.0), "1.0000000000000000e0");
    }

    #[test]
    fn table_writes_header_and_rows() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.csv");
        let mut t = Table::new(&DYNAMICS_HEADER);
        t.push(vec!["4".into(), "2".into(), "3".into(), float(0.5)]);
        t.write(&path).unwrap();
        assert_eq!(
            fs::read_to_string(&path).unwrap(),
            "N,amount,t,distance\n4,2,3,5.0000000000000000e-1\n"
        );
        assert!(!dir.path().join("t.csv.tmp").exists());
    }
}
