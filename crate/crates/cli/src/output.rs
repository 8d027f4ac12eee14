//! Writing tables and records into the output directory.

use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use sha2::{Digest, Sha256};

use rattet_core::io::{Payload, Provenance, ResultRecord};

use crate::config::Effective;
use crate::CliError;

pub struct Sink {
    dir: PathBuf,
    provenance: Provenance,
}

impl Sink {
    pub fn new(cfg: &Effective) -> Result<Self, CliError> {
        std::fs::create_dir_all(&cfg.out).map_err(|e| io_err(&cfg.out, e))?;
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        let config_hash = cfg.hash();
        let run_id = hex::encode(&Sha256::digest(format!("{config_hash}:{secs}:{}", std::process::id()))[..8]);
        Ok(Sink { dir: cfg.out.clone(), provenance: Provenance { run_id, config_hash, timestamp: secs.to_string() } })
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn record(&self, payload: Payload) -> ResultRecord {
        ResultRecord { payload, provenance: self.provenance.clone() }
    }

    pub fn write_text(&self, name: &str, text: &str) -> Result<PathBuf, CliError> {
        let path = self.dir.join(name);
        std::fs::write(&path, text).map_err(|e| io_err(&path, e))?;
        Ok(path)
    }

    /// One record per line.
    pub fn write_records(&self, name: &str, records: &[ResultRecord]) -> Result<PathBuf, CliError> {
        let mut text = String::new();
        for r in records {
            text.push_str(&r.to_json());
            text.push('\n');
        }
        self.write_text(name, &text)
    }

    pub fn write_json<T: Serialize>(&self, name: &str, value: &T) -> Result<PathBuf, CliError> {
        let text = serde_json::to_string_pretty(value).expect("summary serializes");
        self.write_text(name, &(text + "\n"))
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}
