//! Resolution of shared settings: command-line flag, then config file, then
//! environment, then built-in default.

use std::path::Path;

use crate::CliError;

pub const SEED_ENV: &str = "MIDI_SEED";
pub const JOBS_ENV: &str = "MIDI_JOBS";

const KNOWN_KEYS: [&str; 5] = ["seed", "jobs", "c", "reps", "n"];

/// Flat `key = value` settings file.
#[derive(Debug, Default)]
pub struct ConfigFile {
    table: toml::Table,
}

impl ConfigFile {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read config {}: {e}", path.display())))?;
        let table: toml::Table = text
            .parse()
            .map_err(|e| CliError::input(format!("bad config {}: {e}", path.display())))?;
        if let Some(key) = table.keys().find(|k| !KNOWN_KEYS.contains(&k.as_str())) {
            return Err(CliError::input(format!("unknown config key `{key}`")));
        }
        Ok(Self { table })
    }

    fn uint(&self, key: &str) -> Result<Option<u64>, CliError> {
        match self.table.get(key) {
            None => Ok(None),
            Some(toml::Value::Integer(v)) if *v >= 0 => Ok(Some(*v as u64)),
            Some(other) => Err(CliError::input(format!(
                "config key `{key}` must be a non-negative integer, got {other}"
            ))),
        }
    }

    fn float(&self, key: &str) -> Result<Option<f64>, CliError> {
        match self.table.get(key) {
            None => Ok(None),
            Some(toml::Value::Float(v)) => Ok(Some(*v)),
            Some(toml::Value::Integer(v)) => Ok(Some(*v as f64)),
            Some(other) => Err(CliError::input(format!(
                "config key `{key}` must be a number, got {other}"
            ))),
        }
    }

    pub fn seed(&self, flag: Option<u64>) -> Result<u64, CliError> {
        resolve_u64(flag, self.uint("seed")?, SEED_ENV, 0)
    }

    pub fn jobs(&self, flag: Option<usize>) -> Result<usize, CliError> {
        let default = std::thread::available_parallelism().map_or(1, |n| n.get()) as u64;
        let jobs = resolve_u64(flag.map(|j| j as u64), self.uint("jobs")?, JOBS_ENV, default)?;
        Ok(jobs.max(1) as usize)
    }

    pub fn c(&self, flag: Option<f64>) -> Result<f64, CliError> {
        Ok(flag
            .or(self.float("c")?)
            .unwrap_or(midi_core::estimator::DEFAULT_EXPONENT))
    }

    pub fn reps(&self, flag: Option<usize>) -> Result<usize, CliError> {
        Ok(flag
            .or(self.uint("reps")?.map(|v| v as usize))
            .unwrap_or(midi_core::power::DEFAULT_REPS))
    }

    pub fn n(&self, flag: Option<usize>, default: usize) -> Result<usize, CliError> {
        Ok(flag.or(self.uint("n")?.map(|v| v as usize)).unwrap_or(default))
    }
}

fn resolve_u64(flag: Option<u64>, file: Option<u64>, env: &str, default: u64) -> Result<u64, CliError> {
    if let Some(v) = flag.or(file) {
        return Ok(v);
    }
    match std::env::var(env) {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| CliError::input(format!("{env} must be a non-negative integer, got `{raw}`"))),
        Err(_) => Ok(default),
    }
}
