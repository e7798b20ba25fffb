use std::path::PathBuf;
use std::str::FromStr;

use cycperm_core::enumerate::{Scanner, HARD_CAP};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Text,
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            _ => Err(CliError::Usage(format!("unknown format {s:?} (json, csv or text)"))),
        }
    }
}

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub cap: usize,
    pub threads: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(cap: usize, threads: usize, format: OutputFormat, out: Option<PathBuf>) -> Result<Self, CliError> {
        if cap > HARD_CAP {
            return Err(CliError::Usage(format!("cap {cap} exceeds the hard limit {HARD_CAP}")));
        }
        if threads == 0 {
            return Err(CliError::Usage("thread count must be at least 1".into()));
        }
        Ok(RunConfig { cap, threads, format, out })
    }

    pub fn scanner(&self) -> Scanner {
        Scanner::new(self.cap).expect("cap checked on construction")
    }

    pub fn pool(&self) -> Result<rayon::ThreadPool, CliError> {
        Ok(rayon::ThreadPoolBuilder::new().num_threads(self.threads).build()?)
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { cap: cycperm_core::enumerate::DEFAULT_CAP, threads: 1, format: OutputFormat::Text, out: None }
    }
}
