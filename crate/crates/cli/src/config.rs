use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::args::Format;
use crate::error::CliError;

pub const DEFAULT_TERMS: usize = 5;
pub const DEFAULT_SWEEP_TERMS: usize = 10;
pub const DEFAULT_BLOCK_LENGTH: usize = 1000;
pub const DEFAULT_SEED: u64 = 1;

/// Values read from `--config`. Every key is optional.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub threads: Option<usize>,
    pub format: Option<Format>,
    pub terms: Option<usize>,
    pub max_event_length: Option<usize>,
    pub block_length: Option<usize>,
    pub seed: Option<u64>,
    pub frame_errors: Option<u64>,
    pub max_frames: Option<u64>,
    pub checkpoint_interval: Option<u64>,
    pub chunk_size: Option<u64>,
}

impl Config {
    /// Parses the contents of the file at `path`.
    pub fn parse(bytes: &[u8], path: &Path) -> Result<Self, CliError> {
        let bad = |e: &dyn std::fmt::Display| CliError::Usage(format!("{}: {e}", path.display()));
        let text = std::str::from_utf8(bytes).map_err(|e| bad(&e))?;
        toml::from_str(text).map_err(|e| bad(&e))
    }
}

/// Flag, then config file, then default.
pub fn pick<T: Clone>(flag: Option<T>, file: &Option<T>, default: T) -> T {
    flag.or_else(|| file.clone()).unwrap_or(default)
}
