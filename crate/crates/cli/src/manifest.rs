//! Run manifests and the output sink that references them.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::args::Format;
use crate::error::CliError;

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// Everything needed to rerun a command.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command_line: Vec<String>,
    pub command: String,
    pub arguments: Value,
    pub settings: Value,
    pub seed: Option<u64>,
    /// Run statistics that are not part of the output, such as timings.
    pub stats: Value,
    pub started: String,
    pub finished: String,
    pub inputs: Vec<InputDigest>,
    pub outputs: Vec<String>,
    pub exit_code: i32,
}

fn now() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true)
}

impl RunManifest {
    pub fn start(command_line: Vec<String>, command: &str) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command_line,
            command: command.into(),
            arguments: Value::Null,
            settings: Value::Null,
            seed: None,
            stats: Value::Null,
            started: now(),
            finished: String::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            exit_code: 0,
        }
    }

    /// Reads an input file and records its digest.
    pub fn read_input(&mut self, path: &Path) -> Result<Vec<u8>, CliError> {
        let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(&bytes)),
        });
        Ok(bytes)
    }

    pub fn write(mut self, path: &Path, exit_code: i32) -> Result<(), CliError> {
        self.finished = now();
        self.exit_code = exit_code;
        let mut text = serde_json::to_string_pretty(&self)?;
        text.push('\n');
        std::fs::write(path, text).map_err(|e| CliError::io(path, e))
    }
}

/// `<output>.manifest.json`.
pub fn manifest_path(output: &Path) -> PathBuf {
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    output.with_file_name(name)
}

/// Destination of a command's result. Files start with a reference to their manifest.
pub struct Sink {
    manifest: Option<String>,
    out: BufWriter<Box<dyn Write>>,
}

impl Sink {
    pub fn open(path: Option<&Path>, format: Format) -> Result<Self, CliError> {
        let (out, manifest): (Box<dyn Write>, _) = match path {
            Some(p) => {
                let f = File::create(p).map_err(|e| CliError::io(p, e))?;
                let name = manifest_path(p)
                    .file_name()
                    .unwrap_or_default()
                    .to_string_lossy()
                    .into_owned();
                (Box::new(f), Some(name))
            }
            None => (Box::new(std::io::stdout().lock()), None),
        };
        let mut sink = Self {
            manifest,
            out: BufWriter::new(out),
        };
        if let (Some(name), Format::Text | Format::Csv) = (&sink.manifest, format) {
            let line = format!("# manifest: {name}");
            sink.line(&line)?;
        }
        Ok(sink)
    }

    pub fn line(&mut self, s: &str) -> Result<(), CliError> {
        writeln!(self.out, "{s}").map_err(|e| CliError::io(Path::new("<output>"), e))
    }

    /// Writes a JSON document, adding a `manifest` field to objects written to files.
    pub fn json(&mut self, mut value: Value) -> Result<(), CliError> {
        if let (Some(name), Value::Object(map)) = (&self.manifest, &mut value) {
            map.insert("manifest".into(), Value::String(name.clone()));
        }
        let text = serde_json::to_string_pretty(&value)?;
        self.line(&text)
    }

    pub fn finish(mut self) -> Result<(), CliError> {
        self.out
            .flush()
            .map_err(|e| CliError::io(Path::new("<output>"), e))
    }
}
