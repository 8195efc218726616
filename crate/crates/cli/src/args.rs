use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(
    name = "tcm",
    version,
    about = "Labeling and encoder design for trellis-coded modulation"
)]
pub struct Cli {
    /// TOML file with default settings; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads for searches and simulations.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the result to this file (a run manifest is written next to it).
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    /// More log output; repeat for more.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List labeling class representatives in generation order.
    Labelings(LabelingsArgs),
    /// Factor a labeling into its reduced column echelon form and transform.
    Factor(FactorArgs),
    /// Distance spectrum of an encoder, labeling and constellation.
    Spectrum(SpectrumArgs),
    /// Exhaustive search for optimal-spectrum encoders and labelings.
    Search(SearchArgs),
    /// BER/FER bounds, and optionally simulations, over a range of SNRs.
    Sweep(SweepArgs),
    /// Compare computed spectra or search results with the bundled tables.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct LabelingsArgs {
    /// Label length.
    #[arg(short)]
    pub m: usize,
    /// Which representatives to list: full, pam or psk.
    #[arg(long, default_value = "full")]
    pub mode: String,
    /// Stop after this many labelings.
    #[arg(long)]
    pub limit: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct FactorArgs {
    /// Labeling in integer notation, e.g. "0 1 3 2 6 7 5 4".
    pub labeling: String,
}

#[derive(Args, Debug, Serialize)]
pub struct SystemArgs {
    /// Encoder in octal notation, e.g. "[13,4]" or "[1,0,0;0,5,2]".
    #[arg(short = 'g', long)]
    pub encoder: String,
    /// Register lengths, comma separated; inferred from the octal entries by default.
    #[arg(long, value_delimiter = ',')]
    pub memories: Option<Vec<usize>>,
    /// Labeling in integer notation.
    #[arg(short, long)]
    pub labeling: String,
    /// Standard constellation such as 4pam or 8psk.
    #[arg(short, long, conflicts_with = "constellation_file")]
    pub constellation: Option<String>,
    /// Custom constellation: one point per line, whitespace-separated coordinates.
    #[arg(long)]
    pub constellation_file: Option<PathBuf>,
    /// Number of spectral lines.
    #[arg(long)]
    pub terms: Option<usize>,
    /// Event-length cap for catastrophic encoders.
    #[arg(long)]
    pub max_event_length: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub system: SystemArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct SearchArgs {
    /// Encoder inputs.
    #[arg(short)]
    pub k: usize,
    /// Encoder outputs (label length).
    #[arg(short)]
    pub m: usize,
    /// Total encoder memory.
    #[arg(long)]
    pub nu: usize,
    /// Constellation family: pam, psk or custom.
    #[arg(long)]
    pub family: String,
    /// Custom constellation file, required for the custom family.
    #[arg(long)]
    pub constellation_file: Option<PathBuf>,
    /// Spectral lines compared.
    #[arg(long)]
    pub terms: Option<usize>,
    /// Checkpoint file, rewritten periodically.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Continue from an existing checkpoint.
    #[arg(long, requires = "checkpoint")]
    pub resume: bool,
    /// Seconds between checkpoint writes.
    #[arg(long)]
    pub checkpoint_interval: Option<u64>,
    /// Encoders per work unit.
    #[arg(long)]
    pub chunk_size: Option<u64>,
    /// Compare the result with the bundled table for this configuration.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct SweepArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Es/N0 values in dB: "start:stop:step", a comma list, or one value.
    #[arg(long)]
    pub snr: String,
    /// Information words per frame.
    #[arg(long)]
    pub block_length: Option<usize>,
    /// Run Monte-Carlo simulations next to the bounds.
    #[arg(long)]
    pub simulate: bool,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Stop a point after this many frame errors.
    #[arg(long)]
    pub frame_errors: Option<u64>,
    /// Stop a point after this many frames.
    #[arg(long)]
    pub max_frames: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
pub struct VerifyArgs {
    /// Bundled table: 4pam, 8pam or 8psk.
    #[arg(
        long,
        required_unless_present = "table_file",
        conflicts_with = "table_file"
    )]
    pub table: Option<String>,
    /// Table in the bundled JSON layout: id, k, m, family and rows.
    #[arg(long)]
    pub table_file: Option<PathBuf>,
    /// Memories to check; all memories of the table by default.
    #[arg(long, value_delimiter = ',')]
    pub nu: Option<Vec<usize>>,
    /// Run the searches instead of recomputing the listed spectra.
    #[arg(long)]
    pub search: bool,
}
