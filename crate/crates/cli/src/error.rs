use std::path::{Path, PathBuf};

use thiserror::Error;

use tcm_core::error::{
    ChannelError, ConstellationError, EncoderError, Gf2Error, LabelingError, ReferenceError,
    SearchError, SpectrumError,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Constellation(#[from] ConstellationError),
    #[error(transparent)]
    Encoder(#[from] EncoderError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Channel(#[from] ChannelError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Reference(#[from] ReferenceError),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io {
            path: path.to_path_buf(),
            source,
        }
    }
}
