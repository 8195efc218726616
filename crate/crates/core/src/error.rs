use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Gf2Error {
    #[error("unsupported matrix shape {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },
    #[error("row {row} value {value:#b} does not fit in {cols} columns")]
    RowOutOfRange { row: usize, value: u64, cols: usize },
    #[error("rows have different lengths")]
    RaggedRows,
    #[error("entry {0} is not binary")]
    NotBinary(u8),
    #[error("dimension mismatch: {left:?} x {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("unsupported order m={0}")]
    UnsupportedOrder(usize),
    #[error("not a labeling: {0}")]
    NotALabeling(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("unsupported order m={0}")]
    UnsupportedOrder(usize),
    #[error("labeling is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("labeling length {0} is not a power of two")]
    BadLength(usize),
    #[error("constellation size {constellation} does not match labeling size {labeling}")]
    SizeMismatch {
        constellation: usize,
        labeling: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstellationError {
    #[error("unsupported constellation size {0}")]
    UnsupportedSize(usize),
    #[error("constellation points must be distinct")]
    DuplicatePoints,
    #[error("constellation points must share one dimension")]
    MixedDimensions,
    #[error("constellation has zero energy")]
    ZeroEnergy,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EncoderError {
    #[error("memory split {split:?} does not sum to {nu}")]
    InconsistentMemory { split: Vec<usize>, nu: usize },
    #[error("tap matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    TapShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("unsupported encoder dimensions: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectrumError {
    #[error("labeling has {labeling} columns but the encoder has {encoder} outputs")]
    OutputMismatch { labeling: usize, encoder: usize },
    #[error("constellation has {constellation} points but the labeling has {labeling}")]
    SizeMismatch {
        constellation: usize,
        labeling: usize,
    },
    #[error("two distinct input sequences produce identical symbol sequences")]
    Degenerate,
    #[error("truncation must be at least one term")]
    ZeroTruncation,
    #[error("encoder too large for spectrum enumeration: {0}")]
    TooLarge(String),
    #[error("invalid transform: {0}")]
    Transform(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChannelError {
    #[error("Es/N0 must be positive, got {0}")]
    NonPositiveSnr(f64),
    #[error("block length must be at least 1")]
    ZeroBlockLength,
    #[error("received sequence length {got} does not match expected {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("received point dimension {got} does not match constellation dimension {expected}")]
    DimensionMismatch { got: usize, expected: usize },
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("unsupported search size: {0}")]
    Unsupported(String),
    #[error("checkpoint does not match the search parameters")]
    CheckpointMismatch,
    #[error("thread pool: {0}")]
    Threads(String),
    #[error("checkpoint i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("checkpoint format: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Encoder(#[from] EncoderError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Constellation(#[from] ConstellationError),
}

#[derive(Debug, Error)]
pub enum ReferenceError {
    #[error("reference data: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Encoder(#[from] EncoderError),
}
