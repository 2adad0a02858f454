//! Crate-wide error type.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All the ways an ovation operation can fail.
#[derive(Debug, Error)]
pub enum Error {
    // -- corpus --
    #[error("file not found: {0}")]
    FileNotFound(String),
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    MalformedJson {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("record {record}: missing or invalid field `{field}`")]
    MissingField { record: String, field: String },
    #[error("split ratio must lie strictly between 0 and 1, got {0}")]
    BadRatio(f64),
    #[error("need at least 2 articles to split, got {0}")]
    TooFewArticles(usize),

    // -- textproc --
    #[error("document {0} is empty after preprocessing")]
    EmptyAfterProcessing(String),

    // -- embed --
    #[error("no token reached the minimum count of {min_count}; vocabulary is empty")]
    EmptyVocabulary { min_count: u64 },
    #[error("embedding dimension must be at least 2, got {0}")]
    DegenerateDims(usize),
    #[error("need at least 2 documents to train, got {0}")]
    TooFewDocs(usize),
    #[error("every token is out of vocabulary")]
    AllTokensOov,
    #[error("word-vector file is empty")]
    EmptyFile,
    #[error("row {0} of word-vector file has a different dimension than row 1")]
    RaggedRow(usize),
    #[error("cosine similarity is undefined for an all-zero vector")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("operation requires a trained PV-DM model, got an averaged word-vector model")]
    WrongModelKind,

    // -- features --
    #[error("requested {requested} components but only {available} eigenvalues exceed 1e-12")]
    RankDeficient { requested: usize, available: usize },
    #[error("k must satisfy 1 <= k <= min(N-1, d); got k={k} with N={n}, d={d}")]
    BadK { k: usize, n: usize, d: usize },
    #[error("decimal scaling requires non-negative inputs, got {0}")]
    NegativeInput(f64),

    // -- models --
    #[error("normal equations are singular; retry with ridge_lambda > 0")]
    SingularSystem,
    #[error("k must satisfy 1 <= k <= {n}, got {k}")]
    BadNeighbourCount { k: usize, n: usize },
    #[error("length mismatch: {left} predictions vs {right} actuals")]
    LengthMismatch { left: usize, right: usize },
    #[error("cannot compute MSE of empty lists")]
    Empty,

    // -- keyphrase --
    #[error("document {0} has no noun/adjective candidate phrases")]
    NoCandidates(String),
    #[error("occurrence position {0} appears in more than one topic")]
    DuplicatePosition(usize),

    // -- artifact / cli --
    #[error("artifact format version {found} is not supported (reader supports {supported})")]
    VersionMismatch { found: u64, supported: u64 },
    #[error("corrupt artifact: {0}")]
    CorruptArtifact(String),
    #[error("invalid configuration field `{field}`: {message}")]
    ConfigInvalid { field: String, message: String },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
