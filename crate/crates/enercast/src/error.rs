//! Crate-wide error type and exit-code mapping.

use thiserror::Error;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the toolkit.
///
/// Variants group into three families which the CLI maps onto exit codes:
/// usage/config errors (exit 2), data errors (exit 3) and numeric/training
/// errors (exit 4).
#[derive(Debug, Error)]
pub enum Error {
    // --- usage / config ---
    #[error("config error: {0}")]
    Config(String),

    // --- data ---
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("continuity error: {0}")]
    Continuity(String),

    #[error("validation error at line {line}, field `{field}`: {message}")]
    FieldValidation {
        line: usize,
        field: &'static str,
        message: String,
    },

    #[error("fit error: {0}")]
    Fit(String),

    #[error("featurize error: {0}")]
    Featurize(String),

    #[error("generation error: {0}")]
    Generation(String),

    #[error("pairing error: actual has {actual} values, forecast has {forecast}")]
    Pairing { actual: usize, forecast: usize },

    #[error("pairing error: series must contain at least one value")]
    EmptySeries,

    #[error("MAPE is undefined: actual value at index {index} is zero")]
    ZeroActual { index: usize },

    #[error("fold plan error: {0}")]
    FoldPlan(String),

    #[error("aggregation error: {0}")]
    Aggregation(String),

    #[error("scenario error: {0}")]
    Scenario(String),

    #[error("misalignment error: {0}")]
    Misalignment(String),

    #[error("model file error at line {line}: {message}")]
    ModelFormat { line: usize, message: String },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },

    // --- numeric / training ---
    #[error("shape error: expected {expected} features, got {got}")]
    Shape { expected: usize, got: usize },

    #[error("numeric error: {0}")]
    NonFinite(String),

    #[error("training diverged at epoch {epoch}: loss is not finite")]
    Diverged { epoch: usize },

    #[error("fold {fold} failed: {source}")]
    Fold {
        fold: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wrap an I/O error with the path or action that triggered it.
    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }

    /// Process exit code for this error: 2 usage/config, 3 data, 4 numeric/training.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::Parse { .. }
            | Error::Continuity(_)
            | Error::FieldValidation { .. }
            | Error::Fit(_)
            | Error::Featurize(_)
            | Error::Generation(_)
            | Error::Pairing { .. }
            | Error::EmptySeries
            | Error::ZeroActual { .. }
            | Error::FoldPlan(_)
            | Error::Aggregation(_)
            | Error::Scenario(_)
            | Error::Misalignment(_)
            | Error::ModelFormat { .. }
            | Error::Io { .. } => 3,
            Error::Shape { .. } | Error::NonFinite(_) | Error::Diverged { .. } => 4,
            Error::Fold { source, .. } => source.exit_code(),
        }
    }
}
