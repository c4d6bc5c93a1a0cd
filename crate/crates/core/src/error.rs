//! Error types shared across the crate.

use thiserror::Error;

/// Failures while reading, validating or generating landing data and
/// configuration files.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// A CSV or config line that does not conform to the schema. Rows are
    /// 1-based and include the header line so they match editor line numbers.
    #[error("schema error at line {line}: {reason}")]
    Schema { line: usize, reason: String },

    /// Structural inconsistency spanning several rows (mixed horizons,
    /// duplicate ids, non-constant per-landing scalars).
    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Fold request that does not fit in the database.
    #[error("fold capacity exceeded: {folds} folds of size {test_size} need {needed} landings, database has {available}")]
    FoldCapacity {
        folds: usize,
        test_size: usize,
        needed: usize,
        available: usize,
    },
}

impl DataError {
    pub fn schema(line: usize, reason: impl Into<String>) -> Self {
        DataError::Schema {
            line,
            reason: reason.into(),
        }
    }
}

/// Numeric failures in the linear-algebra and metric layers.
#[derive(Debug, Error)]
pub enum NumericError {
    /// Cholesky pivot failure: the matrix is not positive definite even
    /// after jitter. During hyperparameter search this is routine (the
    /// optimizer treats the objective as -inf); anywhere else it signals a
    /// genuinely pathological input.
    #[error("matrix not positive definite (pivot {pivot} of {size})")]
    NotPositiveDefinite { pivot: usize, size: usize },

    /// A relative profile error was requested over a range where the
    /// measured profile has zero norm.
    #[error("profile has zero norm over t in [{start}, {end}]; relative error undefined")]
    ZeroNormRange { start: usize, end: usize },

    #[error("non-finite value in {context}")]
    NonFinite { context: String },

    /// Posterior variance came out negative beyond round-off tolerance.
    #[error("negative posterior variance {value} at index {index}")]
    NegativeVariance { index: usize, value: f64 },
}

/// Failures around fitted-model artifacts: serialization, integrity and
/// shape mismatches.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("model file is not valid JSON: {0}")]
    Json(String),

    #[error("unsupported model format_version {found} (expected {expected})")]
    Version { found: u32, expected: u32 },

    #[error("model is inconsistent: {0}")]
    Invalid(String),

    /// The supplied training database does not match the digest stored in
    /// the model file.
    #[error("training-data digest mismatch: model was fitted on {expected}, got {found}")]
    DigestMismatch { expected: String, found: String },

    #[error("horizon mismatch: model has T={model}, inputs have T={input}")]
    HorizonMismatch { model: usize, input: usize },

    #[error(transparent)]
    Numeric(#[from] NumericError),
}
