//! Run reports and the error-to-exit-code mapping.
//!
//! Exit codes: 0 every checked equality held, 1 a verification failed,
//! 2 usage or range error, 3 class-membership error, 4 arithmetic overflow.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use parsep_core::bijection::BijectionError;
use parsep_core::partition::PartitionError;
use parsep_core::qseries::SeriesError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    NotInClass(String),
    #[error("{0}")]
    Overflow(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::NotInClass(_) => 3,
            CliError::Overflow(_) => 4,
        }
    }
}

impl From<PartitionError> for CliError {
    fn from(e: PartitionError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<BijectionError> for CliError {
    fn from(e: BijectionError) -> Self {
        CliError::NotInClass(e.to_string())
    }
}

impl From<SeriesError> for CliError {
    fn from(e: SeriesError) -> Self {
        match e {
            SeriesError::IntegerOverflow => CliError::Overflow(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// What a command handler produces; `main` wraps it into a [`RunReport`] for
/// JSON mode or prints `text` as is.
pub struct CommandOutput {
    pub parameters: BTreeMap<String, String>,
    pub results: serde_json::Value,
    pub text: String,
    pub pass: bool,
}

impl CommandOutput {
    pub fn new(
        parameters: BTreeMap<String, String>,
        results: serde_json::Value,
        text: String,
        pass: bool,
    ) -> Self {
        CommandOutput {
            parameters,
            results,
            text,
            pass,
        }
    }
}

/// The JSON report. Struct fields are declared alphabetically and nested
/// objects use sorted maps, so serialization is key-stable.
#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub elapsed_ms: u128,
    pub parameters: BTreeMap<String, String>,
    pub pass: bool,
    pub results: serde_json::Value,
}

/// Convenience for assembling the `parameters` map.
pub fn params<const N: usize>(entries: [(&str, String); N]) -> BTreeMap<String, String> {
    entries
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}
