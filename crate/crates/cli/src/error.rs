use thiserror::Error;

use qtf_core::QtfError;

/// CLI failures, split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, bad config or an out-of-domain parameter. Exit 1.
    #[error("{0}")]
    Usage(String),
    /// Missing or unusable input data. Exit 2.
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }

    /// Parameter problems are usage errors; anything about the data itself is
    /// a data error.
    pub fn from_core(err: QtfError) -> Self {
        match err {
            QtfError::Domain { .. } | QtfError::Config(_) => CliError::Usage(err.to_string()),
            QtfError::Undecodable | QtfError::NoValidRows { .. } | QtfError::EmptyDataset => {
                CliError::Data(err.to_string())
            }
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
