use thiserror::Error;

/// Errors raised by the core computations.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum QtfError {
    /// An argument fell outside the domain of a formula.
    #[error("domain error: {name} = {value} ({reason})")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("input is not valid UTF-8 text")]
    Undecodable,

    #[error("no valid rows in input ({rows_read} read, all dropped)")]
    NoValidRows { rows_read: usize },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, QtfError>;

pub(crate) fn require_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(QtfError::Domain {
            name,
            value,
            reason: "must be finite",
        })
    }
}

pub(crate) fn require_non_negative(name: &'static str, value: f64) -> Result<f64> {
    require_finite(name, value)?;
    if value >= 0.0 {
        Ok(value)
    } else {
        Err(QtfError::Domain {
            name,
            value,
            reason: "must be >= 0",
        })
    }
}

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    require_finite(name, value)?;
    if value > 0.0 {
        Ok(value)
    } else {
        Err(QtfError::Domain {
            name,
            value,
            reason: "must be > 0",
        })
    }
}
