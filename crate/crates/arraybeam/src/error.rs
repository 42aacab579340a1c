//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by geometry construction, beamforming and analysis routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or grid parameter violates its invariant.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// Geometric degeneracy (coincident points, collapsed rings, ...).
    #[error("geometry error: {0}")]
    Geometry(String),
    /// A caller-side contract was violated (empty input, mismatched
    /// dimensionality, non-antisymmetric matrix, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// Least-squares fitting failed or the sample set is degenerate.
    #[error("fit error: {0}")]
    Fit(String),
}

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
    pub fn geometry(msg: impl Into<String>) -> Self {
        Error::Geometry(msg.into())
    }
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
    pub fn fit(msg: impl Into<String>) -> Self {
        Error::Fit(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
