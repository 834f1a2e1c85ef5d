//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A sampling grid is too coarse for the requested bandwidth.
    #[error("grid of {grid} points is too small: need at least {required} for this bandwidth")]
    GridTooSmall { grid: usize, required: usize },

    /// A parameter is outside its admissible domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The circular mean direction is undefined (|I| too small).
    #[error("mean direction undefined: |∫ e^{{iθ}} P(θ) dθ| = {magnitude:.3e} is below 1e-12")]
    UndefinedDirection { magnitude: f64 },

    /// A moment was requested on a state whose mean is not centered at zero.
    #[error("{which} = {value:.3e} is not centered at 0 (tolerance 1e-6); shift the state first")]
    NotCentered { which: &'static str, value: f64 },

    /// An operation that requires a unit-norm state received something else.
    #[error("state is not normalized: ‖ψ‖ = {norm}")]
    NotNormalized { norm: f64 },

    /// A non-finite value showed up where a finite one is required.
    #[error("non-finite value in {context}")]
    NonFinite { context: String },

    /// Growth classification of an ε-net failed at a specific grid point.
    #[error("net classification failed: non-finite sup at ε = {eps}, derivative order {order}")]
    NetClassification { eps: f64, order: u32 },

    /// A coefficient generator could not be certified as slow growth.
    #[error("could not classify growth of '{label}': tail evidence is inconclusive")]
    Unclassifiable { label: String },

    /// Command-line / configuration errors.
    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
