use thiserror::Error;

/// Errors raised by the numerical kernels, the samplers and the detectors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{func}: argument out of domain ({detail})")]
    Domain { func: &'static str, detail: String },

    #[error("{func}: no convergence after {terms} terms")]
    NonConvergence { func: &'static str, terms: usize },

    #[error("grid too coarse: plaquette at ({x:.4}, {y:.4}) has winding {winding}")]
    Resolution { x: f64, y: f64, winding: i64 },

    #[error("circle of radius {radius} passes too close to a zero of the field")]
    Interpolation { radius: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}
