use crate::error::{Error, Result};

/// Dimensionless flux α split as α = n + β with n the nearest integer and
/// −½ < β ≤ ½ (β = ½ is preferred over −½).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxParameter {
    alpha: f64,
    n: i64,
    beta: f64,
}

impl FluxParameter {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha.abs() > 1e6 {
            return Err(Error::InvalidParameter(format!(
                "flux must be finite and moderate, got {alpha}"
            )));
        }
        let n = (alpha - 0.5).ceil();
        Ok(FluxParameter {
            alpha,
            n: n as i64,
            beta: alpha - n,
        })
    }

    /// Flux with n = 0 and the given fractional part.
    pub fn from_beta(beta: f64) -> Result<Self> {
        if !(beta > -0.5 && beta <= 0.5) {
            return Err(Error::InvalidParameter(format!(
                "fractional flux must lie in (-1/2, 1/2], got {beta}"
            )));
        }
        Self::new(beta)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The same fractional part with n = 0.
    pub fn reduced(&self) -> FluxParameter {
        FluxParameter {
            alpha: self.beta,
            n: 0,
            beta: self.beta,
        }
    }

    pub fn is_integer(&self) -> bool {
        self.beta == 0.0
    }
}
