//! Scalar special-function kernels: Gamma, fractional-order Bessel functions,
//! the two hypergeometric families the model needs, and the Bessel tail sum
//! A_ν(x) = Σ_{j≥1} J²_{j+ν}(x).

mod bessel;
mod gamma;
mod hyper;
mod tail;

pub(crate) use bessel::OrderTable;
pub use bessel::{bessel_j, bessel_j_batch, bessel_j_prime, truncation_order, BesselLadder};
pub use gamma::{gamma, ln_gamma};
pub use hyper::{hyp2f1, hyp2f3};
pub use tail::{bessel_tail_sum, tail_sum_direct, tail_sum_hypergeometric, X_SWITCH};

use crate::error::{Error, Result};

/// Tolerance and term budget for series evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Accuracy {
    rel_tol: f64,
    max_terms: usize,
}

impl Accuracy {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol <= 1e-6) {
            return Err(Error::InvalidParameter(format!(
                "rel_tol must lie in (0, 1e-6], got {rel_tol}"
            )));
        }
        if max_terms < 50 {
            return Err(Error::InvalidParameter(format!(
                "max_terms must be at least 50, got {max_terms}"
            )));
        }
        Ok(Accuracy { rel_tol, max_terms })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for Accuracy {
    fn default() -> Self {
        Accuracy {
            rel_tol: 1e-16,
            max_terms: 5000,
        }
    }
}

/// A validated Bessel order ν ≥ −1.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu < -1.0 {
            return Err(crate::error::domain(
                "BesselOrder",
                format!("order must be finite and >= -1, got {nu}"),
            ));
        }
        Ok(BesselOrder(nu))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for BesselOrder {
    type Error = Error;

    fn try_from(nu: f64) -> Result<Self> {
        BesselOrder::new(nu)
    }
}
