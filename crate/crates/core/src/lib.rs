//! Random-wave model of the Aharonov–Bohm effect.
//!
//! Gaussian random superpositions of Aharonov–Bohm partial waves carry phase
//! vortices whose statistics near the flux line differ from the isotropic
//! random wave. This crate evaluates the exact ensemble averages (charge and
//! vortex densities, phase integrals, nearest-vortex law, vortex excess) and
//! checks them against Monte Carlo ensembles with explicit vortex detection.
//!
//! Radii are dimensionless, R = kr.

pub mod analytics;
pub mod cli;
pub mod error;
pub mod flux;
pub mod mc;
pub mod moments;
pub mod quad;
pub mod specfun;
pub mod synthesis;
pub mod vortices;

pub use error::{Error, Result};
pub use flux::FluxParameter;
