//! Tabulated radial curves.

use rayon::prelude::*;

use super::densities::{densities, phase_integral, DELTA_IRW};
use super::excess::vortex_excess;
use super::isotropic::{isotropic_charge_correlation, isotropic_like_unlike, number_correlation_asymptote};
use super::nearest::nearest_vortex_pdf;
use crate::error::{Error, Result};
use crate::flux::FluxParameter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Rho,
    Delta,
    DeltaPlus,
    DeltaMinus,
    PhaseIntegral,
    Excess,
    /// Number correlation g; only produced by estimators.
    G,
    GS,
    GPlus,
    GMinus,
    NearestVortexPdf,
}

impl Quantity {
    pub const ALL: [Quantity; 11] = [
        Quantity::Rho,
        Quantity::Delta,
        Quantity::DeltaPlus,
        Quantity::DeltaMinus,
        Quantity::PhaseIntegral,
        Quantity::Excess,
        Quantity::G,
        Quantity::GS,
        Quantity::GPlus,
        Quantity::GMinus,
        Quantity::NearestVortexPdf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Rho => "rho",
            Quantity::Delta => "delta",
            Quantity::DeltaPlus => "delta_plus",
            Quantity::DeltaMinus => "delta_minus",
            Quantity::PhaseIntegral => "phase_integral",
            Quantity::Excess => "excess",
            Quantity::G => "g",
            Quantity::GS => "g_s",
            Quantity::GPlus => "g_plus",
            Quantity::GMinus => "g_minus",
            Quantity::NearestVortexPdf => "nearest_vortex_pdf",
        }
    }

    pub fn parse(s: &str) -> Option<Quantity> {
        Quantity::ALL.into_iter().find(|q| q.name() == s)
    }
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    Raw,
    PerDeltaIrw,
}

impl Normalization {
    pub fn name(self) -> &'static str {
        match self {
            Normalization::Raw => "raw",
            Normalization::PerDeltaIrw => "per_delta_irw",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadialCurve {
    pub quantity: Quantity,
    pub beta_or_alpha: f64,
    pub samples: Vec<(f64, f64)>,
    pub normalization: Normalization,
}

impl RadialCurve {
    /// Builds a curve after checking R > 0 strictly increasing and the sign
    /// constraints on Δ and Δ±.
    pub fn new(
        quantity: Quantity,
        beta_or_alpha: f64,
        samples: Vec<(f64, f64)>,
        normalization: Normalization,
    ) -> Result<Self> {
        let mut prev = 0.0;
        for &(r, v) in &samples {
            if !(r > prev) {
                return Err(Error::InvalidParameter(format!(
                    "radii must be positive and strictly increasing (at R = {r})"
                )));
            }
            prev = r;
            let nonneg = matches!(quantity, Quantity::Delta | Quantity::DeltaPlus | Quantity::DeltaMinus);
            // Δ± may dip below zero by rounding where ρ ≈ Δ.
            if nonneg && v < -1e-12 {
                return Err(Error::InvalidParameter(format!("{quantity} must be non-negative, got {v} at R = {r}")));
            }
        }
        Ok(RadialCurve {
            quantity,
            beta_or_alpha,
            samples,
            normalization,
        })
    }

    pub fn radii(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.0)
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.1)
    }
}

/// Evenly spaced radii r_lo, …, r_hi.
pub fn linear_grid(r_lo: f64, r_hi: f64, points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![r_lo];
    }
    (0..points)
        .map(|i| r_lo + (r_hi - r_lo) * i as f64 / (points - 1) as f64)
        .collect()
}

fn evaluate(q: Quantity, flux: FluxParameter, r: f64, norm: Normalization) -> Result<f64> {
    let scale = match norm {
        Normalization::Raw => 1.0,
        Normalization::PerDeltaIrw => 1.0 / DELTA_IRW,
    };
    Ok(match q {
        Quantity::Rho => densities(flux, r)?.0 * scale,
        Quantity::Delta => densities(flux, r)?.1 * scale,
        // Δ± are normalized by construction.
        Quantity::DeltaPlus | Quantity::DeltaMinus => {
            let (rho, delta) = densities(flux, r)?;
            let sign = if q == Quantity::DeltaPlus { 1.0 } else { -1.0 };
            (delta + sign * rho) / (2.0 * DELTA_IRW)
        }
        Quantity::PhaseIntegral => phase_integral(flux, r)?,
        Quantity::Excess => vortex_excess(flux, r)?,
        Quantity::G => number_correlation_asymptote(r),
        Quantity::GS => isotropic_charge_correlation(r)?,
        Quantity::GPlus => isotropic_like_unlike(r, number_correlation_asymptote(r))?.0,
        Quantity::GMinus => isotropic_like_unlike(r, number_correlation_asymptote(r))?.1,
        Quantity::NearestVortexPdf => nearest_vortex_pdf(flux.beta(), r)?,
    })
}

/// Tabulates `quantity` at the given radii in parallel; the output order is
/// that of `radii`.
///
/// g± use the asymptotic number correlation, so they are meaningful only at
/// large R.
pub fn tabulate(quantity: Quantity, flux: FluxParameter, radii: &[f64], norm: Normalization) -> Result<RadialCurve> {
    let samples = radii
        .par_iter()
        .map(|&r| evaluate(quantity, flux, r, norm).map(|v| (r, v)))
        .collect::<Result<Vec<_>>>()?;
    let tag = match quantity {
        Quantity::PhaseIntegral => flux.alpha(),
        _ => flux.beta(),
    };
    let norm = match quantity {
        Quantity::DeltaPlus | Quantity::DeltaMinus => Normalization::PerDeltaIrw,
        Quantity::Rho | Quantity::Delta => norm,
        _ => Normalization::Raw,
    };
    RadialCurve::new(quantity, tag, samples, norm)
}
