use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::flux::FluxParameter;
use crate::moments::{moments, MomentSet};
use crate::specfun::gamma;

/// Vortex density of the isotropic random wave, 1/4π in units R = kr.
pub const DELTA_IRW: f64 = 1.0 / (4.0 * PI);

/// The radial component of the mean phase gradient vanishes identically.
pub const MEAN_PHASE_GRADIENT_RADIAL: f64 = 0.0;

/// Reference constants of the isotropic ensemble.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsotropicConstants {
    pub delta_irw: f64,
}

impl Default for IsotropicConstants {
    fn default() -> Self {
        IsotropicConstants {
            delta_irw: DELTA_IRW,
        }
    }
}

pub(crate) fn charge_from(m: &MomentSet) -> f64 {
    m.cross() / (PI * m.a * m.a)
}

pub(crate) fn vortex_from(m: &MomentSet) -> f64 {
    let p = m.radial_det() * m.azimuthal_det();
    let x = m.cross();
    (x * x + p) / (2.0 * PI * m.a * m.a * p.sqrt())
}

/// Mean azimuthal phase gradient ⟨∂_θχ⟩/R = n/R + c/a.
///
/// The moments are taken at the fractional flux, so the integer part enters
/// only as the n/R circulation of the flux charge.
pub fn mean_phase_gradient_azimuthal(flux: FluxParameter, r: f64) -> Result<f64> {
    let m = moments(flux, r)?;
    Ok(flux.n() as f64 / r + m.c / m.a)
}

/// Topological charge density ρ(R, β) = (ae − bc)/(πa²).
pub fn charge_density(flux: FluxParameter, r: f64) -> Result<f64> {
    Ok(charge_from(&moments(flux, r)?))
}

/// Vortex density Δ(R, β).
pub fn vortex_density(flux: FluxParameter, r: f64) -> Result<f64> {
    Ok(vortex_from(&moments(flux, r)?))
}

/// Both densities from a single moment evaluation.
pub fn densities(flux: FluxParameter, r: f64) -> Result<(f64, f64)> {
    let m = moments(flux, r)?;
    Ok((charge_from(&m), vortex_from(&m)))
}

/// Normalized positive and negative vortex densities (Δ ± ρ)/(2Δ_irw).
pub fn signed_densities(flux: FluxParameter, r: f64) -> Result<(f64, f64)> {
    let (rho, delta) = densities(flux, r)?;
    Ok(((delta + rho) / (2.0 * DELTA_IRW), (delta - rho) / (2.0 * DELTA_IRW)))
}

/// Average phase integral I(R, α) = n + R c/a around a centred circle.
pub fn phase_integral(flux: FluxParameter, r: f64) -> Result<f64> {
    let m = moments(flux, r)?;
    Ok(flux.n() as f64 + r * m.c / m.a)
}

/// Large-R forms of ρ and Δ, valid for R ≳ 2π:
///
/// ```text
/// ρ ~ (1−2β) sin(βπ) sin(2R) / (2π² R²),   Δ ~ 1/4π + sin(βπ) cos(2R) / (2π² R)
/// ```
///
/// written for β ≥ 0; negative β follows by ρ → −ρ.
pub fn asymptotic_large_r(flux: FluxParameter, r: f64) -> Result<(f64, f64)> {
    if !(r >= 2.0 * PI) {
        return Err(domain("asymptotic_large_r", format!("needs R >= 2pi, got {r}")));
    }
    let beta = flux.beta();
    let b = beta.abs();
    let s = (b * PI).sin();
    let rho = (1.0 - 2.0 * b) * s * (2.0 * r).sin() / (2.0 * PI * PI * r * r);
    let delta = DELTA_IRW + s * (2.0 * r).cos() / (2.0 * PI * PI * r);
    Ok((if beta < 0.0 { -rho } else { rho }, delta))
}

/// Coefficients (c₁, c₂) of the small-R form ρ, Δ ≈ c₁ R^{−4β} − c₂ R^{2−8β}.
///
/// Expanding the exact moments gives ρ ≈ (1−2β) t / (πR²(1+t)²) with
/// t = Γ²(1+β)(R/2)^{2−4β}/Γ²(2−β), whose second term carries a single factor
/// (1−2β): c₂ = (1−2β)Γ⁴(1+β)/(2^{3−8β}πΓ⁴(2−β)).
pub fn small_r_coefficients(beta: f64) -> Result<(f64, f64)> {
    if !(beta > 0.0 && beta < 0.5) {
        return Err(domain("small_r_coefficients", format!("needs 0 < beta < 1/2, got {beta}")));
    }
    let ratio = gamma(1.0 + beta)? / gamma(2.0 - beta)?;
    let r2 = ratio * ratio;
    let c1 = (1.0 - 2.0 * beta) * r2 / (2f64.powf(2.0 - 4.0 * beta) * PI);
    let c2 = (1.0 - 2.0 * beta) * r2 * r2 / (2f64.powf(3.0 - 8.0 * beta) * PI);
    Ok((c1, c2))
}

/// Two-term small-R expansion shared by ρ and Δ, for 0 < β < ½.
pub fn expansion_small_r(flux: FluxParameter, r: f64) -> Result<f64> {
    let (c1, c2) = small_r_coefficients(flux.beta())?;
    let b = flux.beta();
    Ok(c1 * r.powf(-4.0 * b) - c2 * r.powf(2.0 - 8.0 * b))
}

/// t(R) = Γ²(1+β)(R/2)^{2−4β}/Γ²(2−β), the ratio governing the neighbourhood
/// of the flux line.
pub(crate) fn near_flux_ratio(beta: f64, r: f64) -> Result<f64> {
    let g = gamma(1.0 + beta)? / gamma(2.0 - beta)?;
    Ok(g * g * (0.5 * r).powf(2.0 - 4.0 * beta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flux(a: f64) -> FluxParameter {
        FluxParameter::new(a).unwrap()
    }

    #[test]
    fn integer_flux_is_isotropic() {
        for &r in &[0.3, 2.0, 11.0] {
            assert!(charge_density(flux(2.0), r).unwrap().abs() < 1e-12);
            assert!((vortex_density(flux(0.0), r).unwrap() - DELTA_IRW).abs() < 1e-12);
        }
    }

    #[test]
    fn half_flux_has_no_charge() {
        for &r in &[0.5, 3.0, 17.0] {
            assert!(charge_density(flux(0.5), r).unwrap().abs() < 1e-12);
            let g = mean_phase_gradient_azimuthal(flux(0.5), r).unwrap();
            assert!((g - 0.5 / r).abs() < 1e-10);
        }
    }

    #[test]
    fn asymptote_needs_large_radius() {
        assert!(asymptotic_large_r(flux(0.25), 6.0).is_err());
        let (rho, delta) = asymptotic_large_r(flux(0.0), 10.0).unwrap();
        assert_eq!(rho, 0.0);
        assert_eq!(delta, DELTA_IRW);
    }
}
