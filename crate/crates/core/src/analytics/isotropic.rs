//! Vortex correlations of the isotropic (β = 0) ensemble.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::specfun::bessel_j;

/// Taylor coefficients of g_s in powers of R², from R⁰ to R²⁰, exact rationals
/// of the expansion of 4R⁻¹ d/dR[J₁²/(1 − J₀²)].
const SERIES: [f64; 11] = [
    -1.0 / 4.0,
    -7.0 / 288.0,
    -1.0 / 1536.0,
    799.0 / 8_294_400.0,
    31.0 / 2_211_840.0,
    278_521.0 / 312_134_860_800.0,
    68_827.0 / 4_280_706_662_400.0,
    -3_624_941.0 / 1_284_211_998_720_000.0,
    -4_421_419.0 / 12_785_043_898_368_000.0,
    -1_204_938_349.0 / 61_374_472_774_483_968_000.0,
    -1_210_450_823.0 / 4_374_326_059_563_220_992_000.0,
];

/// Below this radius the series replaces the closed form, whose quotient
/// loses digits to the cancellation in 1 − J₀².
const SERIES_BELOW: f64 = 1.0;

/// Charge correlation g_s(R) = 4R⁻¹ d/dR[J₁²/(1 − J₀²)].
///
/// The derivative is done analytically: with N = J₁², D = 1 − J₀²,
/// N' = 2J₁(J₀ − J₁/R) and D' = 2J₀J₁. g_s(0) = −¼.
pub fn isotropic_charge_correlation(r: f64) -> Result<f64> {
    if !(r >= 0.0) || !r.is_finite() {
        return Err(domain("isotropic_charge_correlation", format!("needs R >= 0, got {r}")));
    }
    if r <= SERIES_BELOW {
        let r2 = r * r;
        return Ok(SERIES.iter().rev().fold(0.0, |acc, &c| acc * r2 + c));
    }
    let j0 = bessel_j(0.0, r)?;
    let j1 = bessel_j(1.0, r)?;
    let n = j1 * j1;
    let d = 1.0 - j0 * j0;
    let dn = 2.0 * j1 * (j0 - j1 / r);
    let dd = 2.0 * j0 * j1;
    Ok(4.0 / r * (dn * d - n * dd) / (d * d))
}

/// The printed large-R form 8cos(2R)/(πR²).
pub fn charge_correlation_asymptote_printed(r: f64) -> f64 {
    8.0 * (2.0 * r).cos() / (PI * r * r)
}

/// Leading large-R term of the closed form itself, −8cos(2R)/(πR²).
///
/// With J₀ ~ √(2/πR) cos(R − π/4), J₁ ~ √(2/πR) sin(R − π/4) the quotient is
/// (1 − sin 2R)/(πR) to leading order, whose derivative gives the minus sign.
pub fn charge_correlation_asymptote(r: f64) -> f64 {
    -charge_correlation_asymptote_printed(r)
}

/// Large-R form of the number correlation, g ~ 1 + 4 sin(2R)/(πR).
pub fn number_correlation_asymptote(r: f64) -> f64 {
    1.0 + 4.0 * (2.0 * r).sin() / (PI * r)
}

/// Like and unlike charge correlations g± = ½(g ± g_s) for an externally
/// supplied number correlation g.
pub fn isotropic_like_unlike(r: f64, g_value: f64) -> Result<(f64, f64)> {
    let gs = isotropic_charge_correlation(r)?;
    Ok((0.5 * (g_value + gs), 0.5 * (g_value - gs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn branches_meet() {
        let a = isotropic_charge_correlation(SERIES_BELOW).unwrap();
        let j0 = bessel_j(0.0, 1.0).unwrap();
        let j1 = bessel_j(1.0, 1.0).unwrap();
        let (n, d) = (j1 * j1, 1.0 - j0 * j0);
        let b = 4.0 * (2.0 * j1 * (j0 - j1) * d - n * 2.0 * j0 * j1) / (d * d);
        assert!((a - b).abs() < 1e-11, "{a} {b}");
    }

    #[test]
    fn origin_limit() {
        assert_eq!(isotropic_charge_correlation(0.0).unwrap(), -0.25);
    }
}
