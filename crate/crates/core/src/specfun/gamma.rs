use crate::error::{domain, Result};

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Lanczos on [1, 2], where the approximation is at its most accurate.
fn lanczos_unit(x: f64) -> f64 {
    let z = x - 1.0;
    let mut s = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * s
}

/// Γ(x) for x > 0.
///
/// The argument is shifted into [1, 2] and the recurrence Γ(x+1) = xΓ(x) is
/// applied as an explicit product, which keeps the relative error at a few ulp
/// instead of the ~x·ε that a direct large-argument Lanczos evaluation incurs.
pub fn gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(domain("gamma", format!("x must be > 0, got {x}")));
    }
    if x > 171.7 {
        return Ok(f64::INFINITY);
    }
    if x.fract() == 0.0 {
        return Ok((2..x as u64).fold(1.0, |acc, k| acc * k as f64));
    }
    if x < 1.0 {
        // Γ(x) = Γ(x+1)/x; x+1 is exact enough for x not tiny, and for tiny x
        // the leading 1/x dominates anyway.
        return Ok(lanczos_unit(x + 1.0) / x);
    }
    let mut y = x;
    let mut prod = 1.0;
    while y > 2.0 {
        y -= 1.0;
        prod *= y;
    }
    Ok(prod * lanczos_unit(y))
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(domain("ln_gamma", format!("x must be > 0, got {x}")));
    }
    if x < 30.0 {
        return Ok(gamma(x)?.ln());
    }
    // Stirling series with four correction terms; |error| < 1e-17 for x ≥ 30.
    let r = 1.0 / x;
    let r2 = r * r;
    let series = r * (1.0 / 12.0 - r2 * (1.0 / 360.0 - r2 * (1.0 / 1260.0 - r2 / 1680.0)));
    Ok((x - 0.5) * x.ln() - x + 0.5 * (2.0 * std::f64::consts::PI).ln() + series)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((gamma(0.5).unwrap() / sqrt_pi - 1.0).abs() < 1e-15);
        assert!((gamma(5.0).unwrap() - 24.0).abs() < 1e-13);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(gamma(0.0).is_err());
        assert!(gamma(-1.5).is_err());
        assert!(ln_gamma(-1.0).is_err());
    }

    #[test]
    fn ln_gamma_matches_gamma_at_switch() {
        for &x in &[29.5, 30.0, 30.5, 45.0] {
            let direct = gamma(x).unwrap().ln();
            assert!((ln_gamma(x).unwrap() - direct).abs() < 1e-13 * direct.abs());
        }
    }
}
