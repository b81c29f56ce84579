//! Distance from the flux line to the nearest vortex, in the two-mode
//! approximation valid as β → ½.
//!
//! With u = (R/2)^{2−4β} and G₁ = Γ(1+β), G₂ = Γ(2−β) the density becomes the
//! rational form G₁²G₂²/(G₂² + G₁²u)² du, which every integral below uses.

use crate::error::{domain, Result};
use crate::quad::integrate;
use crate::specfun::{gamma, hyp2f1, Accuracy};

fn check_beta(func: &'static str, beta: f64) -> Result<()> {
    if !(beta > 0.0 && beta < 0.5) {
        return Err(domain(func, format!("needs 0 < beta < 1/2, got {beta}")));
    }
    Ok(())
}

fn gammas(beta: f64) -> Result<(f64, f64)> {
    let g1 = gamma(1.0 + beta)?;
    let g2 = gamma(2.0 - beta)?;
    Ok((g1 * g1, g2 * g2))
}

/// P_β(R) = (1−2β)Γ²(1+β)Γ²(2−β)(R/2)^{1−4β} / (Γ²(2−β) + Γ²(1+β)(R/2)^{2−4β})².
pub fn nearest_vortex_pdf(beta: f64, r: f64) -> Result<f64> {
    check_beta("nearest_vortex_pdf", beta)?;
    if !(r > 0.0) {
        return Err(domain("nearest_vortex_pdf", format!("needs R > 0, got {r}")));
    }
    let (g1, g2) = gammas(beta)?;
    let h = 0.5 * r;
    let den = g2 + g1 * h.powf(2.0 - 4.0 * beta);
    Ok((1.0 - 2.0 * beta) * g1 * g2 * h.powf(1.0 - 4.0 * beta) / (den * den))
}

/// Cumulative distribution, G₁²u/(G₂² + G₁²u).
pub fn nearest_vortex_cdf(beta: f64, r: f64) -> Result<f64> {
    check_beta("nearest_vortex_cdf", beta)?;
    if !(r >= 0.0) {
        return Err(domain("nearest_vortex_cdf", format!("needs R >= 0, got {r}")));
    }
    let (g1, g2) = gammas(beta)?;
    let u = (0.5 * r).powf(2.0 - 4.0 * beta);
    Ok(g1 * u / (g2 + g1 * u))
}

/// Conditional mean of R_nv given R_nv < δ:
/// z δ (₂F₁(1, 1; 1 + 1/4ε; 1/(1+z)) − 1), ε = ½ − β,
/// z = 16^ε Γ²(3/2+ε) / (δ^{4ε} Γ²(3/2−ε)).
pub fn nearest_vortex_conditional_mean(beta: f64, delta: f64) -> Result<f64> {
    check_beta("nearest_vortex_conditional_mean", beta)?;
    if !(delta > 0.0) {
        return Err(domain("nearest_vortex_conditional_mean", format!("needs delta > 0, got {delta}")));
    }
    let eps = 0.5 - beta;
    let (g1, g2) = gammas(beta)?;
    let z = g2 / g1 * 16f64.powf(eps) / delta.powf(4.0 * eps);
    let f = hyp2f1(1.0, 1.0, 1.0 + 1.0 / (4.0 * eps), 1.0 / (1.0 + z), &Accuracy::default())?;
    Ok(z * delta * (f - 1.0))
}

/// ∫₀^upper R P_β(R) dR by quadrature in u.
pub fn nearest_vortex_partial_moment(beta: f64, upper: f64) -> Result<f64> {
    check_beta("nearest_vortex_partial_moment", beta)?;
    let (g1, g2) = gammas(beta)?;
    let p = 2.0 - 4.0 * beta;
    let u_max = (0.5 * upper).powf(p);
    let f = |u: f64| {
        let den = g2 + g1 * u;
        2.0 * u.powf(1.0 / p) * g1 * g2 / (den * den)
    };
    Ok(integrate(f, 0.0, u_max, 1e-15, 1e-13)?.value)
}

/// ∫₀^upper P_β(R) dR by quadrature in u.
pub fn nearest_vortex_probability(beta: f64, upper: f64) -> Result<f64> {
    check_beta("nearest_vortex_probability", beta)?;
    let (g1, g2) = gammas(beta)?;
    let u_max = if upper.is_infinite() {
        f64::INFINITY
    } else {
        (0.5 * upper).powf(2.0 - 4.0 * beta)
    };
    if u_max.is_infinite() {
        // Map u ∈ [0, ∞) to s = u/(1+u) ∈ [0, 1).
        let f = |s: f64| {
            let u = s / (1.0 - s);
            let den = g2 + g1 * u;
            g1 * g2 / (den * den) / ((1.0 - s) * (1.0 - s))
        };
        return Ok(integrate(f, 0.0, 1.0, 1e-15, 1e-13)?.value);
    }
    let f = |u: f64| {
        let den = g2 + g1 * u;
        g1 * g2 / (den * den)
    };
    Ok(integrate(f, 0.0, u_max, 1e-15, 1e-13)?.value)
}

/// The conditional mean by direct quadrature of R P_β and P_β over (0, δ).
pub fn nearest_vortex_conditional_mean_by_quadrature(beta: f64, delta: f64) -> Result<f64> {
    Ok(nearest_vortex_partial_moment(beta, delta)? / nearest_vortex_probability(beta, delta)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pdf_is_derivative_of_cdf() {
        let h = 1e-6;
        for &(b, r) in &[(0.3, 0.7), (0.45, 0.05), (0.1, 3.0)] {
            let fd = (nearest_vortex_cdf(b, r + h).unwrap() - nearest_vortex_cdf(b, r - h).unwrap()) / (2.0 * h);
            let p = nearest_vortex_pdf(b, r).unwrap();
            assert!((fd - p).abs() < 1e-7 * p.max(1.0));
        }
    }

    #[test]
    fn rejects_out_of_range_beta() {
        assert!(nearest_vortex_pdf(0.5, 1.0).is_err());
        assert!(nearest_vortex_conditional_mean(0.0, 1.0).is_err());
    }
}
