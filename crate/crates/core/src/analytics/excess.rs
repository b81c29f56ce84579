//! Radial integrals of the densities: total enclosed charge and vortex excess.
//!
//! Near the flux both densities behave like (1−2β) t/(πR²(1+t)²) with
//! t ∝ R^{2−4β}, so ∫₀^r 2πR ρ dR ≈ t(r)/(1+t(r)) with relative corrections
//! O(r^{4β}, r²). That analytic head is used below [`HEAD_RADIUS`]; up to R = 1
//! the integrals are taken in u = R^{2−4β}, which removes the R^{1−4β} endpoint
//! power, and beyond R = 1 in R itself.

use std::f64::consts::PI;

use super::densities::{charge_from, near_flux_ratio, vortex_from, DELTA_IRW};
use crate::error::{domain, Result};
use crate::flux::FluxParameter;
use crate::moments::moments;
use crate::quad::integrate;

/// Radius below which the analytic head replaces quadrature.
pub const HEAD_RADIUS: f64 = 1e-30;

const ABS_TOL: f64 = 1e-11;
const REL_TOL: f64 = 1e-11;

fn check_fractional(func: &'static str, beta: f64) -> Result<()> {
    if beta.abs() >= 0.5 - 1e-9 {
        return Err(domain(func, format!("needs |beta| < 1/2, got {beta}")));
    }
    Ok(())
}

/// ∫₀^r 2πR g(R) dR for an integrand with the flux-line behaviour above;
/// `density` returns g at (β ≥ 0 reduced) radius R.
fn radial_integral<F>(beta: f64, r: f64, density: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let b = beta.abs();
    let eval = |x: f64| density(x).unwrap_or(f64::NAN);
    let inner = r.min(1.0);
    let mut total = 0.0;
    if b > 0.0 {
        let t = near_flux_ratio(b, HEAD_RADIUS.min(inner))?;
        total += t / (1.0 + t);
    }
    if inner > HEAD_RADIUS {
        let p = 2.0 - 4.0 * b;
        let u0 = HEAD_RADIUS.powf(p);
        let u1 = inner.powf(p);
        let f = |u: f64| {
            let x = u.powf(1.0 / p);
            2.0 * PI * eval(x) * x.powf(4.0 * b) / p
        };
        total += check_finite(integrate(f, u0, u1, ABS_TOL, REL_TOL)?.value)?;
    }
    if r > 1.0 {
        let f = |x: f64| 2.0 * PI * x * eval(x);
        total += check_finite(integrate(f, 1.0, r, ABS_TOL, REL_TOL)?.value)?;
    }
    Ok(total)
}

fn check_finite(v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(domain("radial integral", "integrand evaluation failed"))
    }
}

/// Total charge of the vortices inside radius R (the flux charge excluded),
/// R c/a. Tends to β as R → ∞.
pub fn total_charge(flux: FluxParameter, r_max: f64) -> Result<f64> {
    if !(r_max >= 4.0 * PI) {
        return Err(domain("total_charge", format!("needs R_max >= 4pi, got {r_max}")));
    }
    let m = moments(flux, r_max)?;
    Ok(r_max * m.c / m.a)
}

/// 2π ∫₀^R R' ρ dR' by quadrature; equals R c/a for |β| < ½ (at β = ½ the
/// charge ½ sits at the flux point itself and ρ vanishes for R > 0).
pub fn total_charge_by_quadrature(flux: FluxParameter, r_max: f64) -> Result<f64> {
    let beta = flux.beta();
    check_fractional("total_charge_by_quadrature", beta)?;
    if beta == 0.0 {
        return Ok(0.0);
    }
    let reduced = FluxParameter::from_beta(beta.abs())?;
    let v = radial_integral(beta, r_max, |x| Ok(charge_from(&moments(reduced, x)?)))?;
    Ok(if beta < 0.0 { -v } else { v })
}

/// Vortex excess N(R, β) = ∫₀^R 2πR'(Δ − Δ_irw) dR' over the disk around the
/// flux, the flux point itself excluded.
pub fn vortex_excess(flux: FluxParameter, r: f64) -> Result<f64> {
    let beta = flux.beta();
    check_fractional("vortex_excess", beta)?;
    if !(r > 0.0) {
        return Err(domain("vortex_excess", format!("needs R > 0, got {r}")));
    }
    if beta == 0.0 {
        return Ok(0.0);
    }
    let reduced = FluxParameter::from_beta(beta.abs())?;
    let n = radial_integral(beta, r, |x| Ok(vortex_from(&moments(reduced, x)?)))?;
    Ok(n - PI * r * r * DELTA_IRW)
}

/// Mean excess N̄(β): the average of N(R, β) − sin(βπ) sin(2R)/2π over
/// R ∈ [2π, 4π], one full period of the leading oscillation.
pub fn mean_excess(flux: FluxParameter) -> Result<f64> {
    let beta = flux.beta();
    check_fractional("mean_excess", beta)?;
    if beta == 0.0 {
        return Ok(0.0);
    }
    let reduced = FluxParameter::from_beta(beta.abs())?;
    let (lo, hi) = (2.0 * PI, 4.0 * PI);
    let base = vortex_excess(flux, lo)?;
    // (1/2π) ∫_{2π}^{4π} (4π − R) 2πR (Δ − Δ_irw) dR; the sin(2R) term
    // averages to zero over the window.
    let f = |x: f64| {
        let d = moments(reduced, x).map(|m| vortex_from(&m)).unwrap_or(f64::NAN);
        (hi - x) * x * (d - DELTA_IRW)
    };
    let tail = check_finite(integrate(f, lo, hi, ABS_TOL, REL_TOL)?.value)?;
    Ok(base + tail)
}

/// Least-squares fit of log(R c/a) = log C + s log R on log-spaced radii in
/// [r_lo, r_hi]. Returns (s, C); near the flux s ≈ 2 − 4|β|.
pub fn phase_charge_power_law(flux: FluxParameter, r_lo: f64, r_hi: f64, points: usize) -> Result<(f64, f64)> {
    if !(r_lo > 0.0 && r_hi > r_lo) || points < 2 {
        return Err(domain("phase_charge_power_law", "needs 0 < r_lo < r_hi and >= 2 points"));
    }
    let mut xs = Vec::with_capacity(points);
    let mut ys = Vec::with_capacity(points);
    for i in 0..points {
        let r = r_lo * (r_hi / r_lo).powf(i as f64 / (points - 1) as f64);
        let m = moments(flux, r)?;
        let q = (r * m.c / m.a).abs();
        xs.push(r.ln());
        ys.push(q.ln());
    }
    let n = points as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    Ok((slope, (my - slope * mx).exp()))
}
