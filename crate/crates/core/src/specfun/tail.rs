use super::bessel::{bessel_j, truncation_order, BesselLadder};
use super::gamma::{gamma, ln_gamma};
use super::hyper::hyp2f3;
use super::Accuracy;
use crate::error::{domain, Result};

/// Above this argument A_ν(x) is summed directly instead of through ₂F₃.
pub const X_SWITCH: f64 = 30.0;

fn check(func: &'static str, nu: f64, x: f64) -> Result<()> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(domain(func, format!("order must be >= 0, got {nu}")));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(domain(func, format!("x must be finite and >= 0, got {x}")));
    }
    Ok(())
}

/// A_ν(x) = Σ_{j≥1} J²_{j+ν}(x).
pub fn bessel_tail_sum(nu: f64, x: f64, acc: &Accuracy) -> Result<f64> {
    check("bessel_tail_sum", nu, x)?;
    if x <= X_SWITCH {
        tail_sum_hypergeometric(nu, x, acc)
    } else {
        tail_sum_direct(nu, x)
    }
}

/// A_ν(x) = −½J²_ν(x) + (x/2)^{2ν}/(2Γ²(1+ν)) · ₂F₃(ν, ν+½; 1+ν, 1+ν, 1+2ν; −x²).
pub fn tail_sum_hypergeometric(nu: f64, x: f64, acc: &Accuracy) -> Result<f64> {
    check("tail_sum_hypergeometric", nu, x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let j = bessel_j(nu, x)?;
    let h = 0.5 * x;
    let pref = if nu == 0.0 {
        0.5
    } else if nu + 1.0 <= 170.0 {
        let g = gamma(1.0 + nu)?;
        0.5 * h.powf(2.0 * nu) / (g * g)
    } else {
        0.5 * (2.0 * nu * h.ln() - 2.0 * ln_gamma(1.0 + nu)?).exp()
    };
    let f = hyp2f3(nu, nu + 0.5, 1.0 + nu, 1.0 + nu, 1.0 + 2.0 * nu, -x * x, acc)?;
    Ok(pref * f - 0.5 * j * j)
}

/// A_ν(x) by summing J²_{j+ν}(x) over j = 1..L with the standard truncation.
pub fn tail_sum_direct(nu: f64, x: f64) -> Result<f64> {
    check("tail_sum_direct", nu, x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let l = truncation_order(x);
    let ladder = BesselLadder::new(nu, x, l)?;
    // Smallest terms first.
    Ok((1..=l).rev().map(|k| ladder.value(k).powi(2)).sum())
}
