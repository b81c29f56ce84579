use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::Accuracy;
use super::gamma;
use crate::error::{domain, Error, Result};

/// A finite f64 as m·2^e with integer m.
fn decompose(v: f64) -> (BigInt, i64) {
    if v == 0.0 {
        return (BigInt::zero(), 0);
    }
    let bits = v.to_bits();
    let sign = if bits >> 63 == 0 { 1i64 } else { -1 };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mant, e) = if exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp - 1075)
    };
    let tz = mant.trailing_zeros() as i64;
    (BigInt::from(sign) * BigInt::from(mant >> tz), e + tz)
}

/// v·2^e without intermediate overflow or underflow.
fn ldexp(mut v: f64, mut e: i64) -> f64 {
    let big = 2f64.powi(600);
    let small = 2f64.powi(-600);
    while e > 600 {
        v *= big;
        e -= 600;
    }
    while e < -600 {
        v *= small;
        e += 600;
    }
    v * 2f64.powi(e as i32)
}

fn bigint_to_f64(v: &BigInt, scale_bits: i64) -> f64 {
    let bits = v.bits() as i64;
    let shift = (bits - 64).max(0);
    let head = (v >> shift as usize).to_f64().unwrap_or(0.0);
    ldexp(head, shift - scale_bits)
}

fn is_nonpositive_integer(b: f64) -> bool {
    b <= 0.0 && b.fract() == 0.0
}

/// ₂F₃(a₁, a₂; b₁, b₂, b₃; z) by its defining series.
///
/// For z = −x² the terms grow to about e^{2x}/(2πx) before the alternating sum
/// collapses to O(1), so the series is accumulated exactly in big-integer fixed
/// point with a precision sized from the largest term; only the final value is
/// rounded to f64.
pub fn hyp2f3(a1: f64, a2: f64, b1: f64, b2: f64, b3: f64, z: f64, acc: &Accuracy) -> Result<f64> {
    let params = [a1, a2, b1, b2, b3, z];
    if params.iter().any(|p| !p.is_finite()) {
        return Err(domain("hyp2f3", "parameters must be finite"));
    }
    if [b1, b2, b3].iter().any(|&b| is_nonpositive_integer(b)) {
        return Err(domain("hyp2f3", "lower parameter is a non-positive integer"));
    }
    if z == 0.0 {
        return Ok(1.0);
    }

    // Pass 1 (f64, log space): locate the largest term and the stopping index.
    let ratio = |k: f64| (a1 + k) * (a2 + k) * z / ((b1 + k) * (b2 + k) * (b3 + k) * (k + 1.0));
    let mut log_term = 0.0f64;
    let mut log_max = 0.0f64;
    let mut terms = 0usize;
    let target = acc.rel_tol().min(1e-17).ln() - 5.0;
    loop {
        if terms >= acc.max_terms() {
            return Err(Error::NonConvergence {
                func: "hyp2f3",
                terms,
            });
        }
        let r = ratio(terms as f64);
        terms += 1;
        if r == 0.0 {
            break;
        }
        log_term += r.abs().ln();
        log_max = log_max.max(log_term);
        // Past the peak with terms decreasing: stop once negligible.
        if r.abs() < 1.0 && log_term < target - (1.0 + z.abs()).ln() {
            break;
        }
    }

    // Pass 2: exact fixed-point accumulation.
    let extra_bits = (log_max / std::f64::consts::LN_2).ceil().max(0.0) as i64;
    let prec = 128 + 2 * extra_bits;

    let (a1m, a1e) = decompose(a1);
    let (a2m, a2e) = decompose(a2);
    let (b1m, b1e) = decompose(b1);
    let (b2m, b2e) = decompose(b2);
    let (b3m, b3e) = decompose(b3);
    let (zm, ze) = decompose(z);
    // Common denominator 2^s for every parameter.
    let s = [a1e, a2e, b1e, b2e, b3e].iter().map(|e| (-e).max(0)).max().unwrap_or(0);
    let scaled = |m: &BigInt, e: i64| -> BigInt { m << ((e + s) as usize) };
    let (a1i, a2i) = (scaled(&a1m, a1e), scaled(&a2m, a2e));
    let (b1i, b2i, b3i) = (scaled(&b1m, b1e), scaled(&b2m, b2e), scaled(&b3m, b3e));
    let one = BigInt::from(1) << (s as usize);
    let z_num = if ze >= 0 { zm.clone() << (ze as usize) } else { zm.clone() };
    let z_den_shift = if ze < 0 { (-ze) as usize } else { 0 };

    let mut term = BigInt::from(1) << (prec as usize);
    let mut sum = term.clone();
    let mut k_scaled = BigInt::zero();
    for k in 0..terms {
        let num = (&a1i + &k_scaled) * (&a2i + &k_scaled) * &one * &z_num;
        let den = ((&b1i + &k_scaled) * (&b2i + &k_scaled) * (&b3i + &k_scaled) * BigInt::from(k + 1))
            << z_den_shift;
        term = term * num / den;
        if term.is_zero() {
            break;
        }
        sum += &term;
        k_scaled += &one;
    }
    Ok(bigint_to_f64(&sum, prec))
}

/// Γ(x) for any non-pole x, by reflection below ½.
fn gamma_signed(x: f64) -> Result<f64> {
    if x > 0.5 {
        return gamma(x);
    }
    let s = (std::f64::consts::PI * x).sin();
    if s == 0.0 {
        return Err(domain("gamma", format!("pole at {x}")));
    }
    Ok(std::f64::consts::PI / (s * gamma(1.0 - x)?))
}

fn series_2f1(a: f64, b: f64, c: f64, z: f64, acc: &Accuracy) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..acc.max_terms() {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term.abs() <= acc.rel_tol() * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        func: "hyp2f1",
        terms: acc.max_terms(),
    })
}

/// ₂F₁(a, b; c; z) for z ∈ [0, 1).
///
/// Plain series for z ≤ ½. Above 0.9 with c − a − b away from an integer, the
/// connection formula to 1 − z. Otherwise, when a or b equals 1 (the only
/// family the model needs), Gauss's continued fraction for F(1, b; c; z).
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64, acc: &Accuracy) -> Result<f64> {
    if !(c > 0.0) {
        return Err(domain("hyp2f1", format!("c must be > 0, got {c}")));
    }
    if !(0.0..1.0).contains(&z) {
        return Err(domain("hyp2f1", format!("z must lie in [0, 1), got {z}")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    let s = c - a - b;
    if z > 0.9 && (s - s.round()).abs() > 1e-3 && a > 0.0 && b > 0.0 {
        let w = 1.0 - z;
        let g = gamma(c)?;
        let head = g * gamma_signed(s)? / (gamma_signed(c - a)? * gamma_signed(c - b)?);
        let tail = g * gamma_signed(-s)? / (gamma(a)? * gamma(b)?);
        return Ok(head * series_2f1(a, b, 1.0 - s, w, acc)?
            + w.powf(s) * tail * series_2f1(c - a, c - b, s + 1.0, w, acc)?);
    }
    if z > 0.5 {
        if a == 1.0 {
            return gauss_cf_unit_a(b, c, z, acc);
        }
        if b == 1.0 {
            return gauss_cf_unit_a(a, c, z, acc);
        }
    }
    series_2f1(a, b, c, z, acc)
}

/// F(1, b; c; z) = 1/(1 − d₁z/(1 − d₂z/(1 − …))), the Gauss continued fraction
/// for F(a+1, b; c+1; z)/F(a, b; c; z) taken at a = 0, c → c − 1.
fn gauss_cf_unit_a(b: f64, c: f64, z: f64, acc: &Accuracy) -> Result<f64> {
    let a0 = 0.0;
    let c0 = c - 1.0;
    let coeff = |j: usize| -> f64 {
        let m = (j / 2) as f64;
        if j % 2 == 1 {
            (a0 - c0 - m) * (b + m) / ((c0 + 2.0 * m) * (c0 + 2.0 * m + 1.0))
        } else {
            (b - c0 - m) * (a0 + m) / ((c0 + 2.0 * m - 1.0) * (c0 + 2.0 * m))
        }
    };
    // g = 1 + k1 z/(1 + k2 z/(1 + ...)), F = 1/g.
    const TINY: f64 = 1e-300;
    let mut g = 1.0;
    let mut cc = g;
    let mut d = 0.0;
    let tol = acc.rel_tol().max(1e-16);
    for j in 1..acc.max_terms() {
        let aj = coeff(j) * z;
        d = 1.0 + aj * d;
        if d.abs() < TINY {
            d = TINY;
        }
        cc = 1.0 + aj / cc;
        if cc.abs() < TINY {
            cc = TINY;
        }
        d = 1.0 / d;
        let del = cc * d;
        g *= del;
        if (del - 1.0).abs() < tol {
            return Ok(1.0 / g);
        }
    }
    Err(Error::NonConvergence {
        func: "hyp2f1 (continued fraction)",
        terms: acc.max_terms(),
    })
}
