use super::gamma::{gamma, ln_gamma};
use super::BesselOrder;
use crate::error::{domain, Error, Result};
use crate::flux::FluxParameter;

const EPS: f64 = 1e-16;
const TINY: f64 = 1e-300;
const MAX_CF_TERMS: usize = 100_000;
const RESCALE_ABOVE: f64 = 1e250;

/// Number of partial waves kept on each side of the central order at radius `x`:
/// L = ceil(x + 12 (x+1)^{1/3} + 20).
pub fn truncation_order(x: f64) -> usize {
    let x = x.max(0.0);
    (x + 12.0 * (x + 1.0).cbrt() + 20.0).ceil() as usize
}

fn check_range(func: &'static str, nu: f64, x: f64) -> Result<()> {
    BesselOrder::new(nu)?;
    if !(0.0..=500.0).contains(&x) {
        return Err(domain(func, format!("x must lie in [0, 500], got {x}")));
    }
    if nu > x + 200.0 {
        return Err(domain(func, format!("order {nu} exceeds x + 200 at x = {x}")));
    }
    Ok(())
}

/// Bessel function of the first kind J_ν(x) for real ν ≥ −1 and 0 ≤ x ≤ 500.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check_range("bessel_j", nu, x)?;
    if x == 0.0 {
        return if nu == 0.0 {
            Ok(1.0)
        } else if nu > 0.0 || nu == -1.0 {
            Ok(0.0)
        } else {
            Err(domain("bessel_j", format!("J_{nu}(0) is singular")))
        };
    }
    if nu < 0.0 {
        if nu == -1.0 {
            return Ok(-j_nonneg(1.0, x)?);
        }
        let j1 = j_nonneg(nu + 1.0, x)?;
        let j2 = j_nonneg(nu + 2.0, x)?;
        return Ok(2.0 * (nu + 1.0) / x * j1 - j2);
    }
    j_nonneg(nu, x)
}

/// J'_ν(x), from the recurrence J'_ν = (ν/x) J_ν − J_{ν+1}.
pub fn bessel_j_prime(nu: f64, x: f64) -> Result<f64> {
    check_range("bessel_j_prime", nu, x)?;
    if nu < 0.0 {
        return Err(domain("bessel_j_prime", format!("order must be >= 0, got {nu}")));
    }
    if x == 0.0 {
        return if nu == 0.0 || nu >= 1.0 {
            // J'_0(0) = 0, J'_1(0) = 1/2, J'_ν(0) = 0 for ν > 1.
            Ok(if nu == 1.0 { 0.5 } else { 0.0 })
        } else {
            Err(domain("bessel_j_prime", format!("J'_{nu}(0) is singular")))
        };
    }
    if nu == 0.0 {
        return Ok(-j_nonneg(1.0, x)?);
    }
    Ok(nu / x * j_nonneg(nu, x)? - j_nonneg(nu + 1.0, x)?)
}

fn j_nonneg(nu: f64, x: f64) -> Result<f64> {
    if x <= 2.0 || x * x <= 4.0 * (nu + 1.0) {
        Ok(j_series(nu, x))
    } else if let Some(j) = j_hankel(nu, x) {
        Ok(j)
    } else {
        j_steed(nu, x)
    }
}

/// Hankel's asymptotic expansion, accepted only when its smallest term is
/// below rounding (x ≳ 20 for small ν; any x > 2 for half-integer ν, where it
/// terminates). The phase is assembled from sin x and cos x rather than
/// reduced as a single angle, which keeps the relative error small next to
/// zeros.
fn j_hankel(nu: f64, x: f64) -> Option<f64> {
    if 4.0 * nu * nu > x * x {
        return None;
    }
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0f64;
    let mut converged = false;
    for k in 1..400 {
        let odd = (2 * k - 1) as f64;
        let next = term * (mu - odd * odd) / (k as f64 * 8.0 * x);
        if next == 0.0 {
            converged = true;
            break;
        }
        if next.abs() > term.abs() {
            break;
        }
        term = next;
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-18 {
            converged = true;
            break;
        }
    }
    if !converged {
        return None;
    }
    let phi = (0.5 * nu + 0.25) * std::f64::consts::PI;
    let (sx, cx) = x.sin_cos();
    let (sp, cp) = phi.sin_cos();
    let cos_w = cx * cp + sx * sp;
    let sin_w = sx * cp - cx * sp;
    Some((2.0 / (std::f64::consts::PI * x)).sqrt() * (p * cos_w - q * sin_w))
}

/// Ascending series. Terms alternate with the largest one bounded by
/// e^{x²/(4(ν+1))}, so it is only used where that factor is small.
fn j_series(nu: f64, x: f64) -> f64 {
    let h = 0.5 * x;
    let q = -h * h;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * (nu + k));
        sum += term;
        if term.abs() <= EPS * 0.1 * sum.abs() {
            break;
        }
        k += 1.0;
    }
    series_prefactor(nu, h) * sum
}

/// (x/2)^ν / Γ(ν+1).
fn series_prefactor(nu: f64, h: f64) -> f64 {
    if nu == 0.0 {
        return 1.0;
    }
    if nu + 1.0 <= 170.0 {
        let p = h.powf(nu);
        if p.is_normal() {
            if let Ok(g) = gamma(nu + 1.0) {
                if g.is_finite() {
                    return p / g;
                }
            }
        }
    }
    let lg = ln_gamma(nu + 1.0).unwrap_or(f64::INFINITY);
    (nu * h.ln() - lg).exp()
}

/// Steed's method (Temme's variant) for x > 2: CF1 gives J'_ν/J_ν, downward
/// recurrence reaches |μ| ≤ ½, CF2 and the Wronskian fix the normalization.
fn j_steed(nu: f64, x: f64) -> Result<f64> {
    let nl = (nu + 0.5).floor().max(0.0);
    let xmu = nu - nl;
    let xi = 1.0 / x;
    let w = 2.0 * xi / std::f64::consts::PI;

    // CF1 for f_ν = J'_ν / J_ν, keeping track of the sign of J_ν.
    let mut isign = 1.0;
    let mut h = (nu * xi).max(TINY);
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    // Coefficients are recomputed from their index: accumulating them by
    // repeated addition drifts by O(n ε) over the ~x iterations needed.
    for i in 1..=MAX_CF_TERMS {
        let b = 2.0 * (nu + i as f64) / x;
        d = b - d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b - 1.0 / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            func: "bessel_j (CF1)",
            terms: MAX_CF_TERMS,
        });
    }

    // Downward recurrence from ν to μ with arbitrary starting normalization.
    let mut rjl_start = isign * 1e-30;
    let mut rjl = rjl_start;
    let mut rjpl = h * rjl;
    let steps = nl as usize;
    for k in 0..steps {
        let t = (nu - k as f64) / x * rjl + rjpl;
        rjpl = (nu - (k + 1) as f64) / x * t - rjl;
        rjl = t;
        if rjl.abs() > RESCALE_ABOVE {
            rjl /= RESCALE_ABOVE;
            rjpl /= RESCALE_ABOVE;
            rjl_start /= RESCALE_ABOVE;
        }
    }
    if rjl == 0.0 && rjpl == 0.0 {
        rjl = EPS;
    }

    // CF2 for p + iq = (J'_μ + iY'_μ)/(J_μ + iY_μ).
    let xmu2 = xmu * xmu;
    let mut a = 0.25 - xmu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    converged = false;
    for i in 2..MAX_CF_TERMS {
        a = (i as f64 - 0.5).powi(2) - xmu2;
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < TINY {
            dr = TINY;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < TINY {
            cr = TINY;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            func: "bessel_j (CF2)",
            terms: MAX_CF_TERMS,
        });
    }
    // J_μ² = W q / ((p − f)² + q²). Scaling by it in the form below avoids
    // dividing by the recurrence value, which may sit next to a zero of J_μ.
    let scale = (w * q).sqrt() / (p * rjl - rjpl).hypot(q * rjl);
    Ok(rjl_start * scale)
}

/// J_{ν+1}(x)/J_ν(x) by the continued fraction
/// 1/(2(ν+1)/x − 1/(2(ν+2)/x − …)), modified Lentz.
fn ratio_cf(nu: f64, x: f64) -> Result<f64> {
    // f = b1 - 1/(b2 - 1/(b3 - ...)) with b_k = 2(ν+k)/x; ratio = 1/f.
    let mut f = 2.0 * (nu + 1.0) / x;
    if f == 0.0 {
        f = TINY;
    }
    let mut c = f;
    let mut d = 0.0;
    for k in 2..MAX_CF_TERMS {
        let b = 2.0 * (nu + k as f64) / x;
        d = b - d;
        if d == 0.0 {
            d = TINY;
        }
        c = b - 1.0 / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let del = c * d;
        f *= del;
        if (del - 1.0).abs() < EPS {
            return Ok(1.0 / f);
        }
    }
    Err(Error::NonConvergence {
        func: "bessel ratio CF",
        terms: MAX_CF_TERMS,
    })
}

/// The values J_{μ+k}(x), k = 0..=k_max+1, along one order ladder.
///
/// Computed by backward recurrence from a continued-fraction start and
/// normalized at the first order ≥ x, where J is positive and free of zeros.
#[derive(Debug, Clone)]
pub struct BesselLadder {
    base: f64,
    x: f64,
    values: Vec<f64>,
}

impl BesselLadder {
    pub fn new(base: f64, x: f64, k_max: usize) -> Result<Self> {
        if !(base >= 0.0) {
            return Err(domain("BesselLadder", format!("base order must be >= 0, got {base}")));
        }
        if !(x >= 0.0) || !x.is_finite() {
            return Err(domain("BesselLadder", format!("x must be finite and >= 0, got {x}")));
        }
        let top = k_max + 1;
        let mut values = vec![0.0; top + 1];
        if x == 0.0 {
            if base == 0.0 {
                values[0] = 1.0;
            }
            return Ok(BesselLadder { base, x, values });
        }

        // Start far enough above both x and the requested top that the CF
        // converges quickly; the CF supplies the exact minimal-solution ratio.
        let start = top.max(x.ceil() as usize + 2);
        let r = ratio_cf(base + start as f64, x)?;
        let mut hi = r; // ∝ J_{start+1}
        let mut cur = 1.0; // ∝ J_{start}
        if start <= top {
            values[start] = cur;
            if start < top {
                values[start + 1] = hi;
            }
        }
        let mut k = start;
        while k > 0 {
            let lo = 2.0 * (base + k as f64) / x * cur - hi;
            hi = cur;
            cur = lo;
            k -= 1;
            if cur.abs() > RESCALE_ABOVE {
                cur /= RESCALE_ABOVE;
                hi /= RESCALE_ABOVE;
                for v in values.iter_mut().skip(k + 1) {
                    *v /= RESCALE_ABOVE;
                }
            }
            if k <= top {
                values[k] = cur;
            }
        }

        let anchor_k = ((x - base).ceil().max(0.0) as usize).min(top);
        let exact = bessel_j(base + anchor_k as f64, x.min(500.0))?;
        let raw = values[anchor_k];
        if raw == 0.0 || exact == 0.0 {
            // Everything underflows relative to the anchor; evaluate directly.
            for (k, v) in values.iter_mut().enumerate() {
                let nu = base + k as f64;
                *v = if nu <= x + 200.0 { bessel_j(nu, x)? } else { 0.0 };
            }
        } else {
            let s = exact / raw;
            for v in values.iter_mut() {
                *v *= s;
            }
        }
        Ok(BesselLadder { base, x, values })
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    /// Largest k for which both value and derivative are available.
    pub fn k_max(&self) -> usize {
        self.values.len() - 2
    }

    /// J_{base+k}(x).
    pub fn value(&self, k: usize) -> f64 {
        self.values[k]
    }

    /// J'_{base+k}(x).
    pub fn derivative(&self, k: usize) -> f64 {
        if k == 0 {
            if self.x == 0.0 {
                return if self.base == 1.0 { 0.5 } else { 0.0 };
            }
            self.base / self.x * self.values[0] - self.values[1]
        } else {
            0.5 * (self.values[k - 1] - self.values[k + 1])
        }
    }
}

/// (ℓ, J_{|ℓ−α|}(x)) for ℓ ∈ [−L, L].
pub fn bessel_j_batch(alpha: FluxParameter, x: f64, l: usize) -> Result<Vec<(i64, f64)>> {
    let table = OrderTable::new(alpha.alpha(), x, -(l as i64), l as i64)?;
    Ok((-(l as i64)..=l as i64).map(|ell| (ell, table.value(ell))).collect())
}

/// J_{|ℓ−α|}(x) and its derivative for every ℓ in a contiguous range, built
/// from the two ladders ν = ℓ−α (ℓ > α) and ν = α−ℓ (ℓ ≤ α).
#[derive(Debug, Clone)]
pub(crate) struct OrderTable {
    ell_min: i64,
    ell_max: i64,
    // ladder with base α - floor(α) ∈ [0,1): orders α-ℓ for ℓ ≤ floor(α)
    down: BesselLadder,
    // ladder with base ceil'(α) - α ∈ (0,1]: orders ℓ-α for ℓ ≥ floor(α)+1
    up: BesselLadder,
    floor: i64,
}

impl OrderTable {
    pub(crate) fn new(alpha: f64, x: f64, ell_min: i64, ell_max: i64) -> Result<Self> {
        let floor = alpha.floor() as i64;
        let frac = alpha - floor as f64;
        let down_kmax = (floor - ell_min).max(0) as usize;
        let up_kmax = (ell_max - floor - 1).max(0) as usize;
        let down = BesselLadder::new(frac, x, down_kmax)?;
        let up = BesselLadder::new(1.0 - frac, x, up_kmax)?;
        Ok(OrderTable {
            ell_min,
            ell_max,
            down,
            up,
            floor,
        })
    }

    fn locate(&self, ell: i64) -> (&BesselLadder, usize) {
        debug_assert!(ell >= self.ell_min && ell <= self.ell_max);
        if ell <= self.floor {
            (&self.down, (self.floor - ell) as usize)
        } else {
            (&self.up, (ell - self.floor - 1) as usize)
        }
    }

    pub(crate) fn value(&self, ell: i64) -> f64 {
        let (ladder, k) = self.locate(ell);
        ladder.value(k)
    }

    pub(crate) fn derivative(&self, ell: i64) -> f64 {
        let (ladder, k) = self.locate(ell);
        ladder.derivative(k)
    }
}
