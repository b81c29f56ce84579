//! The six covariances a–f of the field and its first derivatives at radius R,
//! from the partial-wave sums and from their closed forms.
//!
//! With Ψ = Σ c_ℓ J_{|ℓ−β|}(R) e^{iℓθ} and ν_ℓ = |ℓ−β|:
//!
//! ```text
//! a = ½ Σ J²          b = ½ Σ J J'          c = (1/2R) Σ ℓ J²
//! d = ½ Σ J'²         e = (1/2R) Σ ℓ J J'   f = (1/2R²) Σ ℓ² J²
//! ```
//!
//! Everything is evaluated at the fractional part β of the flux; the integer
//! part only relabels ℓ.

use crate::error::{Error, Result};
use crate::flux::FluxParameter;
use crate::specfun::{bessel_j, bessel_tail_sum, truncation_order, Accuracy};

/// Below this radius the determinants are accumulated as pair sums, which
/// avoids the cancellation in ad − b² near the flux line.
const PAIR_SUM_BELOW: f64 = 2.0;

/// β within this distance of 0 or ½ is sent to the sums by the closed-form
/// evaluator.
pub const CLOSED_FORM_EDGE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSet {
    pub r: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
    stable: Option<Determinants>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Determinants {
    ad_b2: f64,
    af_c2: f64,
    ae_bc: f64,
}

impl MomentSet {
    pub fn new(r: f64, a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Self {
        MomentSet {
            r,
            a,
            b,
            c,
            d,
            e,
            f,
            stable: None,
        }
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    /// a·d − b².
    pub fn radial_det(&self) -> f64 {
        self.stable.map_or(self.a * self.d - self.b * self.b, |s| s.ad_b2)
    }

    /// a·f − c².
    pub fn azimuthal_det(&self) -> f64 {
        self.stable.map_or(self.a * self.f - self.c * self.c, |s| s.af_c2)
    }

    /// a·e − b·c.
    pub fn cross(&self) -> f64 {
        self.stable.map_or(self.a * self.e - self.b * self.c, |s| s.ae_bc)
    }

    /// The set for −β: c and e change sign.
    pub fn mirrored(&self) -> Self {
        MomentSet {
            c: -self.c,
            e: -self.e,
            stable: self.stable.map(|s| Determinants {
                ae_bc: -s.ae_bc,
                ..s
            }),
            ..*self
        }
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InvalidParameter(format!("radius must be positive, got {r}")));
    }
    Ok(())
}

/// J_{|ℓ−β|}(R) and J'_{|ℓ−β|}(R) for ℓ ∈ [−L, L], L from the truncation rule.
pub(crate) fn mode_values(beta: f64, r: f64) -> Result<(Vec<i64>, Vec<f64>, Vec<f64>)> {
    let l = truncation_order(r) as i64;
    let table = crate::specfun::OrderTable::new(beta, r, -l, l)?;
    let ells: Vec<i64> = (-l..=l).collect();
    let j = ells.iter().map(|&m| table.value(m)).collect();
    let jp = ells.iter().map(|&m| table.derivative(m)).collect();
    Ok((ells, j, jp))
}

/// a–f from the truncated ℓ-sums.
pub fn moments_by_sum(flux: FluxParameter, r: f64, _acc: &Accuracy) -> Result<MomentSet> {
    check_radius(r)?;
    let beta = flux.beta();
    let (ells, j, jp) = mode_values(beta, r)?;

    // Sum from the outside in so the smallest terms enter first.
    let mut order: Vec<usize> = (0..ells.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(ells[i].unsigned_abs()));
    let (mut sa, mut sb, mut sc, mut sd, mut se, mut sf) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    for &i in &order {
        let m = ells[i] as f64;
        let (v, dv) = (j[i], jp[i]);
        sa += v * v;
        sb += v * dv;
        sc += m * v * v;
        sd += dv * dv;
        se += m * v * dv;
        sf += m * m * v * v;
    }
    let mut set = MomentSet::new(
        r,
        0.5 * sa,
        0.5 * sb,
        0.5 * sc / r,
        0.5 * sd,
        0.5 * se / r,
        0.5 * sf / (r * r),
    );
    if r < PAIR_SUM_BELOW {
        set.stable = Some(pair_determinants(&ells, &j, &jp, r));
    }
    Ok(set)
}

/// The three 2×2 combinations through Lagrange's identity:
///
/// ```text
/// ad − b² = ¼ Σ_{i<j} W_ij²,                        W_ij = J_i J'_j − J_j J'_i
/// af − c² = (1/4R²) Σ_{i<j} J_i² J_j² (ℓ_i − ℓ_j)²
/// ae − bc = (1/4R) Σ_{i<j} J_i J_j W_ij (ℓ_j − ℓ_i)
/// ```
fn pair_determinants(ells: &[i64], j: &[f64], jp: &[f64], r: f64) -> Determinants {
    // Modes whose value and slope both vanish in f64 contribute nothing.
    let live: Vec<usize> = (0..ells.len()).filter(|&i| j[i] != 0.0 || jp[i] != 0.0).collect();
    let (mut rad, mut azi, mut cross) = (0.0, 0.0, 0.0);
    for (p, &i) in live.iter().enumerate() {
        for &k in &live[p + 1..] {
            let w = j[i] * jp[k] - j[k] * jp[i];
            let dm = (ells[k] - ells[i]) as f64;
            let s = j[i] * j[k];
            rad += w * w;
            azi += s * s * dm * dm;
            cross += s * w * dm;
        }
    }
    Determinants {
        ad_b2: 0.25 * rad,
        af_c2: 0.25 * azi / (r * r),
        ae_bc: 0.25 * cross / r,
    }
}

/// a–f from their closed forms in terms of a handful of Bessel functions and
/// the tail sums A_β, A_{1−β}.
///
/// The forms hold for 0 < β < ½; negative β uses the parity c, e → −c, −e, and
/// β within [`CLOSED_FORM_EDGE`] of 0 or ½ falls back to the sums. The bracket
/// in c is grouped as (R + 2/R) J²_{1−β} + (2β−3) J_{2−β} J_{1−β} + …, the
/// grouping that reproduces the sums.
pub fn moments_closed(flux: FluxParameter, r: f64, acc: &Accuracy) -> Result<MomentSet> {
    check_radius(r)?;
    let signed = flux.beta();
    let b = signed.abs();
    if b < CLOSED_FORM_EDGE || (0.5 - b) < CLOSED_FORM_EDGE {
        return moments_by_sum(flux, r, acc);
    }
    let at = |nu: f64| bessel_j(nu, r);
    let ab = bessel_tail_sum(b, r, acc)? + bessel_tail_sum(1.0 - b, r, acc)?;
    let jb = at(b)?;
    let j1b = at(1.0 - b)?;
    let j2b = at(2.0 - b)?;
    let jm1b = at(b - 1.0)?;
    let jmb = at(-b)?;
    let jb1 = at(b + 1.0)?;
    let r2 = r * r;

    let a = 0.5 * (jb * jb + j1b * j1b + ab);
    let bb = 0.25 * (jb * jm1b + jmb * j1b);
    let c = b / (2.0 * r) * ab
        + 0.25
            * ((r + 2.0 / r) * j1b * j1b + (2.0 * b - 3.0) * j2b * j1b + r * j2b * j2b
                - r * jb * jb
                - r * jb1 * jb1
                + (2.0 * b + 1.0) * jb * jb1);
    let d = 0.25 * ab
        + (b / 8.0 * j1b * j1b + (2.0 - b) / 8.0 * jm1b * jm1b
            - b * (1.0 - b) / (4.0 * r) * j1b * jmb
            + (1.0 + b) / 8.0 * jmb * jmb
            - (1.0 - b) * b / (4.0 * r) * jm1b * jb
            + (1.0 - b) / 8.0 * jb * jb);
    let e = (r * j1b * j1b - r * jm1b * jm1b + 2.0 * b * j1b * jmb + r * jmb * jmb + 2.0 * b * jm1b * jb
        - r * jb * jb)
        / (8.0 * r);
    let f = (2.0 * ab * (2.0 * b * b + r2)
        + (-4.0 * (2.0 + (b - 4.0) * b) + (2.0 + 3.0 * b) * r2) * j1b * j1b
        + 2.0 * r2 * j2b * j2b
        - 3.0 * b * r2 * jm1b * jm1b
        + 2.0 * (4.0 + b * (3.0 * b - 5.0)) * r * j1b * jmb
        + (3.0 * b - 1.0) * r2 * jmb * jmb
        + 2.0 * b * (3.0 * b - 1.0) * r * jm1b * jb
        + (4.0 * b * b + (1.0 - 3.0 * b) * r2) * jb * jb)
        / (8.0 * r2);

    let set = MomentSet::new(r, a, bb, c, d, e, f);
    Ok(if signed < 0.0 { set.mirrored() } else { set })
}

/// Default-accuracy sums; the form used by every derived quantity.
pub fn moments(flux: FluxParameter, r: f64) -> Result<MomentSet> {
    moments_by_sum(flux, r, &Accuracy::default())
}
