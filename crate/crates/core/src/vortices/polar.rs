//! Vortex detection on a log-polar mesh centred on the flux, evaluated from the
//! modal sum. Cells are square in (ln R, θ), so vortices are resolved at every
//! scale down to the innermost ring.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;

use super::detect::{locate_zero, plaquette_winding, Vortex};
use crate::error::{Error, Result};
use crate::flux::FluxParameter;
use crate::synthesis::{ModalCoefficients, RadialTable};

/// Modes below this fraction of the largest |J| on a ring are dropped there.
const MODE_CUTOFF: f64 = 1e-18;

#[derive(Debug, Clone)]
struct Ring {
    r: f64,
    // active mode range m ∈ [lo, hi] and its Bessel values
    lo: i64,
    j: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct PolarMesh {
    flux: FluxParameter,
    l: usize,
    n_theta: usize,
    rings: Vec<Ring>,
}

impl PolarMesh {
    /// Rings r_k = r_min·e^{kΔ}, Δ = 2π/n_theta, up to the first ring ≥ r_max,
    /// for coefficients truncated at L.
    pub fn new(flux: FluxParameter, r_min: f64, r_max: f64, n_theta: usize, l: usize) -> Result<Self> {
        if !(r_min > 0.0 && r_max > r_min) || n_theta < 8 {
            return Err(Error::InvalidParameter(
                "polar mesh needs 0 < r_min < r_max and at least 8 angles".into(),
            ));
        }
        let step = TAU / n_theta as f64;
        let count = ((r_max / r_min).ln() / step).ceil() as usize + 1;
        let beta = flux.beta();
        let rings = (0..count)
            .into_par_iter()
            .map(|k| {
                let r = r_min * (k as f64 * step).exp();
                let t = RadialTable::new(beta, r, l)?;
                let li = l as i64;
                let big = (-li..=li).map(|m| t.value(m).abs()).fold(0.0, f64::max);
                let keep = |m: &i64| t.value(*m).abs() >= MODE_CUTOFF * big;
                let lo = (-li..=li).find(keep).unwrap_or(0);
                let hi = (-li..=li).rev().find(keep).unwrap_or(0);
                Ok(Ring {
                    r,
                    lo,
                    j: (lo..=hi).map(|m| t.value(m)).collect(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolarMesh { flux, l, n_theta, rings })
    }

    pub fn r_min(&self) -> f64 {
        self.rings[0].r
    }

    pub fn r_max(&self) -> f64 {
        self.rings[self.rings.len() - 1].r
    }

    fn ring_values(&self, coeffs: &ModalCoefficients, ring: &Ring) -> Vec<Complex64> {
        let n = self.flux.n();
        let shift = (n + ring.lo) as f64;
        (0..self.n_theta)
            .map(|jt| {
                let theta = TAU * jt as f64 / self.n_theta as f64;
                let w = Complex64::from_polar(1.0, theta);
                let mut acc = Complex64::new(0.0, 0.0);
                for (k, &jv) in ring.j.iter().enumerate().rev() {
                    acc = acc * w + coeffs.get(n + ring.lo + k as i64) * jv;
                }
                acc * Complex64::from_polar(1.0, shift * theta)
            })
            .collect()
    }

    /// Vortices with r_min < R < r_max. A net charge inside the innermost ring
    /// beyond the flux charge n is reported as one vortex at R = r_min.
    pub fn detect(&self, coeffs: &ModalCoefficients) -> Result<Vec<Vortex>> {
        let mut out = Vec::new();
        self.scan(coeffs, |v| out.push(v), false)?;
        Ok(out)
    }

    fn scan<F: FnMut(Vortex)>(&self, coeffs: &ModalCoefficients, mut emit: F, first_band_only: bool) -> Result<()> {
        if coeffs.flux != self.flux || coeffs.truncation_l() < self.l {
            return Err(Error::InvalidParameter("coefficients do not match the polar mesh".into()));
        }
        let nt = self.n_theta;
        let step = TAU / nt as f64;
        let mut inner = self.ring_values(coeffs, &self.rings[0]);
        let hidden = plaquette_winding(&inner) - self.flux.n();
        if hidden != 0 {
            if hidden.abs() >= 2 {
                return Err(Error::Resolution {
                    x: 0.0,
                    y: 0.0,
                    winding: hidden,
                });
            }
            emit(Vortex::new(self.r_min(), 0.0, hidden as i32));
            if first_band_only {
                return Ok(());
            }
        }
        for k in 0..self.rings.len() - 1 {
            let mut any = false;
            let outer = self.ring_values(coeffs, &self.rings[k + 1]);
            let ln_r = self.rings[k].r.ln();
            for jt in 0..nt {
                let jn = (jt + 1) % nt;
                let z = [inner[jt], outer[jt], outer[jn], inner[jn]];
                let s = plaquette_winding(&z);
                if s == 0 {
                    continue;
                }
                if s.abs() >= 2 {
                    return Err(Error::Resolution {
                        x: self.rings[k].r * (jt as f64 * step).cos(),
                        y: self.rings[k].r * (jt as f64 * step).sin(),
                        winding: s,
                    });
                }
                let (u, v) = locate_zero(z[0], z[1], z[2], z[3]);
                let r = (ln_r + u * step).exp();
                let theta = (jt as f64 + v) * step;
                emit(Vortex::new(r * theta.cos(), r * theta.sin(), s as i32));
                any = true;
            }
            if any && first_band_only {
                break;
            }
            inner = outer;
        }
        Ok(())
    }
}

/// The vortex nearest the flux line, if any lies inside the mesh. Rings are
/// scanned outward and the scan stops at the first band holding a vortex.
pub fn nearest_vortex(coeffs: &ModalCoefficients, mesh: &PolarMesh) -> Result<Option<Vortex>> {
    let mut found = None;
    mesh.scan(coeffs, |v| {
        if found.is_none_or(|f: Vortex| v.r < f.r) {
            found = Some(v);
        }
    }, true)?;
    Ok(found)
}
