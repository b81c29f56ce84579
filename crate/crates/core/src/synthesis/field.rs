use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rayon::prelude::*;

use super::ensemble::{sample_modal_coefficients, EnsembleSpec, ModalCoefficients, RadialTable};
use crate::error::{Error, Result};
use crate::flux::FluxParameter;
use crate::specfun::{truncation_order, OrderTable};

/// Default lattice spacing, about 31 sites per wavelength.
pub const DEFAULT_GRID_H: f64 = 0.2;

/// Coarsest spacing accepted by the synthesizers.
pub const MAX_GRID_H: f64 = 0.25;

/// Square lattice with a site at the origin: coordinates (i − half)·h for
/// i = 0..2·half.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    half: usize,
    h: f64,
}

impl Grid {
    /// The lattice covering [−D, D]² with spacing h (D rounded to a multiple of h).
    pub fn new(domain_radius: f64, h: f64) -> Result<Self> {
        if !(h > 0.0 && h <= MAX_GRID_H) {
            return Err(Error::InvalidParameter(format!("grid spacing must lie in (0, {MAX_GRID_H}], got {h}")));
        }
        if !(domain_radius >= h) || !domain_radius.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "domain radius must be at least h, got {domain_radius}"
            )));
        }
        Ok(Grid {
            half: (domain_radius / h).round() as usize,
            h,
        })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn half(&self) -> usize {
        self.half
    }

    /// Sites per side.
    pub fn size(&self) -> usize {
        2 * self.half + 1
    }

    pub fn domain_radius(&self) -> f64 {
        self.half as f64 * self.h
    }

    pub fn coord(&self, i: usize) -> f64 {
        (i as f64 - self.half as f64) * self.h
    }

    pub fn index(&self, ix: usize, iy: usize) -> usize {
        iy * self.size() + ix
    }
}

/// Field values on a grid, row-major with x varying fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField {
    pub grid: Grid,
    pub values: Vec<Complex64>,
    pub flux: FluxParameter,
    pub sample_index: usize,
}

impl SampledField {
    pub fn new(grid: Grid, values: Vec<Complex64>, flux: FluxParameter, sample_index: usize) -> Result<Self> {
        let size = grid.size();
        if values.len() != size * size {
            return Err(Error::InvalidParameter(format!(
                "expected {} values, got {}",
                size * size,
                values.len()
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidParameter("field contains non-finite values".into()));
        }
        Ok(SampledField {
            grid,
            values,
            flux,
            sample_index,
        })
    }

    pub fn at(&self, ix: usize, iy: usize) -> Complex64 {
        self.values[self.grid.index(ix, iy)]
    }

    /// Bilinear interpolation of ξ and η at (x, y); None outside the grid.
    pub fn interpolate(&self, x: f64, y: f64) -> Option<Complex64> {
        let g = &self.grid;
        let last = (g.size() - 1) as f64;
        let fx = x / g.h + g.half as f64;
        let fy = y / g.h + g.half as f64;
        let tol = 1e-9;
        if !(fx >= -tol && fx <= last + tol && fy >= -tol && fy <= last + tol) {
            return None;
        }
        let fx = fx.clamp(0.0, last);
        let fy = fy.clamp(0.0, last);
        let ix = (fx.floor() as usize).min(g.size() - 2);
        let iy = (fy.floor() as usize).min(g.size() - 2);
        let u = fx - ix as f64;
        let v = fy - iy as f64;
        let z00 = self.at(ix, iy);
        let z10 = self.at(ix + 1, iy);
        let z01 = self.at(ix, iy + 1);
        let z11 = self.at(ix + 1, iy + 1);
        Some(z00 * ((1.0 - u) * (1.0 - v)) + z10 * (u * (1.0 - v)) + z01 * ((1.0 - u) * v) + z11 * (u * v))
    }

    pub fn conj(&self) -> SampledField {
        SampledField {
            values: self.values.iter().map(|z| z.conj()).collect(),
            ..self.clone()
        }
    }
}

/// Ψ_AB(R, θ; α, Θ) = Σ_ℓ (−i)^{|ℓ−α|} J_{|ℓ−α|}(R) e^{iℓ(θ+π−Θ)}, truncated to
/// ℓ ∈ [n−L, n+L] with L from the truncation rule at R.
pub fn deterministic_ab_wave(flux: FluxParameter, incidence: f64, r: f64, theta: f64) -> Result<Complex64> {
    if !(r >= 0.0) {
        return Err(Error::InvalidParameter(format!("radius must be >= 0, got {r}")));
    }
    let l = truncation_order(r) as i64;
    let n = flux.n();
    let table = OrderTable::new(flux.alpha(), r, n - l, n + l)?;
    let phi = theta + PI - incidence;
    let alpha = flux.alpha();
    Ok((n - l..=n + l)
        .map(|ell| {
            let nu = (ell as f64 - alpha).abs();
            Complex64::from_polar(table.value(ell), -FRAC_PI_2 * nu + ell as f64 * phi)
        })
        .sum())
}

/// Bessel values per distinct site radius and per-site geometry for one
/// (grid, β, L); shared read-only by every sample.
#[derive(Debug, Clone)]
pub struct FieldSynthesizer {
    grid: Grid,
    flux: FluxParameter,
    l: usize,
    rings: Vec<RadialTable>,
    // per site: ring index and polar angle
    site_ring: Vec<u32>,
    site_theta: Vec<f64>,
}

impl FieldSynthesizer {
    pub fn new(grid: Grid, flux: FluxParameter, l: usize) -> Result<Self> {
        let size = grid.size();
        let half = grid.half as i64;
        // Site radii are h√q for integer q = i² + j².
        let q_max = (2 * half * half) as usize;
        let mut ring_of_q = vec![u32::MAX; q_max + 1];
        let mut qs = Vec::new();
        for j in 0..=half {
            for i in j..=half {
                let q = (i * i + j * j) as usize;
                if ring_of_q[q] == u32::MAX {
                    ring_of_q[q] = 0;
                    qs.push(q);
                }
            }
        }
        qs.sort_unstable();
        for (k, &q) in qs.iter().enumerate() {
            ring_of_q[q] = k as u32;
        }
        let beta = flux.beta();
        let rings = qs
            .par_iter()
            .map(|&q| RadialTable::new(beta, grid.h * (q as f64).sqrt(), l))
            .collect::<Result<Vec<_>>>()?;
        let mut site_ring = Vec::with_capacity(size * size);
        let mut site_theta = Vec::with_capacity(size * size);
        for iy in 0..size {
            for ix in 0..size {
                let (i, j) = (ix as i64 - half, iy as i64 - half);
                site_ring.push(ring_of_q[(i * i + j * j) as usize]);
                site_theta.push((j as f64).atan2(i as f64));
            }
        }
        Ok(FieldSynthesizer {
            grid,
            flux,
            l,
            rings,
            site_ring,
            site_theta,
        })
    }

    /// Synthesizer for an ensemble on a grid of spacing h.
    pub fn for_spec(spec: &EnsembleSpec, h: f64) -> Result<Self> {
        let grid = Grid::new(spec.domain_radius, h)?;
        FieldSynthesizer::new(grid, spec.flux, spec.truncation_l())
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn truncation_l(&self) -> usize {
        self.l
    }

    /// Ψ at every site for one set of coefficients: per site a Horner sum in
    /// w = e^{iθ} over the 2L+1 modes, times e^{i(n−L)θ}.
    pub fn synthesize(&self, coeffs: &ModalCoefficients, sample_index: usize) -> Result<SampledField> {
        if coeffs.truncation_l() != self.l || coeffs.flux != self.flux {
            return Err(Error::InvalidParameter(
                "coefficients do not match the synthesizer's flux and truncation".into(),
            ));
        }
        let c = coeffs.as_slice();
        let shift = coeffs.ell_min() as f64;
        let values = self
            .site_ring
            .iter()
            .zip(&self.site_theta)
            .map(|(&ring, &theta)| {
                let j = self.rings[ring as usize].values();
                let w = Complex64::from_polar(1.0, theta);
                let mut acc = Complex64::new(0.0, 0.0);
                for k in (0..c.len()).rev() {
                    acc = acc * w + c[k] * j[k];
                }
                acc * Complex64::from_polar(1.0, shift * theta)
            })
            .collect();
        SampledField::new(self.grid, values, self.flux, sample_index)
    }

    pub fn synthesize_sample(&self, spec: &EnsembleSpec, sample_index: usize) -> Result<SampledField> {
        let coeffs = sample_modal_coefficients(spec, sample_index)?;
        self.synthesize(&coeffs, sample_index)
    }
}

/// One AB random wave on `grid`.
pub fn synthesize_ab_field(spec: &EnsembleSpec, sample_index: usize, grid: Grid) -> Result<SampledField> {
    FieldSynthesizer::new(grid, spec.flux, spec.truncation_l())?.synthesize_sample(spec, sample_index)
}

/// One isotropic random wave: the AB ensemble at α = 0.
pub fn synthesize_isotropic_field(spec: &EnsembleSpec, sample_index: usize, grid: Grid) -> Result<SampledField> {
    let spec = spec.with_flux(FluxParameter::new(0.0)?);
    synthesize_ab_field(&spec, sample_index, grid)
}
