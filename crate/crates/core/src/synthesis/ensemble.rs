use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, SQRT_2};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::flux::FluxParameter;
use crate::specfun::{truncation_order, OrderTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truncation {
    /// L from the truncation rule at the grid corner, domain_radius·√2.
    Auto,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleSpec {
    pub flux: FluxParameter,
    pub master_seed: u64,
    pub n_samples: usize,
    pub truncation: Truncation,
    pub domain_radius: f64,
}

impl EnsembleSpec {
    pub fn new(flux: FluxParameter, master_seed: u64, n_samples: usize, domain_radius: f64) -> Result<Self> {
        if n_samples == 0 {
            return Err(Error::InvalidParameter("n_samples must be positive".into()));
        }
        if !(domain_radius > 0.0) || !domain_radius.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "domain radius must be positive, got {domain_radius}"
            )));
        }
        Ok(EnsembleSpec {
            flux,
            master_seed,
            n_samples,
            truncation: Truncation::Auto,
            domain_radius,
        })
    }

    pub fn with_truncation(mut self, truncation: Truncation) -> Self {
        self.truncation = truncation;
        self
    }

    pub fn with_flux(mut self, flux: FluxParameter) -> Self {
        self.flux = flux;
        self
    }

    /// Number of modes kept on each side of ℓ = n.
    pub fn truncation_l(&self) -> usize {
        match self.truncation {
            // Grid corners sit at D√2, not D.
            Truncation::Auto => truncation_order(self.domain_radius * SQRT_2),
            Truncation::Fixed(l) => l,
        }
    }
}

/// c_ℓ for ℓ ∈ [n−L, n+L].
#[derive(Debug, Clone, PartialEq)]
pub struct ModalCoefficients {
    pub flux: FluxParameter,
    ell_min: i64,
    values: Vec<Complex64>,
}

impl ModalCoefficients {
    /// The coefficients of the deterministic wave incident along `incidence`,
    /// c_ℓ = (−i)^{|ℓ−α|} e^{iℓ(π−Θ)}, so that Σ c_ℓ J e^{iℓθ} is Ψ_AB(R, θ; α, Θ).
    pub fn deterministic(flux: FluxParameter, incidence: f64, l: usize) -> Self {
        let (n, li) = (flux.n(), l as i64);
        let alpha = flux.alpha();
        let values = (n - li..=n + li)
            .map(|ell| {
                let phase = -FRAC_PI_2 * (ell as f64 - alpha).abs() + ell as f64 * (std::f64::consts::PI - incidence);
                Complex64::from_polar(1.0, phase)
            })
            .collect();
        ModalCoefficients {
            flux,
            ell_min: n - li,
            values,
        }
    }

    pub fn ell_min(&self) -> i64 {
        self.ell_min
    }

    pub fn ell_max(&self) -> i64 {
        self.ell_min + self.values.len() as i64 - 1
    }

    /// Modes on each side of n.
    pub fn truncation_l(&self) -> usize {
        (self.values.len() - 1) / 2
    }

    pub fn get(&self, ell: i64) -> Complex64 {
        self.values[(ell - self.ell_min) as usize]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.values
    }

    /// Ψ at (R, θ) from a table built at that radius.
    pub fn evaluate(&self, table: &RadialTable, theta: f64) -> Complex64 {
        self.evaluate_with_derivatives(table, theta).0
    }

    /// (Ψ, ∂_RΨ, ∂_θΨ) at (R, θ).
    pub fn evaluate_with_derivatives(&self, table: &RadialTable, theta: f64) -> (Complex64, Complex64, Complex64) {
        let l = table.l.min(self.truncation_l()) as i64;
        let n = self.flux.n();
        let (mut psi, mut dr, mut dth) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        let w = Complex64::from_polar(1.0, theta);
        let mut e = Complex64::from_polar(1.0, (n - l) as f64 * theta);
        for m in -l..=l {
            let ell = n + m;
            let c = self.get(ell) * e;
            e *= w;
            psi += c * table.value(m);
            dr += c * table.derivative(m);
            dth += c * Complex64::new(0.0, ell as f64) * table.value(m);
        }
        (psi, dr, dth)
    }
}

/// J_{|m−β|}(R) and J'_{|m−β|}(R) for m ∈ [−L, L] at one radius.
#[derive(Debug, Clone)]
pub struct RadialTable {
    pub r: f64,
    pub l: usize,
    j: Vec<f64>,
    jp: Vec<f64>,
}

impl RadialTable {
    pub fn new(beta: f64, r: f64, l: usize) -> Result<Self> {
        let li = l as i64;
        let table = OrderTable::new(beta, r, -li, li)?;
        let j = (-li..=li).map(|m| table.value(m)).collect();
        let jp = (-li..=li).map(|m| table.derivative(m)).collect();
        Ok(RadialTable { r, l, j, jp })
    }

    pub fn value(&self, m: i64) -> f64 {
        self.j[(m + self.l as i64) as usize]
    }

    pub fn derivative(&self, m: i64) -> f64 {
        self.jp[(m + self.l as i64) as usize]
    }

    pub(crate) fn values(&self) -> &[f64] {
        &self.j
    }
}

fn zigzag(v: i64) -> u64 {
    ((v << 1) ^ (v >> 63)) as u64
}

/// X_ℓ, a standard circular complex Gaussian (⟨|X|²⟩ = 1) that depends only on
/// (seed, sample, ℓ): ChaCha8 keyed by the seed, stream = sample index, and a
/// disjoint 2¹⁶-word window per ℓ.
pub fn modal_normal(master_seed: u64, sample_index: u64, ell: i64) -> Complex64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(sample_index);
    rng.set_word_pos((zigzag(ell) as u128) << 16);
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * FRAC_1_SQRT_2
}

/// c_ℓ = (−i)^{|ℓ−α|} X_ℓ with the principal power exp(−iπ|ℓ−α|/2).
pub fn sample_modal_coefficients(spec: &EnsembleSpec, sample_index: usize) -> Result<ModalCoefficients> {
    if sample_index >= spec.n_samples {
        return Err(Error::InvalidParameter(format!(
            "sample index {sample_index} out of range for {} samples",
            spec.n_samples
        )));
    }
    let l = spec.truncation_l() as i64;
    let n = spec.flux.n();
    let alpha = spec.flux.alpha();
    let values = (n - l..=n + l)
        .map(|ell| {
            let phase = Complex64::from_polar(1.0, -FRAC_PI_2 * (ell as f64 - alpha).abs());
            phase * modal_normal(spec.master_seed, sample_index as u64, ell)
        })
        .collect();
    Ok(ModalCoefficients {
        flux: spec.flux,
        ell_min: n - l,
        values,
    })
}
