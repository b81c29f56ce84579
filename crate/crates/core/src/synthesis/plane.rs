//! The isotropic ensemble as a finite sum of plane waves, kept as an
//! independent oracle for the cylindrical-basis synthesis.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::field::{Grid, SampledField};
use crate::error::Result;
use crate::flux::FluxParameter;

/// One realization of N^{-1/2} Σ_j a_j exp(i k_j·r), |k_j| = 1.
#[derive(Debug, Clone)]
pub struct PlaneWaveSample {
    directions: Vec<(f64, f64)>,
    amplitudes: Vec<Complex64>,
}

impl PlaneWaveSample {
    pub fn new(seed: u64, sample_index: u64, n_waves: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        rng.set_stream(sample_index);
        let norm = FRAC_1_SQRT_2 / (n_waves as f64).sqrt();
        let mut directions = Vec::with_capacity(n_waves);
        let mut amplitudes = Vec::with_capacity(n_waves);
        for _ in 0..n_waves {
            let t = rng.random::<f64>() * TAU;
            directions.push((t.cos(), t.sin()));
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            amplitudes.push(Complex64::new(re, im) * norm);
        }
        PlaneWaveSample { directions, amplitudes }
    }

    pub fn evaluate(&self, x: f64, y: f64) -> Complex64 {
        self.directions
            .iter()
            .zip(&self.amplitudes)
            .map(|(&(kx, ky), &a)| a * Complex64::from_polar(1.0, kx * x + ky * y))
            .sum()
    }
}

pub fn synthesize_plane_wave_field(seed: u64, sample_index: usize, n_waves: usize, grid: Grid) -> Result<SampledField> {
    let wave = PlaneWaveSample::new(seed, sample_index as u64, n_waves);
    let size = grid.size();
    let mut values = Vec::with_capacity(size * size);
    for iy in 0..size {
        for ix in 0..size {
            values.push(wave.evaluate(grid.coord(ix), grid.coord(iy)));
        }
    }
    SampledField::new(grid, values, FluxParameter::new(0.0)?, sample_index)
}
