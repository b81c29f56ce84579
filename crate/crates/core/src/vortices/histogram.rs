use std::f64::consts::PI;

use super::detect::VortexSet;
use crate::error::{Error, Result};

/// Radial counts of positive and negative vortices, with per-sample second
/// moments for standard errors.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialHistogram {
    pub bin_edges: Vec<f64>,
    pub counts_plus: Vec<u64>,
    pub counts_minus: Vec<u64>,
    pub n_samples: usize,
    pub annulus_areas: Vec<f64>,
    sq_signed: Vec<f64>,
    sq_total: Vec<f64>,
}

impl RadialHistogram {
    pub fn new(bin_edges: Vec<f64>) -> Result<Self> {
        if bin_edges.len() < 2 || bin_edges[0] < 0.0 || bin_edges.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidParameter("bin edges must be non-negative and increasing".into()));
        }
        let bins = bin_edges.len() - 1;
        let annulus_areas = bin_edges.windows(2).map(|w| PI * (w[1] * w[1] - w[0] * w[0])).collect();
        Ok(RadialHistogram {
            bin_edges,
            counts_plus: vec![0; bins],
            counts_minus: vec![0; bins],
            n_samples: 0,
            annulus_areas,
            sq_signed: vec![0.0; bins],
            sq_total: vec![0.0; bins],
        })
    }

    /// Bins of equal width from r_min to r_max.
    pub fn uniform(r_min: f64, r_max: f64, width: f64) -> Result<Self> {
        if !(width > 0.0 && r_max > r_min) {
            return Err(Error::InvalidParameter("need width > 0 and r_max > r_min".into()));
        }
        let bins = ((r_max - r_min) / width).round().max(1.0) as usize;
        RadialHistogram::new((0..=bins).map(|k| r_min + k as f64 * width).collect())
    }

    pub fn bins(&self) -> usize {
        self.counts_plus.len()
    }

    pub fn bin_of(&self, r: f64) -> Option<usize> {
        let e = &self.bin_edges;
        if r < e[0] || r >= e[e.len() - 1] {
            return None;
        }
        Some(e.partition_point(|&x| x <= r) - 1)
    }

    pub fn centers(&self) -> Vec<f64> {
        self.bin_edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }

    /// Adds one sample.
    pub fn accumulate(&mut self, vs: &VortexSet) {
        let bins = self.bins();
        let mut plus = vec![0u64; bins];
        let mut minus = vec![0u64; bins];
        for v in &vs.vortices {
            if let Some(k) = self.bin_of(v.r) {
                if v.charge > 0 {
                    plus[k] += 1;
                } else {
                    minus[k] += 1;
                }
            }
        }
        for k in 0..bins {
            self.counts_plus[k] += plus[k];
            self.counts_minus[k] += minus[k];
            let s = plus[k] as f64 - minus[k] as f64;
            let t = (plus[k] + minus[k]) as f64;
            self.sq_signed[k] += s * s;
            self.sq_total[k] += t * t;
        }
        self.n_samples += 1;
    }

    /// Adds the samples of another histogram with the same bins.
    pub fn merge(&mut self, other: &RadialHistogram) -> Result<()> {
        if self.bin_edges != other.bin_edges {
            return Err(Error::InvalidParameter("histogram bins differ".into()));
        }
        for k in 0..self.bins() {
            self.counts_plus[k] += other.counts_plus[k];
            self.counts_minus[k] += other.counts_minus[k];
            self.sq_signed[k] += other.sq_signed[k];
            self.sq_total[k] += other.sq_total[k];
        }
        self.n_samples += other.n_samples;
        Ok(())
    }

    fn mean_and_se(&self, sum: f64, sum_sq: f64, area: f64) -> (f64, f64) {
        let n = self.n_samples as f64;
        if self.n_samples == 0 {
            return (f64::NAN, f64::NAN);
        }
        let mean = sum / n;
        let var = if self.n_samples > 1 {
            ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0)
        } else {
            0.0
        };
        (mean / area, (var / n).sqrt() / area)
    }

    /// ρ̂_k and its standard error.
    pub fn rho(&self, k: usize) -> (f64, f64) {
        let s = self.counts_plus[k] as f64 - self.counts_minus[k] as f64;
        self.mean_and_se(s, self.sq_signed[k], self.annulus_areas[k])
    }

    /// Δ̂_k and its standard error.
    pub fn delta(&self, k: usize) -> (f64, f64) {
        let t = (self.counts_plus[k] + self.counts_minus[k]) as f64;
        self.mean_and_se(t, self.sq_total[k], self.annulus_areas[k])
    }
}

/// Functional form of [`RadialHistogram::accumulate`].
pub fn accumulate_radial(mut hist: RadialHistogram, vs: &VortexSet) -> RadialHistogram {
    hist.accumulate(vs);
    hist
}
