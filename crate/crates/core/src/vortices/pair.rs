use std::f64::consts::PI;

use super::detect::{detect_vortices, VortexSet};
use crate::analytics::{Normalization, Quantity, RadialCurve, DELTA_IRW};
use crate::error::{Error, Result};
use crate::synthesis::SampledField;

/// Distance-binned vortex pair statistics for the isotropic ensemble.
///
/// Reference vortices are restricted to the disk r < D − R_max so every
/// annulus around them lies inside the detection region. Per sample, the pair
/// count in bin k is divided by the expected count for uncorrelated vortices,
/// πr_ref²Δ_irw · A_k Δ_irw, so the sample mean estimates g (unsigned pairs)
/// and g_s (pairs weighted by q_i q_j).
#[derive(Debug, Clone, PartialEq)]
pub struct PairCorrelation {
    pub bin_edges: Vec<f64>,
    pub reference_radius: f64,
    pub n_samples: usize,
    pub n_reference: u64,
    // per-bin sums and sums of squares of the per-sample estimates of
    // g, g_s, g₊, g₋
    sums: [Vec<f64>; 4],
    squares: [Vec<f64>; 4],
}

impl PairCorrelation {
    pub fn new(bin_edges: Vec<f64>, domain_radius: f64) -> Result<Self> {
        if bin_edges.len() < 2 || bin_edges[0] < 0.0 || bin_edges.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidParameter("bin edges must be non-negative and increasing".into()));
        }
        let reference_radius = domain_radius - bin_edges[bin_edges.len() - 1];
        if !(reference_radius > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "largest separation must be below the domain radius {domain_radius}"
            )));
        }
        let bins = bin_edges.len() - 1;
        Ok(PairCorrelation {
            bin_edges,
            reference_radius,
            n_samples: 0,
            n_reference: 0,
            sums: std::array::from_fn(|_| vec![0.0; bins]),
            squares: std::array::from_fn(|_| vec![0.0; bins]),
        })
    }

    pub fn uniform(width: f64, r_max: f64, domain_radius: f64) -> Result<Self> {
        if !(width > 0.0 && r_max > 0.0) {
            return Err(Error::InvalidParameter("need width > 0 and r_max > 0".into()));
        }
        let bins = (r_max / width).round().max(1.0) as usize;
        PairCorrelation::new((0..=bins).map(|k| k as f64 * width).collect(), domain_radius)
    }

    pub fn bins(&self) -> usize {
        self.sums[0].len()
    }

    pub fn centers(&self) -> Vec<f64> {
        self.bin_edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }

    pub fn accumulate(&mut self, vs: &VortexSet) {
        let bins = self.bins();
        let r_top = self.bin_edges[bins];
        let mut like = vec![0.0; bins];
        let mut unlike = vec![0.0; bins];
        for (i, a) in vs.vortices.iter().enumerate() {
            if a.r >= self.reference_radius {
                continue;
            }
            self.n_reference += 1;
            for (j, b) in vs.vortices.iter().enumerate() {
                if i == j {
                    continue;
                }
                let d = (a.x - b.x).hypot(a.y - b.y);
                if d >= r_top || d < self.bin_edges[0] {
                    continue;
                }
                let k = self.bin_edges.partition_point(|&e| e <= d) - 1;
                if a.charge == b.charge {
                    like[k] += 1.0;
                } else {
                    unlike[k] += 1.0;
                }
            }
        }
        let refs = PI * self.reference_radius * self.reference_radius * DELTA_IRW;
        for k in 0..bins {
            let area = PI * (self.bin_edges[k + 1].powi(2) - self.bin_edges[k].powi(2));
            let norm = refs * area * DELTA_IRW;
            let (p, m) = (like[k] / norm, unlike[k] / norm);
            // g₊ = ½(g + g_s) and g₋ = ½(g − g_s) are the like and unlike parts.
            for (i, v) in [p + m, p - m, p, m].into_iter().enumerate() {
                self.sums[i][k] += v;
                self.squares[i][k] += v * v;
            }
        }
        self.n_samples += 1;
    }

    fn stats(&self, which: usize, k: usize) -> (f64, f64) {
        let (sum, sq) = (self.sums[which][k], self.squares[which][k]);
        let n = self.n_samples as f64;
        let mean = sum / n;
        let var = if self.n_samples > 1 {
            ((sq - n * mean * mean) / (n - 1.0)).max(0.0)
        } else {
            0.0
        };
        (mean, (var / n).sqrt())
    }

    /// (ĝ_k, standard error).
    pub fn g(&self, k: usize) -> (f64, f64) {
        self.stats(0, k)
    }

    /// (ĝ_s,k, standard error).
    pub fn g_s(&self, k: usize) -> (f64, f64) {
        self.stats(1, k)
    }

    /// (ĝ₊,k, standard error), like-charge pairs.
    pub fn g_plus(&self, k: usize) -> (f64, f64) {
        self.stats(2, k)
    }

    /// (ĝ₋,k, standard error), unlike-charge pairs.
    pub fn g_minus(&self, k: usize) -> (f64, f64) {
        self.stats(3, k)
    }
}

/// ĝ and ĝ_s as curves at the bin centres, from the vortices of an isotropic
/// ensemble of fields.
pub fn pair_correlation(fields: &[SampledField], bin_edges: Vec<f64>) -> Result<(RadialCurve, RadialCurve)> {
    let first = fields
        .first()
        .ok_or_else(|| Error::InvalidParameter("no fields supplied".into()))?;
    let mut acc = PairCorrelation::new(bin_edges, first.grid.domain_radius())?;
    for f in fields {
        if !f.flux.is_integer() {
            return Err(Error::InvalidParameter("pair correlation needs an isotropic ensemble".into()));
        }
        acc.accumulate(&detect_vortices(f)?);
    }
    let centers = acc.centers();
    let g = centers.iter().enumerate().map(|(k, &r)| (r, acc.g(k).0)).collect();
    let s = centers.iter().enumerate().map(|(k, &r)| (r, acc.g_s(k).0)).collect();
    Ok((
        RadialCurve::new(Quantity::G, 0.0, g, Normalization::PerDeltaIrw)?,
        RadialCurve::new(Quantity::GS, 0.0, s, Normalization::PerDeltaIrw)?,
    ))
}
