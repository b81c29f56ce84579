use std::f64::consts::{PI, SQRT_2};
use std::time::Instant;

use rayon::prelude::*;

use super::report::{ComparisonBin, ComparisonReport};
use crate::analytics::{
    charge_density, isotropic_charge_correlation, mean_phase_gradient_azimuthal, nearest_vortex_cdf,
    nearest_vortex_conditional_mean, number_correlation_asymptote, phase_integral, vortex_density,
};
use crate::error::{Error, Result};
use crate::quad::integrate;
use crate::specfun::truncation_order;
use crate::synthesis::{sample_modal_coefficients, EnsembleSpec, FieldSynthesizer, RadialTable};
use crate::vortices::{
    detect_vortices, modal_circle_winding, nearest_vortex, PairCorrelation, PolarMesh, RadialHistogram, VortexSet,
};

pub const DEFAULT_SAMPLES: usize = 2000;
pub const DEFAULT_DOMAIN_RADIUS: f64 = 12.0;

/// Innermost ring of the nearest-vortex mesh.
const NEAREST_R_MIN: f64 = 1e-30;

/// (1/A) ∫ 2πR f(R) dR over the annulus [r0, r1].
fn annulus_average<F: Fn(f64) -> Result<f64>>(f: F, r0: f64, r1: f64) -> Result<f64> {
    let g = |r: f64| 2.0 * PI * r * f(r).unwrap_or(f64::NAN);
    let v = integrate(g, r0, r1, 1e-13, 1e-10)?.value;
    if !v.is_finite() {
        return Err(Error::InvalidParameter(format!("analytic average failed on [{r0}, {r1}]")));
    }
    Ok(v / (PI * (r1 * r1 - r0 * r0)))
}

fn mean_se(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let v: Vec<f64> = values.collect();
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    if v.len() < 2 {
        return (mean, 0.0);
    }
    let var = v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

fn detect_all(spec: &EnsembleSpec, h: f64) -> Result<(Vec<VortexSet>, f64)> {
    let synth = FieldSynthesizer::for_spec(spec, h)?;
    let sets = (0..spec.n_samples)
        .into_par_iter()
        .map(|k| synth.synthesize_sample(spec, k).and_then(|f| detect_vortices(&f)))
        .collect::<Result<Vec<_>>>()?;
    Ok((sets, synth.grid().domain_radius()))
}

#[derive(Debug, Clone)]
pub struct DensityReport {
    pub rho: ComparisonReport,
    pub delta: ComparisonReport,
    pub histogram: RadialHistogram,
}

/// Radial histograms of detected vortices against the annulus averages of ρ
/// and Δ. Bins starting below 5h are left out of the comparison.
pub fn run_density_experiment(spec: &EnsembleSpec, h: f64, bin_width: f64) -> Result<DensityReport> {
    if spec.n_samples < 100 {
        return Err(Error::InvalidParameter("density experiment needs at least 100 samples".into()));
    }
    let start = Instant::now();
    let (sets, radius) = detect_all(spec, h)?;
    let mut hist = RadialHistogram::uniform(0.0, radius, bin_width)?;
    for vs in &sets {
        hist.accumulate(vs);
    }
    let flux = spec.flux;
    let mut rho_bins = Vec::new();
    let mut delta_bins = Vec::new();
    for k in 0..hist.bins() {
        let (r0, r1) = (hist.bin_edges[k], hist.bin_edges[k + 1]);
        if r0 < 5.0 * h - 1e-12 {
            continue;
        }
        let rc = 0.5 * (r0 + r1);
        let (rho, rho_se) = hist.rho(k);
        let (delta, delta_se) = hist.delta(k);
        let rho_a = annulus_average(|r| charge_density(flux, r), r0, r1)?;
        let delta_a = annulus_average(|r| vortex_density(flux, r), r0, r1)?;
        rho_bins.push(ComparisonBin::new(rc, rho_a, rho, rho_se));
        delta_bins.push(ComparisonBin::new(rc, delta_a, delta, delta_se));
    }
    let wall = start.elapsed();
    let beta = flux.beta();
    Ok(DensityReport {
        rho: ComparisonReport::new("rho", beta, rho_bins, spec.n_samples, wall),
        delta: ComparisonReport::new("delta", beta, delta_bins, spec.n_samples, wall),
        histogram: hist,
    })
}

fn radial_tables(spec: &EnsembleSpec, radii: &[f64]) -> Result<Vec<RadialTable>> {
    let l = spec.truncation_l();
    radii
        .iter()
        .map(|&r| {
            if !(r > 0.0) || truncation_order(r) > l {
                return Err(Error::InvalidParameter(format!(
                    "radius {r} needs more than the ensemble's {l} modes"
                )));
            }
            RadialTable::new(spec.flux.beta(), r, l)
        })
        .collect()
}

fn circle_points(r: f64) -> usize {
    256usize.max((32.0 * r).ceil() as usize)
}

#[derive(Debug, Clone)]
pub struct PhaseIntegralReport {
    pub report: ComparisonReport,
    /// windings[i][k]: sample k on radius i.
    pub windings: Vec<Vec<i64>>,
}

/// Per-sample winding of the exact field around centred circles against
/// I(R, α).
pub fn run_phase_integral_experiment(spec: &EnsembleSpec, radii: &[f64]) -> Result<PhaseIntegralReport> {
    let start = Instant::now();
    let tables = radial_tables(spec, radii)?;
    let per_sample = (0..spec.n_samples)
        .into_par_iter()
        .map(|k| {
            let c = sample_modal_coefficients(spec, k)?;
            tables
                .iter()
                .map(|t| modal_circle_winding(&c, t, circle_points(t.r)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let windings: Vec<Vec<i64>> = (0..radii.len()).map(|i| per_sample.iter().map(|w| w[i]).collect()).collect();
    let mut bins = Vec::new();
    for (i, &r) in radii.iter().enumerate() {
        let (mean, se) = mean_se(windings[i].iter().map(|&w| w as f64));
        bins.push(ComparisonBin::new(r, phase_integral(spec.flux, r)?, mean, se));
    }
    let report = ComparisonReport::new("phase_integral", spec.flux.alpha(), bins, spec.n_samples, start.elapsed());
    Ok(PhaseIntegralReport { report, windings })
}

#[derive(Debug, Clone)]
pub struct GradientReport {
    pub azimuthal: ComparisonReport,
    pub radial: ComparisonReport,
}

/// Circle averages of the phase gradient: the azimuthal part from the exact
/// winding (2π·winding/2πR), the radial part from Im(Ψ*∂_RΨ)/|Ψ|² averaged
/// over equally spaced angles.
pub fn run_mean_gradient_experiment(spec: &EnsembleSpec, radii: &[f64]) -> Result<GradientReport> {
    let start = Instant::now();
    let tables = radial_tables(spec, radii)?;
    let per_sample = (0..spec.n_samples)
        .into_par_iter()
        .map(|k| {
            let c = sample_modal_coefficients(spec, k)?;
            tables
                .iter()
                .map(|t| {
                    let m = circle_points(t.r);
                    let w = modal_circle_winding(&c, t, m)?;
                    let radial = (0..m)
                        .map(|j| {
                            let th = 2.0 * PI * j as f64 / m as f64;
                            let (psi, dr, _) = c.evaluate_with_derivatives(t, th);
                            (psi.conj() * dr).im / psi.norm_sqr()
                        })
                        .sum::<f64>()
                        / m as f64;
                    Ok((w as f64 / t.r, radial))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut az = Vec::new();
    let mut rad = Vec::new();
    for (i, &r) in radii.iter().enumerate() {
        let (m_az, se_az) = mean_se(per_sample.iter().map(|s| s[i].0));
        let (m_rad, se_rad) = mean_se(per_sample.iter().map(|s| s[i].1));
        az.push(ComparisonBin::new(r, mean_phase_gradient_azimuthal(spec.flux, r)?, m_az, se_az));
        rad.push(ComparisonBin::new(r, 0.0, m_rad, se_rad));
    }
    let wall = start.elapsed();
    let alpha = spec.flux.alpha();
    Ok(GradientReport {
        azimuthal: ComparisonReport::new("gradient_azimuthal", alpha, az, spec.n_samples, wall),
        radial: ComparisonReport::new("gradient_radial", alpha, rad, spec.n_samples, wall),
    })
}

#[derive(Debug, Clone)]
pub struct PairCorrelationReport {
    /// ĝ_s against the closed form, every bin.
    pub g_s: ComparisonReport,
    /// ĝ against 1 + 4 sin(2R)/πR on bins centred at R ≥ `asymptotic_from`.
    pub g: ComparisonReport,
    /// (ĝ₊, s.e.) in the first bin.
    pub g_plus_first: (f64, f64),
    pub accumulator: PairCorrelation,
}

/// Pair statistics of an isotropic (integer-flux) ensemble.
pub fn run_pair_correlation_experiment(
    spec: &EnsembleSpec,
    h: f64,
    bin_width: f64,
    r_max: f64,
    asymptotic_from: f64,
) -> Result<PairCorrelationReport> {
    if !spec.flux.is_integer() {
        return Err(Error::InvalidParameter("pair correlation needs integer flux".into()));
    }
    let start = Instant::now();
    let (sets, radius) = detect_all(spec, h)?;
    let mut acc = PairCorrelation::uniform(bin_width, r_max, radius)?;
    for vs in &sets {
        acc.accumulate(vs);
    }
    let mut gs_bins = Vec::new();
    let mut g_bins = Vec::new();
    for (k, rc) in acc.centers().into_iter().enumerate() {
        let (r0, r1) = (acc.bin_edges[k], acc.bin_edges[k + 1]);
        let (gs, gs_se) = acc.g_s(k);
        gs_bins.push(ComparisonBin::new(rc, annulus_average(isotropic_charge_correlation, r0, r1)?, gs, gs_se));
        if rc >= asymptotic_from {
            let (g, g_se) = acc.g(k);
            let a = annulus_average(|r| Ok(number_correlation_asymptote(r)), r0, r1)?;
            g_bins.push(ComparisonBin::new(rc, a, g, g_se));
        }
    }
    let wall = start.elapsed();
    Ok(PairCorrelationReport {
        g_s: ComparisonReport::new("g_s", 0.0, gs_bins, spec.n_samples, wall),
        g: ComparisonReport::new("g", 0.0, g_bins, spec.n_samples, wall),
        g_plus_first: acc.g_plus(0),
        accumulator: acc,
    })
}

#[derive(Debug, Clone)]
pub struct NearestVortexReport {
    pub beta: f64,
    pub n_samples: usize,
    /// (R_nv, charge) per sample; R_nv = ∞ when no vortex lies in the domain.
    pub nearest: Vec<(f64, i32)>,
    pub positive_fraction: f64,
    pub positive_fraction_se: f64,
    pub delta: f64,
    pub conditional_mean: f64,
    pub conditional_mean_se: f64,
    pub below_delta: usize,
    pub analytic_conditional_mean: f64,
    /// Empirical CDF of R_nv against the two-mode law at the given radii.
    pub cdf: ComparisonReport,
}

/// Nearest vortex to the flux per sample, found on a log-polar mesh from
/// R = 1e-30 to the domain radius with `n_theta` angles.
pub fn run_nearest_vortex_experiment(
    spec: &EnsembleSpec,
    delta: f64,
    n_theta: usize,
    cdf_radii: &[f64],
) -> Result<NearestVortexReport> {
    let beta = spec.flux.beta();
    if !(beta > 0.0 && beta < 0.5) {
        return Err(Error::InvalidParameter(format!("nearest-vortex experiment needs 0 < beta < 1/2, got {beta}")));
    }
    let start = Instant::now();
    let l = spec.truncation_l().min(truncation_order(spec.domain_radius * SQRT_2));
    let mesh = PolarMesh::new(spec.flux, NEAREST_R_MIN, spec.domain_radius, n_theta, l)?;
    let nearest = (0..spec.n_samples)
        .into_par_iter()
        .map(|k| {
            let c = sample_modal_coefficients(spec, k)?;
            Ok(nearest_vortex(&c, &mesh)?.map_or((f64::INFINITY, 0), |v| (v.r, v.charge)))
        })
        .collect::<Result<Vec<_>>>()?;
    let n = spec.n_samples as f64;
    let positive_fraction = nearest.iter().filter(|v| v.1 > 0).count() as f64 / n;
    let positive_fraction_se = (positive_fraction * (1.0 - positive_fraction) / n).sqrt();
    let below: Vec<f64> = nearest.iter().map(|v| v.0).filter(|&r| r < delta).collect();
    let (conditional_mean, conditional_mean_se) = if below.is_empty() {
        (f64::NAN, f64::NAN)
    } else {
        mean_se(below.iter().copied())
    };
    let mut bins = Vec::new();
    for &r in cdf_radii {
        let p = nearest_vortex_cdf(beta, r)?;
        let emp = nearest.iter().filter(|v| v.0 < r).count() as f64 / n;
        bins.push(ComparisonBin::new(r, p, emp, (p * (1.0 - p) / n).sqrt()));
    }
    Ok(NearestVortexReport {
        beta,
        n_samples: spec.n_samples,
        positive_fraction,
        positive_fraction_se,
        delta,
        conditional_mean,
        conditional_mean_se,
        below_delta: below.len(),
        analytic_conditional_mean: nearest_vortex_conditional_mean(beta, delta)?,
        cdf: ComparisonReport::new("nearest_vortex_cdf", beta, bins, spec.n_samples, start.elapsed()),
        nearest,
    })
}
