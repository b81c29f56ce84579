use std::f64::consts::PI;

use abwave::moments::moments;
use abwave::specfun::{bessel_j, truncation_order};
use abwave::synthesis::{
    deterministic_ab_wave, modal_normal, sample_modal_coefficients, EnsembleSpec, FieldSynthesizer, Grid,
    ModalCoefficients, PlaneWaveSample, RadialTable, Truncation,
};
use abwave::FluxParameter;
use num_complex::Complex64;

fn flux(a: f64) -> FluxParameter {
    FluxParameter::new(a).unwrap()
}

#[test]
fn zero_flux_wave_is_a_plane_wave() {
    // Jacobi–Anger: Σ (−i)^{|ℓ|} J_ℓ e^{iℓ(θ+π−Θ)} = e^{iR cos(θ−Θ)}.
    for &(r, theta, inc) in &[(0.5, 0.3, 0.0), (4.0, 2.0, 1.0), (17.0, -1.2, 0.4), (30.0, PI, 0.0)] {
        let psi = deterministic_ab_wave(flux(0.0), inc, r, theta).unwrap();
        let want = Complex64::from_polar(1.0, r * (theta - inc).cos());
        assert!((psi - want).norm() < 1e-10, "R={r}: {psi} {want}");
    }
}

#[test]
fn ab_wave_far_field() {
    // Away from the forward direction the wave is the incident plane wave times
    // e^{iα(θ−Θ−π)}, θ−Θ ∈ (0, 2π), up to an O(R^{−1/2}) scattered part.
    let alpha = 0.25;
    for &(r, theta) in &[(30.0, PI / 2.0), (30.0, PI), (40.0, 4.0)] {
        let psi = deterministic_ab_wave(flux(alpha), 0.0, r, theta).unwrap();
        let want = Complex64::from_polar(1.0, r * theta.cos() + alpha * (theta - PI));
        assert!((psi - want).norm() <= 3.0 / r.sqrt(), "R={r} θ={theta}: {}", (psi - want).norm());
    }
}

#[test]
fn ab_wave_has_phase_tear_along_incidence() {
    // Relative to the plane wave the far-field phase is α(θ−Θ−π) with
    // θ−Θ ∈ (0, 2π): −απ just above θ = Θ and +απ just below, a jump of 2πα
    // smoothed over a diffraction zone of angular width ~R^{−1/2}.
    let alpha = 0.25;
    let r = 400.0;
    let th = 0.6f64;
    let plane = Complex64::from_polar(1.0, r * th.cos());
    let above = (deterministic_ab_wave(flux(alpha), 0.0, r, th).unwrap() / plane).arg();
    let below = (deterministic_ab_wave(flux(alpha), 0.0, r, -th).unwrap() / plane).arg();
    assert!((above - alpha * (th - PI)).abs() < 0.05, "above {above}");
    assert!((below - alpha * (PI - th)).abs() < 0.05, "below {below}");
}

#[test]
fn grid_synthesis_matches_pointwise_deterministic_wave() {
    let grid = Grid::new(3.0, 0.25).unwrap();
    let f = flux(1.3);
    let l = truncation_order(3.0 * 2f64.sqrt());
    let synth = FieldSynthesizer::new(grid, f, l).unwrap();
    let field = synth.synthesize(&ModalCoefficients::deterministic(f, 0.7, l), 0).unwrap();
    for &(ix, iy) in &[(0, 0), (3, 20), (12, 12), (24, 5), (13, 12)] {
        let (x, y) = (grid.coord(ix), grid.coord(iy));
        let want = deterministic_ab_wave(f, 0.7, x.hypot(y), y.atan2(x)).unwrap();
        assert!((field.at(ix, iy) - want).norm() < 1e-10, "site ({ix}, {iy})");
    }
}

#[test]
fn modal_variables_are_standard_circular_gaussians() {
    let n = 40_000u64;
    let (mut m, mut p, mut q) = (Complex64::new(0.0, 0.0), 0.0, Complex64::new(0.0, 0.0));
    for k in 0..n {
        let x = modal_normal(5, k, (k % 7) as i64 - 3);
        m += x;
        p += x.norm_sqr();
        q += x * x;
    }
    let nf = n as f64;
    assert!((m / nf).norm() < 0.02);
    assert!((p / nf - 1.0).abs() < 0.03);
    assert!((q / nf).norm() < 0.03);
    // Different modes of one sample are uncorrelated.
    let c: Complex64 = (0..n).map(|k| modal_normal(9, k, 2) * modal_normal(9, k, 3).conj()).sum();
    assert!((c / nf).norm() < 0.03);
}

#[test]
fn coefficients_are_deterministic_and_order_independent() {
    let spec = EnsembleSpec::new(flux(0.25), 42, 10, 6.0).unwrap();
    let a = sample_modal_coefficients(&spec, 3).unwrap();
    let b = sample_modal_coefficients(&spec, 3).unwrap();
    assert_eq!(a, b);
    let c = sample_modal_coefficients(&spec, 4).unwrap();
    assert_ne!(a.as_slice(), c.as_slice());
    // A wider truncation keeps the same values on the shared modes.
    let wide = sample_modal_coefficients(&spec.with_truncation(Truncation::Fixed(a.truncation_l() + 9)), 3).unwrap();
    for ell in a.ell_min()..=a.ell_max() {
        assert_eq!(a.get(ell), wide.get(ell));
    }
    assert!(sample_modal_coefficients(&spec, 10).is_err());
    let other = EnsembleSpec::new(flux(0.25), 43, 10, 6.0).unwrap();
    assert_ne!(sample_modal_coefficients(&other, 3).unwrap().as_slice(), a.as_slice());
}

#[test]
fn coefficients_carry_the_flux_phase() {
    let spec = EnsembleSpec::new(flux(1.25), 1, 2, 4.0).unwrap();
    let c = sample_modal_coefficients(&spec, 1).unwrap();
    for ell in c.ell_min()..=c.ell_max() {
        let x = modal_normal(1, 1, ell);
        let want = x * Complex64::from_polar(1.0, -PI / 2.0 * (ell as f64 - 1.25).abs());
        assert!((c.get(ell) - want).norm() < 1e-15);
    }
}

#[test]
fn doubling_truncation_leaves_field_unchanged() {
    let spec = EnsembleSpec::new(flux(0.3), 3, 3, 6.0).unwrap();
    let grid = Grid::new(6.0, 0.2).unwrap();
    let l = spec.truncation_l();
    let base = FieldSynthesizer::new(grid, spec.flux, l).unwrap();
    let wide = FieldSynthesizer::new(grid, spec.flux, 2 * l).unwrap();
    let wide_spec = spec.with_truncation(Truncation::Fixed(2 * l));
    for k in 0..3 {
        let a = base.synthesize_sample(&spec, k).unwrap();
        let b = wide.synthesize_sample(&wide_spec, k).unwrap();
        let scale = a.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let worst = a.values.iter().zip(&b.values).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        assert!(worst <= 1e-10 * scale, "sample {k}: {worst}");
    }
}

#[test]
fn ensemble_intensity_is_twice_a() {
    let f = flux(0.35);
    let spec = EnsembleSpec::new(f, 8, 6000, 4.0).unwrap();
    for &(r, theta) in &[(0.4, 0.0), (1.5, 2.0), (3.0, -1.0)] {
        let table = RadialTable::new(f.beta(), r, spec.truncation_l()).unwrap();
        let v: Vec<f64> = (0..spec.n_samples)
            .map(|k| sample_modal_coefficients(&spec, k).unwrap().evaluate(&table, theta).norm_sqr())
            .collect();
        let n = v.len() as f64;
        let mean = v.iter().sum::<f64>() / n;
        let se = (v.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0) / n).sqrt();
        let want = 2.0 * moments(f, r).unwrap().a;
        assert!((mean - want).abs() < 4.0 * se, "R={r}: {mean} vs {want} (se {se})");
    }
}

#[test]
fn plane_wave_and_modal_ensembles_share_the_correlation() {
    // ⟨ψ(0) ψ*(x)⟩ = J₀(x) for the isotropic ensemble in either representation.
    let n = 4000usize;
    let spec = EnsembleSpec::new(flux(0.0), 21, n, 4.0).unwrap();
    let l = spec.truncation_l();
    let t0 = RadialTable::new(0.0, 1e-12, l).unwrap();
    for &x in &[1.0, 2.4, 3.8] {
        let t = RadialTable::new(0.0, x, l).unwrap();
        let want = bessel_j(0.0, x).unwrap();
        let (mut modal, mut plane) = (0.0, 0.0);
        for k in 0..n {
            let c = sample_modal_coefficients(&spec, k).unwrap();
            modal += (c.evaluate(&t0, 0.0) * c.evaluate(&t, 0.0).conj()).re;
            let w = PlaneWaveSample::new(21, k as u64, 64);
            plane += (w.evaluate(0.0, 0.0) * w.evaluate(x, 0.0).conj()).re;
        }
        let tol = 4.0 / (n as f64).sqrt();
        assert!((modal / n as f64 - want).abs() < tol, "modal x={x}: {}", modal / n as f64);
        assert!((plane / n as f64 - want).abs() < tol, "plane x={x}: {}", plane / n as f64);
    }
}

#[test]
fn grid_rejects_coarse_spacing() {
    assert!(Grid::new(5.0, 0.3).is_err());
    assert!(Grid::new(5.0, 0.0).is_err());
    let g = Grid::new(5.0, 0.25).unwrap();
    assert_eq!(g.size(), 41);
    assert_eq!(g.coord(20), 0.0);
}

#[test]
fn interpolation_and_conjugation() {
    let grid = Grid::new(2.0, 0.2).unwrap();
    let f = flux(0.0);
    let l = truncation_order(2.0 * 2f64.sqrt());
    let field = FieldSynthesizer::new(grid, f, l)
        .unwrap()
        .synthesize(&ModalCoefficients::deterministic(f, 0.0, l), 0)
        .unwrap();
    let v = field.interpolate(grid.coord(3), grid.coord(7)).unwrap();
    assert!((v - field.at(3, 7)).norm() < 1e-14);
    assert!(field.interpolate(5.0, 0.0).is_none());
    let c = field.conj();
    assert_eq!(c.at(4, 4), field.at(4, 4).conj());
}
