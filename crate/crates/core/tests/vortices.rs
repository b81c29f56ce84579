use std::f64::consts::PI;

use abwave::synthesis::{
    sample_modal_coefficients, synthesize_ab_field, EnsembleSpec, Grid, RadialTable, SampledField,
};
use abwave::vortices::{
    boundary_winding, circle_winding, detect_vortices, modal_circle_winding, nearest_vortex, origin_block_charge,
    plaquette_winding, write_vortex_csv, PairCorrelation, PolarMesh, RadialHistogram, Vortex, VortexSet,
};
use abwave::{Error, FluxParameter};
use num_complex::Complex64;

fn flux(a: f64) -> FluxParameter {
    FluxParameter::new(a).unwrap()
}

fn field_from<F: Fn(Complex64) -> Complex64>(grid: Grid, f: F) -> SampledField {
    let n = grid.size();
    let mut values = Vec::with_capacity(n * n);
    for iy in 0..n {
        for ix in 0..n {
            values.push(f(Complex64::new(grid.coord(ix), grid.coord(iy))));
        }
    }
    SampledField::new(grid, values, flux(0.0), 0).unwrap()
}

#[test]
fn single_vortex_is_located_exactly() {
    let grid = Grid::new(3.0, 0.2).unwrap();
    let z0 = Complex64::new(0.93, -1.27);
    let field = field_from(grid, |z| z - z0);
    let set = detect_vortices(&field).unwrap();
    assert_eq!(set.len(), 1);
    let v = set.vortices[0];
    assert_eq!(v.charge, 1);
    assert!((v.x - z0.re).abs() < 1e-12 && (v.y - z0.im).abs() < 1e-12);
    assert!((v.r - z0.norm()).abs() < 1e-12);
    assert_eq!(set.net_charge_within(2.0), 1);
    assert_eq!(set.net_charge_within(1.0), 0);
}

#[test]
fn conjugation_flips_every_charge() {
    let spec = EnsembleSpec::new(flux(0.25), 4, 3, 5.0).unwrap();
    let grid = Grid::new(5.0, 0.2).unwrap();
    for k in 0..3 {
        let f = synthesize_ab_field(&spec, k, grid).unwrap();
        let a = detect_vortices(&f).unwrap();
        let b = detect_vortices(&f.conj()).unwrap();
        assert!(!a.is_empty());
        assert_eq!(a.len(), b.len());
        for (p, q) in a.vortices.iter().zip(&b.vortices) {
            assert_eq!(p.charge, -q.charge);
            assert!((p.x - q.x).abs() < 1e-9 && (p.y - q.y).abs() < 1e-9);
        }
    }
}

#[test]
fn planted_dipole_is_resolved() {
    let h = 0.2;
    let grid = Grid::new(4.0, h).unwrap();
    let a = Complex64::new(1.05, 0.53);
    let b = a + Complex64::new(3.0 * h, 0.07);
    let field = field_from(grid, |z| (z - a) * (z - b).conj());
    let set = detect_vortices(&field).unwrap();
    assert_eq!(set.len(), 2);
    let plus = set.vortices.iter().find(|v| v.charge == 1).unwrap();
    let minus = set.vortices.iter().find(|v| v.charge == -1).unwrap();
    assert!((Complex64::new(plus.x, plus.y) - a).norm() < 0.05);
    assert!((Complex64::new(minus.x, minus.y) - b).norm() < 0.05);
}

#[test]
fn undersampled_field_is_rejected() {
    // A checkerboard puts a phase step of exactly π on every plaquette edge.
    let grid = Grid::new(1.0, 0.2).unwrap();
    let n = grid.size();
    let values = (0..n * n)
        .map(|k| Complex64::new(if (k % n + k / n) % 2 == 0 { 1.0 } else { -1.0 }, 0.0))
        .collect();
    let field = SampledField::new(grid, values, flux(0.0), 0).unwrap();
    assert!(matches!(detect_vortices(&field), Err(Error::Resolution { winding: 2, .. })));
}

#[test]
fn flux_site_charge_is_reported_separately() {
    let grid = Grid::new(2.0, 0.2).unwrap();
    let field = field_from(grid, |z| z * Complex64::new(0.0, 1.0));
    assert!(detect_vortices(&field).unwrap().is_empty());
    assert_eq!(origin_block_charge(&field), 1);
    let field = field_from(grid, |z| z.conj());
    assert_eq!(origin_block_charge(&field), -1);
}

#[test]
fn plaquette_winding_of_simple_loops() {
    let square = |f: fn(Complex64) -> Complex64| -> Vec<Complex64> {
        [(1.0, -1.0), (1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0)]
            .iter()
            .map(|&(x, y)| f(Complex64::new(x, y)))
            .collect()
    };
    assert_eq!(plaquette_winding(&square(|z| z)), 1);
    assert_eq!(plaquette_winding(&square(|z| z.conj())), -1);
    assert_eq!(plaquette_winding(&square(|z| z + 5.0)), 0);
}

#[test]
fn circle_winding_counts_enclosed_charge() {
    let f = |th: f64| Some(Complex64::from_polar(2.0, th).powi(3) - 0.5);
    assert_eq!(circle_winding(f, 1.0, 16).unwrap(), 3);
    let g = |th: f64| {
        let z = Complex64::from_polar(1.0, th);
        Some((z - 0.2).conj() * (z + Complex64::new(0.0, 0.5)).conj() * (z - 3.0))
    };
    assert_eq!(circle_winding(g, 1.0, 8).unwrap(), -2);
    assert!(circle_winding(|_| Some(Complex64::new(0.0, 0.0)), 1.0, 16).is_err());
}

#[test]
fn boundary_winding_balances_enclosed_vortices() {
    for &alpha in &[0.0, 0.25, 1.35, -0.4] {
        let spec = EnsembleSpec::new(flux(alpha), 17, 8, 6.0).unwrap();
        let grid = Grid::new(6.0, 0.2).unwrap();
        for k in 0..spec.n_samples {
            let f = synthesize_ab_field(&spec, k, grid).unwrap();
            let set = detect_vortices(&f).unwrap();
            for &r in &[2.03, 4.51] {
                let w = boundary_winding(&f, r).unwrap();
                assert_eq!(w, origin_block_charge(&f) + set.net_charge_within(r), "alpha={alpha} sample {k} R={r}");
            }
        }
    }
}

#[test]
fn grid_and_modal_circle_windings_agree() {
    let spec = EnsembleSpec::new(flux(0.6), 2, 6, 6.0).unwrap();
    let grid = Grid::new(6.0, 0.2).unwrap();
    let table = RadialTable::new(spec.flux.beta(), 3.7, spec.truncation_l()).unwrap();
    for k in 0..spec.n_samples {
        let f = synthesize_ab_field(&spec, k, grid).unwrap();
        let c = sample_modal_coefficients(&spec, k).unwrap();
        assert_eq!(boundary_winding(&f, 3.7).unwrap(), modal_circle_winding(&c, &table, 256).unwrap());
    }
}

#[test]
fn polar_mesh_accounts_for_circle_winding() {
    let spec = EnsembleSpec::new(flux(0.45), 5, 10, 3.0).unwrap();
    let l = spec.truncation_l();
    let mesh = PolarMesh::new(spec.flux, 1e-30, 3.0, 96, l).unwrap();
    let table = RadialTable::new(spec.flux.beta(), 2.5, l).unwrap();
    for k in 0..spec.n_samples {
        let c = sample_modal_coefficients(&spec, k).unwrap();
        let found = mesh.detect(&c).unwrap();
        let inside: i64 = found.iter().filter(|v| v.r < 2.5).map(|v| v.charge as i64).sum();
        assert_eq!(modal_circle_winding(&c, &table, 256).unwrap(), inside, "sample {k}");
        let nearest = nearest_vortex(&c, &mesh).unwrap();
        let min = found.iter().map(|v| v.r).fold(f64::INFINITY, f64::min);
        assert_eq!(nearest.map(|v| v.r), (min.is_finite()).then_some(min));
    }
}

#[test]
fn radial_histogram_counts_per_area() {
    let mut h = RadialHistogram::uniform(0.0, 3.0, 1.0).unwrap();
    assert_eq!(h.bins(), 3);
    assert_eq!(h.bin_of(0.5), Some(0));
    assert_eq!(h.bin_of(2.99), Some(2));
    assert_eq!(h.bin_of(3.5), None);
    let set = VortexSet {
        vortices: vec![Vortex::new(0.5, 0.0, 1), Vortex::new(0.0, 1.5, -1), Vortex::new(-1.2, -1.2, 1)],
        sample_index: 0,
    };
    h.accumulate(&set);
    h.accumulate(&VortexSet {
        vortices: vec![],
        sample_index: 1,
    });
    let (rho0, _) = h.rho(0);
    assert!((rho0 - 0.5 / PI).abs() < 1e-15);
    let (rho1, se1) = h.rho(1);
    assert!((rho1 - 0.0).abs() < 1e-15 && se1 == 0.0);
    let (d1, _) = h.delta(1);
    assert!((d1 - 1.0 / (3.0 * PI)).abs() < 1e-15);
    let mut other = RadialHistogram::uniform(0.0, 3.0, 1.0).unwrap();
    other.merge(&h).unwrap();
    assert_eq!(other.counts_plus, h.counts_plus);
    assert!(other.merge(&RadialHistogram::uniform(0.0, 2.0, 1.0).unwrap()).is_err());
}

#[test]
fn pair_correlation_of_a_lattice_pair() {
    let mut pc = PairCorrelation::uniform(0.5, 2.0, 6.0).unwrap();
    let set = VortexSet {
        vortices: vec![Vortex::new(0.1, 0.0, 1), Vortex::new(1.1, 0.0, -1)],
        sample_index: 0,
    };
    pc.accumulate(&set);
    // The pair sits in the bin [1, 1.5): unlike charges only.
    let (gp, _) = pc.g_plus(2);
    let (gm, _) = pc.g_minus(2);
    let (gs, _) = pc.g_s(2);
    assert_eq!(gp, 0.0);
    assert!(gm > 0.0 && (gs + gm).abs() < 1e-15);
    assert_eq!(pc.g(0).0, 0.0);
}

#[test]
fn vortex_csv_layout() {
    let set = VortexSet {
        vortices: vec![Vortex::new(0.5, -0.25, -1)],
        sample_index: 3,
    };
    let mut buf = Vec::new();
    write_vortex_csv(&mut buf, &[set]).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "sample,x,y,charge");
    assert_eq!(lines[1], "3,5.0000000000000000e-1,-2.5000000000000000e-1,-1");
}
