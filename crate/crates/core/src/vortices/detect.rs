use std::f64::consts::{PI, TAU};
use std::io::Write;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::synthesis::SampledField;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vortex {
    pub x: f64,
    pub y: f64,
    pub charge: i32,
    pub r: f64,
    pub theta: f64,
}

impl Vortex {
    pub fn new(x: f64, y: f64, charge: i32) -> Self {
        Vortex {
            x,
            y,
            charge,
            r: x.hypot(y),
            theta: y.atan2(x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VortexSet {
    pub vortices: Vec<Vortex>,
    pub sample_index: usize,
}

impl VortexSet {
    pub fn net_charge_within(&self, r: f64) -> i64 {
        self.vortices.iter().filter(|v| v.r < r).map(|v| v.charge as i64).sum()
    }

    pub fn len(&self) -> usize {
        self.vortices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vortices.is_empty()
    }
}

/// Phase difference arg(b) − arg(a) wrapped to (−π, π].
pub(crate) fn wrap(d: f64) -> f64 {
    let mut w = d % TAU;
    if w > PI {
        w -= TAU;
    } else if w <= -PI {
        w += TAU;
    }
    w
}

/// Winding number s of a closed loop through `corners`, from wrapped phase
/// differences.
pub fn plaquette_winding(corners: &[Complex64]) -> i64 {
    let total: f64 = (0..corners.len())
        .map(|k| {
            let (a, b) = (corners[k], corners[(k + 1) % corners.len()]);
            (b * a.conj()).arg()
        })
        .sum();
    (total / TAU).round() as i64
}

/// Common zero of the bilinear interpolants of ξ and η in the unit cell with
/// corner values z00, z10, z11, z01 ((u, v) = (0,0), (1,0), (1,1), (0,1)).
/// Returns (u, v), the cell centre when no root lies in the cell.
pub(crate) fn locate_zero(z00: Complex64, z10: Complex64, z11: Complex64, z01: Complex64) -> (f64, f64) {
    let coef = |f: fn(Complex64) -> f64| {
        let (p00, p10, p11, p01) = (f(z00), f(z10), f(z11), f(z01));
        [p00, p10 - p00, p01 - p00, p11 - p10 - p01 + p00]
    };
    let a = coef(|z| z.re);
    let b = coef(|z| z.im);
    // Eliminating u: (b0 + b2 v)(a1 + a3 v) − (b1 + b3 v)(a0 + a2 v) = 0.
    let qa = b[2] * a[3] - b[3] * a[2];
    let qb = b[0] * a[3] + b[2] * a[1] - b[1] * a[2] - b[3] * a[0];
    let qc = b[0] * a[1] - b[1] * a[0];
    let scale = qa.abs().max(qb.abs()).max(qc.abs());
    let mut roots = Vec::with_capacity(2);
    if scale == 0.0 {
        return (0.5, 0.5);
    }
    if qa.abs() <= 1e-12 * scale {
        if qb != 0.0 {
            roots.push(-qc / qb);
        }
    } else {
        let disc = qb * qb - 4.0 * qa * qc;
        if disc >= 0.0 {
            let sq = disc.sqrt();
            // Numerically stable pair of roots.
            let q = -0.5 * (qb + qb.signum() * sq);
            if q != 0.0 {
                roots.push(q / qa);
                roots.push(qc / q);
            } else {
                roots.push(0.0);
            }
        }
    }
    let tol = 1e-9;
    let mut best: Option<(f64, f64)> = None;
    for v in roots {
        if !(v >= -tol && v <= 1.0 + tol) {
            continue;
        }
        let den_a = a[1] + a[3] * v;
        let den_b = b[1] + b[3] * v;
        let u = if den_a.abs() >= den_b.abs() {
            -(a[0] + a[2] * v) / den_a
        } else {
            -(b[0] + b[2] * v) / den_b
        };
        if !(u >= -tol && u <= 1.0 + tol) {
            continue;
        }
        let cand = (u.clamp(0.0, 1.0), v.clamp(0.0, 1.0));
        let d = |p: (f64, f64)| (p.0 - 0.5).powi(2) + (p.1 - 0.5).powi(2);
        if best.is_none_or(|bst| d(cand) < d(bst)) {
            best = Some(cand);
        }
    }
    best.unwrap_or((0.5, 0.5))
}

fn touches_origin(half: usize, ix: usize, iy: usize) -> bool {
    (ix + 1 == half || ix == half) && (iy + 1 == half || iy == half)
}

/// Vortices of a sampled field: every plaquette not touching the origin site
/// whose wrapped phase circuit is ±2π, located at the common zero of the
/// bilinear interpolants.
pub fn detect_vortices(field: &SampledField) -> Result<VortexSet> {
    let g = field.grid;
    let size = g.size();
    let h = g.h();
    let phase: Vec<f64> = field.values.iter().map(|z| z.arg()).collect();
    let at = |ix: usize, iy: usize| phase[iy * size + ix];
    let mut vortices = Vec::new();
    for iy in 0..size - 1 {
        for ix in 0..size - 1 {
            if touches_origin(g.half(), ix, iy) {
                continue;
            }
            let (p00, p10, p11, p01) = (at(ix, iy), at(ix + 1, iy), at(ix + 1, iy + 1), at(ix, iy + 1));
            let total = wrap(p10 - p00) + wrap(p11 - p10) + wrap(p01 - p11) + wrap(p00 - p01);
            let s = (total / TAU).round() as i64;
            if s == 0 {
                continue;
            }
            let (x0, y0) = (g.coord(ix), g.coord(iy));
            if s.abs() >= 2 {
                return Err(Error::Resolution {
                    x: x0 + 0.5 * h,
                    y: y0 + 0.5 * h,
                    winding: s,
                });
            }
            let (u, v) = locate_zero(
                field.at(ix, iy),
                field.at(ix + 1, iy),
                field.at(ix + 1, iy + 1),
                field.at(ix, iy + 1),
            );
            let vx = Vortex::new(x0 + u * h, y0 + v * h, s as i32);
            if vx.r >= h {
                vortices.push(vx);
            }
        }
    }
    Ok(VortexSet {
        vortices,
        sample_index: field.sample_index,
    })
}

/// Winding of the eight-site loop around the four plaquettes excluded at the
/// origin: the flux charge n plus any vortex hidden in that block.
pub fn origin_block_charge(field: &SampledField) -> i64 {
    let c = field.grid.half();
    let loop_sites = [
        (c - 1, c - 1),
        (c, c - 1),
        (c + 1, c - 1),
        (c + 1, c),
        (c + 1, c + 1),
        (c, c + 1),
        (c - 1, c + 1),
        (c - 1, c),
    ];
    let z: Vec<Complex64> = loop_sites.iter().map(|&(ix, iy)| field.at(ix, iy)).collect();
    plaquette_winding(&z)
}

/// CSV export with columns `sample,x,y,charge`.
pub fn write_vortex_csv<W: Write>(mut out: W, sets: &[VortexSet]) -> std::io::Result<()> {
    writeln!(out, "sample,x,y,charge")?;
    for set in sets {
        for v in &set.vortices {
            writeln!(out, "{},{:.16e},{:.16e},{}", set.sample_index, v.x, v.y, v.charge)?;
        }
    }
    Ok(())
}
