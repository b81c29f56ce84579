use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::synthesis::{ModalCoefficients, RadialTable, SampledField};

/// Below this modulus a circle sample is treated as hitting a vortex.
const MIN_MODULUS: f64 = 1e-12;
const MAX_DEPTH: u32 = 40;

/// Winding number of f(θ) around the circle of radius `radius`, from
/// `points` equally spaced samples; any step whose phase change exceeds π/2 is
/// bisected until it does not.
pub fn circle_winding<F>(f: F, radius: f64, points: usize) -> Result<i64>
where
    F: Fn(f64) -> Option<Complex64>,
{
    let sample = |t: f64| -> Result<Complex64> {
        let z = f(t).ok_or(Error::Interpolation { radius })?;
        if z.norm() < MIN_MODULUS {
            return Err(Error::Interpolation { radius });
        }
        Ok(z)
    };
    let step = TAU / points as f64;
    let first = sample(0.0)?;
    let mut prev = first;
    let mut total = 0.0;
    for k in 1..=points {
        let t1 = k as f64 * step;
        let z1 = if k == points { first } else { sample(t1)? };
        total += segment(&sample, t1 - step, t1, prev, z1, 0)?;
        prev = z1;
    }
    Ok((total / TAU).round() as i64)
}

fn segment<S>(sample: &S, t0: f64, t1: f64, z0: Complex64, z1: Complex64, depth: u32) -> Result<f64>
where
    S: Fn(f64) -> Result<Complex64>,
{
    let d = (z1 * z0.conj()).arg();
    if d.abs() <= 0.5 * PI || depth >= MAX_DEPTH {
        return Ok(d);
    }
    let tm = 0.5 * (t0 + t1);
    let zm = sample(tm)?;
    Ok(segment(sample, t0, tm, z0, zm, depth + 1)? + segment(sample, tm, t1, zm, z1, depth + 1)?)
}

/// Winding of the bilinearly interpolated field around the centred circle of
/// radius `radius`, sampled at max(64, 16R, 8πR/h) points plus refinement.
pub fn boundary_winding(field: &SampledField, radius: f64) -> Result<i64> {
    let g = field.grid;
    if !(radius > 0.0 && radius <= g.domain_radius()) {
        return Err(Error::InvalidParameter(format!(
            "circle radius {radius} must lie in (0, {}]",
            g.domain_radius()
        )));
    }
    let points = 64usize.max((16.0 * radius).ceil() as usize).max((8.0 * PI * radius / g.h()).ceil() as usize);
    circle_winding(|t| field.interpolate(radius * t.cos(), radius * t.sin()), radius, points)
}

/// Winding of the exact modal field around a centred circle whose Bessel
/// values are in `table`.
pub fn modal_circle_winding(coeffs: &ModalCoefficients, table: &RadialTable, points: usize) -> Result<i64> {
    circle_winding(|t| Some(coeffs.evaluate(table, t)), table.r, points)
}
