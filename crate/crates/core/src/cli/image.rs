//! Field dumps and phase maps.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::flux::FluxParameter;
use crate::synthesis::{Grid, SampledField};

/// Header fields of a v1 dump.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldHeader {
    pub size: usize,
    pub h: f64,
    pub alpha: f64,
    pub seed: u64,
    pub index: usize,
}

/// Text dump: `abwave-field v1 <size> <h> <alpha> <seed> <index>`, then one
/// `re im` line per site, rows of constant y from the bottom, x fastest.
pub fn write_field<W: Write>(field: &SampledField, seed: u64, mut out: W) -> std::io::Result<()> {
    let g = field.grid;
    writeln!(
        out,
        "abwave-field v1 {} {} {} {} {}",
        g.size(),
        g.h(),
        field.flux.alpha(),
        seed,
        field.sample_index
    )?;
    for v in &field.values {
        writeln!(out, "{:.16e} {:.16e}", v.re, v.im)?;
    }
    Ok(())
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(format!("field dump: {}", msg.into()))
}

/// Reads a dump written by [`write_field`].
pub fn read_field<R: BufRead>(input: R) -> Result<(FieldHeader, SampledField)> {
    let mut lines = input.lines();
    let head = lines.next().ok_or_else(|| bad("empty input"))?.map_err(|e| bad(e.to_string()))?;
    let parts: Vec<&str> = head.split_whitespace().collect();
    if parts.len() != 7 || parts[0] != "abwave-field" || parts[1] != "v1" {
        return Err(bad(format!("unrecognised header {head:?}")));
    }
    let num = |s: &str| s.parse::<f64>().map_err(|_| bad(format!("bad number {s:?}")));
    let int = |s: &str| s.parse::<u64>().map_err(|_| bad(format!("bad integer {s:?}")));
    let header = FieldHeader {
        size: int(parts[2])? as usize,
        h: num(parts[3])?,
        alpha: num(parts[4])?,
        seed: int(parts[5])?,
        index: int(parts[6])? as usize,
    };
    if header.size % 2 == 0 {
        return Err(bad("size must be odd"));
    }
    let half = header.size / 2;
    let grid = Grid::new(half as f64 * header.h, header.h)?;
    if grid.size() != header.size {
        return Err(bad("size and spacing disagree"));
    }
    let mut values = Vec::with_capacity(header.size * header.size);
    for line in lines {
        let line = line.map_err(|e| bad(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (re, im) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (num(a)?, num(b)?),
            _ => return Err(bad(format!("bad site line {line:?}"))),
        };
        values.push(Complex64::new(re, im));
    }
    let field = SampledField::new(grid, values, FluxParameter::new(header.alpha)?, header.index)?;
    Ok((header, field))
}

/// Fully saturated HSV colour for hue in [0, 1).
pub fn hue_rgb(hue: f64) -> [u8; 3] {
    let h = hue.rem_euclid(1.0) * 6.0;
    let x = 1.0 - (h % 2.0 - 1.0).abs();
    let (r, g, b) = match h as u32 {
        0 => (1.0, x, 0.0),
        1 => (x, 1.0, 0.0),
        2 => (0.0, 1.0, x),
        3 => (0.0, x, 1.0),
        4 => (x, 0.0, 1.0),
        _ => (1.0, 0.0, x),
    };
    let q = |v: f64| (v * 255.0).round() as u8;
    [q(r), q(g), q(b)]
}

/// Pixel colours, top row first, with hue (χ + π)/2π and a white disk over the
/// flux line when α ≠ 0.
pub fn phase_pixels(field: &SampledField) -> Vec<[u8; 3]> {
    let g = field.grid;
    let n = g.size();
    let disk = (2.0 * g.h()).max(0.02 * g.domain_radius());
    let mut px = Vec::with_capacity(n * n);
    for row in 0..n {
        let iy = n - 1 - row;
        for ix in 0..n {
            let (x, y) = (g.coord(ix), g.coord(iy));
            if field.flux.alpha() != 0.0 && x.hypot(y) <= disk {
                px.push([255, 255, 255]);
            } else {
                let chi = field.at(ix, iy).arg();
                px.push(hue_rgb((chi + std::f64::consts::PI) / std::f64::consts::TAU));
            }
        }
    }
    px
}

/// Binary PPM (P6) phase map.
pub fn write_ppm<W: Write>(field: &SampledField, mut out: W) -> std::io::Result<()> {
    let n = field.grid.size();
    write!(out, "P6\n{n} {n}\n255\n")?;
    let bytes: Vec<u8> = phase_pixels(field).into_iter().flatten().collect();
    out.write_all(&bytes)
}

/// SVG phase map, one square per site.
pub fn write_phase_svg<W: Write>(field: &SampledField, mut out: W) -> std::io::Result<()> {
    let n = field.grid.size();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{n}" height="{n}" viewBox="0 0 {n} {n}" shape-rendering="crispEdges">"#
    )?;
    for (k, [r, g, b]) in phase_pixels(field).into_iter().enumerate() {
        writeln!(
            out,
            r##"<rect x="{}" y="{}" width="1" height="1" fill="#{r:02x}{g:02x}{b:02x}"/>"##,
            k % n,
            k / n
        )?;
    }
    writeln!(out, "</svg>")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primary_hues() {
        assert_eq!(hue_rgb(0.0), [255, 0, 0]);
        assert_eq!(hue_rgb(1.0 / 3.0), [0, 255, 0]);
        assert_eq!(hue_rgb(2.0 / 3.0), [0, 0, 255]);
        assert_eq!(hue_rgb(1.0), [255, 0, 0]);
    }

    #[test]
    fn rejects_foreign_header() {
        assert!(read_field("P6\n".as_bytes()).is_err());
        assert!(read_field("abwave-field v2 3 0.2 0 1 0\n".as_bytes()).is_err());
    }
}
