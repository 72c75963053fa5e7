// SPDX-License-Identifier: Apache-2.0

//! SVG drawing of a lattice triangle over the surrounding lattice points.
//!
//! `x + y w` is drawn at `(x - y/2, y sqrt(3)/2)`, with the SVG y axis
//! flipped so that `w` points up and to the left.

use std::fmt::Write as _;

use eisenstein_heron::{EisensteinInt, LatticeTriangle, TriangleSpec};

const SCALE: f64 = 40.0;
const MARGIN: i128 = 1;
const SQRT3_2: f64 = 0.866_025_403_784_438_6;

pub fn cartesian(z: EisensteinInt) -> (f64, f64) {
    let (x, y) = (z.x as f64, z.y as f64);
    (x - y / 2.0, y * SQRT3_2)
}

pub fn render(tri: &LatticeTriangle, spec: &TriangleSpec) -> String {
    let verts = [("A", tri.a), ("B", tri.b), ("C", tri.c)];
    let xs = verts.iter().map(|(_, v)| v.x);
    let ys = verts.iter().map(|(_, v)| v.y);
    let (x_lo, x_hi) = (xs.clone().min().unwrap(), xs.max().unwrap());
    let (y_lo, y_hi) = (ys.clone().min().unwrap(), ys.max().unwrap());

    let pts: Vec<_> = [(x_lo, y_lo), (x_hi, y_lo), (x_lo, y_hi), (x_hi, y_hi)]
        .iter()
        .map(|&(x, y)| cartesian(EisensteinInt::new(x, y)))
        .collect();
    let min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min) - 1.0;
    let max_x = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max) + 1.0;
    let min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min) - 1.0;
    let max_y = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max) + 1.0;
    let to_svg = |(x, y): (f64, f64)| ((x - min_x) * SCALE, (max_y - y) * SCALE);
    let (width, height) = ((max_x - min_x) * SCALE, (max_y - min_y) * SCALE);

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.3}" height="{height:.3}" viewBox="0 0 {width:.3} {height:.3}">"#
    )
    .unwrap();
    writeln!(
        s,
        "  <title>Eisenstein lattice triangle, squared sides {} {} {}</title>",
        spec.a2, spec.b2, spec.c2
    )
    .unwrap();
    writeln!(s, r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##).unwrap();
    writeln!(s, r##"  <g fill="#9a9a9a">"##).unwrap();
    for y in (y_lo - MARGIN)..=(y_hi + MARGIN) {
        // rows are sheared, so widen the x range by the row offset
        for x in (x_lo - MARGIN - (y_hi - y_lo))..=(x_hi + MARGIN + (y_hi - y_lo)) {
            let (cx, cy) = cartesian(EisensteinInt::new(x, y));
            if cx < min_x - 0.01 || cx > max_x + 0.01 || cy < min_y - 0.01 || cy > max_y + 0.01 {
                continue;
            }
            let (px, py) = to_svg((cx, cy));
            writeln!(s, r#"    <circle cx="{px:.3}" cy="{py:.3}" r="2.5"/>"#).unwrap();
        }
    }
    writeln!(s, "  </g>").unwrap();
    let poly: Vec<String> = verts
        .iter()
        .map(|(_, v)| {
            let (px, py) = to_svg(cartesian(*v));
            format!("{px:.3},{py:.3}")
        })
        .collect();
    writeln!(
        s,
        r##"  <polygon points="{}" fill="#4a90d9" fill-opacity="0.25" stroke="#1f4e8c" stroke-width="2"/>"##,
        poly.join(" ")
    )
    .unwrap();
    for (name, v) in verts {
        let (px, py) = to_svg(cartesian(v));
        writeln!(s, r##"  <circle cx="{px:.3}" cy="{py:.3}" r="4.5" fill="#1f4e8c"/>"##).unwrap();
        writeln!(
            s,
            r#"  <text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14">{name} {}</text>"#,
            px + 6.0,
            py - 6.0,
            v
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartesian_mapping() {
        assert_eq!(cartesian(EisensteinInt::new(1, 0)), (1.0, 0.0));
        let (x, y) = cartesian(EisensteinInt::OMEGA);
        assert!((x + 0.5).abs() < 1e-12 && (y - 3f64.sqrt() / 2.0).abs() < 1e-12);
        // unit length preserved
        let (x, y) = cartesian(EisensteinInt::new(1, 1));
        assert!((x * x + y * y - 1.0).abs() < 1e-12);
    }

    #[test]
    fn render_contains_vertices_and_is_deterministic() {
        let tri = LatticeTriangle::new(
            EisensteinInt::new(1, -1),
            EisensteinInt::new(3, 3),
            EisensteinInt::ZERO,
        );
        let spec = TriangleSpec::new(9, 3, 12).unwrap();
        let a = render(&tri, &spec);
        assert_eq!(a, render(&tri, &spec));
        assert!(a.starts_with("<svg"));
        assert!(a.contains("<polygon"));
        assert!(a.contains(">A (1, -1)</text>"));
        assert!(a.matches("<circle").count() > 10);
    }
}
