//! SVG drawing of a point set and a matching.

use std::fmt::Write as _;

use rectmatch::geometry::{Color, PointSet};
use rectmatch::matchers::Matching;

const MARGIN: f64 = 20.0;
/// Target size of the longer side of the drawing, in pixels.
const EXTENT: f64 = 600.0;

fn fill(c: Color) -> &'static str {
    match c {
        Color::Red => "#d62728",
        Color::Blue => "#1f5fbf",
    }
}

/// Stroke and class name of a matching rectangle by its color class.
fn stroke(a: Color, b: Color) -> (&'static str, &'static str) {
    match (a, b) {
        (Color::Red, Color::Red) => ("#a01010", "red-red"),
        (Color::Blue, Color::Blue) => ("#103c8c", "blue-blue"),
        _ => ("#7b3fa0", "red-blue"),
    }
}

pub fn render(s: &PointSet, m: Option<&Matching>) -> String {
    let xs: Vec<f64> = s.iter().map(|p| p.x.to_f64()).collect();
    let ys: Vec<f64> = s.iter().map(|p| p.y.to_f64()).collect();
    let lo = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (x0, x1, y0, y1) = if s.is_empty() {
        (0.0, 1.0, 0.0, 1.0)
    } else {
        (lo(&xs), hi(&xs), lo(&ys), hi(&ys))
    };
    let span = (x1 - x0).max(y1 - y0);
    let scale = if span > 0.0 { EXTENT / span } else { 1.0 };
    let sx = |x: f64| MARGIN + (x - x0) * scale;
    let sy = |y: f64| MARGIN + (y1 - y) * scale;
    let (w, h) = (
        2.0 * MARGIN + (x1 - x0) * scale,
        2.0 * MARGIN + (y1 - y0) * scale,
    );
    let r = (scale / 8.0).clamp(1.5, 5.0);

    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.3}" height="{h:.3}" viewBox="0 0 {w:.3} {h:.3}">"#).unwrap();
    writeln!(
        out,
        "<!-- transform: y axis flipped; screen x = {MARGIN} + (x - {x0}) * {scale:.6}, screen y = {MARGIN} + ({y1} - y) * {scale:.6} -->"
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    if let Some(m) = m {
        writeln!(out, r#"<g fill="none" stroke-width="2">"#).unwrap();
        for &(i, j) in &m.pairs {
            let (a, b) = (&s[i], &s[j]);
            let (col, class) = stroke(a.color, b.color);
            let (ax, ay, bx, by) = (sx(xs[i]), sy(ys[i]), sx(xs[j]), sy(ys[j]));
            if xs[i] == xs[j] || ys[i] == ys[j] {
                writeln!(out, r#"<line class="{class}" stroke="{col}" x1="{ax:.3}" y1="{ay:.3}" x2="{bx:.3}" y2="{by:.3}"/>"#).unwrap();
            } else {
                writeln!(
                    out,
                    r#"<rect class="{class}" stroke="{col}" x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}"/>"#,
                    ax.min(bx),
                    ay.min(by),
                    (ax - bx).abs(),
                    (ay - by).abs()
                )
                .unwrap();
            }
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, "<g>").unwrap();
    for (k, p) in s.iter().enumerate() {
        writeln!(out, r#"<circle cx="{:.3}" cy="{:.3}" r="{r:.3}" fill="{}"><title>{k}: {} {} {}</title></circle>"#, sx(xs[k]), sy(ys[k]), fill(p.color), p.x, p.y, p.color.letter()).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    out.push_str("</svg>\n");
    out
}
