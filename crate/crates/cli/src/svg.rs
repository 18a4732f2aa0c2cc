//! Hand-rolled SVG emission: instance overviews and witness figures.
//!
//! The drawings are deliberately plain — every point and edge of the
//! instance, with the witness (when given) bold and stroked per colour.

use std::fmt::Write;

use hcn_core::matroid::GraphSpec;
use hcn_core::{Colouring, Point, PointSet};

const SIZE: f64 = 640.0;
const MARGIN: f64 = 48.0;

/// Deterministic, well-separated stroke per colour id (ids start at 1).
fn stroke(colour: u32) -> String {
    format!("hsl({}, 70%, 42%)", (u64::from(colour - 1) * 137) % 360)
}

fn header() -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\" \
         width=\"{SIZE}\" height=\"{SIZE}\">\n"
    )
}

fn line(out: &mut String, a: (f64, f64), b: (f64, f64), stroke: &str, width: f64) {
    writeln!(
        out,
        "  <line x1=\"{:.1}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" \
         stroke=\"{stroke}\" stroke-width=\"{width}\"/>",
        a.0, a.1, b.0, b.1
    )
    .expect("writing to a String cannot fail");
}

fn dot(out: &mut String, p: (f64, f64), r: f64, fill: &str) {
    writeln!(
        out,
        "  <circle cx=\"{:.1}\" cy=\"{:.1}\" r=\"{r}\" fill=\"{fill}\"/>",
        p.0, p.1
    )
    .expect("writing to a String cannot fail");
}

fn label(out: &mut String, p: (f64, f64), text: &str) {
    writeln!(
        out,
        "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"14\" font-family=\"monospace\">{text}</text>",
        p.0, p.1
    )
    .expect("writing to a String cannot fail");
}

/// Maps instance coordinates into the viewport, flipping y so the picture
/// matches the usual mathematical orientation.
fn projector(points: &[Point]) -> impl Fn(Point) -> (f64, f64) + '_ {
    let xs = || points.iter().map(|p| p.x);
    let ys = || points.iter().map(|p| p.y);
    let (x0, x1) = (xs().min().unwrap(), xs().max().unwrap());
    let (y0, y1) = (ys().min().unwrap(), ys().max().unwrap());
    let span = ((x1 - x0).max(y1 - y0)).max(1) as f64;
    let scale = (SIZE - 2.0 * MARGIN) / span;
    move |p: Point| {
        let x = MARGIN + (p.x - x0) as f64 * scale;
        let y = SIZE - MARGIN - (p.y - y0) as f64 * scale;
        (x, y)
    }
}

/// The full edge set faintly, the witness edges bold in their colours.
pub fn point_set_svg(ps: &PointSet, witness: Option<(&[usize], &Colouring)>) -> String {
    let mut out = header();
    let project = projector(ps.points());
    for e in ps.edges() {
        let (a, b) = ps.segment(e);
        line(&mut out, project(a), project(b), "#cccccc", 1.0);
    }
    if let Some((edges, c)) = witness {
        for &idx in edges {
            let (a, b) = ps.segment(ps.edge_at(idx));
            line(&mut out, project(a), project(b), &stroke(c.colour_of(idx)), 3.5);
        }
    }
    for v in 0..ps.len() {
        let p = project(ps.point(v));
        dot(&mut out, p, 5.0, "#222222");
        label(&mut out, (p.0 + 8.0, p.1 - 8.0), &v.to_string());
    }
    out.push_str("</svg>\n");
    out
}

/// A graphic matroid as its graph: vertices on a circle, ground elements as
/// edges, the witness bold in its colours.
pub fn graph_svg(g: &GraphSpec, witness: &[usize], c: &Colouring) -> String {
    let mut out = header();
    let n = g.vertex_count();
    let centre = SIZE / 2.0;
    let radius = centre - MARGIN;
    let place = |v: usize| {
        let angle = std::f64::consts::TAU * v as f64 / n as f64;
        (centre + radius * angle.cos(), centre - radius * angle.sin())
    };
    for &(u, v) in g.edges() {
        line(&mut out, place(u), place(v), "#cccccc", 1.0);
    }
    for &idx in witness {
        let (u, v) = g.edges()[idx];
        line(&mut out, place(u), place(v), &stroke(c.colour_of(idx)), 3.5);
    }
    for v in 0..n {
        let p = place(v);
        dot(&mut out, p, 5.0, "#222222");
        label(&mut out, (p.0 + 8.0, p.1 - 8.0), &v.to_string());
    }
    out.push_str("</svg>\n");
    out
}

/// A matroid without geometry: the ground set as a row of dots coloured by
/// class, witness elements ringed.
pub fn ground_set_svg(ground: usize, witness: &[usize], c: &Colouring) -> String {
    let mut out = header();
    let step = (SIZE - 2.0 * MARGIN) / ground.max(2) as f64;
    let place = |e: usize| (MARGIN + step * (e as f64 + 0.5), SIZE / 2.0);
    for e in 0..ground {
        let p = place(e);
        if witness.contains(&e) {
            dot(&mut out, p, 14.0, "#222222");
        }
        dot(&mut out, p, 10.0, &stroke(c.colour_of(e)));
        label(&mut out, (p.0 - 4.0, p.1 + 32.0), &e.to_string());
    }
    out.push_str("</svg>\n");
    out
}
