//! Deterministic SVG rendering of a region and its divide.
//!
//! One lattice unit is 20 user units and every drawn coordinate is an
//! integer, so output bytes depend only on the input.

use divides::{Component, Divide, LatticePoint, Region};
use std::fmt::Write;

const UNIT: i64 = 20;
/// Reflection corners are rounded starting a quarter unit before the vertex.
const CORNER: i64 = UNIT / 4;

struct Frame {
    x_min: i64,
    y_max: i64,
}

impl Frame {
    fn x(&self, wx: i64) -> i64 {
        (wx - self.x_min + 1) * UNIT
    }

    fn y(&self, wy: i64) -> i64 {
        (self.y_max - wy + 1) * UNIT
    }

    fn point(&self, p: LatticePoint) -> (i64, i64) {
        (self.x(p.x), self.y(p.y))
    }
}

pub fn render(region: &Region, divide: &Divide) -> String {
    let frame = Frame {
        x_min: region.offset.0,
        y_max: region.offset.1 + region.stair.height(),
    };
    let width = (region.stair.width() + 2) * UNIT;
    let height = (region.stair.height() + 2) * UNIT;

    let mut svg = String::new();
    writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();

    let mut points = String::new();
    for (i, p) in region.boundary_polygon().iter().enumerate() {
        if i > 0 {
            points.push(' ');
        }
        let (u, v) = frame.point(*p);
        write!(points, "{u},{v}").unwrap();
    }
    writeln!(
        svg,
        "  <polygon points=\"{points}\" fill=\"#e9eef8\" stroke=\"#9aa4bd\" stroke-width=\"1\"/>"
    )
    .unwrap();

    for component in &divide.components {
        writeln!(
            svg,
            "  <path d=\"{}\" fill=\"none\" stroke=\"#27418d\" stroke-width=\"3\" \
             stroke-linecap=\"round\"/>",
            component_path(component, &frame)
        )
        .unwrap();
    }

    for p in region.concave_points() {
        let (u, v) = frame.point(p);
        writeln!(
            svg,
            "  <circle cx=\"{u}\" cy=\"{v}\" r=\"5\" fill=\"none\" stroke=\"#555f72\" \
             stroke-width=\"2\"/>"
        )
        .unwrap();
    }
    for p in &divide.double_points {
        let (u, v) = frame.point(*p);
        writeln!(svg, "  <circle cx=\"{u}\" cy=\"{v}\" r=\"5\" fill=\"#b3382e\"/>").unwrap();
    }

    svg.push_str("</svg>\n");
    svg
}

/// Path for one walk: straight through double points, a small quadratic
/// corner at each reflection. Closed walks start mid-edge so every vertex
/// gets its corner treatment.
fn component_path(component: &Component, frame: &Frame) -> String {
    let vs = &component.vertices;
    let mut d = String::new();
    if component.closed {
        let n = vs.len();
        let (mx, my) = edge_midpoint(vs[0], vs[1], frame);
        write!(d, "M {mx} {my}").unwrap();
        for k in 1..=n {
            let prev = vs[(k - 1) % n];
            let here = vs[k % n];
            let next = vs[(k + 1) % n];
            write_vertex(&mut d, prev, here, next, frame);
        }
        d.push_str(" Z");
    } else {
        let (u, v) = frame.point(vs[0]);
        write!(d, "M {u} {v}").unwrap();
        for k in 1..vs.len() - 1 {
            write_vertex(&mut d, vs[k - 1], vs[k], vs[k + 1], frame);
        }
        let (u, v) = frame.point(vs[vs.len() - 1]);
        write!(d, " L {u} {v}").unwrap();
    }
    d
}

fn edge_midpoint(a: LatticePoint, b: LatticePoint, frame: &Frame) -> (i64, i64) {
    let (ax, ay) = frame.point(a);
    let (bx, by) = frame.point(b);
    ((ax + bx) / 2, (ay + by) / 2)
}

fn write_vertex(
    d: &mut String,
    prev: LatticePoint,
    here: LatticePoint,
    next: LatticePoint,
    frame: &Frame,
) {
    let incoming = (here.x - prev.x, here.y - prev.y);
    let outgoing = (next.x - here.x, next.y - here.y);
    let (u, v) = frame.point(here);
    if incoming == outgoing {
        write!(d, " L {u} {v}").unwrap();
    } else {
        // pull back a quarter unit along each diagonal; the svg y-axis flip
        // negates the vertical component
        let a = (u - incoming.0 * CORNER, v + incoming.1 * CORNER);
        let b = (u + outgoing.0 * CORNER, v - outgoing.1 * CORNER);
        write!(d, " L {} {} Q {u} {v} {} {}", a.0, a.1, b.0, b.1).unwrap();
    }
}
