//! Static SVG pictures of subdivisions, curves and divisors.
//!
//! Floats appear only here, for drawing coordinates. The picture uses plane
//! units with `y` flipped, a lattice grid, and a viewBox equal to the
//! bounding box plus one unit of margin.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::curve::{Divisor, PlaneCurve, Shape};
use crate::geom::Point2;
use crate::subdiv::Subdivision;

struct Frame {
    min_x: i64,
    min_y: i64,
    max_x: i64,
    max_y: i64,
}

impl Frame {
    fn around(points: &[(f64, f64)]) -> Frame {
        if points.is_empty() {
            return Frame {
                min_x: -1,
                min_y: -1,
                max_x: 1,
                max_y: 1,
            };
        }
        let fold = |sel: fn(&(f64, f64)) -> f64, pick: fn(f64, f64) -> f64, init: f64| {
            points.iter().map(sel).fold(init, pick)
        };
        let lo_x = fold(|p| p.0, f64::min, f64::INFINITY).floor() as i64;
        let lo_y = fold(|p| p.1, f64::min, f64::INFINITY).floor() as i64;
        let hi_x = fold(|p| p.0, f64::max, f64::NEG_INFINITY).ceil() as i64;
        let hi_y = fold(|p| p.1, f64::max, f64::NEG_INFINITY).ceil() as i64;
        Frame {
            min_x: lo_x - 1,
            min_y: lo_y - 1,
            max_x: hi_x.max(lo_x + 1) + 1,
            max_y: hi_y.max(lo_y + 1) + 1,
        }
    }

    fn reach(&self) -> f64 {
        ((self.max_x - self.min_x) + (self.max_y - self.min_y)) as f64
    }
}

fn fmt(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn to_f(p: &Point2) -> (f64, f64) {
    (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0))
}

struct Doc {
    frame: Frame,
    body: String,
}

impl Doc {
    fn new(frame: Frame) -> Doc {
        let mut body = String::new();
        for x in frame.min_x..=frame.max_x {
            let _ = writeln!(
                body,
                r#"<line class="grid" x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#,
                -frame.max_y, -frame.min_y
            );
        }
        for y in frame.min_y..=frame.max_y {
            let _ = writeln!(
                body,
                r#"<line class="grid" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                frame.min_x, -y, frame.max_x, -y
            );
        }
        Doc { frame, body }
    }

    fn path(&mut self, class: &str, pts: &[(f64, f64)], closed: bool, dashed: bool) {
        let mut d = String::new();
        for (k, (x, y)) in pts.iter().enumerate() {
            let _ = write!(
                d,
                "{}{} {}",
                if k == 0 { "M" } else { " L" },
                fmt(*x),
                fmt(-*y)
            );
        }
        if closed {
            d.push_str(" Z");
        }
        let dash = if dashed {
            r#" stroke-dasharray="0.15 0.1""#
        } else {
            ""
        };
        let _ = writeln!(self.body, r#"<path class="{class}" d="{d}"{dash}/>"#);
    }

    fn label(&mut self, at: (f64, f64), w: i64) {
        let _ = writeln!(
            self.body,
            r#"<text class="weight" x="{}" y="{}">{w}</text>"#,
            fmt(at.0),
            fmt(-at.1)
        );
    }

    fn dot(&mut self, at: (f64, f64)) {
        let _ = writeln!(
            self.body,
            r#"<circle class="point" cx="{}" cy="{}" r="0.06"/>"#,
            fmt(at.0),
            fmt(-at.1)
        );
    }

    fn finish(self) -> String {
        let f = &self.frame;
        let (w, h) = (f.max_x - f.min_x, f.max_y - f.min_y);
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {w} {h}" width="{}" height="{}">"#,
            f.min_x,
            -f.max_y,
            w * 40,
            h * 40
        );
        out.push_str(
            "<style>.grid{stroke:#ddd;stroke-width:0.02}.cell{fill:#cde;fill-opacity:0.5;stroke:#246;stroke-width:0.04}\
             .edge,.ray,.line{fill:none;stroke:#a22;stroke-width:0.05}.point{fill:#246}\
             .weight{font-size:0.35px;fill:#000}</style>\n",
        );
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn lattice(p: &[i64]) -> (f64, f64) {
    (p[0] as f64, p[1] as f64)
}

pub fn render_subdivision(s: &Subdivision) -> String {
    let pts: Vec<(f64, f64)> = s
        .cells()
        .iter()
        .flat_map(|c| c.points().iter().map(|p| lattice(p)))
        .collect();
    let mut doc = Doc::new(Frame::around(&pts));
    for cell in s.cells() {
        let vs: Vec<(f64, f64)> = cell.vertices().iter().map(|p| lattice(p)).collect();
        doc.path("cell", &vs, vs.len() > 2, false);
    }
    for p in pts {
        doc.dot(p);
    }
    doc.finish()
}

fn unit(d: (i64, i64)) -> (f64, f64) {
    let (x, y) = (d.0 as f64, d.1 as f64);
    let n = (x * x + y * y).sqrt();
    (x / n, y / n)
}

fn far(base: (f64, f64), d: (i64, i64), reach: f64) -> (f64, f64) {
    let u = unit(d);
    (base.0 + u.0 * reach, base.1 + u.1 * reach)
}

fn midpoint(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0)
}

pub fn render_curve(c: &PlaneCurve) -> String {
    let mut anchors: Vec<(f64, f64)> = c.vertices().iter().map(to_f).collect();
    anchors.extend(c.lines().iter().map(|l| to_f(&l.base)));
    let mut doc = Doc::new(Frame::around(&anchors));
    let reach = doc.frame.reach();
    for e in c.edges() {
        let (a, b) = (to_f(&e.endpoints[0]), to_f(&e.endpoints[1]));
        doc.path("edge", &[a, b], false, false);
        if e.weight > 1 {
            doc.label(midpoint(a, b), e.weight as i64);
        }
    }
    for r in c.rays() {
        let a = to_f(&r.base);
        doc.path("ray", &[a, far(a, r.direction, reach)], false, false);
        if r.weight > 1 {
            doc.label(far(a, r.direction, 0.7), r.weight as i64);
        }
    }
    for l in c.lines() {
        let a = to_f(&l.base);
        let back = (-l.direction.0, -l.direction.1);
        doc.path(
            "line",
            &[far(a, back, reach), far(a, l.direction, reach)],
            false,
            false,
        );
        if l.weight > 1 {
            doc.label(far(a, l.direction, 0.7), l.weight as i64);
        }
    }
    doc.finish()
}

pub fn render_divisor(d: &Divisor) -> String {
    let pieces = d.pieces();
    let mut anchors = Vec::new();
    for (s, _) in &pieces {
        match s {
            Shape::Segment(p, q) => anchors.extend([to_f(p), to_f(q)]),
            Shape::Ray { base, .. } | Shape::Line { base, .. } => anchors.push(to_f(base)),
        }
    }
    let mut doc = Doc::new(Frame::around(&anchors));
    let reach = doc.frame.reach();
    for (s, w) in &pieces {
        let dashed = *w < 0;
        let (class, pts, label_at) = match s {
            Shape::Segment(p, q) => {
                let (a, b) = (to_f(p), to_f(q));
                ("edge", vec![a, b], midpoint(a, b))
            }
            Shape::Ray { base, direction } => {
                let a = to_f(base);
                (
                    "ray",
                    vec![a, far(a, *direction, reach)],
                    far(a, *direction, 0.7),
                )
            }
            Shape::Line { base, direction } => {
                let a = to_f(base);
                let back = (-direction.0, -direction.1);
                (
                    "line",
                    vec![far(a, back, reach), far(a, *direction, reach)],
                    far(a, *direction, 0.7),
                )
            }
        };
        doc.path(class, &pts, false, dashed);
        if w.abs() > 1 {
            doc.label(label_at, *w);
        }
    }
    doc.finish()
}
