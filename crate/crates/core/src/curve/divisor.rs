//! Integer combinations of segments, rays and lines in the plane.
//!
//! Pieces are grouped by supporting line. A line with primitive direction `d`
//! (first nonzero coordinate positive) is keyed by `c = n . p` for the normal
//! `n = (-d.y, d.x)`; a point on it has parameter `s = d . p`. The normal form
//! splits pieces at every endpoint, adds weights, merges equal neighbours and
//! drops zeros, so equal divisors are structurally equal.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::plane::PlaneCurve;
use crate::geom::{primitive, primitive_direction, Point2};
use crate::tropical::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportLine {
    pub direction: (i64, i64),
    pub offset: Rational,
}

impl SupportLine {
    fn through(p: &Point2, direction: (i64, i64)) -> (SupportLine, bool) {
        let (dx, dy) = primitive(direction.0, direction.1);
        let flipped = dx < 0 || (dx == 0 && dy < 0);
        let d = if flipped { (-dx, -dy) } else { (dx, dy) };
        let offset = int(-d.1) * &p.x + int(d.0) * &p.y;
        (
            SupportLine {
                direction: d,
                offset,
            },
            flipped,
        )
    }

    fn d(&self) -> Point2 {
        Point2::from_ints(self.direction.0, self.direction.1)
    }

    pub fn param(&self, p: &Point2) -> Rational {
        self.d().dot(p)
    }

    /// The point with parameter `s`.
    pub fn point_at(&self, s: &Rational) -> Point2 {
        let d = self.d();
        let n = Point2::from_ints(-self.direction.1, self.direction.0);
        d.scale(s)
            .add(&n.scale(&self.offset))
            .scale(&(Rational::one() / d.dot(&d)))
    }
}

/// An interval of parameters; `None` is an infinite end.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Piece {
    pub start: Option<Rational>,
    pub end: Option<Rational>,
    pub weight: i64,
}

impl Piece {
    fn covers(&self, s: &Rational) -> bool {
        self.start.as_ref().is_none_or(|a| a <= s) && self.end.as_ref().is_none_or(|b| s <= b)
    }
}

/// A segment, ray or line in the plane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Shape {
    Segment(Point2, Point2),
    Ray { base: Point2, direction: (i64, i64) },
    Line { base: Point2, direction: (i64, i64) },
}

impl Shape {
    fn locate(&self) -> Option<(SupportLine, Option<Rational>, Option<Rational>)> {
        match self {
            Shape::Segment(p, q) => {
                let dir = primitive_direction(&q.sub(p))?;
                let (line, _) = SupportLine::through(p, dir);
                let (a, b) = (line.param(p), line.param(q));
                let (a, b) = if a <= b { (a, b) } else { (b, a) };
                Some((line, Some(a), Some(b)))
            }
            Shape::Ray { base, direction } => {
                if *direction == (0, 0) {
                    return None;
                }
                let (line, flipped) = SupportLine::through(base, *direction);
                let s = line.param(base);
                Some(if flipped {
                    (line, None, Some(s))
                } else {
                    (line, Some(s), None)
                })
            }
            Shape::Line { base, direction } => {
                if *direction == (0, 0) {
                    return None;
                }
                let (line, _) = SupportLine::through(base, *direction);
                Some((line, None, None))
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Divisor {
    lines: BTreeMap<SupportLine, Vec<Piece>>,
}

fn sample_inside(lo: Option<&Rational>, hi: Option<&Rational>) -> Rational {
    match (lo, hi) {
        (Some(a), Some(b)) => (a + b) / int(2),
        (Some(a), None) => a + Rational::one(),
        (None, Some(b)) => b - Rational::one(),
        (None, None) => Rational::zero(),
    }
}

/// Normal form of the pieces on one line.
fn refine(pieces: &[Piece]) -> Vec<Piece> {
    let mut cuts: Vec<Rational> = pieces
        .iter()
        .flat_map(|p| p.start.iter().chain(p.end.iter()).cloned())
        .collect();
    cuts.sort();
    cuts.dedup();
    let mut bounds: Vec<Option<Rational>> = Vec::with_capacity(cuts.len() + 2);
    bounds.push(None);
    bounds.extend(cuts.into_iter().map(Some));
    bounds.push(None);
    let mut out: Vec<Piece> = Vec::new();
    for w in bounds.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let s = sample_inside(lo.as_ref(), hi.as_ref());
        let weight: i64 = pieces
            .iter()
            .filter(|p| p.covers(&s))
            .map(|p| p.weight)
            .sum();
        match out.last_mut() {
            Some(last) if last.weight == weight && last.end == *lo => last.end = hi.clone(),
            _ => out.push(Piece {
                start: lo.clone(),
                end: hi.clone(),
                weight,
            }),
        }
    }
    out.retain(|p| p.weight != 0);
    out
}

impl Divisor {
    pub fn new() -> Self {
        Divisor::default()
    }

    pub fn from_shapes<'a>(shapes: impl IntoIterator<Item = (&'a Shape, i64)>) -> Self {
        let mut raw: BTreeMap<SupportLine, Vec<Piece>> = BTreeMap::new();
        for (shape, weight) in shapes {
            if let Some((line, start, end)) = shape.locate() {
                raw.entry(line)
                    .or_default()
                    .push(Piece { start, end, weight });
            }
        }
        Divisor::normalize(raw)
    }

    fn normalize(raw: BTreeMap<SupportLine, Vec<Piece>>) -> Self {
        let lines = raw
            .into_iter()
            .map(|(line, pieces)| (line, refine(&pieces)))
            .filter(|(_, pieces)| !pieces.is_empty())
            .collect();
        Divisor { lines }
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn lines(&self) -> &BTreeMap<SupportLine, Vec<Piece>> {
        &self.lines
    }

    /// Pieces as shapes with their weights, in normal-form order.
    pub fn pieces(&self) -> Vec<(Shape, i64)> {
        let mut out = Vec::new();
        for (line, pieces) in &self.lines {
            for p in pieces {
                let shape = match (&p.start, &p.end) {
                    (Some(a), Some(b)) => Shape::Segment(line.point_at(a), line.point_at(b)),
                    (Some(a), None) => Shape::Ray {
                        base: line.point_at(a),
                        direction: line.direction,
                    },
                    (None, Some(b)) => Shape::Ray {
                        base: line.point_at(b),
                        direction: (-line.direction.0, -line.direction.1),
                    },
                    (None, None) => Shape::Line {
                        base: line.point_at(&Rational::zero()),
                        direction: line.direction,
                    },
                };
                out.push((shape, p.weight));
            }
        }
        out
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        let mut raw = self.lines.clone();
        for (line, pieces) in &other.lines {
            raw.entry(line.clone())
                .or_default()
                .extend(pieces.iter().cloned());
        }
        Divisor::normalize(raw)
    }

    pub fn neg(&self) -> Divisor {
        let lines = self
            .lines
            .iter()
            .map(|(l, ps)| {
                (
                    l.clone(),
                    ps.iter()
                        .map(|p| Piece {
                            weight: -p.weight,
                            ..p.clone()
                        })
                        .collect(),
                )
            })
            .collect();
        Divisor { lines }
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        self.add(&other.neg())
    }

    /// The weight carried by every point of `shape`, or `None` if it varies
    /// along the shape. Points off the divisor have weight 0.
    pub fn weight_on(&self, shape: &Shape) -> Option<i64> {
        let (line, start, end) = shape.locate()?;
        let query = Piece {
            start,
            end,
            weight: 0,
        };
        let Some(pieces) = self.lines.get(&line) else {
            return Some(0);
        };
        let mut cuts: Vec<Rational> = pieces
            .iter()
            .flat_map(|p| p.start.iter().chain(p.end.iter()).cloned())
            .collect();
        cuts.extend(query.start.iter().chain(query.end.iter()).cloned());
        cuts.sort();
        cuts.dedup();
        let mut bounds: Vec<Option<Rational>> = vec![None];
        bounds.extend(cuts.into_iter().map(Some));
        bounds.push(None);
        let mut seen: Option<i64> = None;
        for w in bounds.windows(2) {
            let s = sample_inside(w[0].as_ref(), w[1].as_ref());
            if !query.covers(&s) {
                continue;
            }
            let weight = pieces.iter().find(|p| p.covers(&s)).map_or(0, |p| p.weight);
            if seen.is_some_and(|x| x != weight) {
                return None;
            }
            seen = Some(weight);
        }
        seen
    }
}

/// Weighted segments, rays and lines of a curve as a divisor.
pub fn curve_to_divisor(c: &PlaneCurve) -> Divisor {
    let mut shapes: Vec<(Shape, i64)> = Vec::new();
    for e in c.edges() {
        shapes.push((
            Shape::Segment(e.endpoints[0].clone(), e.endpoints[1].clone()),
            e.weight as i64,
        ));
    }
    for r in c.rays() {
        shapes.push((
            Shape::Ray {
                base: r.base.clone(),
                direction: r.direction,
            },
            r.weight as i64,
        ));
    }
    for l in c.lines() {
        shapes.push((
            Shape::Line {
                base: l.base.clone(),
                direction: l.direction,
            },
            l.weight as i64,
        ));
    }
    Divisor::from_shapes(shapes.iter().map(|(s, w)| (s, *w)))
}

pub fn divisor_sub(d1: &Divisor, d2: &Divisor) -> Divisor {
    d1.sub(d2)
}
