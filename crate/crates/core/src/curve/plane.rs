use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{check_arity, Error, Result};
use crate::geom::linalg::solve_unique;
use crate::geom::{
    lattice_length, lattice_points, primitive, primitive_direction, Point2, Polygon,
};
use crate::subdiv::{dual_subdivision, Subdivision};
use crate::tropical::{int, Exponent, Rational, TropPoly};

/// True iff the maximum in `f(p)` is attained by at least two exponents.
/// Every point lies on the hypersurface of `-inf`.
pub fn hypersurface_member(f: &TropPoly, p: &[Rational]) -> Result<bool> {
    check_arity(f.arity(), p.len())?;
    if f.is_neg_inf() {
        return Ok(true);
    }
    let mut best: Option<Rational> = None;
    let mut count = 0;
    for (e, c) in f.terms() {
        let v = c + e.dot(p);
        match best.as_ref().map(|b| v.cmp(b)) {
            None | Some(std::cmp::Ordering::Greater) => {
                best = Some(v);
                count = 1;
            }
            Some(std::cmp::Ordering::Equal) => count += 1,
            Some(std::cmp::Ordering::Less) => {}
        }
    }
    Ok(count >= 2)
}

/// A bounded edge, dual to an interior 1-cell `dual`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CurveEdge {
    pub endpoints: [Point2; 2],
    pub weight: u64,
    pub dual: [(i64, i64); 2],
}

/// `base + t * direction` for `t >= 0` (a ray) or all `t` (a line).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CurveRay {
    pub direction: (i64, i64),
    pub base: Point2,
    pub weight: u64,
    pub dual: [(i64, i64); 2],
}

/// A weighted tropical plane curve with its dual subdivision.
///
/// `lines` is only nonempty when the Newton polygon is a segment, in which
/// case the curve is a union of parallel lines and has no vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    vertices: Vec<Point2>,
    edges: Vec<CurveEdge>,
    rays: Vec<CurveRay>,
    lines: Vec<CurveRay>,
    subdivision: Subdivision,
}

impl PlaneCurve {
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn edges(&self) -> &[CurveEdge] {
        &self.edges
    }

    pub fn rays(&self) -> &[CurveRay] {
        &self.rays
    }

    pub fn lines(&self) -> &[CurveRay] {
        &self.lines
    }

    pub fn subdivision(&self) -> &Subdivision {
        &self.subdivision
    }

    /// Replaces the weight of the `k`-th edge or ray (edges first). Only
    /// useful for building invalid curves in tests.
    #[doc(hidden)]
    pub fn with_weight(mut self, k: usize, weight: u64) -> Self {
        if k < self.edges.len() {
            self.edges[k].weight = weight;
        } else {
            self.rays[k - self.edges.len()].weight = weight;
        }
        self
    }
}

fn pair(p: &[i64]) -> (i64, i64) {
    (p[0], p[1])
}

/// Point where the monomials at `a`, `b`, `c` (affinely independent) tie.
fn tie_point(
    coeff: &BTreeMap<(i64, i64), Rational>,
    a: (i64, i64),
    b: (i64, i64),
    c: (i64, i64),
) -> Point2 {
    // (a - b) . x = c_b - c_a and (a - c) . x = c_c - c_a
    let rows = vec![
        vec![int(a.0 - b.0), int(a.1 - b.1)],
        vec![int(a.0 - c.0), int(a.1 - c.1)],
    ];
    let rhs = vec![&coeff[&b] - &coeff[&a], &coeff[&c] - &coeff[&a]];
    let x = solve_unique(rows, rhs).expect("affinely independent");
    Point2::new(x[0].clone(), x[1].clone())
}

fn outward_normal(a: (i64, i64), b: (i64, i64), inside: (i64, i64)) -> (i64, i64) {
    let n = primitive(b.1 - a.1, a.0 - b.0);
    if n.0 * (inside.0 - a.0) + n.1 * (inside.1 - a.1) > 0 {
        (-n.0, -n.1)
    } else {
        n
    }
}

/// The tropical curve `V(f)` with weights read from the dual subdivision.
pub fn plane_curve(f: &TropPoly) -> Result<PlaneCurve> {
    f.require_arity("2", |n| n == 2)?;
    f.require_nonempty("a plane curve")?;
    let subdivision = dual_subdivision(f)?;
    let canon = f.canonicalize();
    let coeff: BTreeMap<(i64, i64), Rational> = canon
        .terms()
        .map(|(e, c)| (pair(&e.0), c.clone()))
        .collect();
    let (mut vertices, mut edges, mut rays, mut lines) =
        (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    match subdivision.dimension() {
        0 => return Err(Error::DegenerateCurve("a monomial defines the empty curve")),
        1 => {
            for cell in subdivision.cells() {
                let (a, b) = (pair(&cell.vertices()[0]), pair(&cell.vertices()[1]));
                let d = Point2::from_ints(b.0 - a.0, b.1 - a.1);
                // (b - a) . x = c_a - c_b, closest point to the origin
                let base = d.scale(&((&coeff[&a] - &coeff[&b]) / d.dot(&d)));
                let mut direction = primitive(a.1 - b.1, b.0 - a.0);
                if direction.0 < 0 || (direction.0 == 0 && direction.1 < 0) {
                    direction = (-direction.0, -direction.1);
                }
                lines.push(CurveRay {
                    direction,
                    base,
                    weight: lattice_length(a, b),
                    dual: [a, b],
                });
            }
        }
        _ => {
            let cell_vertex: Vec<Point2> = subdivision
                .cells()
                .iter()
                .map(|cell| {
                    let v = cell.vertices();
                    tie_point(&coeff, pair(&v[0]), pair(&v[1]), pair(&v[2]))
                })
                .collect();
            for e in subdivision.edges() {
                let (a, b) = (pair(&e.endpoints[0]), pair(&e.endpoints[1]));
                let weight = lattice_length(a, b);
                if e.is_interior() {
                    let mut endpoints = [
                        cell_vertex[e.cells[0]].clone(),
                        cell_vertex[e.cells[1]].clone(),
                    ];
                    endpoints.sort();
                    edges.push(CurveEdge {
                        endpoints,
                        weight,
                        dual: [a, b],
                    });
                } else {
                    let cell = &subdivision.cells()[e.cells[0]];
                    let inside = cell
                        .vertices()
                        .iter()
                        .map(|p| pair(p))
                        .find(|&p| p != a && p != b)
                        .expect("2-cells have a third vertex");
                    let direction = outward_normal(a, b, inside);
                    rays.push(CurveRay {
                        direction,
                        base: cell_vertex[e.cells[0]].clone(),
                        weight,
                        dual: [a, b],
                    });
                }
            }
            vertices = cell_vertex;
        }
    }
    vertices.sort();
    vertices.dedup();
    edges.sort();
    rays.sort();
    lines.sort();
    Ok(PlaneCurve {
        vertices,
        edges,
        rays,
        lines,
        subdivision,
    })
}

/// At every vertex the weighted primitive outgoing directions sum to zero.
pub fn balancing_check(c: &PlaneCurve) -> bool {
    let mut sums: BTreeMap<&Point2, (i128, i128)> =
        c.vertices.iter().map(|v| (v, (0, 0))).collect();
    let mut push = |at: &Point2, towards: &Point2, w: u64| {
        let Some(d) = primitive_direction(&towards.sub(at)) else {
            return false;
        };
        match sums.get_mut(at) {
            Some(s) => {
                s.0 += i128::from(d.0) * i128::from(w);
                s.1 += i128::from(d.1) * i128::from(w);
                true
            }
            None => false,
        }
    };
    for e in &c.edges {
        let [p, q] = &e.endpoints;
        if !push(p, q, e.weight) || !push(q, p, e.weight) {
            return false;
        }
    }
    for r in &c.rays {
        let towards = r.base.add(&Point2::from_ints(r.direction.0, r.direction.1));
        if !push(&r.base, &towards, r.weight) {
            return false;
        }
    }
    sums.values().all(|s| *s == (0, 0))
}

/// The curve of the all-zero polynomial on the lattice points of `Newt(f)`.
pub fn recession_fan(f: &TropPoly) -> Result<PlaneCurve> {
    f.require_arity("2", |n| n == 2)?;
    f.require_nonempty("a recession fan")?;
    let support: Vec<(i64, i64)> = f.support().map(|e| pair(&e.0)).collect();
    let newt = Polygon::from_lattice(&support);
    let g = TropPoly::from_terms(
        2,
        lattice_points(&newt)?
            .into_iter()
            .map(|(x, y)| (Exponent(vec![x, y]), Rational::zero())),
    )?;
    plane_curve(&g)
}
