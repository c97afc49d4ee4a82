use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::point::{orient, primitive, Point2};
use crate::error::{Error, Result};
use crate::tropical::num::{int, Rational};

/// A convex polygon given by its vertices in counterclockwise order, starting
/// at the lexicographically smallest vertex. No three consecutive vertices are
/// collinear. Points (one vertex) and segments (two vertices) are valid
/// polygons; the empty polygon has no vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl Polygon {
    pub fn empty() -> Self {
        Polygon {
            vertices: Vec::new(),
        }
    }

    pub fn point(p: Point2) -> Self {
        Polygon { vertices: vec![p] }
    }

    /// Convex hull of lattice points.
    pub fn from_lattice(points: &[(i64, i64)]) -> Self {
        hull2(
            &points
                .iter()
                .map(|&(x, y)| Point2::from_ints(x, y))
                .collect::<Vec<_>>(),
        )
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// 0 for a point, 1 for a segment, 2 otherwise; `None` when empty.
    pub fn dimension(&self) -> Option<usize> {
        match self.vertices.len() {
            0 => None,
            1 => Some(0),
            2 => Some(1),
            _ => Some(2),
        }
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(Point2::is_lattice)
    }

    pub(crate) fn lattice_vertices(&self) -> Result<Vec<(i64, i64)>> {
        self.vertices
            .iter()
            .map(|v| v.to_lattice().ok_or(Error::NonLattice))
            .collect()
    }

    pub fn translate(&self, v: &Point2) -> Polygon {
        // translation preserves the lexicographic start and the orientation
        Polygon {
            vertices: self.vertices.iter().map(|p| p.add(v)).collect(),
        }
    }

    /// Translate so that the lexicographically smallest vertex is the origin.
    pub fn normalized(&self) -> Polygon {
        match self.vertices.first() {
            Some(first) => self.translate(&first.neg()),
            None => self.clone(),
        }
    }

    /// Cyclic edge vectors, counterclockwise. A segment has two opposite edges.
    pub fn edge_vectors(&self) -> Vec<Point2> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|i| self.vertices[(i + 1) % n].sub(&self.vertices[i]))
            .collect()
    }

    /// Closed containment test.
    pub fn contains(&self, p: &Point2) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => self.vertices[0] == *p,
            2 => on_segment(&self.vertices[0], &self.vertices[1], p),
            n => (0..n).all(|i| {
                orient(&self.vertices[i], &self.vertices[(i + 1) % n], p) >= Rational::zero()
            }),
        }
    }

    /// True iff `p` lies on the relative boundary (for a 2D polygon) or anywhere on a degenerate one.
    pub fn on_boundary(&self, p: &Point2) -> bool {
        let n = self.vertices.len();
        if n < 3 {
            return self.contains(p);
        }
        (0..n).any(|i| on_segment(&self.vertices[i], &self.vertices[(i + 1) % n], p))
    }

    pub fn equals_up_to_translation(&self, other: &Polygon) -> bool {
        self.normalized() == other.normalized()
    }
}

pub(crate) fn on_segment(a: &Point2, b: &Point2, p: &Point2) -> bool {
    if !orient(a, b, p).is_zero() {
        return false;
    }
    let (lo_x, hi_x) = if a.x <= b.x {
        (&a.x, &b.x)
    } else {
        (&b.x, &a.x)
    };
    let (lo_y, hi_y) = if a.y <= b.y {
        (&a.y, &b.y)
    } else {
        (&b.y, &a.y)
    };
    *lo_x <= p.x && p.x <= *hi_x && *lo_y <= p.y && p.y <= *hi_y
}

/// Exact convex hull (Andrew's monotone chain). Collinear boundary points are dropped.
pub fn hull2(points: &[Point2]) -> Polygon {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return Polygon { vertices: pts };
    }
    let mut lower: Vec<Point2> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Rational::zero()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point2> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Rational::zero()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // all points collinear: the chains collapse to the two extremes
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    Polygon { vertices: lower }
}

/// Shoelace area; 0 for points and segments.
pub fn area2(p: &Polygon) -> Rational {
    let v = &p.vertices;
    if v.len() < 3 {
        return Rational::zero();
    }
    let twice = (0..v.len()).fold(Rational::zero(), |acc, i| {
        acc + v[i].cross(&v[(i + 1) % v.len()])
    });
    twice.abs() / int(2)
}

/// Half-plane index used to sort edge vectors by angle in `[0, 2π)`.
fn half(v: &Point2) -> u8 {
    if v.y > Rational::zero() || (v.y.is_zero() && v.x > Rational::zero()) {
        0
    } else {
        1
    }
}

pub(crate) fn angle_cmp(a: &Point2, b: &Point2) -> Ordering {
    half(a)
        .cmp(&half(b))
        .then_with(|| Rational::zero().cmp(&a.cross(b)))
}

/// Vertex with minimal `y`, then minimal `x`: where the angular edge walk starts.
fn bottom_index(vertices: &[Point2]) -> usize {
    (0..vertices.len())
        .min_by(|&i, &j| {
            vertices[i]
                .y
                .cmp(&vertices[j].y)
                .then_with(|| vertices[i].x.cmp(&vertices[j].x))
        })
        .unwrap_or(0)
}

fn edges_from_bottom(p: &Polygon) -> (Point2, Vec<Point2>) {
    let n = p.vertices.len();
    let start = bottom_index(&p.vertices);
    let edges = if n < 2 {
        Vec::new()
    } else {
        (0..n)
            .map(|k| {
                let i = (start + k) % n;
                p.vertices[(i + 1) % n].sub(&p.vertices[i])
            })
            .collect()
    };
    (p.vertices[start].clone(), edges)
}

/// Minkowski sum of convex polygons by merging edge sequences sorted by angle.
pub fn minkowski_sum2(p: &Polygon, q: &Polygon) -> Polygon {
    if p.is_empty() || q.is_empty() {
        return Polygon::empty();
    }
    let (sp, ep) = edges_from_bottom(p);
    let (sq, eq) = edges_from_bottom(q);
    let mut cur = sp.add(&sq);
    let mut pts = vec![cur.clone()];
    let (mut i, mut j) = (0, 0);
    while i < ep.len() || j < eq.len() {
        let take_p = match (ep.get(i), eq.get(j)) {
            (Some(a), Some(b)) => angle_cmp(a, b) != Ordering::Greater,
            (Some(_), None) => true,
            _ => false,
        };
        let e = if take_p {
            i += 1;
            &ep[i - 1]
        } else {
            j += 1;
            &eq[j - 1]
        };
        cur = cur.add(e);
        pts.push(cur.clone());
    }
    hull2(&pts)
}

/// All integer points of a lattice polygon, sorted.
pub fn lattice_points(p: &Polygon) -> Result<Vec<(i64, i64)>> {
    let verts = p.lattice_vertices()?;
    let Some(&(x0, y0)) = verts.first() else {
        return Ok(Vec::new());
    };
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (x0, x0, y0, y0);
    for &(x, y) in &verts {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let mut out = Vec::new();
    for x in xmin..=xmax {
        for y in ymin..=ymax {
            if p.contains(&Point2::from_ints(x, y)) {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// Area by Pick's theorem, `I + B/2 - 1`, counting interior and boundary
/// points by enumeration. Degenerate polygons have area 0.
pub fn pick_area(p: &Polygon) -> Result<Rational> {
    let pts = lattice_points(p)?;
    if p.vertices.len() < 3 {
        return Ok(Rational::zero());
    }
    let boundary = pts
        .iter()
        .filter(|&&(x, y)| p.on_boundary(&Point2::from_ints(x, y)))
        .count() as i64;
    let interior = pts.len() as i64 - boundary;
    Ok(int(interior) + Rational::new(boundary.into(), 2.into()) - int(1))
}

/// Lattice length of a segment with integer endpoints: `gcd(|dx|, |dy|)`.
pub fn lattice_length(a: (i64, i64), b: (i64, i64)) -> u64 {
    num_integer::gcd(b.0 - a.0, b.1 - a.1).unsigned_abs()
}

/// Primitive edge direction with its lattice-length multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeVector {
    pub direction: (i64, i64),
    pub length: u64,
}

/// Counterclockwise primitive edge vectors of a lattice polygon.
pub fn lattice_edge_vectors(p: &Polygon) -> Result<Vec<EdgeVector>> {
    let verts = p.lattice_vertices()?;
    let n = verts.len();
    if n < 2 {
        return Ok(Vec::new());
    }
    Ok((0..n)
        .map(|i| {
            let (a, b) = (verts[i], verts[(i + 1) % n]);
            EdgeVector {
                direction: primitive(b.0 - a.0, b.1 - a.1),
                length: lattice_length(a, b),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::num::rat;

    fn lp(points: &[(i64, i64)]) -> Polygon {
        Polygon::from_lattice(points)
    }

    fn hexagon() -> Polygon {
        lp(&[
            (2, 3),
            (1, 4),
            (2, 2),
            (1, 3),
            (2, 1),
            (1, 2),
            (0, 3),
            (1, 1),
            (0, 2),
            (1, 0),
            (0, 1),
        ])
    }

    #[test]
    fn hull_drops_interior_points() {
        let h = hull2(&[
            Point2::from_ints(0, 0),
            Point2::from_ints(1, 0),
            Point2::from_ints(0, 1),
            Point2::new(rat(1, 4), rat(1, 4)),
        ]);
        assert_eq!(
            h.vertices(),
            &[
                Point2::from_ints(0, 0),
                Point2::from_ints(1, 0),
                Point2::from_ints(0, 1)
            ]
        );
    }

    #[test]
    fn hull_of_factorization_support_is_hexagon() {
        let expected: Vec<Point2> = [(0, 1), (1, 0), (2, 1), (2, 3), (1, 4), (0, 3)]
            .iter()
            .map(|&(x, y)| Point2::from_ints(x, y))
            .collect();
        assert_eq!(hexagon().vertices(), expected.as_slice());
    }

    #[test]
    fn degenerate_hulls() {
        assert_eq!(lp(&[(3, 3)]).vertices().len(), 1);
        assert_eq!(
            lp(&[(0, 0), (1, 1), (2, 2)]).vertices(),
            &[Point2::from_ints(0, 0), Point2::from_ints(2, 2)]
        );
        assert!(hull2(&[]).is_empty());
    }

    #[test]
    fn areas() {
        assert_eq!(area2(&lp(&[(0, 0), (1, 0), (0, 1)])), rat(1, 2));
        assert_eq!(area2(&lp(&[(0, 0), (1, 0), (1, 1), (0, 2)])), rat(3, 2));
        assert_eq!(area2(&hexagon()), int(6));
        assert_eq!(area2(&lp(&[(0, 0), (3, 3)])), int(0));
    }

    #[test]
    fn minkowski_area_instances() {
        let d1 = lp(&[(0, 0), (1, 0), (0, 1)]);
        let d2 = lp(&[(1, 0), (0, 1), (1, 1)]);
        assert_eq!(area2(&minkowski_sum2(&d1, &d2)), int(3));
        assert_eq!(
            area2(&minkowski_sum2(&d1, &lp(&[(0, 0), (1, 1)]))),
            rat(5, 2)
        );
        assert_eq!(
            area2(&minkowski_sum2(&d1, &lp(&[(0, 0), (1, 0)]))),
            rat(3, 2)
        );
        assert_eq!(area2(&minkowski_sum2(&d1, &d1)), int(2));
    }

    #[test]
    fn minkowski_with_points_and_empties() {
        let d1 = lp(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(
            minkowski_sum2(&d1, &lp(&[(2, 5)])),
            d1.translate(&Point2::from_ints(2, 5))
        );
        assert!(minkowski_sum2(&d1, &Polygon::empty()).is_empty());
        let seg = minkowski_sum2(&lp(&[(0, 0), (1, 0)]), &lp(&[(0, 0), (2, 0)]));
        assert_eq!(seg, lp(&[(0, 0), (3, 0)]));
    }

    #[test]
    fn pick_examples() {
        let tri = lp(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(lattice_points(&tri).unwrap().len(), 3);
        assert_eq!(pick_area(&tri).unwrap(), rat(1, 2));
        let sq = lp(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        assert_eq!(lattice_points(&sq).unwrap().len(), 4);
        assert_eq!(pick_area(&sq).unwrap(), int(1));
        assert_eq!(lattice_points(&hexagon()).unwrap().len(), 11);
        assert_eq!(pick_area(&hexagon()).unwrap(), area2(&hexagon()));
    }

    #[test]
    fn non_lattice_polygon_is_rejected() {
        let p = hull2(&[
            Point2::origin(),
            Point2::new(rat(1, 2), int(0)),
            Point2::from_ints(0, 1),
        ]);
        assert_eq!(lattice_points(&p), Err(Error::NonLattice));
    }

    #[test]
    fn lattice_lengths() {
        assert_eq!(lattice_length((0, 0), (2, 2)), 2);
        assert_eq!(lattice_length((0, 0), (1, 2)), 1);
        assert_eq!(lattice_length((0, 0), (0, 3)), 3);
    }
}
