use itertools::Itertools;
use num_traits::{Signed, Zero};

use super::linalg::rank;
use super::point::Point2;
use super::polygon::{area2, hull2, minkowski_sum2, Polygon};
use crate::tropical::num::{int, Rational};

/// The body `conv(bottom × {0} ∪ top × {1})` in `R^3`.
///
/// For arity-2 polynomials `f`, `g` with Newton polygons `bottom` and `top`
/// this is `Newt(f ⊕ x_3 ⊙ g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackedHull {
    pub bottom: Polygon,
    pub top: Polygon,
}

impl StackedHull {
    pub fn new(bottom: Polygon, top: Polygon) -> Self {
        StackedHull { bottom, top }
    }

    fn points3(&self) -> Vec<[Rational; 3]> {
        let lift = |p: &Point2, h: i64| [p.x.clone(), p.y.clone(), int(h)];
        self.bottom
            .vertices()
            .iter()
            .map(|p| lift(p, 0))
            .chain(self.top.vertices().iter().map(|p| lift(p, 1)))
            .collect()
    }

    /// Dimension of the affine span of the body.
    pub fn affine_dimension(&self) -> Option<usize> {
        let pts = self.points3();
        let first = pts.first()?;
        let rows: Vec<Vec<Rational>> = pts[1..]
            .iter()
            .map(|p| (0..3).map(|k| &p[k] - &first[k]).collect())
            .collect();
        Some(if rows.is_empty() { 0 } else { rank(rows) })
    }
}

/// Volume of a stacked hull by Simpson's rule.
///
/// The slice at height `h` is `(1-h)·bottom + h·top`, whose area is quadratic
/// in `h`, so `(A(bottom) + 4·A((bottom+top)/2) + A(top)) / 6` is exact; the
/// middle slice area is `A(bottom + top) / 4`.
pub fn volume_stacked(s: &StackedHull) -> Rational {
    if s.bottom.is_empty() || s.top.is_empty() || s.affine_dimension() != Some(3) {
        return Rational::zero();
    }
    let mixed = area2(&minkowski_sum2(&s.bottom, &s.top));
    (area2(&s.bottom) + mixed + area2(&s.top)) / int(6)
}

fn sub3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn cross3(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot3(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

/// Volume of a stacked hull through an explicit 3D convex hull: every facet
/// is found by brute force over point triples, fan-triangulated, and coned to
/// the centroid. Independent of [`volume_stacked`].
pub fn volume_oracle(s: &StackedHull) -> Rational {
    let pts = s.points3();
    if s.affine_dimension() != Some(3) {
        return Rational::zero();
    }
    let n = pts.len();
    let count = int(n as i64);
    let centroid: [Rational; 3] =
        std::array::from_fn(|k| pts.iter().fold(Rational::zero(), |a, p| a + &p[k]) / &count);
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut total = Rational::zero();
    for (i, j, k) in (0..n).tuple_combinations() {
        let normal = cross3(&sub3(&pts[j], &pts[i]), &sub3(&pts[k], &pts[i]));
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let offset = dot3(&normal, &pts[i]);
        let side: Vec<Rational> = pts.iter().map(|p| dot3(&normal, p) - &offset).collect();
        let above = side.iter().any(|v| v.is_positive());
        let below = side.iter().any(|v| v.is_negative());
        if above && below {
            continue;
        }
        let on: Vec<usize> = (0..n).filter(|&m| side[m].is_zero()).collect();
        if seen.contains(&on) {
            continue;
        }
        // order the facet polygon by projecting away the dominant normal axis
        let drop = (0..3).max_by_key(|&a| normal[a].abs()).expect("three axes");
        let (u, v) = match drop {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let projected: Vec<Point2> = on
            .iter()
            .map(|&m| Point2::new(pts[m][u].clone(), pts[m][v].clone()))
            .collect();
        let ring = hull2(&projected);
        let ring_idx: Vec<usize> = ring
            .vertices()
            .iter()
            .map(|q| {
                on[projected
                    .iter()
                    .position(|p| p == q)
                    .expect("hull vertex comes from input")]
            })
            .collect();
        for w in 1..ring_idx.len().saturating_sub(1) {
            let a = sub3(&pts[ring_idx[0]], &centroid);
            let b = sub3(&pts[ring_idx[w]], &centroid);
            let c = sub3(&pts[ring_idx[w + 1]], &centroid);
            total += dot3(&a, &cross3(&b, &c)).abs();
        }
        seen.push(on);
    }
    total / int(6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::num::rat;

    fn lp(points: &[(i64, i64)]) -> Polygon {
        Polygon::from_lattice(points)
    }

    #[test]
    fn unit_cube() {
        let sq = lp(&[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let s = StackedHull::new(sq.clone(), sq);
        assert_eq!(volume_stacked(&s), int(1));
        assert_eq!(volume_oracle(&s), int(1));
    }

    #[test]
    fn two_expression_instance() {
        let s = StackedHull::new(
            lp(&[(0, 0), (1, 0), (1, 1), (0, 2)]),
            lp(&[(1, 0), (1, 2), (0, 2), (0, 1)]),
        );
        assert_eq!(volume_stacked(&s), rat(5, 3));
        assert_eq!(volume_oracle(&s), rat(5, 3));
    }

    #[test]
    fn conic_over_triangle_instance() {
        let s = StackedHull::new(
            lp(&[(2, 0), (1, 1), (0, 2), (1, 0), (0, 1)]),
            lp(&[(1, 1), (1, 0), (0, 1)]),
        );
        assert_eq!(volume_stacked(&s), rat(7, 6));
        assert_eq!(volume_oracle(&s), rat(7, 6));
    }

    #[test]
    fn degenerate_bodies_have_zero_volume() {
        let s = StackedHull::new(lp(&[(0, 0)]), lp(&[(0, 0)]));
        assert_eq!(s.affine_dimension(), Some(1));
        assert_eq!(volume_stacked(&s), int(0));
        assert_eq!(volume_oracle(&s), int(0));
        let s = StackedHull::new(lp(&[(0, 0), (2, 0)]), lp(&[(1, 0), (5, 0)]));
        assert_eq!(volume_stacked(&s), int(0));
        // tetrahedron from two skew segments
        let s = StackedHull::new(lp(&[(0, 0), (1, 0)]), lp(&[(0, 0), (0, 1)]));
        assert_eq!(volume_stacked(&s), rat(1, 6));
        assert_eq!(volume_oracle(&s), rat(1, 6));
    }
}
