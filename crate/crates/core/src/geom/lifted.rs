//! Upper hulls of lifted lattice points `(i, c_i)`.

use itertools::Itertools;
use num_traits::{One, Zero};

use super::linalg::solve_unique;
use crate::tropical::num::{int, Rational};

/// Vertices of the upper hull of `(e, c)` pairs in one dimension, sorted by `e`.
///
/// Points on or below the hull that are not vertices are dropped. Repeated
/// exponents keep the largest lift.
pub fn upper_chain(points: &[(i64, Rational)]) -> Vec<(i64, Rational)> {
    let mut pts: Vec<(i64, Rational)> = points.to_vec();
    pts.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    pts.dedup_by(|a, b| a.0 == b.0);
    let mut hull: Vec<(i64, Rational)> = Vec::with_capacity(pts.len());
    for p in pts {
        while hull.len() >= 2 {
            let (e1, c1) = &hull[hull.len() - 2];
            let (e2, c2) = &hull[hull.len() - 1];
            // remove the middle point unless (e1,c1) -> (e2,c2) -> p is a strict right turn
            let cross = int(e2 - e1) * (&p.1 - c1) - (c2 - c1) * int(p.0 - e1);
            if cross >= Rational::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// Value of the upper concave envelope of `chain` (as produced by [`upper_chain`]) at `e`.
pub fn chain_value(chain: &[(i64, Rational)], e: i64) -> Option<Rational> {
    let (first, last) = (chain.first()?, chain.last()?);
    if e < first.0 || e > last.0 {
        return None;
    }
    for w in chain.windows(2) {
        let ((e1, c1), (e2, c2)) = (&w[0], &w[1]);
        if *e1 <= e && e <= *e2 {
            return Some(c1 + (c2 - c1) * int(e - e1) / int(e2 - e1));
        }
    }
    Some(first.1.clone())
}

/// A non-vertical supporting plane `z = a x + b y + c` of the upper hull
/// together with the indices of the lifted points lying on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperFacet {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub members: Vec<usize>,
}

impl UpperFacet {
    pub fn value_at(&self, x: i64, y: i64) -> Rational {
        &self.a * int(x) + &self.b * int(y) + &self.c
    }
}

/// All upper facets of planar lattice points lifted by rational heights.
///
/// A facet is a plane through three lifted points with non-collinear
/// projections such that every lifted point lies on or below it. Brute force
/// over triples; the inputs in this library are small.
pub fn upper_facets(points: &[((i64, i64), Rational)]) -> Vec<UpperFacet> {
    let n = points.len();
    let mut facets: Vec<UpperFacet> = Vec::new();
    for (i, j, k) in (0..n).tuple_combinations() {
        let (pi, pj, pk) = (&points[i], &points[j], &points[k]);
        let (xi, yi) = pi.0;
        let (xj, yj) = pj.0;
        let (xk, yk) = pk.0;
        let d = (xj - xi) * (yk - yi) - (xk - xi) * (yj - yi);
        if d == 0 {
            continue;
        }
        if facets
            .iter()
            .any(|f| f.members.contains(&i) && f.members.contains(&j) && f.members.contains(&k))
        {
            continue;
        }
        let d = int(d);
        let dzj = &pj.1 - &pi.1;
        let dzk = &pk.1 - &pi.1;
        let a = (&dzj * int(yk - yi) - &dzk * int(yj - yi)) / &d;
        let b = (&dzk * int(xj - xi) - &dzj * int(xk - xi)) / &d;
        let c = &pi.1 - &a * int(xi) - &b * int(yi);
        let mut members = Vec::new();
        let mut supporting = true;
        for (idx, ((x, y), z)) in points.iter().enumerate() {
            let plane = &a * int(*x) + &b * int(*y) + &c;
            if *z > plane {
                supporting = false;
                break;
            }
            if *z == plane {
                members.push(idx);
            }
        }
        if supporting {
            facets.push(UpperFacet { a, b, c, members });
        }
    }
    facets
}

/// Upper concave envelope at `query` by Carathéodory enumeration: the maximum
/// interpolated lift over affinely independent subsets of at most `n + 1`
/// points whose convex hull contains `query`. `None` outside the hull.
///
/// Works in any dimension; exponential in the dimension and only meant for
/// small inputs.
pub fn envelope_by_simplices(points: &[(Vec<i64>, Rational)], query: &[i64]) -> Option<Rational> {
    let dim = query.len();
    let mut best: Option<Rational> = None;
    for size in 1..=(dim + 1).min(points.len()) {
        for subset in (0..points.len()).combinations(size) {
            let mut rows: Vec<Vec<Rational>> = (0..dim)
                .map(|r| subset.iter().map(|&s| int(points[s].0[r])).collect())
                .collect();
            rows.push(vec![Rational::one(); size]);
            let mut rhs: Vec<Rational> = query.iter().map(|&q| int(q)).collect();
            rhs.push(Rational::one());
            let Some(lambda) = solve_unique(rows, rhs) else {
                continue;
            };
            if lambda.iter().any(|l| *l < Rational::zero()) {
                continue;
            }
            let value = subset
                .iter()
                .zip(&lambda)
                .fold(Rational::zero(), |acc, (&s, l)| acc + l * &points[s].1);
            if best.as_ref().is_none_or(|b| value > *b) {
                best = Some(value);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::num::rat;

    #[test]
    fn chain_drops_points_under_and_on_the_hull() {
        let pts = vec![(0, int(0)), (1, int(0)), (2, int(0)), (3, int(-5))];
        let chain = upper_chain(&pts);
        assert_eq!(chain, vec![(0, int(0)), (2, int(0)), (3, int(-5))]);
        assert_eq!(chain_value(&chain, 1), Some(int(0)));
        assert_eq!(chain_value(&chain, 4), None);
        let chain = upper_chain(&[(0, int(0)), (2, int(0)), (1, int(-3))]);
        assert_eq!(chain.len(), 2);
        assert_eq!(chain_value(&chain, 1), Some(int(0)));
    }

    #[test]
    fn flat_square_is_one_facet() {
        let pts: Vec<((i64, i64), Rational)> = vec![
            ((0, 0), int(0)),
            ((1, 0), int(0)),
            ((0, 1), int(0)),
            ((1, 1), int(0)),
        ];
        let facets = upper_facets(&pts);
        assert_eq!(facets.len(), 1);
        assert_eq!(facets[0].members, vec![0, 1, 2, 3]);
    }

    #[test]
    fn folded_square_has_two_facets() {
        // f ⊕ y g with f = x ⊕ 0, g = x ⊕ 1
        let pts: Vec<((i64, i64), Rational)> = vec![
            ((0, 0), int(0)),
            ((1, 0), int(0)),
            ((0, 1), int(1)),
            ((1, 1), int(0)),
        ];
        let facets = upper_facets(&pts);
        assert_eq!(facets.len(), 2);
    }

    #[test]
    fn simplex_envelope_matches_chain() {
        let pts = vec![(vec![0], int(0)), (vec![1], int(-3)), (vec![3], int(3))];
        assert_eq!(envelope_by_simplices(&pts, &[1]), Some(int(1)));
        assert_eq!(envelope_by_simplices(&pts, &[2]), Some(int(2)));
        assert_eq!(envelope_by_simplices(&pts, &[4]), None);
        let pts = vec![
            (vec![0, 0], int(0)),
            (vec![2, 0], int(1)),
            (vec![0, 2], int(0)),
        ];
        assert_eq!(envelope_by_simplices(&pts, &[1, 1]), Some(rat(1, 2)));
    }
}
