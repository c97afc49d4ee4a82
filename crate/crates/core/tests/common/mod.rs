//! Test-side generators and brute-force oracles. Nothing here calls the
//! library routine it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::ops::RangeInclusive;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use troprat::{int, parse::parse_poly, rat, Exponent, Rational, TropPoly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p1(s: &str) -> TropPoly {
    parse_poly(s, &["x"]).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn p2(s: &str) -> TropPoly {
    parse_poly(s, &["x", "y"]).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn small_rational(rng: &mut ChaCha8Rng, span: i64, max_den: i64) -> Rational {
    let den = rng.random_range(1..=max_den);
    rat(rng.random_range(-span * den..=span * den), den)
}

/// Random arity-2 polynomial with a term count drawn from `terms` and
/// distinct exponents in `[lo, hi]^2`.
pub fn random_poly2(
    rng: &mut ChaCha8Rng,
    lo: i64,
    hi: i64,
    terms: RangeInclusive<usize>,
) -> TropPoly {
    let terms = rng.random_range(terms);
    let mut exps = BTreeSet::new();
    let cap = ((hi - lo + 1) * (hi - lo + 1)) as usize;
    while exps.len() < terms.min(cap) {
        exps.insert((rng.random_range(lo..=hi), rng.random_range(lo..=hi)));
    }
    let terms: Vec<(Exponent, Rational)> = exps
        .into_iter()
        .map(|(a, b)| (Exponent(vec![a, b]), small_rational(rng, 3, 4)))
        .collect();
    TropPoly::from_terms(2, terms).unwrap()
}

pub fn random_poly1(
    rng: &mut ChaCha8Rng,
    lo: i64,
    hi: i64,
    terms: RangeInclusive<usize>,
) -> TropPoly {
    let terms = rng.random_range(terms);
    let mut exps = BTreeSet::new();
    while exps.len() < terms.min((hi - lo + 1) as usize) {
        exps.insert(rng.random_range(lo..=hi));
    }
    let terms: Vec<(Exponent, Rational)> = exps
        .into_iter()
        .map(|a| (Exponent(vec![a]), small_rational(rng, 4, 3)))
        .collect();
    TropPoly::from_terms(1, terms).unwrap()
}

/// Values `c_i + <e_i, p>` of every term at `p`.
fn term_values(f: &TropPoly, p: &[Rational]) -> Vec<(Vec<i64>, Rational)> {
    f.terms()
        .map(|(e, c)| {
            let v =
                e.0.iter()
                    .zip(p)
                    .fold(c.clone(), |acc, (k, x)| acc + int(*k) * x);
            (e.0.clone(), v)
        })
        .collect()
}

/// Brute-force max and the exponents attaining it.
pub fn argmax(f: &TropPoly, p: &[Rational]) -> (Option<Rational>, Vec<Vec<i64>>) {
    let vals = term_values(f, p);
    let Some(best) = vals.iter().map(|v| v.1.clone()).max() else {
        return (None, vec![]);
    };
    let hits = vals
        .into_iter()
        .filter(|v| v.1 == best)
        .map(|v| v.0)
        .collect();
    (Some(best), hits)
}

/// Membership in the tropical hypersurface: the max is attained twice.
pub fn on_hypersurface(f: &TropPoly, p: &[Rational]) -> bool {
    argmax(f, p).1.len() >= 2
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Primitive integer directions with coordinates bounded by `bound`, sorted
/// by angle.
fn directions(bound: i64) -> Vec<(i64, i64)> {
    let mut ds: Vec<(i64, i64)> = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            if (a, b) != (0, 0) && gcd(a, b) == 1 {
                ds.push((a, b));
            }
        }
    }
    ds.sort_by(|p, q| {
        (p.1 as f64)
            .atan2(p.0 as f64)
            .total_cmp(&(q.1 as f64).atan2(q.0 as f64))
    });
    ds
}

fn solve2(a: [[Rational; 2]; 2], b: [Rational; 2]) -> Option<[Rational; 2]> {
    let det = &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0];
    if det.is_zero() {
        return None;
    }
    Some([
        (&b[0] * &a[1][1] - &b[1] * &a[0][1]) / &det,
        (&a[0][0] * &b[1] - &a[1][0] * &b[0]) / &det,
    ])
}

/// Number of linear regions of an arity-1 or arity-2 polynomial by
/// sampling: a term counts once some sample makes it the unique maximum.
///
/// Samples are a coarse grid plus probes close to every point where three
/// terms tie (arity 2) or between consecutive pairwise breakpoints along the
/// direction of the support (collinear support). Every counted term really
/// owns an open region, so the count can only err low.
pub fn region_oracle(f: &TropPoly) -> usize {
    let mut owners: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut probe = |p: &[Rational]| {
        let (_, hits) = argmax(f, p);
        if hits.len() == 1 {
            owners.insert(hits[0].clone());
        }
    };
    let exps: Vec<Vec<i64>> = f.support().map(|e| e.0.clone()).collect();
    let coeffs: Vec<Rational> = f.terms().map(|t| t.1.clone()).collect();
    if exps.len() <= 1 {
        return exps.len();
    }
    let n = f.arity();
    for k in -12..=12 {
        if n == 1 {
            probe(&[rat(k, 2)]);
        } else {
            for l in -12..=12 {
                probe(&[rat(k, 2), rat(l, 2)]);
            }
        }
    }
    // direction of the support when it is collinear
    let base = &exps[0];
    let delta: Vec<Vec<i64>> = exps
        .iter()
        .map(|e| e.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let spanning = n == 2
        && delta
            .iter()
            .any(|d| d[0] * delta[1][1] - d[1] * delta[1][0] != 0);
    if !spanning {
        let first = delta
            .iter()
            .find(|d| d.iter().any(|v| *v != 0))
            .expect("two terms");
        let g = first.iter().fold(0, |acc, v| gcd(acc, *v));
        let u: Vec<i64> = first.iter().map(|v| v / g).collect();
        let norm: i64 = u.iter().map(|v| v * v).sum();
        let steps: Vec<i64> = delta
            .iter()
            .map(|d| d.iter().zip(&u).map(|(a, b)| a * b).sum::<i64>() / norm)
            .collect();
        let mut breaks: Vec<Rational> = Vec::new();
        for i in 0..exps.len() {
            for j in i + 1..exps.len() {
                breaks.push((&coeffs[i] - &coeffs[j]) / int(steps[j] - steps[i]));
            }
        }
        breaks.sort();
        breaks.dedup();
        let mut params: Vec<Rational> = breaks
            .windows(2)
            .map(|w| (&w[0] + &w[1]) / int(2))
            .collect();
        params.push(&breaks[0] - int(1));
        params.push(breaks.last().unwrap() + int(1));
        for s in params {
            let p: Vec<Rational> = u.iter().map(|c| &s * int(*c) / int(norm)).collect();
            probe(&p);
        }
        return owners.len();
    }
    let width = exps
        .iter()
        .flat_map(|e| e.iter().map(|v| v.abs()))
        .max()
        .unwrap_or(1)
        * 2;
    let dirs = directions(width.max(1));
    let mut bisectors: Vec<(i64, i64)> = Vec::new();
    for k in 0..dirs.len() {
        let (a, b) = (dirs[k], dirs[(k + 1) % dirs.len()]);
        bisectors.push((a.0 + b.0, a.1 + b.1));
    }
    let m = exps.len();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let row = |a: usize, b: usize| {
                    [int(exps[a][0] - exps[b][0]), int(exps[a][1] - exps[b][1])]
                };
                let rhs = |a: usize, b: usize| &coeffs[b] - &coeffs[a];
                let Some(v) = solve2([row(i, j), row(i, k)], [rhs(i, j), rhs(i, k)]) else {
                    continue;
                };
                let (_, hits) = argmax(f, &v);
                if hits.len() < 3 {
                    continue;
                }
                for eps in [rat(1, 1 << 12), rat(1, 1 << 24)] {
                    for d in &bisectors {
                        probe(&[&v[0] + &eps * int(d.0), &v[1] + &eps * int(d.1)]);
                    }
                }
            }
        }
    }
    owners.len()
}

/// Twice the signed area of a lattice polygon given in counter-clockwise
/// order, by the shoelace formula.
pub fn shoelace2(pts: &[(i64, i64)]) -> i64 {
    let n = pts.len();
    (0..n)
        .map(|k| pts[k].0 * pts[(k + 1) % n].1 - pts[(k + 1) % n].0 * pts[k].1)
        .sum()
}

/// Boundary and interior lattice point counts by scanning a bounding box.
pub fn count_lattice(pts: &[(i64, i64)]) -> (i64, i64) {
    let n = pts.len();
    let (lx, hx) = (
        pts.iter().map(|p| p.0).min().unwrap(),
        pts.iter().map(|p| p.0).max().unwrap(),
    );
    let (ly, hy) = (
        pts.iter().map(|p| p.1).min().unwrap(),
        pts.iter().map(|p| p.1).max().unwrap(),
    );
    let (mut boundary, mut interior) = (0, 0);
    for x in lx..=hx {
        for y in ly..=hy {
            let sides: Vec<i64> = (0..n)
                .map(|k| {
                    let (a, b) = (pts[k], pts[(k + 1) % n]);
                    (b.0 - a.0) * (y - a.1) - (b.1 - a.1) * (x - a.0)
                })
                .collect();
            if sides.iter().all(|s| *s >= 0) {
                if sides.contains(&0) {
                    boundary += 1;
                } else {
                    interior += 1;
                }
            }
        }
    }
    (boundary, interior)
}

/// Convex hull of lattice points, counter-clockwise, by monotone chain.
pub fn hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Area of the Minkowski sum of two lattice point sets, as a rational.
pub fn minkowski_area(a: &[(i64, i64)], b: &[(i64, i64)]) -> Rational {
    let sums: Vec<(i64, i64)> = a
        .iter()
        .flat_map(|p| b.iter().map(move |q| (p.0 + q.0, p.1 + q.1)))
        .collect();
    rat(shoelace2(&hull(&sums)), 2)
}
