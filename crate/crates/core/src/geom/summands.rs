//! Decompositions of lattice polygons into Minkowski summands.

use std::collections::BTreeSet;

use super::point::Point2;
use super::polygon::{hull2, lattice_edge_vectors, minkowski_sum2, Polygon};
use crate::error::{Error, Result};

pub const DEFAULT_EDGE_BOUND: usize = 24;

/// An unordered pair of lattice summands, each anchored at the origin, with `first <= second`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SummandPair {
    pub first: Polygon,
    pub second: Polygon,
}

impl SummandPair {
    fn new(a: Polygon, b: Polygon) -> Self {
        if a <= b {
            SummandPair {
                first: a,
                second: b,
            }
        } else {
            SummandPair {
                first: b,
                second: a,
            }
        }
    }
}

/// All ways to write `p = q + r` (up to translation) with lattice polygons
/// `q`, `r` that are not points.
///
/// Every summand of a lattice polygon is determined by a sub-multiset of the
/// primitive edge vectors of `p` that sums to zero; walking the chosen edges in
/// angular order traces the summand, the complement traces the partner.
pub fn summand_decompositions(p: &Polygon) -> Result<BTreeSet<SummandPair>> {
    summand_decompositions_bounded(p, DEFAULT_EDGE_BOUND)
}

pub fn summand_decompositions_bounded(p: &Polygon, bound: usize) -> Result<BTreeSet<SummandPair>> {
    let edges = lattice_edge_vectors(p)?;
    let total: u64 = edges.iter().map(|e| e.length).sum();
    if total as usize > bound {
        return Err(Error::TooLarge {
            size: total as usize,
            bound,
        });
    }
    let mut out = BTreeSet::new();
    let mut counts = vec![0u64; edges.len()];
    loop {
        // odometer over 0..=length for every edge
        let mut pos = 0;
        while pos < counts.len() {
            if counts[pos] < edges[pos].length {
                counts[pos] += 1;
                break;
            }
            counts[pos] = 0;
            pos += 1;
        }
        if pos == counts.len() {
            break;
        }
        let chosen: u64 = counts.iter().sum();
        if chosen == total {
            continue;
        }
        let (sx, sy) = edges
            .iter()
            .zip(&counts)
            .fold((0i64, 0i64), |(x, y), (e, &k)| {
                (x + e.direction.0 * k as i64, y + e.direction.1 * k as i64)
            });
        if sx != 0 || sy != 0 {
            continue;
        }
        let q = trace(edges.iter().zip(&counts).map(|(e, &k)| (e.direction, k)));
        let r = trace(
            edges
                .iter()
                .zip(&counts)
                .map(|(e, &k)| (e.direction, e.length - k)),
        );
        debug_assert!(minkowski_sum2(&q, &r).equals_up_to_translation(p));
        out.insert(SummandPair::new(q, r));
    }
    Ok(out)
}

fn trace(steps: impl Iterator<Item = ((i64, i64), u64)>) -> Polygon {
    let mut cur = (0i64, 0i64);
    let mut pts = vec![Point2::from_ints(0, 0)];
    for ((dx, dy), k) in steps {
        if k == 0 {
            continue;
        }
        cur = (cur.0 + dx * k as i64, cur.1 + dy * k as i64);
        pts.push(Point2::from_ints(cur.0, cur.1));
    }
    hull2(&pts).normalized()
}
