//! Canonical (concave-envelope) representatives of tropical polynomials.
//!
//! Two polynomials are equal as functions exactly when the upper concave
//! envelopes of their lifted supports agree. The canonical form stores that
//! envelope at every lattice point of the Newton polytope.

use std::collections::BTreeMap;

use super::num::Rational;
use super::poly::{Exponent, TropPoly};
use crate::error::{check_arity, Result};
use crate::geom::lifted::{chain_value, envelope_by_simplices, upper_chain, upper_facets};
use crate::geom::{lattice_points, primitive, Polygon};

impl TropPoly {
    /// The concave-envelope representative: support is every lattice point of
    /// `Newt(f)`, each coefficient the envelope value there. Idempotent and
    /// function-preserving.
    pub fn canonicalize(&self) -> TropPoly {
        if self.len() <= 1 {
            return self.clone();
        }
        let terms = match self.arity() {
            1 => canonical_1d(self),
            2 => canonical_2d(self),
            _ => canonical_general(self),
        };
        TropPoly::from_terms(self.arity(), terms).expect("arity preserved")
    }

    /// Equality as functions on `R^n`.
    pub fn func_eq(&self, other: &TropPoly) -> Result<bool> {
        check_arity(self.arity(), other.arity())?;
        Ok(self.canonicalize() == other.canonicalize())
    }
}

fn canonical_1d(f: &TropPoly) -> Vec<(Exponent, Rational)> {
    let pts: Vec<(i64, Rational)> = f.terms().map(|(e, c)| (e.0[0], c.clone())).collect();
    envelope_on_line(&pts)
        .into_iter()
        .map(|(k, c)| (Exponent(vec![k]), c))
        .collect()
}

fn envelope_on_line(pts: &[(i64, Rational)]) -> Vec<(i64, Rational)> {
    let chain = upper_chain(pts);
    let (lo, hi) = (chain[0].0, chain[chain.len() - 1].0);
    (lo..=hi)
        .map(|k| (k, chain_value(&chain, k).expect("inside the chain")))
        .collect()
}

fn canonical_2d(f: &TropPoly) -> Vec<(Exponent, Rational)> {
    let pts: Vec<((i64, i64), Rational)> = f
        .terms()
        .map(|(e, c)| ((e.0[0], e.0[1]), c.clone()))
        .collect();
    let newt = Polygon::from_lattice(&pts.iter().map(|p| p.0).collect::<Vec<_>>());
    match newt.dimension() {
        Some(2) => {
            let facets = upper_facets(&pts);
            lattice_points(&newt)
                .expect("lattice polygon")
                .into_iter()
                .map(|(x, y)| {
                    let value = facets
                        .iter()
                        .map(|fa| fa.value_at(x, y))
                        .min()
                        .expect("full-dimensional hull has facets");
                    (Exponent(vec![x, y]), value)
                })
                .collect()
        }
        _ => {
            // collinear support: parametrize the line by a primitive step
            let origin = pts.iter().map(|p| p.0).min().expect("nonempty");
            let far = pts.iter().map(|p| p.0).max().expect("nonempty");
            let step = primitive(far.0 - origin.0, far.1 - origin.1);
            let along = |(x, y): (i64, i64)| {
                if step.0 != 0 {
                    (x - origin.0) / step.0
                } else {
                    (y - origin.1) / step.1
                }
            };
            let line: Vec<(i64, Rational)> =
                pts.iter().map(|(p, c)| (along(*p), c.clone())).collect();
            envelope_on_line(&line)
                .into_iter()
                .map(|(k, c)| {
                    (
                        Exponent(vec![origin.0 + k * step.0, origin.1 + k * step.1]),
                        c,
                    )
                })
                .collect()
        }
    }
}

fn canonical_general(f: &TropPoly) -> Vec<(Exponent, Rational)> {
    let pts: Vec<(Vec<i64>, Rational)> = f.terms().map(|(e, c)| (e.0.clone(), c.clone())).collect();
    let n = f.arity();
    let lo: Vec<i64> = (0..n)
        .map(|k| pts.iter().map(|p| p.0[k]).min().expect("nonempty"))
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|k| pts.iter().map(|p| p.0[k]).max().expect("nonempty"))
        .collect();
    let mut out = BTreeMap::new();
    let mut cur = lo.clone();
    loop {
        if let Some(v) = envelope_by_simplices(&pts, &cur) {
            out.insert(Exponent(cur.clone()), v);
        }
        let mut k = 0;
        loop {
            if k == n {
                return out.into_iter().collect();
            }
            if cur[k] < hi[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = lo[k];
            k += 1;
        }
    }
}
