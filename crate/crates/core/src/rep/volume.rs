use num_traits::Zero;

use crate::error::{check_arity, Error, Result};
use crate::geom::{volume_stacked, Polygon, StackedHull};
use crate::tropical::{int, Rational, TropPoly};

fn newt2(f: &TropPoly) -> Polygon {
    let pts: Vec<(i64, i64)> = f.support().map(|e| (e.0[0], e.0[1])).collect();
    Polygon::from_lattice(&pts)
}

fn width(f: &TropPoly) -> i64 {
    let mut exps = f.support().map(|e| e.0[0]);
    let lo = exps.next().expect("nonempty");
    exps.last().unwrap_or(lo) - lo
}

/// Volume of `Newt(f ⊕ (x_{n+1} ⊙ g))`, zero when that polytope is not
/// full-dimensional.
pub fn vol_pair(f: &TropPoly, g: &TropPoly) -> Result<Rational> {
    check_arity(f.arity(), g.arity())?;
    g.require_arity("1 or 2", |n| n == 1 || n == 2)?;
    g.require_nonempty("a denominator")?;
    if f.is_neg_inf() {
        return Ok(Rational::zero());
    }
    Ok(match f.arity() {
        // a trapezoid with parallel sides Newt(f) and Newt(g)
        1 => int(width(f) + width(g)) / int(2),
        _ => volume_stacked(&StackedHull::new(newt2(f), newt2(g))),
    })
}

/// The stacked polygon `conv(Newt(f) × {0} ∪ Newt(g) × {1})` of a pair of
/// univariate polynomials.
pub fn stacked_polygon_1d(f: &TropPoly, g: &TropPoly) -> Polygon {
    let pts: Vec<(i64, i64)> = f
        .support()
        .map(|e| (e.0[0], 0))
        .chain(g.support().map(|e| (e.0[0], 1)))
        .collect();
    Polygon::from_lattice(&pts)
}

/// Volumes before and after multiplying both sides by `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monotonicity {
    pub before: Rational,
    pub after: Rational,
    pub unit: bool,
}

impl Monotonicity {
    /// `after >= before`, with equality exactly for units.
    pub fn holds(&self) -> bool {
        if self.unit {
            self.after == self.before
        } else {
            self.after > self.before
        }
    }
}

pub fn monotonicity_check(f: &TropPoly, g: &TropPoly, h: &TropPoly) -> Result<Monotonicity> {
    check_arity(f.arity(), h.arity())?;
    h.require_nonempty("a common factor")?;
    let before = vol_pair(f, g)?;
    if before.is_zero() {
        return Err(Error::Precondition(
            "the pair does not span a full-dimensional polytope".into(),
        ));
    }
    let after = vol_pair(&f.trop_mul(h)?, &g.trop_mul(h)?)?;
    Ok(Monotonicity {
        before,
        after,
        unit: h.is_unit(),
    })
}
