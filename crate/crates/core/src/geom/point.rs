use std::fmt;

use num_traits::Zero;

use crate::tropical::num::{int, is_integer, Rational};

/// A point (or vector) of `Q^2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2 {
            x: int(x),
            y: int(y),
        }
    }

    pub fn origin() -> Self {
        Point2::new(Rational::zero(), Rational::zero())
    }

    pub fn add(&self, o: &Point2) -> Point2 {
        Point2::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &Point2) -> Point2 {
        Point2::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn scale(&self, k: &Rational) -> Point2 {
        Point2::new(&self.x * k, &self.y * k)
    }

    pub fn neg(&self) -> Point2 {
        Point2::new(-&self.x, -&self.y)
    }

    pub fn cross(&self, o: &Point2) -> Rational {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &Point2) -> Rational {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_lattice(&self) -> bool {
        is_integer(&self.x) && is_integer(&self.y)
    }

    /// Integer coordinates, if this is a lattice point that fits in `i64`.
    pub fn to_lattice(&self) -> Option<(i64, i64)> {
        if !self.is_lattice() {
            return None;
        }
        Some((
            i64::try_from(self.x.numer()).ok()?,
            i64::try_from(self.y.numer()).ok()?,
        ))
    }
}

/// Orientation of `c` relative to the directed line `a -> b`: positive for a left turn.
pub fn orient(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    b.sub(a).cross(&c.sub(a))
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Primitive lattice vector pointing along a nonzero rational vector.
pub fn primitive_direction(v: &Point2) -> Option<(i64, i64)> {
    if v.is_zero() {
        return None;
    }
    let l = num_integer::lcm(v.x.denom().clone(), v.y.denom().clone());
    let x = (&v.x * Rational::from_integer(l.clone())).to_integer();
    let y = (&v.y * Rational::from_integer(l)).to_integer();
    let g = num_integer::gcd(x.clone(), y.clone());
    Some((i64::try_from(x / &g).ok()?, i64::try_from(y / g).ok()?))
}

/// Lattice vector with `gcd(x, y) = 1`, or `(0, 0)`.
pub fn primitive(x: i64, y: i64) -> (i64, i64) {
    let g = num_integer::gcd(x, y);
    if g == 0 {
        (0, 0)
    } else {
        (x / g, y / g)
    }
}
