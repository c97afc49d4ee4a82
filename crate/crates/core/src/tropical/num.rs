use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar used everywhere in the library.
pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An element of the tropical semifield `R ∪ {-inf}` restricted to rationals.
///
/// The derived order puts `Bottom` below every finite value, so `max` is `⊕`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropNum {
    Bottom,
    Finite(Rational),
}

impl TropNum {
    /// The multiplicative identity of the semifield, the real number 0.
    pub fn one() -> Self {
        TropNum::Finite(Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        TropNum::Finite(int(n))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, TropNum::Bottom)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropNum::Bottom => None,
            TropNum::Finite(v) => Some(v),
        }
    }

    /// Tropical sum: `max`.
    pub fn oplus(&self, other: &TropNum) -> TropNum {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Tropical product: ordinary sum, with `Bottom` absorbing.
    pub fn odot(&self, other: &TropNum) -> TropNum {
        match (self, other) {
            (TropNum::Finite(a), TropNum::Finite(b)) => TropNum::Finite(a + b),
            _ => TropNum::Bottom,
        }
    }

    /// Tropical quotient by a finite value: ordinary difference.
    pub fn oslash(&self, other: &Rational) -> TropNum {
        match self {
            TropNum::Finite(a) => TropNum::Finite(a - other),
            TropNum::Bottom => TropNum::Bottom,
        }
    }
}

impl From<Rational> for TropNum {
    fn from(v: Rational) -> Self {
        TropNum::Finite(v)
    }
}

impl fmt::Display for TropNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropNum::Bottom => write!(f, "-inf"),
            TropNum::Finite(v) => write!(f, "{v}"),
        }
    }
}

pub(crate) fn is_integer(v: &Rational) -> bool {
    v.denom().is_one()
}
