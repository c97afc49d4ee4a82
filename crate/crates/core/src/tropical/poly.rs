use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::num::{Rational, TropNum};
use crate::error::{check_arity, Error, Result};

/// A lattice exponent vector `i = (i_1, ..., i_n)`, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(pub Vec<i64>);

impl Exponent {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Exponent(coords.into())
    }

    pub fn zero(arity: usize) -> Self {
        Exponent(vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Exponent {
        Exponent(self.0.iter().map(|a| a * k).collect())
    }

    /// `i · p` for a rational point `p` of the same dimension.
    pub fn dot(&self, point: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(point)
            .fold(Rational::zero(), |acc, (i, t)| {
                acc + t * Rational::from_integer((*i).into())
            })
    }

    /// The exponent with one extra trailing coordinate.
    pub fn extended(&self, last: i64) -> Exponent {
        let mut v = self.0.clone();
        v.push(last);
        Exponent(v)
    }
}

impl From<Vec<i64>> for Exponent {
    fn from(v: Vec<i64>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[i64; N]> for Exponent {
    fn from(v: [i64; N]) -> Self {
        Exponent(v.to_vec())
    }
}

/// A tropical Laurent polynomial in `arity` variables.
///
/// Only finite coefficients are stored; a missing exponent means the
/// coefficient `-inf`, and the empty map is the polynomial `-inf`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TropPoly {
    arity: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl TropPoly {
    /// The polynomial `-inf` in `arity` variables.
    pub fn neg_inf(arity: usize) -> Self {
        TropPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(c, Exponent::zero(arity))
    }

    pub fn monomial(coeff: Rational, exp: Exponent) -> Self {
        let arity = exp.arity();
        let mut terms = BTreeMap::new();
        terms.insert(exp, coeff);
        TropPoly { arity, terms }
    }

    /// Builds `⊕ c_i x^i`; repeated exponents are combined with `max`.
    pub fn from_terms(
        arity: usize,
        terms: impl IntoIterator<Item = (Exponent, Rational)>,
    ) -> Result<Self> {
        let mut p = TropPoly::neg_inf(arity);
        for (e, c) in terms {
            check_arity(arity, e.arity())?;
            p.insert_max(e, c);
        }
        Ok(p)
    }

    /// Convenience constructor from integer exponent rows; panics on ragged input.
    pub fn from_int_terms(arity: usize, terms: &[(&[i64], Rational)]) -> Self {
        Self::from_terms(
            arity,
            terms
                .iter()
                .map(|(e, c)| (Exponent::new(e.to_vec()), c.clone())),
        )
        .expect("exponent rows must match the arity")
    }

    pub(crate) fn insert_max(&mut self, e: Exponent, c: Rational) {
        match self.terms.get_mut(&e) {
            Some(old) => {
                if c > *old {
                    *old = c;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_neg_inf(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.keys()
    }

    pub fn coefficient(&self, e: &Exponent) -> TropNum {
        self.terms
            .get(e)
            .cloned()
            .map_or(TropNum::Bottom, TropNum::Finite)
    }

    /// True iff the support is a single exponent.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn all_coefficients_zero(&self) -> bool {
        self.terms.values().all(Zero::is_zero)
    }

    /// `max_i (c_i + i · p)`.
    pub fn eval(&self, point: &[Rational]) -> Result<TropNum> {
        check_arity(self.arity, point.len())?;
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[Rational]) -> TropNum {
        self.terms
            .iter()
            .map(|(e, c)| c + e.dot(point))
            .max()
            .map_or(TropNum::Bottom, TropNum::Finite)
    }

    pub fn trop_add(&self, other: &TropPoly) -> Result<TropPoly> {
        check_arity(self.arity, other.arity)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_max(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Max-plus convolution.
    pub fn trop_mul(&self, other: &TropPoly) -> Result<TropPoly> {
        check_arity(self.arity, other.arity)?;
        let mut out = TropPoly::neg_inf(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.insert_max(e1.add(e2), c1 + c2);
            }
        }
        Ok(out)
    }

    /// `self^k` for `k >= 0`; `f^0` is the constant 0.
    pub fn trop_pow(&self, k: u32) -> TropPoly {
        let mut out = TropPoly::constant(self.arity, Rational::zero());
        for _ in 0..k {
            out = out.trop_mul(self).expect("same arity");
        }
        out
    }

    /// Multiplication by the unit `coeff ⊙ x^exp`.
    pub fn mul_monomial(&self, coeff: &Rational, exp: &Exponent) -> TropPoly {
        TropPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(exp), c + coeff))
                .collect(),
        }
    }

    /// `f ⊕ (x_{n+1} ⊙ g)` as a polynomial in `n + 1` variables.
    pub fn stack(f: &TropPoly, g: &TropPoly) -> Result<TropPoly> {
        check_arity(f.arity, g.arity)?;
        let mut out = TropPoly::neg_inf(f.arity + 1);
        for (e, c) in &f.terms {
            out.terms.insert(e.extended(0), c.clone());
        }
        for (e, c) in &g.terms {
            out.terms.insert(e.extended(1), c.clone());
        }
        Ok(out)
    }

    /// Same terms with every coefficient replaced by 0.
    pub fn with_zero_coefficients(&self) -> TropPoly {
        TropPoly {
            arity: self.arity,
            terms: self
                .terms
                .keys()
                .map(|e| (e.clone(), Rational::zero()))
                .collect(),
        }
    }

    /// Lexicographically smallest exponent of the support.
    pub fn min_exponent(&self) -> Option<&Exponent> {
        self.terms.keys().next()
    }

    pub(crate) fn require_nonempty(&self, what: &'static str) -> Result<()> {
        if self.is_neg_inf() {
            Err(Error::EmptyPolynomial(what))
        } else {
            Ok(())
        }
    }

    pub(crate) fn require_arity(
        &self,
        supported: &'static str,
        ok: impl Fn(usize) -> bool,
    ) -> Result<()> {
        if ok(self.arity) {
            Ok(())
        } else {
            Err(Error::ArityOutOfRange {
                arity: self.arity,
                supported,
            })
        }
    }
}

impl fmt::Display for TropPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_poly(self))
    }
}
