use super::num::{Rational, TropNum};
use super::poly::TropPoly;
use crate::error::{check_arity, Error, Result};

/// A tropical rational function `num ⊘ den` with `den ≠ -inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropRational {
    num: TropPoly,
    den: TropPoly,
}

impl TropRational {
    pub fn new(num: TropPoly, den: TropPoly) -> Result<Self> {
        check_arity(num.arity(), den.arity())?;
        if den.is_neg_inf() {
            return Err(Error::EmptyPolynomial("a denominator"));
        }
        Ok(TropRational { num, den })
    }

    pub fn num(&self) -> &TropPoly {
        &self.num
    }

    pub fn den(&self) -> &TropPoly {
        &self.den
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    /// `num(p) - den(p)`, `Bottom` exactly when the numerator is `-inf`.
    pub fn eval(&self, point: &[Rational]) -> Result<TropNum> {
        let top = self.num.eval(point)?;
        let bottom = self.den.eval(point)?;
        let bottom = bottom.finite().expect("denominator is never -inf");
        Ok(top.oslash(bottom))
    }

    /// Equality as functions, decided by `num1 ⊙ den2 = num2 ⊙ den1`.
    pub fn rat_eq(&self, other: &TropRational) -> Result<bool> {
        check_arity(self.arity(), other.arity())?;
        let lhs = self.num.trop_mul(&other.den)?;
        let rhs = other.num.trop_mul(&self.den)?;
        lhs.func_eq(&rhs)
    }
}
