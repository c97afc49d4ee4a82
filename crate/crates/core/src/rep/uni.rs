//! Univariate factorization and minimum-volume representations.

use num_traits::Zero;

use super::volume::vol_pair;
use crate::error::{check_arity, Result};
use crate::geom::lifted::upper_chain;
use crate::tropical::{int, Exponent, Rational, TropPoly, TropRational};

/// `α ⊙ x^k ⊙ (x ⊕ a_1)^{m_1} ⊙ … ⊙ (x ⊕ a_r)^{m_r}` with `a_1 < … < a_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredUni {
    pub unit_coeff: Rational,
    pub monomial_exp: i64,
    pub roots: Vec<(Rational, u64)>,
}

impl FactoredUni {
    pub fn degree(&self) -> u64 {
        self.roots.iter().map(|r| r.1).sum()
    }
}

fn chain_of(f: &TropPoly) -> Result<Vec<(i64, Rational)>> {
    f.require_arity("1", |n| n == 1)?;
    f.require_nonempty("factorization")?;
    let pts: Vec<(i64, Rational)> = f.terms().map(|(e, c)| (e.0[0], c.clone())).collect();
    Ok(upper_chain(&pts))
}

fn roots_of_chain(chain: &[(i64, Rational)]) -> Vec<(Rational, u64)> {
    chain
        .windows(2)
        .map(|w| {
            let ((i, ci), (j, cj)) = (&w[0], &w[1]);
            ((ci - cj) / int(j - i), (j - i) as u64)
        })
        .collect()
}

/// Breakpoints of `f` in increasing order with multiplicities summing to the
/// width of `Newt(f)`.
pub fn uni_roots(f: &TropPoly) -> Result<Vec<(Rational, u64)>> {
    Ok(roots_of_chain(&chain_of(f)?))
}

pub fn uni_factor(f: &TropPoly) -> Result<FactoredUni> {
    let chain = chain_of(f)?;
    Ok(FactoredUni {
        unit_coeff: chain[chain.len() - 1].1.clone(),
        monomial_exp: chain[0].0,
        roots: roots_of_chain(&chain),
    })
}

/// Multiplies out a factored form; the result is canonical.
pub fn uni_expand(ff: &FactoredUni) -> TropPoly {
    let mut acc = TropPoly::monomial(ff.unit_coeff.clone(), Exponent(vec![ff.monomial_exp]));
    for (a, m) in &ff.roots {
        let linear = TropPoly::from_terms(
            1,
            [
                (Exponent(vec![1]), Rational::zero()),
                (Exponent(vec![0]), a.clone()),
            ],
        )
        .expect("arity 1");
        let power = u32::try_from(*m).expect("multiplicity fits in u32");
        acc = acc.trop_mul(&linear.trop_pow(power)).expect("arity 1");
    }
    acc.canonicalize()
}

/// A representation `num ⊘ den` together with its volume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepPair {
    num: TropPoly,
    den: TropPoly,
    volume: Rational,
}

impl RepPair {
    pub fn new(num: TropPoly, den: TropPoly) -> Result<Self> {
        let volume = vol_pair(&num, &den)?;
        TropRational::new(num.clone(), den.clone())?;
        Ok(RepPair { num, den, volume })
    }

    pub fn num(&self) -> &TropPoly {
        &self.num
    }

    pub fn den(&self) -> &TropPoly {
        &self.den
    }

    pub fn volume(&self) -> &Rational {
        &self.volume
    }

    pub fn to_rational(&self) -> TropRational {
        TropRational::new(self.num.clone(), self.den.clone()).expect("checked on construction")
    }
}

type Roots = Vec<(Rational, u64)>;

/// Removes common roots up to their smaller multiplicity from both lists.
fn cancel(a: &[(Rational, u64)], b: &[(Rational, u64)]) -> (Roots, Roots) {
    let mut left = Vec::new();
    let mut right: Vec<(Rational, u64)> = b.to_vec();
    for (r, m) in a {
        match right.iter_mut().find(|(s, _)| s == r) {
            Some(entry) => {
                let common = entry.1.min(*m);
                entry.1 -= common;
                if *m > common {
                    left.push((r.clone(), m - common));
                }
            }
            None => left.push((r.clone(), *m)),
        }
    }
    right.retain(|(_, m)| *m > 0);
    (left, right)
}

/// The minimum-volume representation of a univariate rational function,
/// normalized so the denominator is `⊙_b (x ⊕ b)^{m_b}` with no unit.
pub fn minrep_uni(phi: &TropRational) -> Result<RepPair> {
    phi.den().require_arity("1", |n| n == 1)?;
    check_arity(1, phi.arity())?;
    if phi.num().is_neg_inf() {
        return RepPair::new(
            TropPoly::neg_inf(1),
            TropPoly::constant(1, Rational::zero()),
        );
    }
    let top = uni_factor(phi.num())?;
    let bottom = uni_factor(phi.den())?;
    let (num_roots, den_roots) = cancel(&top.roots, &bottom.roots);
    let num = uni_expand(&FactoredUni {
        unit_coeff: &top.unit_coeff - &bottom.unit_coeff,
        monomial_exp: top.monomial_exp - bottom.monomial_exp,
        roots: num_roots,
    });
    let den = uni_expand(&FactoredUni {
        unit_coeff: Rational::zero(),
        monomial_exp: 0,
        roots: den_roots,
    });
    RepPair::new(num, den)
}
