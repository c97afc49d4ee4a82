//! Residuation division and a bounded search for factorizations.
//!
//! The search follows Minkowski decompositions of the Newton polygon and
//! tries to realize each one by alternating residuation. Every reported
//! factorization is verified; the search is complete when all coefficients
//! are zero but may miss factorizations of general polynomials.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{check_arity, Error, Result};
use crate::geom::{lattice_points, summand_decompositions, Polygon};
use crate::subdiv::mcomp;
use crate::tropical::{Exponent, Rational, TropPoly};

/// The largest `h` (coefficientwise, on the lattice points where it is
/// defined) with `g ⊙ h ≤ f`, computed on canonical forms. `None` when no
/// shift of `supp(g)` fits inside `supp(f)`.
fn residual(f: &TropPoly, g: &TropPoly) -> Option<TropPoly> {
    let (fc, gc) = (f.canonicalize(), g.canonicalize());
    let anchor = gc.support().next()?.clone();
    let mut terms = Vec::new();
    for e in fc.support() {
        let k = e.sub(&anchor);
        let mut best: Option<Rational> = None;
        let mut fits = true;
        for (i, gi) in gc.terms() {
            match fc.coefficient(&k.add(i)).finite() {
                Some(fi) => {
                    let v = fi - gi;
                    if best.as_ref().is_none_or(|b| v < *b) {
                        best = Some(v);
                    }
                }
                None => {
                    fits = false;
                    break;
                }
            }
        }
        if fits {
            terms.push((k, best.expect("g is nonempty")));
        }
    }
    if terms.is_empty() {
        return None;
    }
    Some(
        TropPoly::from_terms(f.arity(), terms)
            .expect("same arity")
            .canonicalize(),
    )
}

/// Exact quotient `h` with `g ⊙ h = f` as functions, if one exists.
pub fn try_divide(f: &TropPoly, g: &TropPoly) -> Result<Option<TropPoly>> {
    check_arity(f.arity(), g.arity())?;
    g.require_nonempty("a divisor")?;
    if f.is_neg_inf() {
        return Ok(Some(TropPoly::neg_inf(f.arity())));
    }
    let Some(h) = residual(f, g) else {
        return Ok(None);
    };
    Ok(g.trop_mul(&h)?.func_eq(f)?.then_some(h))
}

/// Σ mComp(f_i) − (k − 1).
pub fn fcomp(factors: &[TropPoly]) -> Result<usize> {
    if factors.is_empty() {
        return Err(Error::Precondition(
            "fComp needs at least one factor".into(),
        ));
    }
    let mut total = 0;
    for f in factors {
        total += mcomp(f)?;
    }
    Ok(total - (factors.len() - 1))
}

fn newt(f: &TropPoly) -> Polygon {
    Polygon::from_lattice(&f.support().map(|e| (e.0[0], e.0[1])).collect::<Vec<_>>())
}

/// True iff `Newt(f)` is not a point and has no decomposition into two
/// Minkowski summands that are not points.
pub fn newton_irreducible(f: &TropPoly) -> Result<bool> {
    f.require_nonempty("irreducibility")?;
    f.require_arity("1 or 2", |n| n == 1 || n == 2)?;
    if f.arity() == 1 {
        let mut exps = f.support().map(|e| e.0[0]);
        let lo = exps.next().expect("nonempty");
        return Ok(exps.last().unwrap_or(lo) - lo == 1);
    }
    let p = newt(f);
    Ok(p.dimension() != Some(0) && summand_decompositions(&p)?.is_empty())
}

/// Irreducibility of the curve of an all-zero-coefficient polynomial, which
/// coincides with irreducibility of its Newton polygon.
pub fn curve_irreducible(f: &TropPoly) -> Result<bool> {
    f.require_arity("2", |n| n == 2)?;
    if !f.all_coefficients_zero() {
        return Err(Error::Precondition(
            "curve irreducibility is only decided for all-zero coefficients".into(),
        ));
    }
    newton_irreducible(f)
}

/// A factorization `unit ⊙ f_1 ⊙ … ⊙ f_k`. Each factor has nonnegative
/// exponents with zero minimum in every variable and coefficient 0 at its
/// lexicographically smallest exponent; factors are sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Factorization {
    pub unit_coeff: Rational,
    pub unit_exp: Exponent,
    pub factors: Vec<TropPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationSearch {
    pub factorizations: Vec<Factorization>,
    /// False unless every coefficient of the input is zero; the search is
    /// only guaranteed to find all factorizations in that case.
    pub complete: bool,
    /// True when the depth bound cut off some branch.
    pub truncated: bool,
}

/// Splits `f` into `unit ⊙ normalized`.
fn normalize(f: &TropPoly) -> (Rational, Exponent, TropPoly) {
    let canon = f.canonicalize();
    let n = canon.arity();
    let shift = Exponent(
        (0..n)
            .map(|k| canon.support().map(|e| e.0[k]).min().expect("nonempty"))
            .collect(),
    );
    let c0 = canon.terms().next().expect("nonempty").1.clone();
    let g = TropPoly::from_terms(n, canon.terms().map(|(e, c)| (e.sub(&shift), c - &c0)))
        .expect("same arity");
    (c0, shift, g)
}

struct Search {
    truncated: bool,
    memo: BTreeMap<(TropPoly, usize), BTreeSet<Vec<TropPoly>>>,
}

impl Search {
    /// Two non-unit factors of `f` realizing the summand `q`, if residuation finds them.
    fn split(f: &TropPoly, q: &Polygon) -> Result<Option<(TropPoly, TropPoly)>> {
        let start = TropPoly::from_terms(
            2,
            lattice_points(q)?
                .into_iter()
                .map(|(x, y)| (Exponent(vec![x, y]), Rational::zero())),
        )?;
        let mut g = start;
        let mut h = match residual(f, &g) {
            Some(h) => h,
            None => return Ok(None),
        };
        for _ in 0..16 {
            let Some(g2) = residual(f, &h) else {
                return Ok(None);
            };
            let Some(h2) = residual(f, &g2) else {
                return Ok(None);
            };
            let settled = g2 == g && h2 == h;
            g = g2;
            h = h2;
            if settled {
                break;
            }
        }
        if g.is_unit() || h.is_unit() || g.len() <= 1 || h.len() <= 1 {
            return Ok(None);
        }
        if newt(&g).dimension() == Some(0) || newt(&h).dimension() == Some(0) {
            return Ok(None);
        }
        Ok(g.trop_mul(&h)?.func_eq(f)?.then_some((g, h)))
    }

    /// Factorizations of a normalized `f` into Newton-irreducible factors (normalized, sorted).
    fn irreducible(&mut self, f: &TropPoly, depth: usize) -> Result<BTreeSet<Vec<TropPoly>>> {
        if let Some(hit) = self.memo.get(&(f.clone(), depth)) {
            return Ok(hit.clone());
        }
        let pairs = summand_decompositions(&newt(f))?;
        let mut out = BTreeSet::new();
        if pairs.is_empty() {
            out.insert(vec![f.clone()]);
        } else if depth == 0 {
            self.truncated = true;
        } else {
            for pair in &pairs {
                for q in [&pair.first, &pair.second] {
                    let Some((g, h)) = Search::split(f, q)? else {
                        continue;
                    };
                    let (g, h) = (normalize(&g).2, normalize(&h).2);
                    let left = self.irreducible(&g, depth - 1)?;
                    let right = self.irreducible(&h, depth - 1)?;
                    for a in &left {
                        for b in &right {
                            let mut all: Vec<TropPoly> = a.iter().chain(b).cloned().collect();
                            all.sort();
                            out.insert(all);
                        }
                    }
                }
            }
        }
        self.memo.insert((f.clone(), depth), out.clone());
        Ok(out)
    }
}

pub const DEFAULT_DEPTH: usize = 8;

/// The trivial factorization together with every factorization into
/// Newton-irreducible factors found by the search.
pub fn enumerate_factorizations(f: &TropPoly, depth: usize) -> Result<FactorizationSearch> {
    f.require_arity("2", |n| n == 2)?;
    f.require_nonempty("factorization")?;
    let (c0, shift, g) = normalize(f);
    let mut search = Search {
        truncated: false,
        memo: BTreeMap::new(),
    };
    let mut found: BTreeSet<Vec<TropPoly>> = search.irreducible(&g, depth)?;
    found.insert(vec![g.clone()]);
    let mut factorizations = Vec::new();
    for factors in found {
        // the product of normalized factors is normalized, so the unit is shared
        let product = factors
            .iter()
            .skip(1)
            .try_fold(factors[0].clone(), |acc, x| acc.trop_mul(x))?;
        debug_assert!(product.func_eq(&g)?);
        factorizations.push(Factorization {
            unit_coeff: c0.clone(),
            unit_exp: shift.clone(),
            factors,
        });
    }
    factorizations.sort_by(|a, b| a.factors.len().cmp(&b.factors.len()).then_with(|| a.cmp(b)));
    Ok(FactorizationSearch {
        factorizations,
        complete: f.all_coefficients_zero(),
        truncated: search.truncated,
    })
}

impl Factorization {
    /// `unit ⊙ Π factors`.
    pub fn product(&self) -> TropPoly {
        let unit = TropPoly::monomial(self.unit_coeff.clone(), self.unit_exp.clone());
        self.factors
            .iter()
            .fold(unit, |acc, f| acc.trop_mul(f).expect("same arity"))
    }
}
