//! Sample-based check of the hypersurface of `f ⊕ (t ⊙ g)` against the graph
//! of `φ = f ⊘ g`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::plane::hypersurface_member;
use crate::error::{check_arity, Result};
use crate::tropical::{int, rat, Rational, TropNum, TropPoly, TropRational};

/// Which description of the hypersurface a sample `(x, t)` satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Clause {
    /// `t = φ(x)`, finite.
    Graph,
    /// `x ∈ V(f)` and `t < φ(x)`.
    BelowOnNumerator,
    /// `x ∈ V(g)` and `t > φ(x)`.
    AboveOnDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleOutcome {
    pub point: Vec<Rational>,
    pub member: bool,
    pub clause: Option<Clause>,
}

impl SampleOutcome {
    pub fn consistent(&self) -> bool {
        self.member == self.clause.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub outcomes: Vec<SampleOutcome>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(SampleOutcome::consistent)
    }

    pub fn violations(&self) -> impl Iterator<Item = &SampleOutcome> {
        self.outcomes.iter().filter(|o| !o.consistent())
    }

    pub fn members(&self) -> usize {
        self.outcomes.iter().filter(|o| o.member).count()
    }
}

/// Compares membership in `V(f ⊕ (t ⊙ g))` with the three-clause description
/// at every sample `(x, t)`. When `f = -inf` the description reduces to
/// `x ∈ V(g)`.
pub fn graph_duality_check(
    f: &TropPoly,
    g: &TropPoly,
    samples: &[Vec<Rational>],
) -> Result<DualityReport> {
    let phi = TropRational::new(f.clone(), g.clone())?;
    let stacked = TropPoly::stack(f, g)?;
    let n = f.arity();
    let mut outcomes = Vec::with_capacity(samples.len());
    for s in samples {
        check_arity(n + 1, s.len())?;
        let (x, t) = (&s[..n], &s[n]);
        let member = hypersurface_member(&stacked, s)?;
        let clause = match phi.eval(x)? {
            TropNum::Bottom => hypersurface_member(g, x)?.then_some(Clause::AboveOnDenominator),
            TropNum::Finite(v) => {
                if *t == v {
                    Some(Clause::Graph)
                } else if *t < v {
                    hypersurface_member(f, x)?.then_some(Clause::BelowOnNumerator)
                } else {
                    hypersurface_member(g, x)?.then_some(Clause::AboveOnDenominator)
                }
            }
        };
        outcomes.push(SampleOutcome {
            point: s.clone(),
            member,
            clause,
        });
    }
    Ok(DualityReport { outcomes })
}

fn random_rational(rng: &mut ChaCha8Rng, span: i64) -> Rational {
    let den = rng.random_range(1..=64i64);
    rat(rng.random_range(-span * den..=span * den), den)
}

/// A point of `V(h)` near a random point, if the attempt lands on one.
fn point_on(h: &TropPoly, rng: &mut ChaCha8Rng, span: i64) -> Option<Vec<Rational>> {
    let terms: Vec<_> = h.terms().collect();
    if terms.len() < 2 {
        return None;
    }
    let n = h.arity();
    let x: Vec<Rational> = (0..n).map(|_| random_rational(rng, span)).collect();
    let i = rng.random_range(0..terms.len());
    let mut j = rng.random_range(0..terms.len() - 1);
    if j >= i {
        j += 1;
    }
    // slide x along e_i - e_j until the two terms tie
    let (ei, ci) = terms[i];
    let (ej, cj) = terms[j];
    let d: Vec<i64> = ei.0.iter().zip(&ej.0).map(|(a, b)| a - b).collect();
    let dd: i64 = d.iter().map(|v| v * v).sum();
    let gap = (ci + ei.dot(&x)) - (cj + ej.dot(&x));
    let lambda = -gap / int(dd);
    let y: Vec<Rational> = x
        .iter()
        .zip(&d)
        .map(|(xk, dk)| xk + &lambda * int(*dk))
        .collect();
    hypersurface_member(h, &y).ok()?.then_some(y)
}

/// Deterministic samples in `R^{n+1}`: random points, points on the graph of
/// `φ`, and points above and below the graph over `V(f)` and `V(g)`.
/// Coordinates are rationals with denominators at most 64.
pub fn duality_samples(
    f: &TropPoly,
    g: &TropPoly,
    count: usize,
    seed: u64,
) -> Result<Vec<Vec<Rational>>> {
    let phi = TropRational::new(f.clone(), g.clone())?;
    let n = f.arity();
    let span = 8;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempt = 0usize;
    while out.len() < count {
        attempt += 1;
        let kind = attempt % 4;
        let x = match kind {
            2 => point_on(f, &mut rng, span),
            3 => point_on(g, &mut rng, span),
            _ => None,
        }
        .unwrap_or_else(|| (0..n).map(|_| random_rational(&mut rng, span)).collect());
        let t = match (kind, phi.eval(&x)?) {
            (0, _) | (_, TropNum::Bottom) => random_rational(&mut rng, span),
            (_, TropNum::Finite(v)) => {
                let offset = if kind == 1 {
                    Rational::zero()
                } else {
                    random_rational(&mut rng, 2)
                };
                v + offset
            }
        };
        let mut s = x;
        s.push(t);
        out.push(s);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn uni(src: &str) -> TropPoly {
        parse_poly(src, &["x"]).unwrap()
    }

    #[test]
    fn worked_samples() {
        let (f, g) = (uni("x + 0"), uni("x + 1"));
        let r =
            graph_duality_check(&f, &g, &[vec![int(2), int(0)], vec![int(0), int(-2)]]).unwrap();
        assert!(r.passed());
        assert_eq!(r.outcomes[0].clause, Some(Clause::Graph));
        assert_eq!(r.outcomes[1].clause, Some(Clause::BelowOnNumerator));
        assert!(r.outcomes.iter().all(|o| o.member));
    }

    #[test]
    fn neg_inf_numerator() {
        let r = graph_duality_check(
            &TropPoly::neg_inf(1),
            &uni("x + 0"),
            &[vec![int(0), int(7)], vec![int(1), int(7)]],
        )
        .unwrap();
        assert!(r.passed());
        assert!(r.outcomes[0].member);
        assert!(!r.outcomes[1].member);
    }

    #[test]
    fn random_samples_agree() {
        let f = parse_poly("xy + (-1)y^2 + x + y + 0", &["x", "y"]).unwrap();
        let g = parse_poly("x^2 + 1xy + y + 0", &["x", "y"]).unwrap();
        let samples = duality_samples(&f, &g, 400, 7).unwrap();
        assert_eq!(samples, duality_samples(&f, &g, 400, 7).unwrap());
        let r = graph_duality_check(&f, &g, &samples).unwrap();
        assert!(r.passed());
        assert!(r.members() > 100);
    }

    #[test]
    fn dimension_errors() {
        let (f, g) = (uni("x + 0"), uni("x + 1"));
        assert!(graph_duality_check(&f, &g, &[vec![int(0)]]).is_err());
        assert!(graph_duality_check(&f, &TropPoly::neg_inf(1), &[]).is_err());
    }
}
