//! Max-plus polynomials: tropicalization, exact evaluation, and the two
//! notions of equality.
//!
//! *Axiomatic* equality compares term sets after idempotent merging
//! (`a ⊕ a = a`), which is what the semiring axioms can prove. *Functional*
//! equality compares the piecewise-linear functions, i.e. term sets after
//! dropping every term that is nowhere strictly on top. The second is
//! strictly weaker: `max(2x₁, 2x₂)` and `max(2x₁, x₁+x₂, 2x₂)` agree as
//! functions but not as formal expressions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::newton::{lp, RationalPoint};
use crate::sympoly::{ExactPolynomial, Exponent};

/// Which equality of tropical polynomials to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Axiomatic,
    Functional,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "axiomatic" => Ok(Mode::Axiomatic),
            "functional" => Ok(Mode::Functional),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Axiomatic => "axiomatic",
            Mode::Functional => "functional",
        })
    }
}

/// A max-plus polynomial `max_i (e_i·x + c_i)` with at least one term.
///
/// The term list is kept as written, so repeated exponents may appear until
/// [`TropicalPolynomial::canonicalize`] merges them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TropJson", try_from = "TropJson")]
pub struct TropicalPolynomial {
    nvars: usize,
    terms: Vec<(Exponent, BigRational)>,
}

impl TropicalPolynomial {
    pub fn new(nvars: usize, terms: Vec<(Exponent, BigRational)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        if let Some((e, _)) = terms.iter().find(|(e, _)| e.len() != nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: e.len(),
            });
        }
        Ok(TropicalPolynomial { nvars, terms })
    }

    /// Terms with all coefficients 0, one per exponent given.
    pub fn from_exponents(nvars: usize, exps: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        Self::new(
            nvars,
            exps.into_iter().map(|e| (e, BigRational::zero())).collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Exponent, BigRational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exponents of the terms, in stored order.
    pub fn exponents(&self) -> impl Iterator<Item = &Exponent> {
        self.terms.iter().map(|(e, _)| e)
    }

    /// `max_i (e_i·x + c_i)` in exact arithmetic.
    pub fn eval(&self, x: &RationalPoint) -> Result<BigRational> {
        if x.dim() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: x.dim(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| affine(e, c, x.coords()))
            .max()
            .expect("at least one term"))
    }

    /// The canonical form for `mode`, sorted by exponent.
    pub fn canonicalize(&self, mode: Mode) -> TropicalPolynomial {
        let merged = merge_max(self.terms.iter().cloned());
        let terms = match mode {
            Mode::Axiomatic => merged.into_iter().collect(),
            Mode::Functional => prune_redundant(merged.into_iter().collect()),
        };
        TropicalPolynomial {
            nvars: self.nvars,
            terms,
        }
    }
}

fn affine(e: &[u32], c: &BigRational, x: &[BigRational]) -> BigRational {
    let mut v = c.clone();
    for (&ei, xi) in e.iter().zip(x) {
        if ei != 0 {
            v += xi * BigRational::from_integer(BigInt::from(ei));
        }
    }
    v
}

/// Idempotent merge: equal exponents keep the largest coefficient.
pub(crate) fn merge_max(
    terms: impl IntoIterator<Item = (Exponent, BigRational)>,
) -> BTreeMap<Exponent, BigRational> {
    let mut out: BTreeMap<Exponent, BigRational> = BTreeMap::new();
    for (e, c) in terms {
        match out.get_mut(&e) {
            Some(old) if *old >= c => {}
            Some(old) => *old = c,
            None => {
                out.insert(e, c);
            }
        }
    }
    out
}

/// Drops terms whose affine form never strictly exceeds the others. Input
/// exponents must be distinct.
pub(crate) fn prune_redundant(
    mut terms: Vec<(Exponent, BigRational)>,
) -> Vec<(Exponent, BigRational)> {
    let mut i = 0;
    while i < terms.len() {
        if terms.len() > 1 && is_redundant(&terms, i) {
            terms.remove(i);
        } else {
            i += 1;
        }
    }
    terms
}

/// Term `t` is dominated by the upper envelope of the others iff some convex
/// combination of the other exponents equals `e_t` with combined
/// coefficient at least `c_t`.
fn is_redundant(terms: &[(Exponent, BigRational)], t: usize) -> bool {
    let (et, ct) = &terms[t];
    let others: Vec<&(Exponent, BigRational)> = terms
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != t)
        .map(|(_, x)| x)
        .collect();
    // cheap rejection: outside the bounding box of the other exponents
    for d in 0..et.len() {
        let lo = others.iter().map(|(e, _)| e[d]).min().unwrap();
        let hi = others.iter().map(|(e, _)| e[d]).max().unwrap();
        if et[d] < lo || et[d] > hi {
            return false;
        }
    }
    let q = |x: u32| BigRational::from_integer(BigInt::from(x));
    let k = others.len();
    // columns: one weight per other term, then a surplus slack
    let mut a: Vec<Vec<BigRational>> = (0..et.len())
        .map(|d| {
            let mut row: Vec<BigRational> = others.iter().map(|(e, _)| q(e[d])).collect();
            row.push(BigRational::zero());
            row
        })
        .collect();
    let mut ones = vec![q(1); k];
    ones.push(BigRational::zero());
    a.push(ones);
    let mut coeff_row: Vec<BigRational> = others.iter().map(|(_, c)| c.clone()).collect();
    coeff_row.push(-q(1));
    a.push(coeff_row);
    let mut b: Vec<BigRational> = et.iter().map(|&x| q(x)).collect();
    b.push(q(1));
    b.push(ct.clone());
    lp::feasible(&a, &b)
}

/// `Trop(f)` under the trivial valuation: one term per support exponent,
/// coefficient 0.
pub fn tropicalize(f: &ExactPolynomial) -> Result<TropicalPolynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    TropicalPolynomial::from_exponents(f.nvars(), f.terms().keys().cloned())
}

/// Equality of canonical forms in the given mode. Polynomials in different
/// numbers of variables are never equal.
pub fn trop_equal(a: &TropicalPolynomial, b: &TropicalPolynomial, mode: Mode) -> bool {
    a.nvars == b.nvars && a.canonicalize(mode) == b.canonicalize(mode)
}

/// `count` pseudorandom points with small rational coordinates, reproducible
/// from `seed`.
pub fn sample_points(dim: usize, count: usize, seed: u64) -> Vec<RationalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            RationalPoint(
                (0..dim)
                    .map(|_| {
                        let num: i64 = rng.gen_range(-50..=50);
                        let den: i64 = rng.gen_range(1..=12);
                        BigRational::new(num.into(), den.into())
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Randomized falsification: `false` as soon as the two functions differ at
/// a sampled point. `true` is evidence, not proof.
pub fn trop_equal_sampled(
    a: &TropicalPolynomial,
    b: &TropicalPolynomial,
    count: usize,
    seed: u64,
) -> bool {
    if a.nvars != b.nvars {
        return false;
    }
    sample_points(a.nvars, count, seed)
        .iter()
        .all(|x| a.eval(x).ok() == b.eval(x).ok())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TropJson {
    terms: Vec<TropTermJson>,
    vars: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TropTermJson {
    coeff: String,
    exp: Vec<u32>,
}

impl From<TropicalPolynomial> for TropJson {
    fn from(t: TropicalPolynomial) -> Self {
        TropJson {
            vars: t.nvars,
            terms: t
                .terms
                .into_iter()
                .map(|(exp, c)| TropTermJson {
                    coeff: c.to_string(),
                    exp,
                })
                .collect(),
        }
    }
}

impl TryFrom<TropJson> for TropicalPolynomial {
    type Error = Error;

    fn try_from(j: TropJson) -> Result<Self> {
        let terms = j
            .terms
            .into_iter()
            .map(|t| {
                let c: BigRational = t
                    .coeff
                    .parse()
                    .map_err(|e| Error::Parse(format!("coefficient {:?}: {e}", t.coeff)))?;
                Ok((t.exp, c))
            })
            .collect::<Result<Vec<_>>>()?;
        TropicalPolynomial::new(j.vars, terms)
    }
}

impl fmt::Display for TropicalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let forms: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut parts: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p > 0)
                    .map(|(i, &p)| {
                        if p == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("{p}x{}", i + 1)
                        }
                    })
                    .collect();
                if !c.is_zero() || parts.is_empty() {
                    parts.push(c.to_string());
                }
                parts.join("+")
            })
            .collect();
        write!(f, "max{{{}}}", forms.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{ssyt_enumerate, Partition, SkewShape};
    use crate::sympoly::{elementary, monomial, schur, skew_schur};

    fn q(s: &str) -> BigRational {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> RationalPoint {
        s.parse().unwrap()
    }

    fn trop(n: usize, exps: &[&[u32]]) -> TropicalPolynomial {
        TropicalPolynomial::from_exponents(n, exps.iter().map(|e| e.to_vec())).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn skew21() -> SkewShape {
        "2,1/1".parse().unwrap()
    }

    #[test]
    fn tropicalize_examples() {
        let t = tropicalize(&skew_schur(&skew21(), 2)).unwrap();
        assert_eq!(t, trop(2, &[&[0, 2], &[1, 1], &[2, 0]]));
        let c = tropicalize(&ExactPolynomial::constant(2, 5.into())).unwrap();
        assert_eq!(c, trop(2, &[&[0, 0]]));
        assert_eq!(tropicalize(&elementary(2, 2)).unwrap(), trop(2, &[&[1, 1]]));
        assert_eq!(
            tropicalize(&ExactPolynomial::zero(2)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn evaluation() {
        let t = tropicalize(&skew_schur(&skew21(), 2)).unwrap();
        assert_eq!(t.eval(&pt("1,0")).unwrap(), q("2"));
        assert_eq!(t.eval(&pt("0,0")).unwrap(), q("0"));
        let e1 = tropicalize(&elementary(1, 2)).unwrap();
        assert_eq!(e1.eval(&pt("1/2,1/3")).unwrap(), q("1/2"));
        assert!(matches!(
            e1.eval(&pt("1")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn idempotent_merge_of_tableau_terms() {
        // one tropical term per tableau, before merging
        let raw = TropicalPolynomial::from_exponents(
            2,
            ssyt_enumerate(&skew21(), 2).iter().map(|t| t.weight(2)),
        )
        .unwrap();
        assert_eq!(raw.num_terms(), 4);
        let canon = raw.canonicalize(Mode::Axiomatic);
        assert_eq!(canon, trop(2, &[&[0, 2], &[1, 1], &[2, 0]]));
        assert!(trop_equal(
            &raw,
            &tropicalize(&schur(&p("2"), 2)).unwrap(),
            Mode::Axiomatic
        ));
    }

    #[test]
    fn merge_keeps_max_coefficient() {
        let t = TropicalPolynomial::new(
            1,
            vec![(vec![1], q("1")), (vec![1], q("3/2")), (vec![0], q("0"))],
        )
        .unwrap();
        assert_eq!(
            t.canonicalize(Mode::Axiomatic).terms(),
            &[(vec![0], q("0")), (vec![1], q("3/2"))]
        );
    }

    #[test]
    fn functional_drops_interior_terms() {
        let t = trop(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(
            t.canonicalize(Mode::Functional),
            trop(2, &[&[0, 2], &[2, 0]])
        );
        let single = trop(3, &[&[1, 2, 3]]);
        assert_eq!(single.canonicalize(Mode::Functional), single);
        assert_eq!(single.canonicalize(Mode::Axiomatic), single);
    }

    #[test]
    fn functional_respects_coefficients() {
        // max(2x, x + 1, 0): x + 1 is strictly on top for x in (-1, 1)
        let t = TropicalPolynomial::new(
            1,
            vec![(vec![2], q("0")), (vec![1], q("1")), (vec![0], q("0"))],
        )
        .unwrap();
        assert_eq!(t.canonicalize(Mode::Functional).num_terms(), 3);
        // max(2x, x - 1, 0): x - 1 ≤ max(2x, 0) everywhere
        let t = TropicalPolynomial::new(
            1,
            vec![(vec![2], q("0")), (vec![1], q("-1")), (vec![0], q("0"))],
        )
        .unwrap();
        assert_eq!(t.canonicalize(Mode::Functional).num_terms(), 2);
        // touching but never strictly above: x with max(2x, 0) at x = 0
        let t = TropicalPolynomial::new(
            1,
            vec![(vec![2], q("0")), (vec![1], q("0")), (vec![0], q("0"))],
        )
        .unwrap();
        assert_eq!(t.canonicalize(Mode::Functional).num_terms(), 2);
    }

    #[test]
    fn two_tier_equality() {
        let skew = tropicalize(&skew_schur(&skew21(), 2)).unwrap();
        let s2 = tropicalize(&schur(&p("2"), 2)).unwrap();
        let m2 = tropicalize(&monomial(&p("2"), 2)).unwrap();
        assert!(trop_equal(&skew, &s2, Mode::Axiomatic));
        assert!(trop_equal(&skew, &skew, Mode::Functional));
        assert!(!trop_equal(&m2, &s2, Mode::Axiomatic));
        assert!(trop_equal(&m2, &s2, Mode::Functional));
    }

    #[test]
    fn sampled_equality() {
        let s2 = tropicalize(&schur(&p("2"), 2)).unwrap();
        let m2 = tropicalize(&monomial(&p("2"), 2)).unwrap();
        assert!(trop_equal_sampled(&m2, &s2, 100, 1));
        assert!(trop_equal_sampled(&s2, &s2, 7, 99));
        let e1 = tropicalize(&elementary(1, 2)).unwrap();
        let e2 = tropicalize(&elementary(2, 2)).unwrap();
        assert!(!trop_equal_sampled(&e1, &e2, 100, 1));
    }

    #[test]
    fn sample_points_are_reproducible() {
        assert_eq!(sample_points(3, 5, 42), sample_points(3, 5, 42));
        assert_ne!(sample_points(3, 5, 42), sample_points(3, 5, 43));
    }

    #[test]
    fn json_form() {
        let t = TropicalPolynomial::new(2, vec![(vec![1, 0], q("1/2")), (vec![0, 1], q("-3"))])
            .unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"coeff":"1/2","exp":[1,0]},{"coeff":"-3","exp":[0,1]}],"vars":2}"#
        );
        assert_eq!(serde_json::from_str::<TropicalPolynomial>(&s).unwrap(), t);
        assert!(serde_json::from_str::<TropicalPolynomial>(r#"{"terms":[],"vars":2}"#).is_err());
    }
}
