use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Exponent vector of a monomial.
pub type Exponent = Vec<u32>;

/// A sparse polynomial with integer coefficients in a fixed number of
/// variables. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PolyJson", try_from = "PolyJson")]
pub struct ExactPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl ExactPolynomial {
    pub fn zero(nvars: usize) -> Self {
        ExactPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponent, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            if exp.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: exp.len(),
                });
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    /// Adds `c·x^exp`. The exponent length must equal `nvars`.
    pub fn add_term(&mut self, exp: Exponent, c: BigInt) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// The common total degree of all terms; `None` if terms of different
    /// degrees are present. The zero polynomial is homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let mut degrees = self
            .terms
            .keys()
            .map(|e| e.iter().map(|&x| u64::from(x)).sum::<u64>());
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    /// Invariance under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(exp, c)| {
            (0..self.nvars.saturating_sub(1)).all(|i| {
                if exp[i] == exp[i + 1] {
                    return true;
                }
                let mut swapped = exp.clone();
                swapped.swap(i, i + 1);
                self.terms.get(&swapped) == Some(c)
            })
        })
    }

    /// Coefficients on exponents that are partitions (weakly decreasing).
    /// For a symmetric polynomial these determine everything: they are its
    /// coordinates in the monomial symmetric basis.
    pub fn dominant_coefficients(&self) -> BTreeMap<Partition, BigInt> {
        self.terms
            .iter()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|(e, c)| {
                (
                    Partition::new(e.clone()).expect("weakly decreasing"),
                    c.clone(),
                )
            })
            .collect()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        ExactPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest exponent first reads naturally: x1^2 + 2*x1*x2 + x2^2
        for (k, (exp, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| match p {
                    1 => format!("x{}", i + 1),
                    _ => format!("x{}^{p}", i + 1),
                })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// Wire form: `{"terms": [{"coeff": "2", "exp": [1, 1]}, ...], "vars": 2}`,
/// terms sorted by exponent, coefficients as decimal strings.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    terms: Vec<TermJson>,
    vars: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    coeff: String,
    exp: Vec<u32>,
}

impl From<ExactPolynomial> for PolyJson {
    fn from(p: ExactPolynomial) -> Self {
        PolyJson {
            vars: p.nvars,
            terms: p
                .terms
                .into_iter()
                .map(|(exp, c)| TermJson {
                    coeff: c.to_string(),
                    exp,
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for ExactPolynomial {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        let terms = j
            .terms
            .into_iter()
            .map(|t| {
                let c: BigInt = t
                    .coeff
                    .parse()
                    .map_err(|e| Error::Parse(format!("coefficient {:?}: {e}", t.coeff)))?;
                Ok((t.exp, c))
            })
            .collect::<Result<Vec<_>>>()?;
        ExactPolynomial::from_terms(j.vars, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> ExactPolynomial {
        ExactPolynomial::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
            .unwrap()
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = poly(2, &[(&[1, 0], 1), (&[1, 0], -1), (&[0, 1], 0)]);
        assert!(p.is_zero());
    }

    #[test]
    fn symmetry_and_homogeneity() {
        let sym = poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]);
        assert!(sym.is_symmetric());
        assert_eq!(sym.homogeneous_degree(), Some(2));
        let asym = poly(2, &[(&[2, 0], 1), (&[0, 2], 2)]);
        assert!(!asym.is_symmetric());
        let inhom = poly(2, &[(&[1, 0], 1), (&[0, 0], 1)]);
        assert_eq!(inhom.homogeneous_degree(), None);
    }

    #[test]
    fn display_reads_naturally() {
        let p = poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]);
        assert_eq!(p.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert_eq!(poly(2, &[(&[1, 1], -1)]).to_string(), "-x1*x2");
    }

    #[test]
    fn json_shape() {
        let p = poly(2, &[(&[0, 2], 1), (&[2, 0], -3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"terms":[{"coeff":"1","exp":[0,2]},{"coeff":"-3","exp":[2,0]}],"vars":2}"#
        );
        let back: ExactPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<ExactPolynomial>(
            r#"{"terms":[{"coeff":"1","exp":[1]}],"vars":2}"#
        )
        .is_err());
    }

    #[test]
    fn arithmetic() {
        let x = poly(2, &[(&[1, 0], 1)]);
        let y = poly(2, &[(&[0, 1], 1)]);
        let s = x.add(&y).unwrap();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq, poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]));
        assert!(sq.sub(&sq).unwrap().is_zero());
    }
}
