use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Partition, SkewShape};
use crate::error::{Error, Result};
use crate::sympoly::{schur, skew_schur, ExactPolynomial};

/// Integer coefficients `c_μ` of `f = Σ c_μ s_μ`, all `μ` of one size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ExpansionJson", try_from = "ExpansionJson")]
pub struct SchurExpansion {
    coefficients: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn coefficients(&self) -> &BTreeMap<Partition, BigInt> {
        &self.coefficients
    }

    pub fn coeff(&self, mu: &Partition) -> BigInt {
        self.coefficients.get(mu).cloned().unwrap_or_default()
    }

    /// Degree of the indexing partitions; `None` for the empty expansion.
    pub fn degree(&self) -> Option<u64> {
        self.coefficients.keys().next().map(Partition::size)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coefficients.values().all(|c| !c.is_negative())
    }

    /// `Σ c_μ s_μ(x₁..x_n)` evaluated back into a polynomial by tableau
    /// enumeration.
    pub fn recombine(&self, n: usize) -> ExactPolynomial {
        let mut out = ExactPolynomial::zero(n);
        for (mu, c) in &self.coefficients {
            out = out.add(&schur(mu, n).scale(c)).expect("same nvars");
        }
        out
    }
}

/// Wire form: `{"coefficients": [{"coeff": "1", "partition": "2,1"}, ...]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpansionJson {
    coefficients: Vec<ExpansionTermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExpansionTermJson {
    coeff: String,
    partition: String,
}

impl From<SchurExpansion> for ExpansionJson {
    fn from(e: SchurExpansion) -> Self {
        ExpansionJson {
            coefficients: e
                .coefficients
                .into_iter()
                .map(|(p, c)| ExpansionTermJson {
                    coeff: c.to_string(),
                    partition: p.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<ExpansionJson> for SchurExpansion {
    type Error = Error;

    fn try_from(j: ExpansionJson) -> Result<Self> {
        let mut coefficients = BTreeMap::new();
        for t in j.coefficients {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|e| Error::Parse(format!("coefficient {:?}: {e}", t.coeff)))?;
            if !c.is_zero() {
                coefficients.insert(t.partition.parse()?, c);
            }
        }
        Ok(SchurExpansion { coefficients })
    }
}

/// Kostka numbers `K_{λμ}`: semistandard tableaux of shape λ and content μ,
/// counted as chains of horizontal strips. Memoized per instance.
#[derive(Default)]
pub struct KostkaTable {
    memo: HashMap<(Partition, Vec<u32>), BigInt>,
}

impl KostkaTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, lambda: &Partition, content: &[u32]) -> BigInt {
        if lambda.size() != content.iter().map(|&c| u64::from(c)).sum::<u64>() {
            return BigInt::zero();
        }
        self.count(lambda, content)
    }

    fn count(&mut self, lambda: &Partition, content: &[u32]) -> BigInt {
        let Some((&last, rest)) = content.split_last() else {
            return if lambda.is_empty() {
                1.into()
            } else {
                0.into()
            };
        };
        let key = (lambda.clone(), content.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        // remove a horizontal strip of size `last`: λ_{i+1} ≤ ν_i ≤ λ_i
        let mut total = BigInt::zero();
        let mut nu = vec![0u32; lambda.len()];
        self.strips(lambda, 0, last, &mut nu, rest, &mut total);
        self.memo.insert(key, total.clone());
        total
    }

    fn strips(
        &mut self,
        lambda: &Partition,
        i: usize,
        left: u32,
        nu: &mut Vec<u32>,
        rest: &[u32],
        total: &mut BigInt,
    ) {
        if i == lambda.len() {
            if left == 0 {
                let inner = Partition::new(nu.clone()).expect("interlacing keeps order");
                *total += self.count(&inner, rest);
            }
            return;
        }
        let hi = lambda.part(i);
        let lo = lambda.part(i + 1);
        for take in 0..=(hi - lo).min(left) {
            nu[i] = hi - take;
            self.strips(lambda, i + 1, left - take, nu, rest, total);
        }
    }
}

/// Expands a symmetric homogeneous polynomial in the Schur basis.
///
/// Works on the monomial-basis coordinates (coefficients on partition
/// exponents): repeatedly take the lexicographically largest surviving
/// partition μ, which is ≤_D-maximal, record its coefficient `c`, and
/// subtract `c·s_μ` through the Kostka numbers `K_{μν}`. Partitions with
/// more than `nvars` parts never appear, matching the truncation.
pub fn schur_expand(f: &ExactPolynomial) -> Result<SchurExpansion> {
    let degree = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(expand_dominant(
        f.dominant_coefficients(),
        degree,
        f.nvars(),
    ))
}

/// Schur expansion from monomial-basis coordinates of a symmetric
/// polynomial of the given degree in `nvars` variables.
pub fn expand_dominant(
    mut remaining: BTreeMap<Partition, BigInt>,
    degree: u64,
    nvars: usize,
) -> SchurExpansion {
    let basis = Partition::all_of_size(degree as u32, nvars);
    let mut kostka = KostkaTable::new();
    let mut coefficients = BTreeMap::new();
    while let Some((mu, c)) = remaining.pop_last() {
        for nu in &basis {
            if nu >= &mu || !nu.dominance_leq(&mu).expect("same size") {
                continue;
            }
            let k = kostka.get(&mu, nu.parts());
            if k.is_zero() {
                continue;
            }
            let entry = remaining.entry(nu.clone()).or_default();
            *entry -= &c * k;
            if entry.is_zero() {
                remaining.remove(nu);
            }
        }
        coefficients.insert(mu, c);
    }
    SchurExpansion { coefficients }
}

/// The partition λ such that `f` is dominated by `s_λ`: Schur-positive, with
/// `c_λ ≠ 0` and every other `μ` in the support satisfying `μ ≤_D λ`.
pub fn dominating_partition(f: &ExactPolynomial) -> Result<Option<Partition>> {
    Ok(dominating_of(&schur_expand(f)?))
}

pub fn dominating_of(expansion: &SchurExpansion) -> Option<Partition> {
    if !expansion.is_nonnegative() {
        return None;
    }
    let top = expansion.coefficients.keys().next_back()?;
    expansion
        .coefficients
        .keys()
        .all(|mu| mu.dominance_leq(top).expect("homogeneous"))
        .then(|| top.clone())
}

/// The Littlewood–Richardson coefficient `c^λ_{μν}`, read off the Schur
/// expansion of `s_{λ/μ}(x₁..x_n)`.
pub fn lr_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<BigInt> {
    if nu.len() > n {
        return Err(Error::TooManyParts {
            parts: nu.len(),
            nvars: n,
        });
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone())?;
    Ok(schur_expand(&skew_schur(&shape, n))?.coeff(nu))
}
