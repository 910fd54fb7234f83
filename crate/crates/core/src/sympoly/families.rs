use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::{content, for_each_ssyt, Partition, Permutation, SkewShape};
use crate::sympoly::ExactPolynomial;

/// `s_{λ/μ}(x₁..x_n)`: the sum of `x^T` over semistandard tableaux `T` of the
/// shape with entries in `[n]`.
pub fn skew_schur(shape: &SkewShape, n: usize) -> ExactPolynomial {
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for_each_ssyt(shape, n as u32, |word| {
        *counts.entry(content(word, n)).or_default() += 1;
    });
    ExactPolynomial::from_terms(n, counts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
        .expect("content vectors have length n")
}

/// `s_λ(x₁..x_n)`.
pub fn schur(lambda: &Partition, n: usize) -> ExactPolynomial {
    skew_schur(&SkewShape::straight(lambda.clone()), n)
}

/// `e_k(x₁..x_n)`, the sum of all squarefree monomials of degree `k`.
pub fn elementary(k: usize, n: usize) -> ExactPolynomial {
    let mut p = ExactPolynomial::zero(n);
    if k > n {
        return p;
    }
    fn rec(start: usize, left: usize, cur: &mut Vec<u32>, p: &mut ExactPolynomial) {
        if left == 0 {
            p.add_term(cur.clone(), BigInt::one());
            return;
        }
        for i in start..=cur.len() - left {
            cur[i] = 1;
            rec(i + 1, left - 1, cur, p);
            cur[i] = 0;
        }
    }
    rec(0, k, &mut vec![0; n], &mut p);
    p
}

/// `m_λ(x₁..x_n)`: one term for each distinct rearrangement of λ padded to
/// length `n`; zero if λ has more than `n` parts.
pub fn monomial(lambda: &Partition, n: usize) -> ExactPolynomial {
    let mut p = ExactPolynomial::zero(n);
    let Ok(mut exp) = lambda.padded(n) else {
        return p;
    };
    // iterate distinct permutations of the multiset, starting from the
    // ascending arrangement
    exp.sort_unstable();
    loop {
        p.add_term(exp.clone(), BigInt::one());
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| exp[i] < exp[i + 1])
        else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| exp[j] > exp[i]).unwrap();
        exp.swap(i, j);
        exp[i + 1..].reverse();
    }
    p
}

/// The Stanley symmetric polynomial `F_w(x₁..x_n)`, by direct enumeration of
/// reduced words `a` of `w` and compatible sequences `b ∈ C(a)` with entries
/// at most `n`.
pub fn stanley_poly(w: &Permutation, n: usize) -> ExactPolynomial {
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for a in w.reduced_words() {
        a.for_each_compatible(n as u32, |b| {
            *counts.entry(content(b, n)).or_default() += 1;
        });
    }
    ExactPolynomial::from_terms(n, counts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
        .expect("content vectors have length n")
}

/// Coefficients of `F_w(x₁..x_n)` on partition exponents only.
///
/// A weakly increasing `b` is fixed by its content `c`, and it increases
/// strictly exactly at the partial sums of `c`. So the coefficient of `x^c`
/// counts the reduced words whose ascent set lies inside those partial sums.
/// This avoids enumerating compatible sequences entirely.
pub fn stanley_dominant(w: &Permutation, n: usize) -> BTreeMap<Partition, BigInt> {
    let len = w.length();
    assert!(len < 64, "ascent masks hold at most 63 positions");
    let mut by_mask: HashMap<u64, u64> = HashMap::new();
    for a in w.reduced_words() {
        let mask = a.ascents().iter().fold(0u64, |m, &i| m | (1 << i));
        *by_mask.entry(mask).or_default() += 1;
    }
    let mut out = BTreeMap::new();
    for mu in Partition::all_of_size(len as u32, n) {
        let mut breaks = 0u64;
        let mut acc = 0usize;
        for &p in mu.parts() {
            acc += p as usize;
            if acc < len {
                breaks |= 1 << acc;
            }
        }
        let count: u64 = by_mask
            .iter()
            .filter(|(&m, _)| m & !breaks == 0)
            .map(|(_, &c)| c)
            .sum();
        if count > 0 {
            out.insert(mu, BigInt::from(count));
        }
    }
    out
}
