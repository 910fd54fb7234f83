use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tropcirc::bridge::stanley_expansion;
use tropcirc::combinatorics::{ssyt_enumerate, Partition, Permutation, SkewShape};
use tropcirc::sympoly::{
    elementary, lr_coefficient, monomial, schur, schur_expand, skew_schur, stanley_dominant,
    stanley_poly, ExactPolynomial,
};

/// `c^λ_{μν}` by the Littlewood-Richardson rule: tableaux of shape λ/μ and
/// content ν whose reverse reading word is a lattice word.
fn lr_rule(shape: &SkewShape, nu: &Partition) -> u64 {
    let k = nu.len();
    if shape.size() != nu.size() {
        return 0;
    }
    if k == 0 {
        return 1;
    }
    let mut count = 0;
    for t in ssyt_enumerate(shape, k as u32) {
        if t.weight(k) != nu.padded(k).unwrap() {
            continue;
        }
        let mut rows: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for cell in shape.cells() {
            rows.entry(cell.0).or_default().push(t.entry(cell).unwrap());
        }
        let mut seen = vec![0u32; k + 1];
        let lattice = rows.values().all(|row| {
            row.iter().rev().all(|&e| {
                seen[e as usize] += 1;
                e == 1 || seen[e as usize] <= seen[e as usize - 1]
            })
        });
        if lattice {
            count += 1;
        }
    }
    count
}

fn sum_of_schurs(expansion: &BTreeMap<Partition, BigInt>, n: usize) -> ExactPolynomial {
    let mut acc = ExactPolynomial::zero(n);
    for (nu, c) in expansion {
        acc = acc.add(&schur(nu, n).scale(c)).unwrap();
    }
    acc
}

#[test]
fn families_are_symmetric() {
    for n in 1..=4 {
        for d in 0..=8 {
            for lam in Partition::all_of_size(d, n) {
                assert!(schur(&lam, n).is_symmetric(), "s_{lam}, n={n}");
                assert!(monomial(&lam, n).is_symmetric(), "m_{lam}, n={n}");
            }
        }
        for k in 0..=n {
            assert!(elementary(k, n).is_symmetric());
        }
        for s in SkewShape::all_in_box(3, 3) {
            assert!(skew_schur(&s, n).is_symmetric(), "s_{s}, n={n}");
        }
        for w in Permutation::all(4) {
            assert!(stanley_poly(&w, n).is_symmetric(), "F_{w}, n={n}");
        }
    }
}

#[test]
fn skew_schur_recombines_from_lr_rule() {
    for s in SkewShape::all_in_box(4, 4) {
        for n in 1..=4 {
            let expansion: BTreeMap<Partition, BigInt> = Partition::all_of_size(s.size() as u32, n)
                .into_iter()
                .map(|nu| {
                    let c = lr_rule(&s, &nu);
                    (nu, BigInt::from(c))
                })
                .filter(|(_, c)| !c.is_zero())
                .collect();
            assert_eq!(
                sum_of_schurs(&expansion, n),
                skew_schur(&s, n),
                "{s}, n={n}"
            );
        }
    }
}

#[test]
fn lr_coefficients_match_the_rule() {
    for s in SkewShape::all_in_box(3, 3) {
        for nu in Partition::all_of_size(s.size() as u32, 3) {
            let c = lr_coefficient(s.outer(), s.inner(), &nu, 3).unwrap();
            assert_eq!(c, BigInt::from(lr_rule(&s, &nu)), "{s}, {nu}");
        }
    }
}

#[test]
fn schur_expand_round_trips() {
    for n in 1..=4 {
        for d in 0..=6 {
            for lam in Partition::all_of_size(d, n) {
                let e = schur_expand(&schur(&lam, n)).unwrap();
                assert_eq!(e.coefficients().len(), 1);
                assert_eq!(e.coeff(&lam), BigInt::from(1));
                let m = monomial(&lam, n);
                assert_eq!(schur_expand(&m).unwrap().recombine(n), m);
            }
        }
    }
}

#[test]
fn stanley_polynomials_are_schur_positive() {
    for w in Permutation::all(5) {
        let f = stanley_poly(&w, w.length());
        let e = schur_expand(&f).unwrap();
        assert!(e.is_nonnegative(), "F_{w}");
        assert_eq!(
            e,
            stanley_expansion(&w, w.length()),
            "fast path differs for {w}"
        );
    }
}

#[test]
fn fast_stanley_coefficients_match_enumeration() {
    for w in Permutation::all(4) {
        for n in 1..=4 {
            let direct = stanley_poly(&w, n).dominant_coefficients();
            assert_eq!(stanley_dominant(&w, n), direct, "{w}, n={n}");
        }
    }
}

fn coefficient_extraction(w: &Permutation) {
    let l = w.length();
    let f = stanley_poly(w, l);
    let count = w.reduced_words().len();
    assert_eq!(f.coeff(&vec![1; l]), BigInt::from(count), "{w}");
    let weighted: BigInt = schur_expand(&f)
        .unwrap()
        .coefficients()
        .iter()
        .map(|(lam, a)| a * BigInt::from(lam.hook_length_count()))
        .sum();
    assert_eq!(weighted, BigInt::from(count), "{w}");
}

#[test]
fn reduced_words_are_a_coefficient() {
    for w in Permutation::all(4) {
        coefficient_extraction(&w);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let s5 = Permutation::all(5);
    for w in s5.choose_multiple(&mut rng, 20) {
        coefficient_extraction(w);
    }
}

#[test]
fn polynomial_json_round_trip() {
    let f = skew_schur(&"3,2/1".parse().unwrap(), 3);
    let text = serde_json::to_string(&f).unwrap();
    let back: ExactPolynomial = serde_json::from_str(&text).unwrap();
    assert_eq!(back, f);
}
