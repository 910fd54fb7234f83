use std::cmp::Ordering;

use num_bigint::BigUint;
use proptest::prelude::*;

use tropcirc::combinatorics::{for_each_ssyt, Partition, Permutation, SkewShape};

#[test]
fn conjugation_is_an_involution() {
    for d in 0..=12 {
        for lam in Partition::all_of_size(d, d as usize) {
            assert_eq!(lam.conjugate().conjugate(), lam);
            assert_eq!(lam.conjugate().size(), lam.size());
        }
    }
}

#[test]
fn conjugation_reverses_dominance() {
    for d in 0..=8 {
        let all = Partition::all_of_size(d, d as usize);
        for a in &all {
            for b in &all {
                assert_eq!(
                    a.dominance_leq(b).unwrap(),
                    b.conjugate().dominance_leq(&a.conjugate()).unwrap(),
                    "{a} vs {b}"
                );
            }
        }
    }
}

#[test]
fn dominance_refines_into_lex() {
    for d in 0..=8 {
        let all = Partition::all_of_size(d, d as usize);
        for a in &all {
            for b in &all {
                if a.dominance_leq(b).unwrap() {
                    assert!(a <= b, "{a} <=_D {b} but not lexicographically");
                }
                if a.dominance_cmp(b).unwrap() == Some(Ordering::Equal) {
                    assert_eq!(a, b);
                }
            }
        }
    }
}

#[test]
fn permutation_codes_and_reduced_words() {
    for m in 1..=5 {
        for w in Permutation::all(m) {
            let code_sum: u32 = w.inverse_code().iter().sum();
            assert_eq!(code_sum as usize, w.length(), "{w}");
            assert_eq!(w.rothe_diagram().len(), w.length());
            let words = w.reduced_words();
            assert!(!words.is_empty());
            assert!(words.windows(2).all(|p| p[0] < p[1]), "not sorted for {w}");
            for a in words {
                assert_eq!(a.len(), w.length());
                assert_eq!(a.to_permutation(m).unwrap(), w, "{a} for {w}");
            }
        }
    }
}

#[test]
fn reduced_word_counts_of_longest_elements() {
    // the longest element of S_4 has 16 reduced words, of S_5 768
    let w0 = Permutation::new(vec![4, 3, 2, 1]).unwrap();
    assert_eq!(w0.reduced_words().len(), 16);
    let w0 = Permutation::new(vec![5, 4, 3, 2, 1]).unwrap();
    assert_eq!(w0.reduced_words().len(), 768);
}

#[test]
fn hook_length_counts_standard_tableaux() {
    for d in 0..=8u32 {
        for lam in Partition::all_of_size(d, d as usize) {
            let shape = SkewShape::straight(lam.clone());
            let mut standard = 0u64;
            for_each_ssyt(&shape, d, |entries| {
                let mut seen = vec![false; d as usize + 1];
                if entries
                    .iter()
                    .all(|&e| !std::mem::replace(&mut seen[e as usize], true))
                {
                    standard += 1;
                }
            });
            assert_eq!(lam.hook_length_count(), BigUint::from(standard), "{lam}");
        }
    }
}

#[test]
fn shape_cells_agree_with_membership() {
    for s in SkewShape::all_in_box(4, 4) {
        let cells = s.cells();
        assert_eq!(cells.len() as u64, s.size());
        for r in 1..=5 {
            for c in 1..=5 {
                assert_eq!(s.contains_cell((r, c)), cells.contains(&(r, c)));
            }
        }
        let norm = s.normalize();
        assert_eq!(norm.size(), s.size());
        assert!(norm.is_normalized());
        if !norm.is_empty() {
            assert_eq!(SkewShape::from_cells(&norm.cells()).unwrap(), norm);
        }
    }
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..9, 0..8).prop_map(Partition::from_unsorted)
}

fn permutation_strategy() -> impl Strategy<Value = Permutation> {
    (1usize..9)
        .prop_flat_map(|m| Just((1..=m as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #[test]
    fn conjugate_preserves_size(lam in partition_strategy()) {
        let c = lam.conjugate();
        prop_assert_eq!(c.size(), lam.size());
        prop_assert_eq!(c.len() as u32, lam.first());
        prop_assert_eq!(c.conjugate(), lam);
    }

    #[test]
    fn partition_text_round_trip(lam in partition_strategy()) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam);
    }

    #[test]
    fn inverse_and_length(w in permutation_strategy()) {
        let inv = w.inverse();
        prop_assert_eq!(inv.inverse(), w.clone());
        prop_assert_eq!(inv.length(), w.length());
        prop_assert_eq!(w.inverse_code().iter().sum::<u32>() as usize, w.length());
        prop_assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
    }
}
