//! From skew shapes to permutations and back: the diagonal filling, its
//! reading word, the permutation `w_{λ/μ}`, `β_max`, recovery of the shape
//! from the Rothe diagram, and the verification drivers built on them.

use num_traits::Zero;
use serde::Serialize;

use crate::combinatorics::{compact, Partition, Permutation, SkewShape, Word};
use crate::error::{Error, Result};
use crate::sympoly::{
    dominating_of, expand_dominant, schur, schur_expand, skew_schur, stanley_dominant,
    stanley_poly, SchurExpansion,
};
use crate::tropical::{trop_equal, tropicalize, Mode};

/// `β_max(w)`: the conjugate of the decreasing rearrangement of the code of
/// `w⁻¹` (the column counts of the Rothe diagram).
pub fn beta_max(w: &Permutation) -> Partition {
    Partition::from_unsorted(w.inverse_code()).conjugate()
}

/// A filling of a skew shape, entries aligned with [`SkewShape::cells`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filling {
    shape: SkewShape,
    entries: Vec<u32>,
}

impl Filling {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entries row by row, top to bottom, each row left to right.
    pub fn reading_word(&self) -> Word {
        Word::new(self.entries.clone())
    }

    /// Rows of entries, top to bottom (empty rows skipped).
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut last_row = 0;
        for (&(r, _), &e) in self.shape.cells().iter().zip(&self.entries) {
            if r != last_row {
                rows.push(Vec::new());
                last_row = r;
            }
            rows.last_mut().unwrap().push(e);
        }
        rows
    }
}

/// Constant entries along northwest-southeast diagonals, numbered from 1 on
/// the diagonal through `(1, λ₁)` and increasing by one per diagonal to the
/// southwest: cell `(i, j)` gets `λ₁ - (j - i)`. Diagonals without cells
/// still use up a label.
pub fn diagonal_filling(shape: &SkewShape) -> Filling {
    let width = i64::from(shape.outer().first());
    let entries = shape
        .cells()
        .iter()
        .map(|&(i, j)| (width - (j as i64 - i as i64)) as u32)
        .collect();
    Filling {
        shape: shape.clone(),
        entries,
    }
}

/// `w_{λ/μ} = s_{r₁} s_{r₂} ⋯` for the reading word `r` of the diagonal
/// filling, in the smallest `S_m` containing every letter. The empty shape
/// gives the identity of `S_1`.
pub fn w_from_skew(shape: &SkewShape) -> Permutation {
    let word = diagonal_filling(shape).reading_word();
    let m = word.letters().iter().max().map_or(1, |&a| a as usize + 1);
    word.to_permutation(m).expect("letters are below m")
}

/// Recovers λ/μ from `D(w)` by deleting empty rows and columns and
/// reflecting left to right. Fails when the result is not a skew shape.
pub fn skew_from_rothe(w: &Permutation) -> Result<SkewShape> {
    let cells = w.rothe_diagram();
    if cells.is_empty() {
        return Ok(SkewShape::straight(Partition::empty()));
    }
    let compacted = compact(&cells);
    let width = compacted.iter().map(|c| c.1).max().unwrap();
    let reflected: Vec<_> = compacted.iter().map(|&(r, c)| (r, width + 1 - c)).collect();
    SkewShape::from_cells(&reflected).map_err(|_| Error::NotSkewDiagram)
}

/// Pushes the cells of every column to the top and left-justifies the
/// rows. Computed directly from the cells, independently of any
/// permutation.
pub fn push_north_left(shape: &SkewShape) -> Partition {
    let heights = shape.column_lengths();
    let tallest = heights.iter().copied().max().unwrap_or(0);
    let rows = (1..=tallest)
        .map(|r| heights.iter().filter(|&&h| h >= r).count() as u32)
        .collect::<Vec<_>>();
    Partition::new(rows).expect("row lengths decrease")
}

/// `F_{w_{λ/μ}}(x₁..x_n) = s_{λ/μ}(x₁..x_n)`, compared term by term.
pub fn verify_bjs(shape: &SkewShape, n: usize) -> bool {
    stanley_poly(&w_from_skew(shape), n) == skew_schur(shape, n)
}

/// Outcome of checking that `F_w` is dominated by `s_{β_max(w)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StanleyDominanceReport {
    pub perm: String,
    pub beta: String,
    pub nonnegative: bool,
    pub all_below_beta: bool,
    pub beta_coefficient_nonzero: bool,
    pub holds: bool,
}

/// The Schur expansion of `F_w` in `n` variables (monomial-basis route).
pub fn stanley_expansion(w: &Permutation, n: usize) -> SchurExpansion {
    expand_dominant(stanley_dominant(w, n), w.length() as u64, n)
}

/// Expands `F_w` in `max(n, ℓ(w))` variables and checks Schur positivity,
/// `λ ≤_D β_max(w)` for every λ in the support, and `a_{w,β_max(w)} ≠ 0`.
pub fn verify_stanley_dominance(w: &Permutation, n: usize) -> StanleyDominanceReport {
    let beta = beta_max(w);
    let expansion = stanley_expansion(w, n.max(w.length()));
    let nonnegative = expansion.is_nonnegative();
    let all_below_beta = expansion
        .coefficients()
        .keys()
        .all(|mu| mu.dominance_leq(&beta).unwrap_or(false));
    let beta_coefficient_nonzero = !expansion.coeff(&beta).is_zero();
    StanleyDominanceReport {
        perm: w.to_string(),
        beta: beta.to_string(),
        nonnegative,
        all_below_beta,
        beta_coefficient_nonzero,
        holds: nonnegative && all_below_beta && beta_coefficient_nonzero,
    }
}

/// Per-shape outcome of the skew-Schur tropical identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub beta: String,
    pub beta1_equals_lambda1: bool,
    pub dominating_partition_is_beta: bool,
    pub n: usize,
    pub shape: String,
    pub trop_equal_axiomatic: bool,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.beta1_equals_lambda1 && self.trop_equal_axiomatic && self.dominating_partition_is_beta
    }
}

/// Checks `Trop(s_{λ/μ}) = Trop(s_β)` axiomatically for
/// `β = β_max(w_{λ/μ})`, together with `β₁ = λ₁` and that `s_{λ/μ}` is
/// dominated by `s_β`.
///
/// `λ₁` is read from the shape with empty rows and columns removed: those
/// do not change `s_{λ/μ}`, and only then is `λ₁` the width of the cells.
pub fn verify_theorem_main(shape: &SkewShape, n: usize) -> Result<TheoremReport> {
    if shape.max_column_length() as usize > n {
        return Err(Error::ZeroPolynomial);
    }
    let beta = beta_max(&w_from_skew(shape));
    let width = shape.normalize().outer().first();
    let f = skew_schur(shape, n);
    let trop_equal_axiomatic = trop_equal(
        &tropicalize(&f)?,
        &tropicalize(&schur(&beta, n))?,
        Mode::Axiomatic,
    );
    let dominating = dominating_of(&schur_expand(&f)?);
    Ok(TheoremReport {
        beta: beta.to_string(),
        beta1_equals_lambda1: beta.first() == width,
        dominating_partition_is_beta: dominating.as_ref() == Some(&beta),
        n,
        shape: shape.to_string(),
        trop_equal_axiomatic,
    })
}

/// Coefficient extraction: `#Red(w) = Σ_λ a_{wλ} f^λ`, where `f^λ` comes from
/// the hook-length formula.
pub fn reduced_word_count_identity(w: &Permutation) -> (usize, num_bigint::BigInt) {
    let expansion = stanley_expansion(w, w.length());
    let weighted = expansion
        .coefficients()
        .iter()
        .map(|(lam, a)| a * num_bigint::BigInt::from(lam.hook_length_count()))
        .sum();
    (w.reduced_words().len(), weighted)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn beta_max_examples() {
        assert_eq!(beta_max(&w("4,1,5,2,7,3,9,6,10,8")), p("5,4,1"));
        assert_eq!(beta_max(&Permutation::identity(4)), p(""));
        assert_eq!(beta_max(&w("2,1,4,3")), p("2"));
    }

    #[test]
    fn worked_example_filling() {
        let f = diagonal_filling(&sh("5,4,3,2,1/2,2,1"));
        assert_eq!(
            f.rows(),
            vec![vec![3, 2, 1], vec![4, 3], vec![6, 5], vec![8, 7], vec![9]]
        );
        assert_eq!(f.reading_word().letters(), &[3, 2, 1, 4, 3, 6, 5, 8, 7, 9]);
    }

    #[test]
    fn small_fillings() {
        assert_eq!(diagonal_filling(&sh("1")).reading_word().letters(), &[1]);
        assert_eq!(
            diagonal_filling(&sh("2,1/1")).reading_word().letters(),
            &[1, 3]
        );
        assert!(diagonal_filling(&sh("")).reading_word().is_empty());
    }

    #[test]
    fn permutations_from_shapes() {
        assert_eq!(
            w_from_skew(&sh("5,4,3,2,1/2,2,1")),
            w("4,1,5,2,7,3,9,6,10,8")
        );
        assert_eq!(w_from_skew(&sh("2,1/1")), w("2,1,4,3"));
        assert_eq!(w_from_skew(&sh("1")), w("2,1"));
        assert_eq!(w_from_skew(&sh("")), Permutation::identity(1));
    }

    #[test]
    fn shapes_from_rothe_diagrams() {
        assert_eq!(
            skew_from_rothe(&w("4,1,5,2,7,3,9,6,10,8")).unwrap(),
            sh("5,4,3,2,1/2,2,1")
        );
        assert_eq!(skew_from_rothe(&w("2,1")).unwrap(), sh("1"));
        assert_eq!(skew_from_rothe(&w("2,1,4,3")).unwrap(), sh("2,1/1"));
        assert_eq!(skew_from_rothe(&w("1,2,3")).unwrap(), sh(""));
        // D(1,4,3,2) = {(2,2),(2,3),(3,2)}: reflected, row 2 sticks out on the right
        assert_eq!(skew_from_rothe(&w("1,4,3,2")), Err(Error::NotSkewDiagram));
    }

    #[test]
    fn pushing_matches_beta() {
        assert_eq!(push_north_left(&sh("5,4,3,2,1/2,2,1")), p("5,4,1"));
        assert_eq!(push_north_left(&sh("2,1/1")), p("2"));
    }

    #[test]
    fn bjs_examples() {
        assert!(verify_bjs(&sh("2,1/1"), 2));
        assert!(verify_bjs(&sh("1"), 1));
        assert!(verify_bjs(&sh("1"), 4));
        assert!(verify_bjs(&sh("5,4,3,2,1/2,2,1"), 3));
    }

    #[test]
    fn stanley_dominance_examples() {
        let r = verify_stanley_dominance(&w("4,1,5,2,7,3,9,6,10,8"), 1);
        assert!(r.holds, "{r:?}");
        assert_eq!(r.beta, "5,4,1");
        assert!(verify_stanley_dominance(&Permutation::identity(3), 2).holds);
        for perm in Permutation::all(4) {
            assert!(verify_stanley_dominance(&perm, 1).holds, "{perm}");
        }
    }

    #[test]
    fn theorem_examples() {
        let r = verify_theorem_main(&sh("2,1/1"), 2).unwrap();
        assert_eq!(r.beta, "2");
        assert!(r.holds());
        let r = verify_theorem_main(&sh("3,2"), 2).unwrap();
        assert_eq!(r.beta, "3,2");
        assert!(r.holds());
        let r = verify_theorem_main(&sh("5,4,3,2,1/2,2,1"), 3).unwrap();
        assert_eq!(r.beta, "5,4,1");
        assert!(r.holds());
        assert_eq!(
            verify_theorem_main(&sh("1,1,1"), 2),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn empty_rows_and_columns_use_the_trimmed_width() {
        // (2,1)/(2) is a single box; β = (1) and the trimmed shape has λ₁ = 1
        let r = verify_theorem_main(&sh("2,1/2"), 2).unwrap();
        assert_eq!(r.beta, "1");
        assert!(r.holds());
        let r = verify_theorem_main(&sh("3,1/2"), 2).unwrap();
        assert_eq!(r.beta, "2");
        assert!(r.holds());
    }

    #[test]
    fn report_json_keys() {
        let r = verify_theorem_main(&sh("2,1/1"), 2).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"beta":"2","beta1_equals_lambda1":true,"dominating_partition_is_beta":true,"n":2,"shape":"2,1/1","trop_equal_axiomatic":true}"#
        );
    }

    #[test]
    fn reduced_word_counts() {
        let (count, weighted) = reduced_word_count_identity(&w("3,2,1"));
        assert_eq!(count, 2);
        assert_eq!(weighted, 2.into());
        let (count, weighted) = reduced_word_count_identity(&w("4,3,2,1"));
        assert_eq!(count, 16);
        assert_eq!(weighted, 16.into());
    }
}
