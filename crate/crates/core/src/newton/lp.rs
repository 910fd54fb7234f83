//! Exact feasibility of small linear systems over the rationals.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Basis variable of a tableau row.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Basic {
    Column(usize),
    Artificial(usize),
}

/// Decides whether `{y ≥ 0 : A·y = b}` is nonempty, by phase-one simplex with
/// Bland's rule in exact rational arithmetic.
///
/// `a` is row-major with `b.len()` rows of equal length.
pub fn feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    assert_eq!(a.len(), b.len(), "one right-hand side per row");
    let m = a.len();
    let k = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    for (row, bi) in a.iter().zip(b) {
        assert_eq!(row.len(), k, "ragged constraint matrix");
        if bi.is_negative() {
            rows.push(row.iter().map(|x| -x).collect());
            rhs.push(-bi);
        } else {
            rows.push(row.clone());
            rhs.push(bi.clone());
        }
    }
    let mut basis: Vec<Basic> = (0..m).map(Basic::Artificial).collect();
    let mut in_basis = vec![false; k];

    loop {
        // reduced cost of column j for the objective Σ artificials
        let entering = (0..k).find(|&j| {
            if in_basis[j] {
                return false;
            }
            let mut r = BigRational::zero();
            for (i, row) in rows.iter().enumerate() {
                if matches!(basis[i], Basic::Artificial(_)) {
                    r -= &row[j];
                }
            }
            r.is_negative()
        });
        let Some(j) = entering else {
            break;
        };

        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if !rows[i][j].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &rows[i][j];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // an unbounded direction cannot occur: the objective is bounded below by 0
        let (p, _) = leave.expect("phase one is bounded");

        let pivot = rows[p][j].clone();
        for x in rows[p].iter_mut() {
            *x /= &pivot;
        }
        rhs[p] /= &pivot;
        let prow = rows[p].clone();
        let prhs = rhs[p].clone();
        for i in 0..m {
            if i == p || rows[i][j].is_zero() {
                continue;
            }
            let factor = rows[i][j].clone();
            for (x, y) in rows[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
            rhs[i] -= &factor * &prhs;
        }
        if let Basic::Column(old) = basis[p] {
            in_basis[old] = false;
        }
        basis[p] = Basic::Column(j);
        in_basis[j] = true;
    }

    basis
        .iter()
        .zip(&rhs)
        .all(|(bv, v)| matches!(bv, Basic::Column(_)) || v.is_zero())
}

/// A basis `(c₁..c_d, c₀)` of the affine equations `c·x + c₀ = 0` satisfied
/// by every point.
pub fn affine_equations(points: &[Vec<BigRational>], dim: usize) -> Vec<Vec<BigRational>> {
    // null space of the matrix with rows (p, 1)
    let mut mat: Vec<Vec<BigRational>> = points
        .iter()
        .map(|p| {
            let mut row = p.clone();
            row.push(BigRational::from_integer(1.into()));
            row
        })
        .collect();
    let cols = dim + 1;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..mat.len()).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pr);
        let pv = mat[r][c].clone();
        for x in mat[r].iter_mut() {
            *x /= &pv;
        }
        let prow = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::from_integer(1.into());
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -mat[row][f].clone();
            }
            v
        })
        .collect()
}
