//! Newton polytopes as lattice-point sets: supports, permutahedra, convex
//! hull membership, saturation and Minkowski sums. Everything is exact.

pub mod lp;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::sympoly::ExactPolynomial;

/// Default bound on the number of bounding-box candidates examined by
/// [`hull_lattice_points`].
pub const DEFAULT_BOX_CAP: u64 = 200_000;

/// A finite set of integer points of one dimension, ordered
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PointsJson")]
pub struct LatticePointSet {
    dim: usize,
    points: BTreeSet<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsJson {
    dim: usize,
    points: Vec<Vec<i64>>,
}

impl TryFrom<PointsJson> for LatticePointSet {
    type Error = Error;

    fn try_from(j: PointsJson) -> Result<Self> {
        LatticePointSet::from_points(j.dim, j.points)
    }
}

impl LatticePointSet {
    pub fn new(dim: usize) -> Self {
        LatticePointSet {
            dim,
            points: BTreeSet::new(),
        }
    }

    pub fn from_points(dim: usize, points: impl IntoIterator<Item = Vec<i64>>) -> Result<Self> {
        let mut set = Self::new(dim);
        for p in points {
            set.insert(p)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, p: Vec<i64>) -> Result<bool> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        Ok(self.points.insert(p))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &BTreeSet<Vec<i64>> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.contains(p)
    }

    pub fn is_subset(&self, other: &LatticePointSet) -> bool {
        self.dim == other.dim && self.points.is_subset(&other.points)
    }
}

/// A point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint(pub Vec<BigRational>);

impl RationalPoint {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn from_integers(p: &[i64]) -> Self {
        RationalPoint(
            p.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }
}

impl FromStr for RationalPoint {
    type Err = Error;

    /// Parses `"1/2,3,-4/5"`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(RationalPoint(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigRational>()
                    .map_err(|e| Error::Parse(format!("rational {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(RationalPoint)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Exponent vectors carrying a nonzero coefficient.
pub fn support(f: &ExactPolynomial) -> LatticePointSet {
    LatticePointSet {
        dim: f.nvars(),
        points: f
            .terms()
            .keys()
            .map(|e| e.iter().map(|&x| i64::from(x)).collect())
            .collect(),
    }
}

/// Membership of `p` in the permutahedron `P_λ ⊂ ℝⁿ` with `n = p.len()`:
/// nonnegative entries summing to `|λ|` whose decreasing rearrangement is
/// dominated by λ.
pub fn rado_member(p: &[i64], lambda: &Partition) -> Result<bool> {
    let target = lambda.padded(p.len())?;
    if p.iter().any(|&x| x < 0) {
        return Ok(false);
    }
    let mut sorted = p.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut acc = (0i64, 0i64);
    for (x, &l) in sorted.iter().zip(&target) {
        acc.0 += x;
        acc.1 += i64::from(l);
        if acc.0 > acc.1 {
            return Ok(false);
        }
    }
    Ok(acc.0 == acc.1)
}

/// All lattice points of `P_λ` in `n` dimensions.
pub fn permutahedron_points(lambda: &Partition, n: usize) -> Result<LatticePointSet> {
    lambda.padded(n)?;
    let total = lambda.size() as i64;
    let cap = i64::from(lambda.first());
    let mut set = LatticePointSet::new(n);
    fn rec(
        i: usize,
        left: i64,
        cap: i64,
        cur: &mut Vec<i64>,
        lambda: &Partition,
        set: &mut LatticePointSet,
    ) {
        let n = cur.len();
        if i == n - 1 {
            if left <= cap {
                cur[i] = left;
                if rado_member(cur, lambda).expect("λ fits") {
                    set.points.insert(cur.clone());
                }
            }
            return;
        }
        for v in 0..=left.min(cap) {
            cur[i] = v;
            rec(i + 1, left - v, cap, cur, lambda, set);
        }
    }
    if n == 0 {
        if total == 0 {
            set.points.insert(Vec::new());
        }
        return Ok(set);
    }
    rec(0, total, cap, &mut vec![0; n], lambda, &mut set);
    Ok(set)
}

/// Whether `p` is a convex combination of the points of `set`, decided by
/// exact linear feasibility.
pub fn hull_membership(p: &RationalPoint, set: &LatticePointSet) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if p.dim() != set.dim {
        return Err(Error::DimensionMismatch {
            expected: set.dim,
            got: p.dim(),
        });
    }
    if p.0.iter().all(|c| c.is_integer()) {
        let int: Vec<i64> =
            p.0.iter()
                .map(|c| i64::try_from(c.to_integer()).unwrap_or(i64::MAX))
                .collect();
        if set.contains(&int) {
            return Ok(true);
        }
    }
    let cols: Vec<&Vec<i64>> = set.points.iter().collect();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut a: Vec<Vec<BigRational>> = (0..set.dim)
        .map(|d| cols.iter().map(|pt| q(pt[d])).collect())
        .collect();
    a.push(vec![q(1); cols.len()]);
    let mut b = p.0.clone();
    b.push(q(1));
    Ok(lp::feasible(&a, &b))
}

/// All integer points in the convex hull of `set`, using the default
/// candidate cap.
pub fn hull_lattice_points(set: &LatticePointSet) -> Result<LatticePointSet> {
    hull_lattice_points_capped(set, DEFAULT_BOX_CAP)
}

/// All integer points in the convex hull of `set`: bounding-box candidates
/// are filtered by the affine hull and then by exact hull membership.
pub fn hull_lattice_points_capped(set: &LatticePointSet, cap: u64) -> Result<LatticePointSet> {
    let Some(first) = set.points.iter().next() else {
        return Err(Error::EmptyPointSet);
    };
    let dim = set.dim;
    let mut lo = first.clone();
    let mut hi = first.clone();
    for p in &set.points {
        for d in 0..dim {
            lo[d] = lo[d].min(p[d]);
            hi[d] = hi[d].max(p[d]);
        }
    }
    let mut boxsize: u64 = 1;
    for d in 0..dim {
        boxsize = boxsize.saturating_mul((hi[d] - lo[d] + 1) as u64);
    }
    if boxsize > cap {
        return Err(Error::ResourceCap(format!(
            "bounding box has {boxsize} candidates, cap is {cap}"
        )));
    }

    let rational: Vec<Vec<BigRational>> = set
        .points
        .iter()
        .map(|p| {
            p.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let equations = integer_equations(&lp::affine_equations(&rational, dim));

    let mut out = LatticePointSet::new(dim);
    let mut cur = lo.clone();
    loop {
        let on_plane = equations.iter().all(|(c, c0)| {
            let s: BigInt = c.iter().zip(&cur).map(|(ci, &x)| ci * x).sum();
            (s + c0).is_zero()
        });
        if on_plane
            && (set.contains(&cur) || hull_membership(&RationalPoint::from_integers(&cur), set)?)
        {
            out.points.insert(cur.clone());
        }
        // odometer step over the box
        let mut d = dim;
        loop {
            if d == 0 {
                return Ok(out);
            }
            d -= 1;
            if cur[d] < hi[d] {
                cur[d] += 1;
                break;
            }
            cur[d] = lo[d];
        }
    }
}

/// Clears denominators of rational equations.
fn integer_equations(eqs: &[Vec<BigRational>]) -> Vec<(Vec<BigInt>, BigInt)> {
    use num_integer::Integer;
    eqs.iter()
        .map(|e| {
            let l = e.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
            let ints: Vec<BigInt> = e.iter().map(|x| (x * &l).to_integer()).collect();
            let (c0, c) = ints.split_last().expect("dim + 1 entries");
            (c.to_vec(), c0.clone())
        })
        .collect()
}

/// True iff every lattice point of `Newton(f)` carries a nonzero coefficient.
pub fn snp_check(f: &ExactPolynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let supp = support(f);
    Ok(hull_lattice_points(&supp)? == supp)
}

/// The sumset `{a + b : a ∈ A, b ∈ B}`.
pub fn minkowski_points(a: &LatticePointSet, b: &LatticePointSet) -> Result<LatticePointSet> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            got: b.dim,
        });
    }
    let mut out = LatticePointSet::new(a.dim);
    for p in &a.points {
        for q in &b.points {
            out.points
                .insert(p.iter().zip(q).map(|(x, y)| x + y).collect());
        }
    }
    Ok(out)
}
