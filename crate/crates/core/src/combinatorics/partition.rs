use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer partition, stored without trailing zeros.
///
/// The derived ordering is lexicographic on the parts, which is a linear
/// extension of the dominance order on partitions of a fixed size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative integers into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ|
    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| u64::from(p)).sum()
    }

    /// λ₁, or 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// The `i`-th part (0-indexed), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`. Fails if λ has more than `n`
    /// nonzero parts.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() > n {
            return Err(Error::TooManyParts {
                parts: self.len(),
                nvars: n,
            });
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// The conjugate partition: `λ'_k = #{i : λ_i ≥ k}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let conj = (1..=width as u32)
            .map(|k| self.0.iter().take_while(|&&p| p >= k).count() as u32)
            .collect();
        Partition(conj)
    }

    /// `self ≤_D other` in dominance order. Only partitions of equal size are
    /// comparable.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        let (left, right) = (self.size(), other.size());
        if left != right {
            return Err(Error::SizeMismatch { left, right });
        }
        let k = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..k {
            a += u64::from(self.part(i));
            b += u64::from(other.part(i));
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Partial comparison in dominance order; `None` for incomparable pairs.
    pub fn dominance_cmp(&self, other: &Partition) -> Result<Option<Ordering>> {
        let le = self.dominance_leq(other)?;
        let ge = other.dominance_leq(self)?;
        Ok(match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        })
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Hook length of the 0-indexed cell `(row, col)`.
    fn hook(&self, conj: &Partition, row: usize, col: usize) -> u32 {
        (self.0[row] - col as u32) + (conj.0[col] - row as u32) - 1
    }

    /// Number of standard Young tableaux of shape λ, via the hook-length
    /// formula `|λ|! / Π hooks`.
    pub fn hook_length_count(&self) -> BigUint {
        let conj = self.conjugate();
        let mut numer = BigUint::one();
        for k in 2..=self.size() {
            numer *= k;
        }
        let mut denom = BigUint::one();
        for (row, &len) in self.0.iter().enumerate() {
            for col in 0..len as usize {
                denom *= self.hook(&conj, row, col);
            }
        }
        numer / denom
    }

    /// All partitions of `d` with at most `max_parts` parts, in decreasing
    /// lexicographic order.
    pub fn all_of_size(d: u32, max_parts: usize) -> Vec<Partition> {
        fn rec(rem: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, d, max_parts, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions fitting inside the `rows × cols` rectangle, sorted.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        Partition::all_contained_in(&Partition(vec![cols; rows]))
    }

    /// All partitions μ ⊆ self (including ∅ and self), sorted.
    pub fn all_contained_in(outer: &Partition) -> Vec<Partition> {
        fn rec(
            outer: &Partition,
            i: usize,
            cap: u32,
            cur: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            out.push(Partition(cur.clone()));
            if i >= outer.len() {
                return;
            }
            for p in 1..=cap.min(outer.0[i]) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(outer, 0, outer.first(), &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"2,1"`; the empty string (or `"0"`) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("partition part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p("2,1"));
        assert_eq!(p("0"), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,2,2,2,1").conjugate(), p("5,4,1"));
        assert_eq!(p("4").conjugate(), p("1,1,1,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(p("1,1").dominance_leq(&p("2")).unwrap());
        assert!(!p("2,2,2").dominance_leq(&p("3,1,1,1")).unwrap());
        assert!(!p("3,1,1,1").dominance_leq(&p("2,2,2")).unwrap());
        assert!(p("3,2,1").dominance_leq(&p("3,2,1")).unwrap());
        assert_eq!(
            p("2").dominance_leq(&p("1")),
            Err(Error::SizeMismatch { left: 2, right: 1 })
        );
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p("2,1").hook_length_count(), BigUint::from(2u32));
        assert_eq!(p("2,2").hook_length_count(), BigUint::from(2u32));
        assert_eq!(p("7").hook_length_count(), BigUint::from(1u32));
        assert_eq!(Partition::empty().hook_length_count(), BigUint::from(1u32));
        assert_eq!(p("3,2").hook_length_count(), BigUint::from(5u32));
    }

    #[test]
    fn enumeration_counts() {
        // p(6) = 11, partitions of 6 into at most 2 parts = 4
        assert_eq!(Partition::all_of_size(6, 6).len(), 11);
        assert_eq!(Partition::all_of_size(6, 2).len(), 4);
        assert_eq!(Partition::all_of_size(0, 0), vec![Partition::empty()]);
        // binomial(4+4, 4)
        assert_eq!(Partition::all_in_box(4, 4).len(), 70);
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["", "1", "5,4,3,2,1"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert!("a,b".parse::<Partition>().is_err());
    }
}
