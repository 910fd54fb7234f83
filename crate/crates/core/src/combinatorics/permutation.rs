use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{Cell, Word};
use crate::error::{Error, Result};

/// A permutation of `[m]` in one-line notation (values are 1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(oneline: impl Into<Vec<u32>>) -> Result<Self> {
        let oneline = oneline.into();
        let m = oneline.len();
        if m == 0 {
            return Err(Error::InvalidPermutation("empty one-line notation".into()));
        }
        let mut seen = vec![false; m];
        for &v in &oneline {
            let i = v as usize;
            if i == 0 || i > m || seen[i - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{oneline:?} is not a bijection on [{m}]"
                )));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation(oneline))
    }

    pub fn identity(m: usize) -> Self {
        Permutation((1..=m as u32).collect())
    }

    pub fn oneline(&self) -> &[u32] {
        &self.0
    }

    /// `m` for `w ∈ S_m`.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// ℓ(w), the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    /// Right multiplication by `s_i`: swaps positions `i` and `i+1`.
    pub fn swap_positions(&mut self, i: usize) {
        self.0.swap(i - 1, i);
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn right_descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `D(w) = {(i,j) : j < w(i), i < w⁻¹(j)}`, sorted by row then column.
    pub fn rothe_diagram(&self) -> Vec<Cell> {
        let inv = self.inverse();
        let m = self.degree();
        let mut cells = Vec::with_capacity(self.length());
        for i in 1..=m {
            for j in 1..self.apply(i) {
                if i < inv.apply(j) {
                    cells.push((i, j));
                }
            }
        }
        cells
    }

    /// Column counts `(q₁, ..., q_m)` of the Rothe diagram: the code of `w⁻¹`.
    pub fn inverse_code(&self) -> Vec<u32> {
        let mut q = vec![0u32; self.degree()];
        for (_, j) in self.rothe_diagram() {
            q[j - 1] += 1;
        }
        q
    }

    /// All reduced words of `w`, sorted lexicographically.
    ///
    /// Built by stripping right descents: if `w(i) > w(i+1)` then every
    /// reduced word of `w·s_i` extended by `i` is a reduced word of `w`.
    pub fn reduced_words(&self) -> Vec<Word> {
        fn rec(w: &mut Permutation, suffix: &mut Vec<u32>, out: &mut Vec<Word>) {
            let descents = w.right_descents();
            if descents.is_empty() {
                out.push(Word::new(suffix.iter().rev().copied().collect()));
                return;
            }
            for i in descents {
                w.swap_positions(i);
                suffix.push(i as u32);
                rec(w, suffix, out);
                suffix.pop();
                w.swap_positions(i);
            }
        }
        let mut out = Vec::new();
        rec(&mut self.clone(), &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All of `S_m` in lexicographic order of one-line notation.
    pub fn all(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Permutation::identity(m).0;
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..m.saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("permutation entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }
}
