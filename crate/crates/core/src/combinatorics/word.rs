use std::fmt;

use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// A word in positive integers: a product of simple transpositions, a
/// compatible sequence, or a tableau reading word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positions `i` (1-based) with `a_i < a_{i+1}`.
    pub fn ascents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `s_{a₁} s_{a₂} ⋯ s_{a_ℓ}` in `S_m`, multiplying left to right.
    pub fn to_permutation(&self, m: usize) -> Result<Permutation> {
        let mut w = Permutation::identity(m);
        for &a in &self.0 {
            if a == 0 || a as usize >= m {
                return Err(Error::LetterOutOfRange { letter: a, m });
            }
            w.swap_positions(a as usize);
        }
        Ok(w)
    }

    /// True if the word is a reduced expression for its product in `S_m`.
    pub fn is_reduced(&self, m: usize) -> Result<bool> {
        Ok(self.to_permutation(m)?.length() == self.len())
    }

    /// The compatible sequences `b` of this word with entries at most `n`:
    /// `1 ≤ b₁ ≤ ⋯ ≤ b_ℓ ≤ n`, with `b_i < b_{i+1}` wherever `a_i < a_{i+1}`.
    pub fn compatible_sequences(&self, n: u32) -> Vec<Word> {
        let mut out = Vec::new();
        self.for_each_compatible(n, |b| out.push(Word(b.to_vec())));
        out
    }

    pub(crate) fn for_each_compatible(&self, n: u32, mut visit: impl FnMut(&[u32])) {
        let len = self.0.len();
        // strict[i]: b_{i+1} must exceed b_i
        let strict: Vec<bool> = self.0.windows(2).map(|w| w[0] < w[1]).collect();
        // forced[i]: number of strict steps from position i to the end
        let mut forced = vec![0u32; len + 1];
        for i in (0..len.saturating_sub(1)).rev() {
            forced[i] = forced[i + 1] + u32::from(strict[i]);
        }
        let mut b = vec![0u32; len];
        fn rec(
            pos: usize,
            n: u32,
            strict: &[bool],
            forced: &[u32],
            b: &mut Vec<u32>,
            visit: &mut dyn FnMut(&[u32]),
        ) {
            if pos == b.len() {
                visit(b);
                return;
            }
            let lo = if pos == 0 {
                1
            } else {
                b[pos - 1] + u32::from(strict[pos - 1])
            };
            let hi = n.saturating_sub(forced[pos]);
            for v in lo..=hi {
                b[pos] = v;
                rec(pos + 1, n, strict, forced, b, visit);
            }
        }
        rec(0, n, &strict, &forced, &mut b, &mut visit);
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}
