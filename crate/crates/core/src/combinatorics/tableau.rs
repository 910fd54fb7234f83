use crate::combinatorics::{Cell, SkewShape};

/// A semistandard filling of a skew shape. `entries` is aligned with
/// [`SkewShape::cells`], i.e. it is the row reading word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    shape: SkewShape,
    entries: Vec<u32>,
}

impl SkewTableau {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn reading_word(&self) -> &[u32] {
        &self.entries
    }

    pub fn entry(&self, cell: Cell) -> Option<u32> {
        let idx = self.shape.cells().iter().position(|&c| c == cell)?;
        Some(self.entries[idx])
    }

    /// Content vector `(#1s, #2s, ..., #ns)`.
    pub fn weight(&self, n: usize) -> Vec<u32> {
        content(&self.entries, n)
    }
}

pub(crate) fn content(entries: &[u32], n: usize) -> Vec<u32> {
    let mut w = vec![0u32; n];
    for &e in entries {
        w[e as usize - 1] += 1;
    }
    w
}

/// Per-cell constraints for filling a shape in reading order.
struct FillPlan {
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    below: Vec<u32>,
}

impl FillPlan {
    fn new(shape: &SkewShape) -> Self {
        let cells = shape.cells();
        let index = |cell: Cell| cells.iter().position(|&c| c == cell);
        let left = cells
            .iter()
            .map(|&(r, c)| if c > 1 { index((r, c - 1)) } else { None })
            .collect();
        let above = cells
            .iter()
            .map(|&(r, c)| if r > 1 { index((r - 1, c)) } else { None })
            .collect();
        let below = cells
            .iter()
            .map(|&(r, c)| {
                (r + 1..)
                    .take_while(|&rr| shape.contains_cell((rr, c)))
                    .count() as u32
            })
            .collect();
        FillPlan { left, above, below }
    }
}

/// Calls `visit` with the reading word of every semistandard filling of
/// `shape` by entries from `1..=n`, in lexicographic order of reading words.
pub fn for_each_ssyt(shape: &SkewShape, n: u32, mut visit: impl FnMut(&[u32])) {
    let plan = FillPlan::new(shape);
    let mut word = vec![0u32; plan.left.len()];
    fn rec(
        plan: &FillPlan,
        n: u32,
        pos: usize,
        word: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if pos == word.len() {
            visit(word);
            return;
        }
        let mut lo = 1;
        if let Some(l) = plan.left[pos] {
            lo = lo.max(word[l]);
        }
        if let Some(a) = plan.above[pos] {
            lo = lo.max(word[a] + 1);
        }
        let hi = n.saturating_sub(plan.below[pos]);
        for v in lo..=hi {
            word[pos] = v;
            rec(plan, n, pos + 1, word, visit);
        }
    }
    rec(&plan, n, 0, &mut word, &mut visit);
}

/// All semistandard tableaux of `shape` with entries in `1..=n`, ordered
/// lexicographically by reading word.
pub fn ssyt_enumerate(shape: &SkewShape, n: u32) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    for_each_ssyt(shape, n, |w| {
        out.push(SkewTableau {
            shape: shape.clone(),
            entries: w.to_vec(),
        })
    });
    out
}
