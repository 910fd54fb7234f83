use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A 1-indexed `(row, column)` cell in matrix orientation.
pub type Cell = (usize, usize);

/// The skew shape λ/μ with μ ⊆ λ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape λ/∅.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// |λ/μ|
    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_cell(&self, (row, col): Cell) -> bool {
        row >= 1 && col as u32 > self.inner.part(row - 1) && col as u32 <= self.outer.part(row - 1)
    }

    /// Cells in row-reading order: rows top to bottom, each left to right.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.outer.len())
            .flat_map(|r| {
                let lo = self.inner.part(r) as usize + 1;
                let hi = self.outer.part(r) as usize;
                (lo..=hi).map(move |c| (r + 1, c))
            })
            .collect()
    }

    /// Number of cells in each column `1..=λ₁`.
    pub fn column_lengths(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.outer.first() as usize];
        for (_, c) in self.cells() {
            counts[c - 1] += 1;
        }
        counts
    }

    /// Longest column; `s_{λ/μ}(x₁..x_n)` is nonzero iff this is at most `n`.
    pub fn max_column_length(&self) -> u32 {
        self.column_lengths().into_iter().max().unwrap_or(0)
    }

    /// Builds a skew shape from a cell set in which every row `1..=R` is
    /// occupied. Each row must be a contiguous interval and both boundary
    /// sequences must be weakly decreasing.
    pub fn from_cells(cells: &[Cell]) -> Result<Self> {
        let mut rows: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(r, c) in cells {
            if r == 0 || c == 0 {
                return Err(Error::InvalidShape("cells are 1-indexed".into()));
            }
            rows.entry(r).or_default().push(c);
        }
        let mut outer = Vec::with_capacity(rows.len());
        let mut inner = Vec::with_capacity(rows.len());
        for (expected, (r, mut cols)) in (1..).zip(rows) {
            if r != expected {
                return Err(Error::InvalidShape(format!("row {expected} is empty")));
            }
            cols.sort_unstable();
            cols.dedup();
            let (lo, hi) = (cols[0], cols[cols.len() - 1]);
            if hi - lo + 1 != cols.len() {
                return Err(Error::InvalidShape(format!("row {r} is not contiguous")));
            }
            outer.push(hi as u32);
            inner.push(lo as u32 - 1);
        }
        let outer = Partition::new(outer)?;
        let inner = Partition::new(inner)?;
        SkewShape::new(outer, inner)
    }

    /// Removes empty rows and empty columns. The cell set changes only by
    /// translation of its pieces, so `s_{λ/μ}` is unchanged.
    pub fn normalize(&self) -> SkewShape {
        let cells = self.cells();
        if cells.is_empty() {
            return SkewShape::straight(Partition::empty());
        }
        let compacted = compact(&cells);
        SkewShape::from_cells(&compacted).expect("compacting a skew shape yields a skew shape")
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    /// Every skew shape λ/μ with λ inside the `rows × cols` rectangle.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<SkewShape> {
        Partition::all_in_box(rows, cols)
            .into_iter()
            .flat_map(|outer| {
                Partition::all_contained_in(&outer)
                    .into_iter()
                    .map(move |inner| SkewShape {
                        outer: outer.clone(),
                        inner,
                    })
            })
            .collect()
    }
}

/// Renumbers occupied rows and columns consecutively from 1.
pub(crate) fn compact(cells: &[Cell]) -> Vec<Cell> {
    let mut rows: Vec<usize> = cells.iter().map(|c| c.0).collect();
    let mut cols: Vec<usize> = cells.iter().map(|c| c.1).collect();
    rows.sort_unstable();
    rows.dedup();
    cols.sort_unstable();
    cols.dedup();
    let rank = |v: &[usize], x: usize| v.binary_search(&x).unwrap() + 1;
    cells
        .iter()
        .map(|&(r, c)| (rank(&rows, r), rank(&cols, c)))
        .collect()
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Parses `"5,4,3,2,1/2,2,1"`; a bare partition is a straight shape.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((outer, inner)) => SkewShape::new(outer.parse()?, inner.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}
