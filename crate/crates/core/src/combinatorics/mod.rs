//! Partitions, skew shapes, permutations, words and tableaux.
//!
//! Cells are 1-indexed `(row, column)` pairs in matrix orientation.

mod partition;
mod permutation;
mod shape;
mod tableau;
mod word;

pub use partition::Partition;
pub use permutation::Permutation;
pub(crate) use shape::compact;
pub use shape::{Cell, SkewShape};
pub(crate) use tableau::content;
pub use tableau::{for_each_ssyt, ssyt_enumerate, SkewTableau};
pub use word::Word;
