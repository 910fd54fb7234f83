//! Exact symmetric polynomials: Schur, skew-Schur, elementary, monomial
//! and Stanley families, and their Schur expansions.

mod expand;
mod families;
mod poly;

pub use expand::{
    dominating_of, dominating_partition, expand_dominant, lr_coefficient, schur_expand,
    KostkaTable, SchurExpansion,
};
pub use families::{elementary, monomial, schur, skew_schur, stanley_dominant, stanley_poly};
pub use poly::{ExactPolynomial, Exponent};
