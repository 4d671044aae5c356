//! Exact arithmetic substrate: Q(ζ_k), polynomials and truncated series over
//! it, and matrix rank.

mod cyclo;
mod poly;
mod rank;
mod series;

pub use cyclo::{field_degree, CycloNumber};
pub use poly::{cyclotomic_polynomial, poly_div_exact, Poly};
pub use rank::{exact_rank, EchelonBasis};
pub use series::{series_expand, TruncatedSeries};

pub use num_rational::BigRational;
