//! Span dimensions, common denominators and the bound formulas they are
//! checked against.

pub mod bounds;
mod denominators;
mod dims;
mod query;

pub use bounds::{bound_formulas, Bound, BoundFormula, Direction, Interval};
pub use denominators::{
    common_denominator_d, delta_p, g_p_cyclotomic, g_p_product, CommonDenominator, Factor,
};
pub use dims::{
    a_family, compute, compute_b, compute_b_at, compute_b_wreath, compute_b_wreath_at, compute_d,
    compute_d_at, compute_e, compute_e_at, verify_family_independent, y_family, FamilyRank,
};
pub use query::{sym_truncation, DimensionReport, SpanQuery};
