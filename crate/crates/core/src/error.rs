use thiserror::Error;

use crate::span::DimensionReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("division by zero in Q(zeta_{conductor})")]
    DivisionByZero { conductor: u32 },

    #[error("polynomial is not exactly divisible: nonzero remainder of degree {remainder_degree}")]
    NotDivisible { remainder_degree: usize },

    #[error("series denominator has zero constant term")]
    NonUnitDenominator,

    #[error("mixed conductors: expected Q(zeta_{expected}), found Q(zeta_{found})")]
    MixedConductors { expected: u32, found: u32 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("oracle scale limit exceeded: {0}")]
    ScaleLimit(String),

    #[error("bound `{bound}` violated by dimension {}", report.dimension)]
    BoundViolated {
        bound: String,
        report: Box<DimensionReport>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
