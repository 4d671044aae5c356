use super::cyclo::CycloNumber;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Power-series coefficients of orders `0..=T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<CycloNumber>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<CycloNumber>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series holds at least order 0"
        );
        TruncatedSeries { coeffs }
    }

    /// The truncation order T (the series holds T + 1 coefficients).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<CycloNumber> {
        self.coeffs
    }
}

/// Coefficients `0..=order` of `num / den`, from the recurrence
/// `Σ_j den_j s_{m-j} = num_m`.
pub fn series_expand(num: &Poly, den: &Poly, order: usize) -> Result<TruncatedSeries> {
    let k = num.conductor();
    assert_eq!(k, den.conductor());
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::NonUnitDenominator);
    }
    let d0_inv = d0.inverse()?;
    let den_coeffs = den.coeffs();
    let mut s: Vec<CycloNumber> = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut acc = num.coeff(m);
        for j in 1..den_coeffs.len().min(m + 1) {
            acc.sub_mul_assign(&den_coeffs[j], &s[m - j]);
        }
        if !d0_inv.is_one() {
            acc = &acc * &d0_inv;
        }
        s.push(acc);
    }
    Ok(TruncatedSeries::new(s))
}
