//! Common denominators D(x) and g_p(x) of the symmetric generating functions.

use serde::Serialize;

use crate::algebra::{cyclotomic_polynomial, CycloNumber, Poly};
use crate::arith::{r_p, require_prime};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub description: String,
    pub multiplicity: u32,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonDenominator {
    pub poly: Poly,
    pub factors: Vec<Factor>,
}

impl CommonDenominator {
    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|f| f.degree * f.multiplicity as usize)
            .sum()
    }
}

fn binomial_description(exponent: u32, degree: usize) -> String {
    let z = match exponent {
        0 => String::new(),
        1 => "z".into(),
        a => format!("z^{a}"),
    };
    let x = if degree == 1 {
        "x".into()
    } else {
        format!("x^{degree}")
    };
    format!("1-{z}{x}")
}

/// D(x) = ∏_{0≤i<k, 1≤j≤n} (1 - ζ^i x^j).
pub fn common_denominator_d(n: usize, k: u32) -> Result<CommonDenominator> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidInput("n and k must be >= 1".into()));
    }
    let mut poly = Poly::one(k);
    let mut factors = Vec::new();
    for j in 1..=n {
        for i in 0..k {
            poly = poly.mul_one_minus(&CycloNumber::root_of_unity(k, i), j);
            factors.push(Factor {
                description: binomial_description(i, j),
                multiplicity: 1,
                degree: j,
            });
        }
    }
    Ok(CommonDenominator { poly, factors })
}

/// ∏_{j≤n} (1 - x^{r_p(j)}), repeated factors grouped.
pub fn g_p_product(p: u64, n: usize) -> Result<CommonDenominator> {
    require_prime(p)?;
    let mut poly = Poly::one(1);
    let mut counts: Vec<(usize, u32)> = Vec::new();
    for j in 1..=n {
        let r = r_p(j as u64, p)? as usize;
        poly = poly.mul_one_minus(&CycloNumber::one(1), r);
        match counts.iter_mut().find(|(d, _)| *d == r) {
            Some((_, m)) => *m += 1,
            None => counts.push((r, 1)),
        }
    }
    counts.sort_unstable();
    let factors = counts
        .into_iter()
        .map(|(r, m)| Factor {
            description: binomial_description(0, r),
            multiplicity: m,
            degree: r,
        })
        .collect();
    Ok(CommonDenominator { poly, factors })
}

/// ∏_{d≤n, p∤d} Φ_d(x)^{⌊n/d⌋}.
pub fn g_p_cyclotomic(p: u64, n: usize) -> Result<CommonDenominator> {
    require_prime(p)?;
    let mut poly = Poly::one(1);
    let mut factors = Vec::new();
    for d in (1..=n).filter(|&d| !(d as u64).is_multiple_of(p)) {
        let phi = cyclotomic_polynomial(d as u64)?;
        let m = (n / d) as u32;
        poly = &poly * &phi.pow(m);
        factors.push(Factor {
            description: format!("Phi_{d}"),
            multiplicity: m,
            degree: phi.degree().unwrap_or(0),
        });
    }
    Ok(CommonDenominator { poly, factors })
}

/// deg g_p = Σ_{k≤n, p∤k} k (1 + ⌊log_p(n/k)⌋), with the bracket counted
/// exactly as #{e ≥ 0 : k p^e ≤ n}.
pub fn delta_p(p: u64, n: usize) -> Result<usize> {
    require_prime(p)?;
    let p = p as usize;
    Ok((1..=n)
        .filter(|k| k % p != 0)
        .map(|k| {
            let mut count = 0;
            let mut v = k;
            while v <= n {
                count += 1;
                v *= p;
            }
            k * count
        })
        .sum())
}
