//! Dense univariate polynomials over Q(ζ_k).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclo::CycloNumber;
use crate::arith::{divisors, mobius};
use crate::error::{Error, Result};

/// Coefficients indexed by degree; the highest stored coefficient is nonzero
/// unless the polynomial is zero (then `coeffs` is empty).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    conductor: u32,
    coeffs: Vec<CycloNumber>,
}

impl Poly {
    pub fn zero(k: u32) -> Self {
        Poly {
            conductor: k,
            coeffs: Vec::new(),
        }
    }

    pub fn one(k: u32) -> Self {
        Self::constant(CycloNumber::one(k))
    }

    pub fn constant(c: CycloNumber) -> Self {
        Self::from_coeffs(c.conductor(), vec![c])
    }

    pub fn from_coeffs(k: u32, coeffs: Vec<CycloNumber>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.conductor() == k));
        let mut p = Poly {
            conductor: k,
            coeffs,
        };
        p.trim();
        p
    }

    pub fn from_integers(k: u32, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            k,
            coeffs
                .iter()
                .map(|&c| CycloNumber::from_integer(k, c))
                .collect(),
        )
    }

    /// `c * x^deg`.
    pub fn monomial(c: CycloNumber, deg: usize) -> Self {
        let k = c.conductor();
        let mut coeffs = vec![CycloNumber::zero(k); deg];
        coeffs.push(c);
        Self::from_coeffs(k, coeffs)
    }

    /// `1 - t x^deg`.
    pub fn one_minus(t: &CycloNumber, deg: usize) -> Self {
        &Self::one(t.conductor()) - &Self::monomial(t.clone(), deg)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(CycloNumber::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> CycloNumber {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| CycloNumber::zero(self.conductor))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        Self::from_coeffs(self.conductor, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by the sparse binomial `1 - t x^deg` in place of a full product.
    pub fn mul_one_minus(&self, t: &CycloNumber, deg: usize) -> Self {
        let mut out = self.coeffs.clone();
        out.resize(self.coeffs.len() + deg, CycloNumber::zero(self.conductor));
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + deg].sub_mul_assign(t, c);
        }
        Self::from_coeffs(self.conductor, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.conductor), |acc, _| &acc * self)
    }

    /// Euclidean division: `self = q * den + r` with `deg r < deg den`.
    pub fn div_rem(&self, den: &Poly) -> Result<(Poly, Poly)> {
        assert_eq!(self.conductor, den.conductor);
        let Some(dd) = den.degree() else {
            return Err(Error::DivisionByZero {
                conductor: self.conductor,
            });
        };
        let k = self.conductor;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(k), self.clone()));
        }
        let lead_inv = den.coeffs[dd].inverse()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![CycloNumber::zero(k); r.len() - dd];
        for i in (0..q.len()).rev() {
            if r[i + dd].is_zero() {
                continue;
            }
            let c = if lead_inv.is_one() {
                r[i + dd].clone()
            } else {
                &r[i + dd] * &lead_inv
            };
            for (j, y) in den.coeffs.iter().enumerate() {
                r[i + j].sub_mul_assign(&c, y);
            }
            q[i] = c;
        }
        Ok((Poly::from_coeffs(k, q), Poly::from_coeffs(k, r)))
    }

    /// Human-readable form in ascending powers, ζ written as `z`.
    pub fn to_pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let compound = c.nonzero_coords() > 1 || s.contains('(');
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, s),
            };
            let body = if compound && i > 0 {
                format!("({body})")
            } else {
                body
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let term = match i {
                0 => body,
                _ => {
                    let var = if i == 1 {
                        "x".to_string()
                    } else {
                        format!("x^{i}")
                    };
                    if body == "1" {
                        var
                    } else {
                        format!("{body}{var}")
                    }
                }
            };
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[Q(z_{})]({})", self.conductor, self.to_pretty())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.conductor, rhs.conductor);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Poly::from_coeffs(self.conductor, out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.conductor, rhs.conductor);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Poly::from_coeffs(self.conductor, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.conductor, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.conductor, rhs.conductor);
        let k = self.conductor;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(k);
        }
        let mut out = vec![CycloNumber::zero(k); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(k, out)
    }
}

/// Exact quotient `num / den`; a nonzero remainder is an error, never truncated.
pub fn poly_div_exact(num: &Poly, den: &Poly) -> Result<Poly> {
    let (q, r) = num.div_rem(den)?;
    match r.degree() {
        None => Ok(q),
        Some(d) => Err(Error::NotDivisible {
            remainder_degree: d,
        }),
    }
}

/// Φ_d(x) over Q, from the Möbius quotient ∏_{e|d} (x^e - 1)^{μ(d/e)}.
pub fn cyclotomic_polynomial(d: u64) -> Result<Poly> {
    if d == 0 {
        return Err(Error::InvalidInput("cyclotomic index must be >= 1".into()));
    }
    let x_pow_minus_one = |e: u64| {
        let mut c = vec![0i64; e as usize + 1];
        c[0] = -1;
        c[e as usize] = 1;
        Poly::from_integers(1, &c)
    };
    let mut num = Poly::one(1);
    let mut den = Poly::one(1);
    for e in divisors(d) {
        match mobius(d / e) {
            1 => num = &num * &x_pow_minus_one(e),
            -1 => den = &den * &x_pow_minus_one(e),
            _ => {}
        }
    }
    poly_div_exact(&num, &den)
}
