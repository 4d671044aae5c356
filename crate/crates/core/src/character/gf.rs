//! Generating functions for symmetric and exterior power character values.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{CycloNumber, Poly, TruncatedSeries};
use crate::combinatorics::ClassLabel;

/// The binomial `1 - s x^degree` with `s = ±ζ_k^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub k: u32,
    pub degree: usize,
    pub exponent: u32,
    pub negated: bool,
}

impl Binomial {
    pub fn new(k: u32, degree: usize, exponent: u32, negated: bool) -> Self {
        assert!(degree >= 1, "binomial factors have positive degree");
        let mut exponent = exponent % k;
        let mut negated = negated;
        // -ζ^a is itself a k-th root of unity when k is even
        if negated && k.is_multiple_of(2) {
            exponent = (exponent + k / 2) % k;
            negated = false;
        }
        Binomial {
            k,
            degree,
            exponent,
            negated,
        }
    }

    /// The coefficient `s` of `1 - s x^degree`.
    pub fn coefficient(&self) -> CycloNumber {
        let z = CycloNumber::root_of_unity(self.k, self.exponent);
        if self.negated {
            -z
        } else {
            z
        }
    }

    pub fn to_poly(&self) -> Poly {
        Poly::one_minus(&self.coefficient(), self.degree)
    }

    /// (is_minus_one, exponent of ζ left to print)
    fn display_parts(&self) -> (bool, Option<u32>) {
        let minus_one = self.k.is_multiple_of(2) && self.exponent == self.k / 2;
        match (self.exponent, minus_one) {
            (0, _) => (self.negated, None),
            (_, true) => (!self.negated, None),
            (a, false) => (self.negated, Some(a)),
        }
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (plus, zeta) = self.display_parts();
        write!(f, "1{}", if plus { '+' } else { '−' })?;
        if let Some(a) = zeta {
            write!(f, "z")?;
            if a > 1 {
                write!(f, "{}", superscript(a as usize))?;
            }
        }
        write!(f, "x")?;
        if self.degree > 1 {
            write!(f, "{}", superscript(self.degree))?;
        }
        Ok(())
    }
}

/// Writes a product of binomials, collapsing adjacent repeats into powers.
fn write_product(
    f: &mut fmt::Formatter<'_>,
    factors: &[Binomial],
    wrap_single: bool,
) -> fmt::Result {
    let mut groups: Vec<(Binomial, usize)> = Vec::new();
    for b in factors {
        match groups.last_mut() {
            Some((g, m)) if g == b => *m += 1,
            _ => groups.push((*b, 1)),
        }
    }
    let single = groups.len() == 1;
    if single && !wrap_single {
        let (b, m) = &groups[0];
        if *m == 1 {
            return write!(f, "{b}");
        }
    }
    if !single && wrap_single {
        write!(f, "(")?;
    }
    for (b, m) in &groups {
        write!(f, "({b})")?;
        if *m > 1 {
            write!(f, "{}", superscript(*m))?;
        }
    }
    if !single && wrap_single {
        write!(f, ")")?;
    }
    Ok(())
}

/// `numerator / ∏ (1 - t_i x^{λ_i})`, with the denominator kept factored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    numerator: Poly,
    factors: Vec<Binomial>,
}

impl RationalFunction {
    pub fn new(numerator: Poly, factors: Vec<Binomial>) -> Self {
        assert!(factors.iter().all(|b| b.k == numerator.conductor()));
        RationalFunction { numerator, factors }
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn factors(&self) -> &[Binomial] {
        &self.factors
    }

    pub fn conductor(&self) -> u32 {
        self.numerator.conductor()
    }

    pub fn denominator(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::one(self.conductor()), |acc, b| {
                acc.mul_one_minus(&b.coefficient(), b.degree)
            })
    }

    /// Multiplies by `1 / (1 - t x^degree)`.
    pub fn with_factor(mut self, b: Binomial) -> Self {
        assert_eq!(b.k, self.conductor());
        self.factors.push(b);
        self
    }

    /// Coefficients `0..=order`, dividing out one geometric factor at a time.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let k = self.conductor();
        let mut s: Vec<CycloNumber> = (0..=order).map(|i| self.numerator.coeff(i)).collect();
        for b in &self.factors {
            let t = b.coefficient();
            let (is_one, is_minus_one) = (t.is_one(), (-&t).is_one());
            for j in b.degree..=order {
                let (lo, hi) = s.split_at_mut(j);
                let prev = &lo[j - b.degree];
                if prev.is_zero() {
                    continue;
                }
                if is_one {
                    hi[0] += prev;
                } else if is_minus_one {
                    hi[0] -= prev;
                } else {
                    hi[0] += &(&t * prev);
                }
            }
        }
        debug_assert!(s.iter().all(|c| c.conductor() == k));
        TruncatedSeries::new(s)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.degree() == Some(0) {
            write!(f, "{}", self.numerator)?;
        } else {
            write!(f, "({})", self.numerator)?;
        }
        if self.factors.is_empty() {
            return Ok(());
        }
        write!(f, "/")?;
        write_product(f, &self.factors, true)
    }
}

/// f_σ(x) = 1 / ∏ (1 - t_i x^{λ_i}).
pub fn sym_gf(c: &ClassLabel) -> RationalFunction {
    let factors = c
        .pairs()
        .iter()
        .map(|&(part, a)| Binomial::new(c.k(), part, a, false))
        .collect();
    RationalFunction::new(Poly::one(c.k()), factors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtConvention {
    /// ∏ (1 + t_i (-1)^{λ_i - 1} x^{λ_i}); matches the wedge-basis traces.
    True,
    /// ∏ (1 - t_i (-1)^{λ_i - 1} x^{λ_i}), the displayed sign convention.
    Paper,
}

impl fmt::Display for ExtConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtConvention::True => "true",
            ExtConvention::Paper => "paper",
        })
    }
}

/// A polynomial of degree ≤ n with constant term 1, in factored and
/// expanded form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtPolynomial {
    poly: Poly,
    factors: Vec<Binomial>,
    convention: ExtConvention,
}

impl ExtPolynomial {
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn factors(&self) -> &[Binomial] {
        &self.factors
    }

    pub fn convention(&self) -> ExtConvention {
        self.convention
    }

    /// Coefficients `0..=order`, zero-padded above the degree.
    pub fn coefficients(&self, order: usize) -> Vec<CycloNumber> {
        (0..=order).map(|i| self.poly.coeff(i)).collect()
    }
}

impl fmt::Display for ExtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        write_product(f, &self.factors, false)
    }
}

fn ext_gf(c: &ClassLabel, convention: ExtConvention) -> ExtPolynomial {
    // factor 1 - s x^λ with s = -t(-1)^{λ-1} = t(-1)^λ (true) or t(-1)^{λ-1} (paper)
    let factors: Vec<Binomial> = c
        .pairs()
        .iter()
        .map(|&(part, a)| {
            let odd_part = part % 2 == 1;
            let negated = match convention {
                ExtConvention::True => odd_part,
                ExtConvention::Paper => !odd_part,
            };
            Binomial::new(c.k(), part, a, negated)
        })
        .collect();
    let poly = factors.iter().fold(Poly::one(c.k()), |acc, b| {
        acc.mul_one_minus(&b.coefficient(), b.degree)
    });
    ExtPolynomial {
        poly,
        factors,
        convention,
    }
}

/// The exterior-power generating polynomial whose coefficients are the
/// wedge-basis traces.
pub fn ext_gf_true(c: &ClassLabel) -> ExtPolynomial {
    ext_gf(c, ExtConvention::True)
}

/// The exterior-power generating polynomial with the opposite sign on each
/// cycle term.
pub fn ext_gf_paper(c: &ClassLabel) -> ExtPolynomial {
    ext_gf(c, ExtConvention::Paper)
}

pub fn ext_gf_with(c: &ClassLabel, convention: ExtConvention) -> ExtPolynomial {
    ext_gf(c, convention)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::classes;

    fn class(k: u32, parts: &[usize], exps: &[u32]) -> ClassLabel {
        ClassLabel::from_parts(k, parts, exps).unwrap()
    }

    fn ints(k: u32, v: &[i64]) -> Vec<CycloNumber> {
        v.iter().map(|&c| CycloNumber::from_integer(k, c)).collect()
    }

    #[test]
    fn sym_gf_worked_example() {
        let f = sym_gf(&class(2, &[2, 2, 1], &[0, 1, 0]));
        assert_eq!(f.to_string(), "1/((1−x²)(1+x²)(1−x))");
        // (1-x^2)(1+x^2)(1-x) = (1-x^4)(1-x)
        assert_eq!(
            f.denominator(),
            Poly::from_integers(2, &[1, -1, 0, 0, -1, 1])
        );
    }

    #[test]
    fn sym_gf_identity_and_zeta() {
        let f = sym_gf(&ClassLabel::identity(2, 1).unwrap());
        assert_eq!(f.to_string(), "1/(1−x)²");
        assert_eq!(f.expand(4).coeffs(), ints(1, &[1, 2, 3, 4, 5]).as_slice());
        let g = sym_gf(&class(3, &[3], &[1]));
        assert_eq!(g.to_string(), "1/(1−zx³)");
        assert_eq!(
            g.denominator(),
            Poly::one_minus(&CycloNumber::root_of_unity(3, 1), 3)
        );
    }

    #[test]
    fn sym_values() {
        let f = sym_gf(&class(1, &[2, 1], &[0, 0]));
        assert_eq!(
            f.expand(5).coeffs(),
            ints(1, &[1, 1, 2, 2, 3, 3]).as_slice()
        );
        let g = sym_gf(&class(2, &[2], &[1]));
        assert_eq!(g.expand(4).coeffs(), ints(2, &[1, 0, -1, 0, 1]).as_slice());
    }

    #[test]
    fn factorwise_expansion_matches_recurrence() {
        for c in classes(4, 3) {
            let f = sym_gf(&c);
            let direct =
                crate::algebra::series_expand(f.numerator(), &f.denominator(), 15).unwrap();
            assert_eq!(f.expand(15), direct, "{c}");
        }
    }

    #[test]
    fn k1_reduces_to_partition_products() {
        for c in classes(5, 1) {
            let expected = c.partition().parts().iter().fold(Poly::one(1), |acc, &l| {
                &acc * &Poly::from_integers(1, &{
                    let mut v = vec![0i64; l + 1];
                    v[0] = 1;
                    v[l] = -1;
                    v
                })
            });
            assert_eq!(sym_gf(&c).denominator(), expected);
        }
    }

    #[test]
    fn ext_examples() {
        let transposition = class(1, &[2], &[0]);
        assert_eq!(
            ext_gf_true(&transposition).poly(),
            &Poly::from_integers(1, &[1, 0, -1])
        );
        assert_eq!(
            ext_gf_paper(&transposition).poly(),
            &Poly::from_integers(1, &[1, 0, 1])
        );
        assert_eq!(ext_gf_true(&transposition).to_string(), "1−x²");
        assert_eq!(ext_gf_paper(&transposition).to_string(), "1+x²");

        let id = ClassLabel::identity(2, 1).unwrap();
        assert_eq!(ext_gf_true(&id).poly(), &Poly::from_integers(1, &[1, 2, 1]));
        assert_eq!(
            ext_gf_paper(&id).poly(),
            &Poly::from_integers(1, &[1, -2, 1])
        );
        assert_eq!(ext_gf_true(&id).to_string(), "(1+x)²");

        // (1-x^2)(1+x^2)(1+x)
        let c = class(2, &[2, 2, 1], &[0, 1, 0]);
        let expected =
            &Poly::from_integers(2, &[1, 0, 0, 0, -1]) * &Poly::from_integers(2, &[1, 1]);
        assert_eq!(ext_gf_true(&c).poly(), &expected);
    }

    #[test]
    fn paper_convention_reproduces_two_part_products() {
        // a_j(x) = (1 + (-1)^{n-j} x^{n-j}) (1 + (-1)^j ζ x^j), parts (n-j, j), exponents (0, 1)
        for k in [2u32, 3, 4] {
            for n in 2..=8usize {
                for j in 1..n {
                    if j == n - j {
                        continue;
                    }
                    let c = class(k, &[n - j, j], &[0, 1]);
                    let sign = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
                    let z = CycloNumber::root_of_unity(k, 1);
                    let left = Poly::one_minus(&CycloNumber::from_integer(k, -sign(n - j)), n - j);
                    let right = Poly::one_minus(
                        &(-&z).scale(&num_rational::BigRational::from_integer(sign(j).into())),
                        j,
                    );
                    assert_eq!(
                        ext_gf_paper(&c).poly(),
                        &(&left * &right),
                        "k={k} n={n} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn conventions_differ_by_negating_cycle_products() {
        for k in [2u32, 4, 6] {
            for n in 1..=5 {
                let mut paper: Vec<Vec<CycloNumber>> = classes(n, k)
                    .iter()
                    .map(|c| ext_gf_paper(c).coefficients(n))
                    .collect();
                let mut truth: Vec<Vec<CycloNumber>> = classes(n, k)
                    .iter()
                    .map(|c| ext_gf_true(c).coefficients(n))
                    .collect();
                let key = |v: &Vec<CycloNumber>| format!("{v:?}");
                paper.sort_by_key(key);
                truth.sort_by_key(key);
                assert_eq!(paper, truth, "k={k} n={n}");
            }
        }
        // pointwise: paper(c) = true(c') with every t negated
        let c = class(4, &[3, 2, 1], &[1, 2, 3]);
        let negated = class(4, &[3, 2, 1], &[3, 0, 1]);
        assert_eq!(ext_gf_paper(&c).poly(), ext_gf_true(&negated).poly());
    }
}
