//! The cyclotomic field Q(ζ_k) = Q[x]/Φ_k(x), power basis {1, ζ, …, ζ^{φ(k)-1}}.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::cyclotomic_polynomial;
use crate::error::{Error, Result};

/// Reduction data for one conductor: the monic modulus Φ_k, low degree first.
#[derive(Debug)]
struct Field {
    modulus: Vec<i64>,
}

impl Field {
    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

fn field(k: u32) -> Arc<Field> {
    static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    let fields = FIELDS.get_or_init(Default::default);
    if let Some(f) = fields.read().unwrap().get(&k) {
        return f.clone();
    }
    // Φ_1 and Φ_2 are needed to build every other modulus.
    let modulus = match k {
        1 => vec![-1, 1],
        2 => vec![1, 1],
        _ => cyclotomic_polynomial(k as u64)
            .expect("conductor is positive")
            .coeffs()
            .iter()
            .map(|c| {
                c.as_rational()
                    .and_then(|q| q.to_integer().to_i64())
                    .expect("cyclotomic coefficients are small integers")
            })
            .collect(),
    };
    let f = Arc::new(Field { modulus });
    fields.write().unwrap().entry(k).or_insert(f).clone()
}

/// φ(k), the degree of Q(ζ_k) over Q.
pub fn field_degree(k: u32) -> usize {
    field(k).degree()
}

#[inline]
fn q_mul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

#[inline]
fn q_add_assign(a: &mut BigRational, b: &BigRational) {
    if a.is_integer() && b.is_integer() {
        *a = BigRational::from_integer(a.numer() + b.numer());
    } else {
        *a += b;
    }
}

#[inline]
fn q_sub_assign(a: &mut BigRational, b: &BigRational) {
    if a.is_integer() && b.is_integer() {
        *a = BigRational::from_integer(a.numer() - b.numer());
    } else {
        *a -= b;
    }
}

/// An exact element of Q(ζ_k), kept fully reduced modulo Φ_k so that
/// equality is coordinate-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNumber {
    conductor: u32,
    coords: Vec<BigRational>,
}

impl CycloNumber {
    pub fn zero(k: u32) -> Self {
        assert!(k >= 1, "conductor must be positive");
        CycloNumber {
            conductor: k,
            coords: vec![BigRational::zero(); field_degree(k)],
        }
    }

    pub fn one(k: u32) -> Self {
        Self::from_rational(k, BigRational::one())
    }

    pub fn from_rational(k: u32, q: BigRational) -> Self {
        let mut z = Self::zero(k);
        z.coords[0] = q;
        z
    }

    pub fn from_integer(k: u32, v: i64) -> Self {
        Self::from_rational(k, BigRational::from_integer(BigInt::from(v)))
    }

    /// Builds ζ^0 c_0 + ζ^1 c_1 + … from coordinates of any length,
    /// reducing modulo Φ_k.
    pub fn from_coords(k: u32, coords: Vec<BigRational>) -> Self {
        let f = field(k);
        CycloNumber {
            conductor: k,
            coords: reduce(&f, coords),
        }
    }

    /// ζ_k^a.
    pub fn root_of_unity(k: u32, a: u32) -> Self {
        let a = (a % k) as usize;
        let mut coords = vec![BigRational::zero(); a + 1];
        coords[a] = BigRational::one();
        Self::from_coords(k, coords)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the number lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn nonzero_coords(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }

    /// Total bit length of all numerators and denominators.
    pub fn bit_size(&self) -> u64 {
        self.coords
            .iter()
            .map(|c| c.numer().bits() + c.denom().bits())
            .sum()
    }

    fn check_conductor(&self, other: &Self) {
        assert_eq!(
            self.conductor, other.conductor,
            "arithmetic across different cyclotomic fields"
        );
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CycloNumber {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| q_mul(c, q)).collect(),
        }
    }

    /// `self -= a * b`, the elimination inner step.
    pub fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a * b;
        *self -= &prod;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_k.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero {
                conductor: self.conductor,
            });
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.conductor, q.recip()));
        }
        let f = field(self.conductor);
        let modulus: Vec<BigRational> = f
            .modulus
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        // Invariant: s * self ≡ r (mod Φ_k) for both rows.
        let (mut r0, mut r1) = (modulus, trim(self.coords.clone()));
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = qpoly_divrem(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Φ_k is irreducible, so the last nonzero remainder is a constant.
        let c = r1[0].recip();
        let inv: Vec<BigRational> = s1.iter().map(|x| x * &c).collect();
        Ok(Self::from_coords(self.conductor, inv))
    }
}

fn reduce(f: &Field, mut coords: Vec<BigRational>) -> Vec<BigRational> {
    let d = f.degree();
    for top in (d..coords.len()).rev() {
        let c = std::mem::take(&mut coords[top]);
        if c.is_zero() {
            continue;
        }
        for (j, &m) in f.modulus[..d].iter().enumerate() {
            let slot = &mut coords[top - d + j];
            match m {
                0 => {}
                1 => q_sub_assign(slot, &c),
                -1 => q_add_assign(slot, &c),
                m => q_sub_assign(slot, &(&c * BigRational::from_integer(BigInt::from(m)))),
            }
        }
    }
    coords.resize(d, BigRational::zero());
    coords
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn qpoly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b[db].recip();
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] -= &c * y;
        }
        q[i] = c;
    }
    (trim(q), trim(r))
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [Q(z_{})]", self.conductor)
    }
}

/// Human-readable form with ζ written as `z`, e.g. `1 - 2z + (1/2)z^2`.
impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let mag_str = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match i {
                0 => write!(f, "{mag_str}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag_str}")?;
                    }
                    write!(f, "z")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        self.check_conductor(rhs);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                q_add_assign(a, b);
            }
        }
    }
}

impl SubAssign<&CycloNumber> for CycloNumber {
    fn sub_assign(&mut self, rhs: &CycloNumber) {
        self.check_conductor(rhs);
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            if !b.is_zero() {
                q_sub_assign(a, b);
            }
        }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        self.check_conductor(rhs);
        let d = self.coords.len();
        if d == 1 {
            return CycloNumber {
                conductor: self.conductor,
                coords: vec![q_mul(&self.coords[0], &rhs.coords[0])],
            };
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coords.iter().enumerate() {
                if !b.is_zero() {
                    q_add_assign(&mut prod[i + j], &q_mul(a, b));
                }
            }
        }
        CycloNumber::from_coords(self.conductor, prod)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_inverse() {
        let a = CycloNumber::from_rational(1, q(3, 2));
        assert_eq!(a.inverse().unwrap(), CycloNumber::from_rational(1, q(2, 3)));
    }

    #[test]
    fn inverse_of_i_is_minus_i() {
        let z = CycloNumber::root_of_unity(4, 1);
        assert_eq!(z.inverse().unwrap(), -&z);
        assert!((&z * &-&z).is_one());
    }

    #[test]
    fn inverse_of_one_plus_zeta3() {
        let z = CycloNumber::root_of_unity(3, 1);
        let a = &CycloNumber::one(3) + &z;
        assert_eq!(a.inverse().unwrap(), -&z);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(matches!(
            CycloNumber::zero(5).inverse(),
            Err(Error::DivisionByZero { conductor: 5 })
        ));
    }

    #[test]
    fn roots_of_unity_cycle() {
        for k in 1..=12u32 {
            let z = CycloNumber::root_of_unity(k, 1);
            let mut acc = CycloNumber::one(k);
            for a in 0..=k {
                assert_eq!(acc, CycloNumber::root_of_unity(k, a), "k={k} a={a}");
                acc = &acc * &z;
            }
            // sum of all k-th roots of unity vanishes for k > 1
            let mut sum = CycloNumber::zero(k);
            for a in 0..k {
                sum += &CycloNumber::root_of_unity(k, a);
            }
            assert_eq!(sum.is_zero(), k > 1);
        }
    }

    #[test]
    fn display() {
        let z = CycloNumber::root_of_unity(5, 1);
        let a = &(&CycloNumber::one(5) - &z) + &(&z * &z).scale(&q(1, 2));
        assert_eq!(a.to_string(), "1 - z + (1/2)z^2");
        assert_eq!(CycloNumber::zero(3).to_string(), "0");
        assert_eq!(CycloNumber::root_of_unity(3, 2).to_string(), "-1 - z");
    }

    fn arb_cyclo() -> impl Strategy<Value = CycloNumber> {
        (1u32..=12).prop_flat_map(|k| {
            let d = field_degree(k);
            prop::collection::vec((-9i64..=9, 1i64..=4), d).prop_map(move |cs| {
                CycloNumber::from_coords(k, cs.into_iter().map(|(n, m)| q(n, m)).collect())
            })
        })
    }

    proptest! {
        #[test]
        fn inverse_roundtrip(a in arb_cyclo()) {
            prop_assume!(!a.is_zero());
            let b = a.inverse().unwrap();
            prop_assert!((&a * &b).is_one());
        }

        #[test]
        fn multiplication_commutes(a in arb_cyclo(), e in 0u32..24) {
            let b = CycloNumber::root_of_unity(a.conductor(), e);
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}
