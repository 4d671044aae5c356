//! Small integer number theory used throughout: primality, divisors,
//! Möbius, totient and p'-parts.

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn mobius(n: u64) -> i32 {
    assert!(n > 0);
    let mut m = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|i| i.gcd(&n) == 1).count() as u64
}

/// The p'-part of `k`: writing `k = p^a * m` with `p ∤ m`, returns `m`.
pub fn r_p(k: u64, p: u64) -> Result<u64> {
    require_prime(p)?;
    if k == 0 {
        return Err(Error::InvalidInput("r_p needs k >= 1".into()));
    }
    let mut m = k;
    while m.is_multiple_of(p) {
        m /= p;
    }
    Ok(m)
}

/// Multiplicative order of `zeta^a` in the cyclic group of order `k`.
pub fn root_order(k: u32, a: u32) -> u32 {
    k / k.gcd(&a)
}

/// Exact `⌊log_p n⌋` for `n >= 1`.
pub fn floor_log(n: u64, p: u64) -> u32 {
    let mut e = 0;
    let mut q = n;
    while q >= p {
        q /= p;
        e += 1;
    }
    e
}

/// `Some(e)` when `n = p^e`.
pub fn exact_log(n: u64, p: u64) -> Option<u32> {
    let mut e = 0;
    let mut q = n;
    while q > 1 {
        if !q.is_multiple_of(p) {
            return None;
        }
        q /= p;
        e += 1;
    }
    Some(e)
}
