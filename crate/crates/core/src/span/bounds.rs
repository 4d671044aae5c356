//! Bound formulas evaluated as rational intervals, so every comparison
//! against an integer dimension is certified despite the logarithms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::denominators::delta_p;
use super::query::SpanQuery;
use crate::arith::{exact_log, r_p};
use crate::character::CharKind;
use crate::combinatorics::{a_count, w_count};
use crate::error::Result;

/// A closed interval `[lo, hi]` of rationals containing an exact real value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Interval {
    pub fn exact(v: BigRational) -> Self {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn add_q(&self, q: &BigRational) -> Interval {
        self.add(&Interval::exact(q.clone()))
    }

    pub fn scale(&self, q: &BigRational) -> Interval {
        let (a, b) = (&self.lo * q, &self.hi * q);
        if q.is_negative() {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    fn div_positive(&self, other: &Interval) -> Interval {
        debug_assert!(other.lo.is_positive() && !self.lo.is_negative());
        Interval {
            lo: &self.lo / &other.hi,
            hi: &self.hi / &other.lo,
        }
    }

    /// Widens the endpoints onto the grid `1/2^bits` to keep sizes bounded.
    fn outward(self, bits: u32) -> Interval {
        if self.is_exact() {
            return self;
        }
        let scale = BigRational::from_integer(BigInt::one() << bits);
        Interval {
            lo: (&self.lo * &scale).floor() / &scale,
            hi: (&self.hi * &scale).ceil() / &scale,
        }
    }
}

const SERIES_TERMS: u32 = 48;
const GRID_BITS: u32 = 160;

/// atanh(z) for 0 ≤ z ≤ 1/3 from its Taylor series with a geometric tail bound.
fn atanh_interval(z: &BigRational) -> Interval {
    let z2 = z * z;
    let mut power = z.clone();
    let mut sum = BigRational::zero();
    for j in 0..SERIES_TERMS {
        sum += &power / int(u64::from(2 * j + 1));
        power = &power * &z2;
    }
    // remaining terms ≤ z^{2N+1} / ((2N+1)(1 - z^2))
    let tail = &power / (int(u64::from(2 * SERIES_TERMS + 1)) * (BigRational::one() - &z2));
    Interval {
        hi: &sum + tail,
        lo: sum,
    }
    .outward(GRID_BITS)
}

/// ln(m) for a positive integer `m`.
pub fn ln_interval(m: u64) -> Interval {
    assert!(m >= 1, "ln needs a positive argument");
    if m == 1 {
        return Interval::exact(BigRational::zero());
    }
    let e = 63 - m.leading_zeros();
    let two_e = 1u64 << e;
    let ln2 = atanh_interval(&rat(1, 3)).scale(&int(2));
    // ln(m / 2^e) = 2 atanh((m - 2^e) / (m + 2^e)), argument in [0, 1/3)
    let z = BigRational::new(BigInt::from(m - two_e), BigInt::from(m + two_e));
    let frac = if z.is_zero() {
        Interval::exact(BigRational::zero())
    } else {
        atanh_interval(&z).scale(&int(2))
    };
    ln2.scale(&int(u64::from(e))).add(&frac).outward(GRID_BITS)
}

/// log_base(n); exact when `n` is a power of `base`.
pub fn log_interval(n: u64, base: u64) -> Interval {
    match exact_log(n, base) {
        Some(e) => Interval::exact(int(u64::from(e))),
        None => ln_interval(n)
            .div_positive(&ln_interval(base))
            .outward(GRID_BITS),
    }
}

/// The Euler–Mascheroni constant to 40 decimal places.
pub fn euler_gamma() -> Interval {
    let digits: BigInt = "5772156649015328606065120900824024310421".parse().unwrap();
    let den = BigInt::from(10u32).pow(40);
    let lo = BigRational::new(digits.clone(), den.clone());
    let hi = BigRational::new(digits + 1, den);
    Interval { lo, hi }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Upper,
    Lower,
}

/// One bound applicable to a query, before comparison with a dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundFormula {
    pub name: &'static str,
    pub direction: Direction,
    pub interval: Interval,
    /// Reported but not enforced.
    pub informational: bool,
}

/// Denominator of the grid onto which irrational bound values are rounded.
pub const REPORT_GRID: i64 = 1_000_000;

impl BoundFormula {
    /// The reportable value: exact when the bound is rational, otherwise
    /// rounded outward (upper bounds up, lower bounds down) to `1/REPORT_GRID`.
    pub fn value(&self) -> BigRational {
        if self.interval.is_exact() {
            return self.interval.lo.clone();
        }
        let grid = int(REPORT_GRID as u64);
        match self.direction {
            Direction::Upper => (&self.interval.hi * &grid).ceil() / grid,
            Direction::Lower => (&self.interval.lo * &grid).floor() / grid,
        }
    }

    /// Certified comparison: an upper bound is satisfied only when the
    /// dimension is at most every point of the interval, and dually.
    pub fn satisfied_by(&self, dimension: usize) -> bool {
        let d = int(dimension as u64);
        match self.direction {
            Direction::Upper => d <= self.interval.lo,
            Direction::Lower => self.interval.hi <= d,
        }
    }

    pub fn evaluate(&self, dimension: usize) -> Bound {
        let v = self.value();
        Bound {
            name: self.name.to_string(),
            value_num: v.numer().to_i64().expect("bound numerator fits in i64"),
            value_den: v.denom().to_i64().expect("bound denominator fits in i64"),
            satisfied: self.satisfied_by(dimension),
            informational: self.informational,
        }
    }
}

/// A bound as reported: rational value as separate integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub name: String,
    pub value_num: i64,
    pub value_den: i64,
    pub satisfied: bool,
    #[serde(default)]
    pub informational: bool,
}

impl Bound {
    pub fn value(&self) -> BigRational {
        rat(self.value_num, self.value_den)
    }
}

fn exact(q: BigRational) -> Interval {
    Interval::exact(q)
}

/// k n²/2 + (k/2 - 1) n + 1.
pub fn ub_d(n: usize, k: u32) -> BigRational {
    let (n, k) = (int(n as u64), int(u64::from(k)));
    &k * &n * &n / int(2) + (&k / int(2) - int(1)) * &n + int(1)
}

/// p/(2p+2) n² + n (log_p n + 1), the closed-form bound on deg g_p.
pub fn ub_delta_p(p: u64, n: usize) -> Interval {
    let nq = int(n as u64);
    let quad = rat(p as i64, 2 * p as i64 + 2) * &nq * &nq;
    log_interval(n as u64, p)
        .add_q(&int(1))
        .scale(&nq)
        .add_q(&quad)
}

/// p/(2p+2) n² + n log_p n + 1.
pub fn ub_b(p: u64, n: usize) -> Interval {
    let nq = int(n as u64);
    let quad = rat(p as i64, 2 * p as i64 + 2) * &nq * &nq;
    log_interval(n as u64, p).scale(&nq).add_q(&(quad + int(1)))
}

/// r_p(k) (p/(2p+2) n² + n (log_p n + 1)) - n + 1.
pub fn ub_b_wreath(p: u64, n: usize, k: u32) -> Result<Interval> {
    let rp = r_p(u64::from(k), p)?;
    Ok(ub_delta_p(p, n)
        .scale(&int(rp))
        .add_q(&(int(1) - int(n as u64))))
}

/// k ((n-1) ln(n-1) - 2(n-2)), for n ≥ 2.
fn lb_d_log(n: usize, k: u32) -> Interval {
    let m = (n - 1) as u64;
    ln_interval(m)
        .scale(&int(m))
        .add_q(&(-int(2) * int((n - 2) as u64)))
        .scale(&int(u64::from(k)))
}

/// (p-1)/p n ln n + n(γ - 1 - (p-1)/p - γ/p), and the variant
/// 1 + (p-1)/p n ln n + n(γ - 1 - γ/p).
fn lb_b_harmonic(p: u64, n: usize) -> (Interval, Interval) {
    let nq = int(n as u64);
    let pq = int(p);
    let frac = (&pq - int(1)) / &pq;
    let lead = ln_interval(n as u64).scale(&(&frac * &nq));
    // γ(1 - 1/p) - 1 is increasing in γ, so endpoint-wise evaluation is valid
    let gamma_part = euler_gamma()
        .scale(&(int(1) - int(1) / &pq))
        .add_q(&-int(1));
    let stated = lead.add(&gamma_part.add_q(&-frac).scale(&nq));
    let alt = lead.add(&gamma_part.scale(&nq)).add_q(&int(1));
    (stated, alt)
}

/// Every bound formula applicable to the query.
pub fn bound_formulas(query: &SpanQuery) -> Result<Vec<BoundFormula>> {
    query.validate()?;
    let SpanQuery { kind, n, k, p } = *query;
    let upper = |name, interval| BoundFormula {
        name,
        direction: Direction::Upper,
        interval,
        informational: false,
    };
    let lower = |name, interval| BoundFormula {
        name,
        direction: Direction::Lower,
        interval,
        informational: false,
    };
    let mut out = Vec::new();
    match (kind, p) {
        (CharKind::Ext, _) => {
            out.push(upper("ub_E", exact(int(n as u64 + 1))));
            let claimed = if k >= 2 { n + 1 } else { n };
            out.push(lower("lb_E", exact(int(claimed as u64))));
        }
        (CharKind::Sym, None) => {
            out.push(upper("ub_D", exact(ub_d(n, k))));
            out.push(lower(
                "lb_D_family",
                exact(int(u64::from(k) * w_count(n - 1) as u64)),
            ));
            if n >= 2 {
                out.push(lower("lb_D_log", lb_d_log(n, k)));
            }
        }
        (CharKind::Sym, Some(p)) if k == 1 => {
            out.push(upper("ub_B", ub_b(p, n)));
            let degree_bound = delta_p(p, n)? as i64 + 1 - n as i64;
            out.push(upper(
                "ub_B_degree",
                exact(BigRational::from_integer(degree_bound.into())),
            ));
            out.push(lower("lb_B_family", exact(int(a_count(p, n) as u64))));
            let (stated, alt) = lb_b_harmonic(p, n);
            out.push(BoundFormula {
                informational: true,
                ..lower("lb_B_harmonic", stated)
            });
            out.push(BoundFormula {
                informational: true,
                ..lower("lb_B_harmonic_alt", alt)
            });
        }
        (CharKind::Sym, Some(p)) => {
            out.push(upper("ub_B_wreath", ub_b_wreath(p, n, k)?));
        }
    }
    Ok(out)
}
