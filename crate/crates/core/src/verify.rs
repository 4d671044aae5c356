//! The verification suite: each criterion recomputes its claims exactly and
//! reports pass/fail with a short detail line.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::{poly_div_exact, CycloNumber};
use crate::character::{
    brute_force_ext_trace, brute_force_sym_trace, char_values, sym_gf, CharKind,
};
use crate::combinatorics::{a_count, class_representative, classes, w_count};
use crate::error::{Error, Result};
use crate::span::{
    a_family, bounds, common_denominator_d, compute, compute_b, compute_b_wreath, compute_d,
    compute_e, delta_p, g_p_cyclotomic, g_p_product, sym_truncation, verify_family_independent,
    y_family, DimensionReport, SpanQuery,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionOutcome {
    pub number: u32,
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u64,
}

pub struct Criterion {
    pub number: u32,
    pub id: &'static str,
    pub title: &'static str,
    pub time_limit: Duration,
    check: fn() -> Result<Check>,
}

/// Failures collected by a check; empty means pass.
struct Check {
    failures: Vec<String>,
    summary: String,
}

impl Check {
    fn new(summary: impl Into<String>) -> Self {
        Check {
            failures: Vec::new(),
            summary: summary.into(),
        }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

impl Criterion {
    pub fn run(&self) -> CriterionOutcome {
        let started = Instant::now();
        let result = (self.check)();
        let elapsed = started.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(c) if c.failures.is_empty() => (true, c.summary),
            Ok(c) => {
                let shown: Vec<_> = c.failures.iter().take(3).cloned().collect();
                let more = c.failures.len().saturating_sub(3);
                let tail = if more > 0 {
                    format!(" (+{more} more)")
                } else {
                    String::new()
                };
                (
                    false,
                    format!("{}: {}{}", c.summary, shown.join("; "), tail),
                )
            }
            Err(e) => (false, format!("error: {e}")),
        };
        if passed && elapsed > self.time_limit {
            passed = false;
            detail = format!(
                "exceeded {:?} (took {:?}): {detail}",
                self.time_limit, elapsed
            );
        }
        CriterionOutcome {
            number: self.number,
            id: self.id,
            title: self.title,
            passed,
            detail,
            elapsed_ms: elapsed.as_millis() as u64,
        }
    }
}

/// A report, or the report carried by a bound violation.
fn report_of(r: Result<DimensionReport>) -> Result<(DimensionReport, Option<String>)> {
    match r {
        Ok(rep) => Ok((rep, None)),
        Err(Error::BoundViolated { bound, report }) => Ok((*report, Some(bound))),
        Err(e) => Err(e),
    }
}

fn checked(c: &mut Check, label: String, r: Result<DimensionReport>) -> Result<DimensionReport> {
    let (rep, violated) = report_of(r)?;
    if let Some(b) = violated {
        c.failures.push(format!(
            "{label}: bound {b} violated (dimension {})",
            rep.dimension
        ));
    }
    Ok(rep)
}

fn bound_ok(rep: &DimensionReport, name: &str) -> bool {
    rep.bound(name).is_some_and(|b| b.satisfied)
}

fn remark_n1() -> Result<Check> {
    let mut c = Check::new("D(1,k) = ub_D(1,k) = k for k = 1..10");
    for k in 1..=10u32 {
        let rep = checked(&mut c, format!("D(1,{k})"), compute_d(1, k))?;
        c.require(rep.dimension == k as usize, || {
            format!("D(1,{k}) = {}", rep.dimension)
        });
        let ub = bounds::ub_d(1, k);
        c.require(
            ub == crate::algebra::BigRational::from_integer(k.into()),
            || format!("ub_D(1,{k}) = {ub}"),
        );
    }
    Ok(c)
}

fn ext_dims() -> Result<Check> {
    let mut c = Check::new(
        "E(n,k) = n+1 for k = 2..4 and E(n,1) = n, n = 1..8; conventions agree for even k",
    );
    for n in 1..=8 {
        for k in 1..=4u32 {
            let rep = checked(&mut c, format!("E({n},{k})"), compute_e(n, k))?;
            let want = if k == 1 { n } else { n + 1 };
            c.require(rep.dimension == want, || {
                format!("E({n},{k}) = {}", rep.dimension)
            });
            let paper = rep.ext_paper_dimension;
            c.require(paper.is_some(), || {
                format!("E({n},{k}) missing paper dimension")
            });
            if k % 2 == 0 {
                c.require(paper == Some(rep.dimension), || {
                    format!("E({n},{k}) paper convention gives {paper:?}")
                });
            }
        }
    }
    Ok(c)
}

/// Prefix of the failure lines reporting a rank-deficient Y family.
pub const Y_RANK_FAILURE: &str = "Y family rank";

fn sandwich() -> Result<Check> {
    let mut c = Check::new(
        "k|W_{n-1}| <= D(n,k) <= ub_D(n,k) and Y-family rank = k|W_{n-1}| for n = 2..6, k = 1..3",
    );
    for n in 2..=6 {
        for k in 1..=3u32 {
            let rep = checked(&mut c, format!("D({n},{k})"), compute_d(n, k))?;
            let family_size = k as usize * w_count(n - 1);
            c.require(family_size <= rep.dimension, || {
                format!("D({n},{k}) = {} < {family_size}", rep.dimension)
            });
            c.require(bound_ok(&rep, "ub_D"), || {
                format!("D({n},{k}) exceeds ub_D")
            });
            let y = verify_family_independent(&y_family(n, k)?, sym_truncation(n, k))?;
            c.require(y.rank == family_size, || {
                format!(
                    "{Y_RANK_FAILURE} {} != k|W_{}| = {family_size} at (n,k)=({n},{k})",
                    y.rank,
                    n - 1
                )
            });
        }
    }
    Ok(c)
}

fn gp_identity() -> Result<Check> {
    let mut c = Check::new("g_p_product = (-1)^n g_p_cyclotomic for p in {2,3,5,7}, n <= 40");
    for p in [2u64, 3, 5, 7] {
        for n in 1..=40 {
            let prod = g_p_product(p, n)?.poly;
            let cyc = g_p_cyclotomic(p, n)?.poly;
            let signed = if n % 2 == 0 { cyc } else { -&cyc };
            c.require(prod == signed, || format!("identity fails at p={p}, n={n}"));
        }
    }
    Ok(c)
}

fn brauer_upper() -> Result<Check> {
    let mut c = Check::new("delta_p <= ub_delta_p and B(p,n) <= ub_B for p in {2,3,5}, n <= 12");
    for p in [2u64, 3, 5] {
        for n in 1..=12 {
            let delta = delta_p(p, n)?;
            let ub = bounds::ub_delta_p(p, n);
            let d = crate::algebra::BigRational::from_integer(delta.into());
            c.require(d <= ub.lo, || {
                format!("delta_{p}({n}) = {delta} exceeds bound")
            });
            let rep = checked(&mut c, format!("B({p},{n})"), compute_b(p, n))?;
            c.require(bound_ok(&rep, "ub_B"), || {
                format!("B({p},{n}) exceeds ub_B")
            });
        }
    }
    Ok(c)
}

fn brauer_lower() -> Result<Check> {
    let mut c = Check::new(
        "rank{f_lambda : lambda in A_{p,n}} = |A_{p,n}| <= B(p,n) for p in {2,3,5}, n <= 12",
    );
    for p in [2u64, 3, 5] {
        for n in 1..=12 {
            let a = verify_family_independent(&a_family(p, n)?, sym_truncation(n, 1))?;
            c.require(a.equal && a.expected == a_count(p, n), || {
                format!("A_{{{p},{n}}} rank {} of {}", a.rank, a.expected)
            });
            let rep = checked(&mut c, format!("B({p},{n})"), compute_b(p, n))?;
            c.require(rep.dimension >= a.expected, || {
                format!("B({p},{n}) = {} < |A| = {}", rep.dimension, a.expected)
            });
        }
    }
    Ok(c)
}

fn wreath() -> Result<Check> {
    let mut c =
        Check::new("B(p,n,k) <= ub_B_wreath for p in {2,3}, n <= 5, k <= 4; B(p,n,1) = B(p,n)");
    for p in [2u64, 3] {
        for n in 1..=5 {
            for k in 1..=4u32 {
                let rep = checked(&mut c, format!("B({p},{n},{k})"), compute_b_wreath(p, n, k))?;
                let ub = bounds::ub_b_wreath(p, n, k)?;
                let d = crate::algebra::BigRational::from_integer(rep.dimension.into());
                c.require(d <= ub.lo, || {
                    format!("B({p},{n},{k}) = {} exceeds bound", rep.dimension)
                });
            }
            let w = compute_b_wreath(p, n, 1)?.dimension;
            let b = compute_b(p, n)?.dimension;
            c.require(w == b, || {
                format!("B({p},{n},1) = {w} but B({p},{n}) = {b}")
            });
        }
    }
    Ok(c)
}

fn oracle() -> Result<Check> {
    let mut c =
        Check::new("generating functions equal brute-force traces for n <= 4, k <= 3, r <= 6");
    let r_max = 6;
    for n in 1..=4 {
        for k in 1..=3u32 {
            for class in classes(n, k) {
                let rep = class_representative(&class);
                let sym = char_values(&class, CharKind::Sym, r_max);
                let ext = char_values(&class, CharKind::Ext, r_max);
                for r in 0..=r_max {
                    let trace = brute_force_sym_trace(&rep, r)?;
                    c.require(sym.coeffs()[r] == trace, || format!("sym {class} r={r}"));
                    let trace = if r <= n {
                        brute_force_ext_trace(&rep, r)?
                    } else {
                        CycloNumber::zero(k)
                    };
                    c.require(ext.coeffs()[r] == trace, || format!("ext {class} r={r}"));
                }
            }
        }
    }
    Ok(c)
}

/// Every query whose dimension criteria 1-7 depend on.
pub fn criterion_queries() -> Vec<SpanQuery> {
    let mut qs = Vec::new();
    qs.extend((1..=10).map(|k| SpanQuery::sym(1, k)));
    for n in 1..=8 {
        qs.extend((1..=4).map(|k| SpanQuery::ext(n, k)));
    }
    for n in 2..=6 {
        qs.extend((1..=3).map(|k| SpanQuery::sym(n, k)));
    }
    for p in [2, 3, 5] {
        qs.extend((1..=12).map(|n| SpanQuery::brauer(p, n, 1)));
    }
    for p in [2, 3] {
        for n in 1..=5 {
            qs.extend((2..=4).map(|k| SpanQuery::brauer(p, n, k)));
        }
    }
    qs.sort_unstable();
    qs.dedup();
    qs
}

fn truncation_stability() -> Result<Check> {
    let qs = criterion_queries();
    let mut c = Check::new(format!(
        "{} dimensions unchanged at truncation T + n",
        qs.len()
    ));
    for q in qs {
        let (base, _) = report_of(compute(&q, None))?;
        let wider = base.truncation + q.n;
        let (wide, _) = report_of(compute(&q, Some(wider)))?;
        c.require(base.dimension == wide.dimension, || {
            format!("{q:?}: {} at T, {} at T+n", base.dimension, wide.dimension)
        });
    }
    Ok(c)
}

fn divisibility() -> Result<Check> {
    let mut c = Check::new("D(x) is divisible by every class denominator for n <= 6, k <= 3");
    for n in 1..=6 {
        for k in 1..=3u32 {
            let d = common_denominator_d(n, k)?;
            for class in classes(n, k) {
                let den = sym_gf(&class).denominator();
                c.require(poly_div_exact(&d.poly, &den).is_ok(), || {
                    format!("D_({n},{k}) not divisible by the denominator of {class}")
                });
            }
        }
    }
    Ok(c)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        number: 1,
        id: "d-n1",
        title: "D(1,k) = k and ub_D tight at n = 1",
        time_limit: Duration::from_secs(1),
        check: remark_n1,
    },
    Criterion {
        number: 2,
        id: "ext",
        title: "exterior span dimensions",
        time_limit: Duration::from_secs(10),
        check: ext_dims,
    },
    Criterion {
        number: 3,
        id: "sandwich",
        title: "D(n,k) sandwich and Y-family independence",
        time_limit: Duration::from_secs(300),
        check: sandwich,
    },
    Criterion {
        number: 4,
        id: "gp-identity",
        title: "g_p product/cyclotomic identity",
        time_limit: Duration::from_secs(30),
        check: gp_identity,
    },
    Criterion {
        number: 5,
        id: "brauer-upper",
        title: "delta_p and B(p,n) upper bounds",
        time_limit: Duration::from_secs(300),
        check: brauer_upper,
    },
    Criterion {
        number: 6,
        id: "brauer-lower",
        title: "A-family independence and B(p,n) lower bound",
        time_limit: Duration::from_secs(300),
        check: brauer_lower,
    },
    Criterion {
        number: 7,
        id: "wreath",
        title: "B(p,n,k) upper bound and k = 1 reduction",
        time_limit: Duration::from_secs(300),
        check: wreath,
    },
    Criterion {
        number: 8,
        id: "oracle",
        title: "generating functions against brute-force traces",
        time_limit: Duration::from_secs(120),
        check: oracle,
    },
    Criterion {
        number: 9,
        id: "truncation",
        title: "truncation stability at T + n",
        time_limit: Duration::from_secs(600),
        check: truncation_stability,
    },
    Criterion {
        number: 10,
        id: "divisibility",
        title: "common denominator divisibility",
        time_limit: Duration::from_secs(300),
        check: divisibility,
    },
];

pub fn criteria() -> &'static [Criterion] {
    CRITERIA
}

pub fn criterion(id: &str) -> Option<&'static Criterion> {
    CRITERIA
        .iter()
        .find(|c| c.id == id || c.number.to_string() == id)
}
