//! Exact span dimensions D(n,k), E(n,k), B(p,n) and B(p,n,k).

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::bound_formulas;
use super::query::{sym_truncation, DimensionReport, SpanQuery};
use crate::algebra::{exact_rank, CycloNumber, EchelonBasis};
use crate::character::{ext_gf_paper, ext_gf_true, sym_gf, Binomial, CharKind, RationalFunction};
use crate::combinatorics::{
    a_set, class_iter, classes, colored_partition_count, is_p_regular, w_set, x_set, ClassLabel,
};
use crate::error::{Error, Result};

/// Rank of a family of symmetric generating functions truncated at `order`.
fn sym_rank(family: &[RationalFunction], k: u32, order: usize) -> Result<usize> {
    if family.is_empty() {
        return Ok(0);
    }
    let rows: Vec<Vec<CycloNumber>> = family
        .par_iter()
        .map(|f| f.expand(order).into_coeffs())
        .collect();
    debug_assert!(rows.iter().flatten().all(|c| c.conductor() == k));
    exact_rank(&rows)
}

fn sym_family(cs: &[ClassLabel]) -> Vec<RationalFunction> {
    cs.iter().map(sym_gf).collect()
}

fn finish(
    query: SpanQuery,
    dimension: usize,
    ext_paper_dimension: Option<usize>,
    num_classes: u64,
    truncation: usize,
    started: Instant,
) -> Result<DimensionReport> {
    let bounds = bound_formulas(&query)?
        .iter()
        .map(|f| f.evaluate(dimension))
        .collect();
    let report = DimensionReport {
        query,
        dimension,
        ext_paper_dimension,
        num_classes,
        truncation,
        bounds,
        elapsed_ms: started.elapsed().as_millis() as u64,
    };
    let structural = if dimension as u64 > num_classes {
        Some("num_classes".to_string())
    } else if dimension > truncation + 1 {
        Some("truncation".to_string())
    } else {
        None
    };
    match structural.or_else(|| report.violation().map(str::to_string)) {
        Some(bound) => Err(Error::BoundViolated {
            bound,
            report: Box::new(report),
        }),
        None => Ok(report),
    }
}

pub fn compute_d(n: usize, k: u32) -> Result<DimensionReport> {
    compute_d_at(n, k, None)
}

pub fn compute_d_at(n: usize, k: u32, truncation: Option<usize>) -> Result<DimensionReport> {
    let query = SpanQuery::sym(n, k);
    query.validate()?;
    let started = Instant::now();
    let order = truncation.unwrap_or_else(|| sym_truncation(n, k));
    let cs = classes(n, k);
    let dim = sym_rank(&sym_family(&cs), k, order)?;
    finish(query, dim, None, cs.len() as u64, order, started)
}

/// Streams the class polynomials into an echelon basis, stopping once the
/// span fills all of degree ≤ n.
fn ext_rank(n: usize, k: u32, order: usize, paper: bool) -> Result<usize> {
    let mut basis = EchelonBasis::new(k, order + 1);
    for c in class_iter(n, k) {
        let g = if paper {
            ext_gf_paper(&c)
        } else {
            ext_gf_true(&c)
        };
        basis.insert(g.coefficients(order))?;
        if basis.rank() == (n + 1).min(order + 1) {
            break;
        }
    }
    Ok(basis.rank())
}

pub fn compute_e(n: usize, k: u32) -> Result<DimensionReport> {
    compute_e_at(n, k, None)
}

pub fn compute_e_at(n: usize, k: u32, truncation: Option<usize>) -> Result<DimensionReport> {
    let query = SpanQuery::ext(n, k);
    query.validate()?;
    let started = Instant::now();
    let order = truncation.unwrap_or(n);
    let (dim, paper) = rayon::join(
        || ext_rank(n, k, order, false),
        || ext_rank(n, k, order, true),
    );
    let num_classes = colored_partition_count(n, k);
    finish(
        query,
        dim?,
        Some(paper?),
        num_classes as u64,
        order,
        started,
    )
}

pub fn compute_b(p: u64, n: usize) -> Result<DimensionReport> {
    compute_b_at(p, n, None)
}

pub fn compute_b_at(p: u64, n: usize, truncation: Option<usize>) -> Result<DimensionReport> {
    let query = SpanQuery::brauer(p, n, 1);
    query.validate()?;
    let started = Instant::now();
    let order = truncation.unwrap_or_else(|| sym_truncation(n, 1));
    let family = x_set(p, n)?;
    let cs: Vec<ClassLabel> = family
        .members
        .iter()
        .map(|l| ClassLabel::from_parts(1, l.parts(), &vec![0; l.len()]))
        .collect::<Result<_>>()?;
    let dim = sym_rank(&sym_family(&cs), 1, order)?;
    finish(query, dim, None, cs.len() as u64, order, started)
}

pub fn compute_b_wreath(p: u64, n: usize, k: u32) -> Result<DimensionReport> {
    compute_b_wreath_at(p, n, k, None)
}

pub fn compute_b_wreath_at(
    p: u64,
    n: usize,
    k: u32,
    truncation: Option<usize>,
) -> Result<DimensionReport> {
    let query = SpanQuery::brauer(p, n, k);
    query.validate()?;
    let started = Instant::now();
    let order = truncation.unwrap_or_else(|| sym_truncation(n, k));
    let mut cs = Vec::new();
    for c in class_iter(n, k) {
        if is_p_regular(&c, p)? {
            cs.push(c);
        }
    }
    let dim = sym_rank(&sym_family(&cs), k, order)?;
    finish(query, dim, None, cs.len() as u64, order, started)
}

/// Dispatches a query; `p` with `k = 1` goes through the X_p family.
pub fn compute(query: &SpanQuery, truncation: Option<usize>) -> Result<DimensionReport> {
    let SpanQuery { kind, n, k, p } = *query;
    match (kind, p) {
        (CharKind::Ext, None) => compute_e_at(n, k, truncation),
        (CharKind::Sym, None) => compute_d_at(n, k, truncation),
        (CharKind::Sym, Some(p)) if k == 1 => compute_b_at(p, n, truncation),
        (CharKind::Sym, Some(p)) => compute_b_wreath_at(p, n, k, truncation),
        (CharKind::Ext, Some(_)) => {
            query.validate()?;
            unreachable!("validation rejects exterior Brauer queries")
        }
    }
}

/// {f_λ(x) / (1 - ζ^r x) : 0 ≤ r < k, λ ∈ W_{n-1}}.
pub fn y_family(n: usize, k: u32) -> Result<Vec<RationalFunction>> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidInput("n and k must be >= 1".into()));
    }
    let mut out = Vec::new();
    for lambda in &w_set(n - 1).members {
        let base = sym_gf(&ClassLabel::from_parts(
            k,
            lambda.parts(),
            &vec![0; lambda.len()],
        )?);
        for r in 0..k {
            out.push(base.clone().with_factor(Binomial::new(k, 1, r, false)));
        }
    }
    Ok(out)
}

/// {f_λ(x) : λ ∈ A_{p,n}}.
pub fn a_family(p: u64, n: usize) -> Result<Vec<RationalFunction>> {
    a_set(p, n)?
        .members
        .iter()
        .map(|l| {
            Ok(sym_gf(&ClassLabel::from_parts(
                1,
                l.parts(),
                &vec![0; l.len()],
            )?))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRank {
    pub rank: usize,
    pub expected: usize,
    pub equal: bool,
}

/// Exact rank of the family's coefficients `0..=order`, against its size.
pub fn verify_family_independent(family: &[RationalFunction], order: usize) -> Result<FamilyRank> {
    let Some(first) = family.first() else {
        return Err(Error::InvalidInput("empty family".into()));
    };
    let k = first.conductor();
    if let Some(f) = family.iter().find(|f| f.conductor() != k) {
        return Err(Error::MixedConductors {
            expected: k,
            found: f.conductor(),
        });
    }
    let rank = sym_rank(family, k, order)?;
    Ok(FamilyRank {
        rank,
        expected: family.len(),
        equal: rank == family.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::w_count;

    #[test]
    fn d_examples() {
        assert_eq!(compute_d(1, 3).unwrap().dimension, 3);
        assert_eq!(compute_d(2, 1).unwrap().dimension, 2);
        let r = compute_d(2, 2).unwrap();
        assert_eq!(r.dimension, 4);
        assert_eq!(r.num_classes, 5);
        assert_eq!(r.truncation, 4);
        assert!(r.bound("ub_D").unwrap().satisfied);
    }

    #[test]
    fn e_examples() {
        let r = compute_e(5, 2).unwrap();
        assert_eq!(r.dimension, 6);
        assert_eq!(r.ext_paper_dimension, Some(6));
        assert_eq!(compute_e(3, 1).unwrap().dimension, 3);
        let r = compute_e(2, 2).unwrap();
        assert_eq!(r.dimension, 3);
        assert_eq!(r.num_classes, 5);
    }

    #[test]
    fn b_examples() {
        assert_eq!(compute_b(2, 2).unwrap().dimension, 1);
        assert_eq!(compute_b(3, 3).unwrap().dimension, 2);
        let r = compute_b(2, 4).unwrap();
        assert_eq!(r.dimension, 2);
        assert_eq!(r.num_classes, 2);
    }

    #[test]
    fn b_wreath_examples() {
        assert_eq!(compute_b_wreath(2, 2, 2).unwrap().dimension, 1);
        assert_eq!(compute_b_wreath(3, 2, 3).unwrap().dimension, 2);
        for p in [2, 3, 5] {
            for n in 1..=5 {
                assert_eq!(
                    compute_b_wreath(p, n, 1).unwrap().dimension,
                    compute_b(p, n).unwrap().dimension
                );
            }
        }
    }

    #[test]
    fn dispatch_and_subsets() {
        for n in 1..=4 {
            let d = compute(&SpanQuery::sym(n, 2), None).unwrap().dimension;
            let b = compute(&SpanQuery::brauer(3, n, 2), None)
                .unwrap()
                .dimension;
            assert!(1 <= b && b <= d);
            let d1 = compute_d(n, 1).unwrap().dimension;
            assert!(
                compute(&SpanQuery::brauer(2, n, 1), None)
                    .unwrap()
                    .dimension
                    <= d1
            );
        }
    }

    #[test]
    fn families() {
        for n in 1..=6 {
            let y = y_family(n, 1).unwrap();
            let r = verify_family_independent(&y, sym_truncation(n, 1)).unwrap();
            assert!(r.equal, "n={n}");
        }
        // f_(1³)/(1+x) = f_(2,1)/(1-x) = 1/((1-x)³(1+x)), so Y is dependent for k = 2
        let y = y_family(4, 2).unwrap();
        assert_eq!(y[2].expand(12), y[5].expand(12));
        let r = verify_family_independent(&y, sym_truncation(4, 2)).unwrap();
        assert_eq!((r.rank, r.expected, r.equal), (5, 6, false));
        assert_eq!(r.expected, 2 * w_count(3));
        let y = y_family(3, 3).unwrap();
        assert_eq!(
            verify_family_independent(&y, sym_truncation(3, 3))
                .unwrap()
                .rank,
            4
        );
        let a = a_family(3, 4).unwrap();
        let r = verify_family_independent(&a, sym_truncation(4, 1)).unwrap();
        assert_eq!((r.rank, r.equal), (4, true));
        let single = &a[..1];
        assert_eq!(verify_family_independent(single, 3).unwrap().rank, 1);
        assert!(verify_family_independent(&[], 3).is_err());
    }

    #[test]
    fn truncation_override_is_stable() {
        let base = compute_d(3, 2).unwrap();
        let wide = compute_d_at(3, 2, Some(base.truncation + 3)).unwrap();
        assert_eq!(base.dimension, wide.dimension);
        assert_eq!(wide.truncation, base.truncation + 3);
    }

    #[test]
    fn violations_fail_loudly() {
        // truncating below the faithful order collapses the span
        match compute_d_at(3, 1, Some(0)) {
            Err(Error::BoundViolated { report, .. }) => assert_eq!(report.dimension, 1),
            other => panic!("expected a violation, got {other:?}"),
        }
    }

    #[test]
    fn rejects_invalid() {
        assert!(compute_b(4, 3).is_err());
        assert!(compute_d(0, 1).is_err());
        assert!(compute(
            &SpanQuery {
                p: Some(2),
                ..SpanQuery::ext(2, 2)
            },
            None
        )
        .is_err());
    }
}
