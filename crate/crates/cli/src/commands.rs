use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use wreathspan::algebra::CycloNumber;
use wreathspan::character::{
    brute_force_ext_trace, brute_force_sym_trace, char_values, ext_gf_paper, ext_gf_true,
    ext_gf_with, sym_gf, CharKind, ExtConvention, EXT_ORACLE_MAX_N, SYM_ORACLE_MAX_N,
    SYM_ORACLE_MAX_R,
};
use wreathspan::combinatorics::{class_representative, classes, ClassLabel};
use wreathspan::span::{compute, sym_truncation, DimensionReport, SpanQuery};
use wreathspan::verify::{criteria, criterion, Criterion, CriterionOutcome};
use wreathspan::Error;

use crate::args::{Common, DimsArgs, GfArgs, GfKind, KindArg, OracleArgs, SweepArgs, VerifyArgs};
use crate::cache::{Cache, CacheKey};
use crate::output::{render_report, render_reports, Format};

/// How a successful invocation ended; usage errors surface as `Err`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    /// A bound, criterion or oracle comparison failed.
    CheckFailed,
}

pub struct Output {
    pub stdout: String,
    pub outcome: Outcome,
}

/// Desk-scale caps; `None` when the query is within them.
pub fn cap_violation(q: &SpanQuery) -> Option<String> {
    let SpanQuery { kind, n, k, p } = *q;
    match (kind, p) {
        (CharKind::Ext, _) if n > 12 || k > 6 => {
            Some("exterior spans are capped at n <= 12, k <= 6".into())
        }
        (CharKind::Ext, _) => None,
        (CharKind::Sym, Some(_)) if k == 1 => {
            (n > 14).then(|| "Brauer spans with k = 1 are capped at n <= 14".into())
        }
        (CharKind::Sym, _) if k <= 2 => {
            (n > 8).then(|| "symmetric spans with k <= 2 are capped at n <= 8".into())
        }
        (CharKind::Sym, _) if k <= 4 => {
            (n > 6).then(|| "symmetric spans with k <= 4 are capped at n <= 6".into())
        }
        (CharKind::Sym, _) => {
            (n > 3).then(|| "symmetric spans with k >= 5 are capped at n <= 3".into())
        }
    }
}

fn query_for(kind: KindArg, n: usize, k: u32, p: Option<u64>) -> Result<SpanQuery> {
    let q = match (kind, p) {
        (KindArg::Brauer, None) => bail!("kind `brauer` requires --p"),
        (KindArg::Ext, Some(_)) => bail!("exterior-power Brauer spans are not supported"),
        (KindArg::Ext, None) => SpanQuery::ext(n, k),
        (_, None) => SpanQuery::sym(n, k),
        (_, Some(p)) => SpanQuery::brauer(p, n, k),
    };
    q.validate()?;
    Ok(q)
}

fn open_cache(common: &Common) -> Result<Option<Cache>> {
    match (&common.cache, common.no_cache) {
        (Some(path), false) => Ok(Some(Cache::open(path)?)),
        _ => Ok(None),
    }
}

/// The report, and whether it violates a bound.
pub fn run_query(
    q: &SpanQuery,
    truncation: Option<usize>,
    cache: Option<&Cache>,
) -> Result<(DimensionReport, bool)> {
    let key = CacheKey {
        kind: q.kind,
        n: q.n,
        k: q.k,
        p: q.p,
        truncation: truncation.unwrap_or_else(|| q.default_truncation()),
    };
    if let Some(hit) = cache.and_then(|c| c.get(&key)) {
        log::debug!("cache hit for {key:?}");
        return Ok((hit, false));
    }
    match compute(q, truncation) {
        Ok(report) => {
            if let Some(c) = cache {
                c.insert(&report)?;
            }
            Ok((report, false))
        }
        Err(Error::BoundViolated { bound, report }) => {
            log::error!("bound `{bound}` violated for {q:?}");
            Ok((*report, true))
        }
        Err(e) => Err(e.into()),
    }
}

pub fn dims(args: &DimsArgs) -> Result<Output> {
    let q = query_for(args.kind, args.n, args.k, args.p)?;
    if let (Some(msg), false) = (cap_violation(&q), args.common.allow_large) {
        bail!("{msg} (pass --allow-large to override)");
    }
    let cache = open_cache(&args.common)?;
    let (report, violated) = run_query(&q, args.common.truncation, cache.as_ref())?;
    Ok(Output {
        stdout: render_report(&report, args.common.format)?,
        outcome: if violated {
            Outcome::CheckFailed
        } else {
            Outcome::Ok
        },
    })
}

/// Queries in (n, k, p) order.
pub fn sweep_queries(args: &SweepArgs) -> Result<Vec<SpanQuery>> {
    let ps: Vec<Option<u64>> = match &args.p {
        Some(r) => r.0.iter().map(|&p| Some(p)).collect(),
        None => vec![None],
    };
    let mut qs = Vec::new();
    for &n in &args.n.0 {
        for &k in &args.k.0 {
            for &p in &ps {
                let q = query_for(args.kind, n as usize, u32::try_from(k)?, p)?;
                if let (Some(msg), false) = (cap_violation(&q), args.common.allow_large) {
                    bail!("{msg}; refusing n={n} k={k} (pass --allow-large to override)");
                }
                qs.push(q);
            }
        }
    }
    Ok(qs)
}

pub fn run_sweep(
    qs: &[SpanQuery],
    truncation: Option<usize>,
    cache: Option<&Cache>,
    workers: Option<usize>,
) -> Result<Vec<(DimensionReport, bool)>> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        pool = pool.num_threads(w.max(1));
    }
    let pool = pool.build()?;
    pool.install(|| {
        qs.par_iter()
            .map(|q| run_query(q, truncation, cache))
            .collect()
    })
}

pub fn sweep(args: &SweepArgs) -> Result<Output> {
    let qs = sweep_queries(args)?;
    let cache = open_cache(&args.common)?;
    let rows = run_sweep(&qs, args.common.truncation, cache.as_ref(), args.workers)?;
    let violated = rows.iter().any(|(_, v)| *v);
    let reports: Vec<DimensionReport> = rows.into_iter().map(|(r, _)| r).collect();
    Ok(Output {
        stdout: render_reports(&reports, args.common.format)?,
        outcome: if violated {
            Outcome::CheckFailed
        } else {
            Outcome::Ok
        },
    })
}

/// Sweep determinism and cache fidelity, checked in-process.
pub fn cli_contract() -> CriterionOutcome {
    let started = Instant::now();
    let result = (|| -> Result<String> {
        let qs: Vec<SpanQuery> = (1..=4)
            .flat_map(|n| {
                [
                    SpanQuery::sym(n, 2),
                    SpanQuery::ext(n, 3),
                    SpanQuery::brauer(2, n, 1),
                ]
            })
            .collect();
        let strip = |rows: Vec<(DimensionReport, bool)>| -> Vec<DimensionReport> {
            rows.into_iter().map(|(r, _)| r.without_timing()).collect()
        };
        let a = strip(run_sweep(&qs, None, None, Some(1))?);
        let b = strip(run_sweep(&qs, None, None, Some(4))?);
        for format in [Format::Json, Format::Csv, Format::Text] {
            if render_reports(&a, format)? != render_reports(&b, format)? {
                bail!("{format:?} sweep output differs between runs");
            }
        }
        let dir = std::env::temp_dir().join(format!("wreathspan-contract-{}", std::process::id()));
        std::fs::create_dir_all(&dir)?;
        let path = dir.join("cache.jsonl");
        let _ = std::fs::remove_file(&path);
        let cached = check_cache(&path, &qs, &a);
        let _ = std::fs::remove_dir_all(&dir);
        cached?;
        Ok(format!("{} sweep rows byte-identical across runs and worker counts; cache round trip identical", qs.len()))
    })();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(e) => (false, e.to_string()),
    };
    CriterionOutcome {
        number: 11,
        id: "cli",
        title: "sweep determinism and cache fidelity",
        passed,
        detail,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

fn check_cache(path: &Path, qs: &[SpanQuery], fresh: &[DimensionReport]) -> Result<()> {
    let first = Cache::open(path)?;
    run_sweep(qs, None, Some(&first), Some(2))?;
    let reopened = Cache::open(path)?;
    let from_cache: Vec<DimensionReport> = run_sweep(qs, None, Some(&reopened), Some(2))?
        .into_iter()
        .map(|(r, _)| r.without_timing())
        .collect();
    if from_cache != fresh {
        bail!("cached reports differ from fresh ones");
    }
    Ok(())
}

fn selected(only: &[String]) -> Result<(Vec<&'static Criterion>, bool)> {
    if only.is_empty() {
        return Ok((criteria().iter().collect(), true));
    }
    let mut out = Vec::new();
    let mut cli = false;
    for id in only {
        if id == "cli" || id == "11" {
            cli = true;
        } else {
            out.push(criterion(id).ok_or_else(|| anyhow!("unknown criterion `{id}`"))?);
        }
    }
    Ok((out, cli))
}

pub fn verify(args: &VerifyArgs) -> Result<Output> {
    if args.list {
        let mut s = String::new();
        for c in criteria() {
            let _ = writeln!(s, "{:>2}  {:<14} {}", c.number, c.id, c.title);
        }
        let _ = writeln!(s, "11  {:<14} sweep determinism and cache fidelity", "cli");
        return Ok(Output {
            stdout: s,
            outcome: Outcome::Ok,
        });
    }
    let (chosen, with_cli) = selected(&args.only)?;
    let mut outcomes: Vec<CriterionOutcome> = chosen
        .iter()
        .map(|c| {
            let o = c.run();
            log::info!(
                "criterion {} ({}) {}",
                o.number,
                o.id,
                if o.passed { "passed" } else { "failed" }
            );
            o
        })
        .collect();
    if with_cli {
        outcomes.push(cli_contract());
    }
    let all = outcomes.iter().all(|o| o.passed);
    let stdout = match args.format {
        Format::Json => serde_json::to_string_pretty(&outcomes)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["number", "id", "passed", "elapsed_ms", "detail"])?;
            for o in &outcomes {
                w.write_record([
                    o.number.to_string(),
                    o.id.to_string(),
                    o.passed.to_string(),
                    o.elapsed_ms.to_string(),
                    o.detail.clone(),
                ])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => {
            let mut s = String::new();
            for o in &outcomes {
                let tag = if o.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "[{tag}] {:>2} {:<14} {} ({} ms)",
                    o.number, o.id, o.title, o.elapsed_ms
                );
                let _ = writeln!(s, "       {}", o.detail);
            }
            let passed = outcomes.iter().filter(|o| o.passed).count();
            let _ = writeln!(s, "{passed}/{} criteria passed", outcomes.len());
            s
        }
    };
    Ok(Output {
        stdout,
        outcome: if all {
            Outcome::Ok
        } else {
            Outcome::CheckFailed
        },
    })
}

fn gf_class(args: &GfArgs) -> Result<ClassLabel> {
    if let Some(n) = args.identity {
        return Ok(ClassLabel::identity(n, args.k)?);
    }
    let exps = if args.exponents.is_empty() {
        vec![0; args.parts.len()]
    } else {
        args.exponents.clone()
    };
    if exps.len() != args.parts.len() {
        bail!("{} parts but {} exponents", args.parts.len(), exps.len());
    }
    Ok(ClassLabel::from_parts(args.k, &args.parts, &exps)?)
}

fn coefficient_list(cs: &[CycloNumber]) -> Vec<String> {
    cs.iter().map(ToString::to_string).collect()
}

pub fn gf(args: &GfArgs) -> Result<Output> {
    let c = gf_class(args)?;
    let n = c.n();
    let stdout = match args.kind {
        GfKind::Sym => {
            let order = args
                .order
                .unwrap_or_else(|| sym_truncation(n, c.k()).max(10));
            let f = sym_gf(&c);
            let coeffs = coefficient_list(f.expand(order).coeffs());
            match args.format {
                Format::Json => {
                    serde_json::to_string_pretty(&json!({
                        "class": c.to_string(),
                        "k": c.k(),
                        "kind": "sym",
                        "gf": f.to_string(),
                        "coefficients": coeffs,
                    }))? + "\n"
                }
                _ => format!(
                    "class {c} (k = {})\nf(x) = {f}\ncoefficients x^0..x^{order}: {}\n",
                    c.k(),
                    coeffs.join(", ")
                ),
            }
        }
        GfKind::Ext => {
            let order = args.order.unwrap_or(n);
            let t = ext_gf_true(&c);
            let p = ext_gf_paper(&c);
            let (tc, pc) = (
                coefficient_list(&t.coefficients(order)),
                coefficient_list(&p.coefficients(order)),
            );
            match args.format {
                Format::Json => {
                    serde_json::to_string_pretty(&json!({
                        "class": c.to_string(),
                        "k": c.k(),
                        "kind": "ext",
                        "true": { "gf": t.to_string(), "coefficients": tc },
                        "paper": { "gf": p.to_string(), "coefficients": pc },
                    }))? + "\n"
                }
                _ => format!(
                    "class {c} (k = {})\ntrue:  {t}\n       coefficients: {}\npaper: {p}\n       coefficients: {}\n",
                    c.k(),
                    tc.join(", "),
                    pc.join(", ")
                ),
            }
        }
    };
    Ok(Output {
        stdout,
        outcome: Outcome::Ok,
    })
}

#[derive(Serialize)]
struct OracleRow {
    class: String,
    r: usize,
    gf: String,
    oracle: String,
    equal: bool,
}

pub fn oracle_check(args: &OracleArgs) -> Result<Output> {
    let (n, k, r_max) = (args.n, args.k, args.r);
    if n == 0 || k == 0 {
        bail!("n and k must be >= 1");
    }
    if !args.allow_large && (n > 4 || k > 3 || r_max > 6) {
        bail!(
            "oracle checks are capped at n <= 4, k <= 3, r <= 6 (pass --allow-large to override)"
        );
    }
    match args.kind {
        GfKind::Sym if n > SYM_ORACLE_MAX_N || r_max > SYM_ORACLE_MAX_R => {
            bail!("symmetric oracle limited to n <= {SYM_ORACLE_MAX_N}, r <= {SYM_ORACLE_MAX_R}")
        }
        GfKind::Ext if n > EXT_ORACLE_MAX_N => {
            bail!("exterior oracle limited to n <= {EXT_ORACLE_MAX_N}")
        }
        _ => {}
    }
    let convention: ExtConvention = args.convention.into();
    let mut rows = Vec::new();
    for c in classes(n, k) {
        let rep = class_representative(&c);
        let values = match args.kind {
            GfKind::Sym => char_values(&c, CharKind::Sym, r_max).into_coeffs(),
            GfKind::Ext => ext_gf_with(&c, convention).coefficients(r_max),
        };
        for (r, v) in values.into_iter().enumerate() {
            let trace = match args.kind {
                GfKind::Sym => brute_force_sym_trace(&rep, r)?,
                GfKind::Ext if r <= n => brute_force_ext_trace(&rep, r)?,
                GfKind::Ext => CycloNumber::zero(k),
            };
            rows.push(OracleRow {
                class: c.to_string(),
                r,
                equal: v == trace,
                gf: v.to_string(),
                oracle: trace.to_string(),
            });
        }
    }
    let all = rows.iter().all(|r| r.equal);
    let stdout = match args.format {
        Format::Json => serde_json::to_string_pretty(&rows)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &rows {
                w.serialize(row)?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => {
            let mut s = format!(
                "{:<24} {:>2} {:>18} {:>18}  equal\n",
                "class", "r", "gf", "oracle"
            );
            for row in &rows {
                let _ = writeln!(
                    s,
                    "{:<24} {:>2} {:>18} {:>18}  {}",
                    row.class, row.r, row.gf, row.oracle, row.equal
                );
            }
            let equal = rows.iter().filter(|r| r.equal).count();
            let _ = writeln!(s, "{equal}/{} equal", rows.len());
            s
        }
    };
    Ok(Output {
        stdout,
        outcome: if all {
            Outcome::Ok
        } else {
            Outcome::CheckFailed
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps() {
        assert!(cap_violation(&SpanQuery::sym(8, 2)).is_none());
        assert!(cap_violation(&SpanQuery::sym(9, 2))
            .unwrap()
            .contains("n <= 8"));
        assert!(cap_violation(&SpanQuery::sym(7, 3))
            .unwrap()
            .contains("n <= 6"));
        assert!(cap_violation(&SpanQuery::brauer(2, 14, 1)).is_none());
        assert!(cap_violation(&SpanQuery::brauer(2, 15, 1)).is_some());
        assert!(cap_violation(&SpanQuery::brauer(2, 7, 3)).is_some());
        assert!(cap_violation(&SpanQuery::ext(12, 6)).is_none());
        assert!(cap_violation(&SpanQuery::ext(12, 7)).is_some());
        assert!(cap_violation(&SpanQuery::sym(1, 10)).is_none());
    }

    #[test]
    fn kind_mapping() {
        assert!(query_for(KindArg::Brauer, 3, 1, None).is_err());
        assert!(query_for(KindArg::Ext, 3, 1, Some(2)).is_err());
        assert!(query_for(KindArg::Sym, 3, 1, Some(4)).is_err());
        assert_eq!(
            query_for(KindArg::Brauer, 3, 1, Some(2)).unwrap(),
            SpanQuery::brauer(2, 3, 1)
        );
        assert_eq!(
            query_for(KindArg::Sym, 3, 2, Some(3)).unwrap(),
            SpanQuery::brauer(3, 3, 2)
        );
    }

    #[test]
    fn contract_holds() {
        let o = cli_contract();
        assert!(o.passed, "{}", o.detail);
    }
}
