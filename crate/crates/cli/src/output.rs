use std::fmt::Write as _;

use anyhow::Result;
use clap::ValueEnum;
use wreathspan::span::{Bound, DimensionReport};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

fn rational(num: i64, den: i64) -> String {
    if den == 1 {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

fn bound_value(b: &Bound) -> String {
    rational(b.value_num, b.value_den)
}

fn label(r: &DimensionReport) -> String {
    let q = r.query;
    match q.p {
        Some(p) => format!("{} n={} k={} p={p}", q.kind, q.n, q.k),
        None => format!("{} n={} k={}", q.kind, q.n, q.k),
    }
}

pub fn report_text(r: &DimensionReport) -> String {
    let mut s = format!("{}: dimension {}\n", label(r), r.dimension);
    if let Some(d) = r.ext_paper_dimension {
        let _ = writeln!(s, "  paper-convention dimension {d}");
    }
    let _ = writeln!(
        s,
        "  classes {}, truncation {}",
        r.num_classes, r.truncation
    );
    for b in &r.bounds {
        let status = match (b.satisfied, b.informational) {
            (true, false) => "ok",
            (false, false) => "VIOLATED",
            (true, true) => "holds (informational)",
            (false, true) => "fails (informational)",
        };
        let _ = writeln!(s, "  {:<18} {:>16}  {status}", b.name, bound_value(b));
    }
    s
}

/// Bound names in first-appearance order across all rows.
fn bound_columns(reports: &[DimensionReport]) -> Vec<String> {
    let mut names: Vec<String> = Vec::new();
    for b in reports.iter().flat_map(|r| &r.bounds) {
        if !names.contains(&b.name) {
            names.push(b.name.clone());
        }
    }
    names
}

pub fn reports_csv(reports: &[DimensionReport]) -> Result<String> {
    let names = bound_columns(reports);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = [
        "kind",
        "n",
        "k",
        "p",
        "dimension",
        "ext_paper_dimension",
        "num_classes",
        "truncation",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    for name in &names {
        header.push(name.clone());
        header.push(format!("{name}_satisfied"));
    }
    header.push("elapsed_ms".into());
    w.write_record(&header)?;
    let opt = |v: Option<String>| v.unwrap_or_default();
    for r in reports {
        let q = r.query;
        let mut row = vec![
            q.kind.to_string(),
            q.n.to_string(),
            q.k.to_string(),
            opt(q.p.map(|p| p.to_string())),
            r.dimension.to_string(),
            opt(r.ext_paper_dimension.map(|d| d.to_string())),
            r.num_classes.to_string(),
            r.truncation.to_string(),
        ];
        for name in &names {
            let b = r.bound(name);
            row.push(opt(b.map(bound_value)));
            row.push(opt(b.map(|b| b.satisfied.to_string())));
        }
        row.push(r.elapsed_ms.to_string());
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn reports_text(reports: &[DimensionReport]) -> String {
    let mut s = format!(
        "{:<5} {:>3} {:>3} {:>3} {:>9} {:>7} {:>10} {:>8}  bounds\n",
        "kind", "n", "k", "p", "dimension", "classes", "truncation", "ms"
    );
    for r in reports {
        let q = r.query;
        let p = q.p.map(|p| p.to_string()).unwrap_or_else(|| "-".into());
        let bounds: Vec<String> = r
            .bounds
            .iter()
            .map(|b| {
                let mark = if b.satisfied { "" } else { "!" };
                format!("{}={}{mark}", b.name, bound_value(b))
            })
            .collect();
        let _ = writeln!(
            s,
            "{:<5} {:>3} {:>3} {:>3} {:>9} {:>7} {:>10} {:>8}  {}",
            q.kind.to_string(),
            q.n,
            q.k,
            p,
            r.dimension,
            r.num_classes,
            r.truncation,
            r.elapsed_ms,
            bounds.join(" ")
        );
    }
    s
}

pub fn render_reports(reports: &[DimensionReport], format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => reports_text(reports),
        Format::Json => serde_json::to_string_pretty(reports)? + "\n",
        Format::Csv => reports_csv(reports)?,
    })
}

pub fn render_report(r: &DimensionReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => report_text(r),
        Format::Json => serde_json::to_string_pretty(r)? + "\n",
        Format::Csv => reports_csv(std::slice::from_ref(r))?,
    })
}
