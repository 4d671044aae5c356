//! Runs every acceptance criterion and prints one pass/fail line per
//! criterion. Criteria 1-10 run in-process; criterion 11 drives the binary.
//!
//! Criterion 3 requires the Y family to have rank k|W_{n-1}|, which is false
//! for k >= 2, n >= 3 (two members coincide already at n = 4, k = 2). It is
//! reported as FAIL. The test asserts that it fails for exactly that reason
//! and that criterion 11 fails only through it, so any other regression still
//! breaks the build.

use std::path::Path;
use std::process::{Command, Output};

use wreathspan::combinatorics::w_count;
use wreathspan::span::{compute_d, sym_truncation, verify_family_independent, y_family};
use wreathspan::verify::{criteria, Y_RANK_FAILURE};

const BIN: &str = env!("CARGO_BIN_EXE_wreathspan");

struct Line {
    number: u32,
    passed: bool,
    detail: String,
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("WREATHSPAN_CACHE")
        .output()
        .expect("binary runs")
}

fn without_timing_json(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes)
        .lines()
        .filter(|l| !l.trim_start().starts_with("\"elapsed_ms\""))
        .collect::<Vec<_>>()
        .join("\n")
}

fn without_timing_csv(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes)
        .lines()
        .map(|l| l.rsplit_once(',').map_or(l, |(head, _)| head))
        .collect::<Vec<_>>()
        .join("\n")
}

/// (sub-check, passed, note)
fn criterion_11(dir: &Path) -> Vec<(&'static str, bool, String)> {
    let mut parts = Vec::new();

    let full = run(&["verify"]);
    let text = String::from_utf8_lossy(&full.stdout);
    let failing: Vec<String> = text
        .lines()
        .filter(|l| l.starts_with("[FAIL]"))
        .map(|l| l.split_whitespace().nth(1).unwrap_or("?").to_string())
        .collect();
    parts.push((
        "verify-exit-0",
        full.status.code() == Some(0),
        format!(
            "exit {:?}, failing criteria {failing:?}",
            full.status.code()
        ),
    ));

    let sweep = |workers: &str, format: &str| {
        run(&[
            "sweep",
            "sym",
            "--n",
            "1..5",
            "--k",
            "1..2",
            "--workers",
            workers,
            "--format",
            format,
        ])
    };
    let (a, b) = (sweep("1", "json"), sweep("4", "json"));
    let json_same =
        a.status.success() && without_timing_json(&a.stdout) == without_timing_json(&b.stdout);
    let (a, b) = (sweep("1", "csv"), sweep("3", "csv"));
    let csv_same =
        a.status.success() && without_timing_csv(&a.stdout) == without_timing_csv(&b.stdout);
    let rows = String::from_utf8_lossy(&a.stdout).lines().count() - 1;
    parts.push((
        "sweep-deterministic",
        json_same && csv_same && rows == 10,
        format!("json identical {json_same}, csv identical {csv_same}, {rows} rows"),
    ));

    let cache = dir.join("cache.jsonl");
    let cache = cache.to_str().unwrap();
    let query = ["dims", "brauer", "--p", "3", "--n", "7", "--format", "json"];
    let fresh = run(&[&query[..], &["--no-cache"]].concat());
    let first = run(&[&query[..], &["--cache", cache]].concat());
    let cached = run(&[&query[..], &["--cache", cache]].concat());
    let lines = std::fs::read_to_string(cache)
        .map(|s| s.lines().count())
        .unwrap_or(0);
    let same = [&first, &cached].iter().all(|o| {
        o.status.success() && without_timing_json(&o.stdout) == without_timing_json(&fresh.stdout)
    });
    parts.push((
        "cache-identical",
        same && lines == 1,
        format!("identical {same}, {lines} cache line(s)"),
    ));

    let usage = run(&["dims", "sym", "--n", "0"]);
    let violation = run(&["dims", "sym", "--n", "3", "--truncation", "0"]);
    parts.push((
        "exit-codes",
        usage.status.code() == Some(1) && violation.status.code() == Some(2),
        format!(
            "usage {:?}, violation {:?}",
            usage.status.code(),
            violation.status.code()
        ),
    ));
    parts
}

#[test]
fn acceptance() {
    let mut lines: Vec<Line> = criteria()
        .iter()
        .map(|c| {
            let o = c.run();
            Line {
                number: o.number,
                passed: o.passed,
                detail: format!("[{}] {} ({} ms)", o.id, o.detail, o.elapsed_ms),
            }
        })
        .collect();

    let dir = tempfile::tempdir().unwrap();
    let parts = criterion_11(dir.path());
    lines.push(Line {
        number: 11,
        passed: parts.iter().all(|p| p.1),
        detail: format!(
            "[cli] {}",
            parts
                .iter()
                .map(|(name, ok, note)| format!(
                    "{name} {}: {note}",
                    if *ok { "ok" } else { "FAILED" }
                ))
                .collect::<Vec<_>>()
                .join("; ")
        ),
    });

    for l in &lines {
        println!(
            "criterion {:>2}: {}  {}",
            l.number,
            if l.passed { "PASS" } else { "FAIL" },
            l.detail
        );
    }

    for l in lines.iter().filter(|l| !l.passed) {
        match l.number {
            3 => {
                // every failure line is a Y-family rank deficit; the sandwich itself holds
                let failures = l.detail.split(": ").skip(1).collect::<Vec<_>>().join(": ");
                for f in failures.split("; ") {
                    let f = f.split(" (+").next().unwrap();
                    assert!(
                        f.starts_with(Y_RANK_FAILURE),
                        "unexpected criterion 3 failure: {f}"
                    );
                }
                for n in 2..=6 {
                    for k in 1..=3u32 {
                        let r = compute_d(n, k).expect("sandwich bounds hold");
                        assert!(k as usize * w_count(n - 1) <= r.dimension);
                        let y = verify_family_independent(
                            &y_family(n, k).unwrap(),
                            sym_truncation(n, k),
                        )
                        .unwrap();
                        assert_eq!(y.equal, k == 1 || n == 2, "Y family at n={n}, k={k}");
                    }
                }
            }
            11 => {
                for (name, ok, note) in &parts {
                    if *name == "verify-exit-0" {
                        assert!(
                            note.ends_with("[\"3\"]"),
                            "verify failed beyond criterion 3: {note}"
                        );
                    } else {
                        assert!(ok, "{name}: {note}");
                    }
                }
            }
            n => panic!("criterion {n} failed: {}", l.detail),
        }
    }
}
