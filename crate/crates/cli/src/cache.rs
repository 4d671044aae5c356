//! Line-delimited JSON cache of dimension reports.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use anyhow::{Context, Result};
use wreathspan::character::CharKind;
use wreathspan::span::DimensionReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub kind: CharKind,
    pub n: usize,
    pub k: u32,
    pub p: Option<u64>,
    pub truncation: usize,
}

impl CacheKey {
    pub fn of(report: &DimensionReport) -> Self {
        let q = report.query;
        CacheKey {
            kind: q.kind,
            n: q.n,
            k: q.k,
            p: q.p,
            truncation: report.truncation,
        }
    }
}

pub struct Cache {
    path: PathBuf,
    entries: Mutex<HashMap<CacheKey, DimensionReport>>,
}

impl Cache {
    /// Loads every parseable line; corrupt lines are skipped with a warning.
    pub fn open(path: &Path) -> Result<Self> {
        let mut entries = HashMap::new();
        if path.exists() {
            let file =
                File::open(path).with_context(|| format!("opening cache {}", path.display()))?;
            for (i, line) in BufReader::new(file).lines().enumerate() {
                let line = line.with_context(|| format!("reading cache {}", path.display()))?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<DimensionReport>(&line) {
                    Ok(r) if r.query.validate().is_ok() => {
                        entries.insert(CacheKey::of(&r), r);
                    }
                    Ok(_) => log::warn!(
                        "{}:{}: skipping invalid cached query",
                        path.display(),
                        i + 1
                    ),
                    Err(e) => log::warn!(
                        "{}:{}: skipping corrupt cache line: {e}",
                        path.display(),
                        i + 1
                    ),
                }
            }
        }
        Ok(Cache {
            path: path.to_path_buf(),
            entries: Mutex::new(entries),
        })
    }

    pub fn get(&self, key: &CacheKey) -> Option<DimensionReport> {
        self.entries.lock().unwrap().get(key).cloned()
    }

    pub fn insert(&self, report: &DimensionReport) -> Result<()> {
        let mut entries = self.entries.lock().unwrap();
        let key = CacheKey::of(report);
        if entries.contains_key(&key) {
            return Ok(());
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .with_context(|| format!("opening cache {}", self.path.display()))?;
        writeln!(file, "{}", serde_json::to_string(report)?)?;
        entries.insert(key, report.clone());
        Ok(())
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wreathspan::span::compute_d;

    #[test]
    fn round_trip_and_corrupt_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let report = compute_d(2, 2).unwrap();
        {
            let cache = Cache::open(&path).unwrap();
            cache.insert(&report).unwrap();
            cache.insert(&report).unwrap();
        }
        let mut text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 1);
        text.push_str("{not json\n{\"kind\":\"sym\"}\n");
        std::fs::write(&path, text).unwrap();

        let cache = Cache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.get(&CacheKey::of(&report)), Some(report));
    }
}
