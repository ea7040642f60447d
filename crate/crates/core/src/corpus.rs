//! Building simulation datasets from directories of file pairs.
//!
//! A corpus root holds one directory per change with an `old.*` and a
//! `new.*` file, or a JSON-lines manifest of explicit pairs:
//!
//! ```text
//! {"id": "case-01", "old": "a/Foo.java", "new": "b/Foo.java"}
//! ```
//!
//! Manifest paths are relative to the manifest's directory.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::histogram::histogram_diff;
use crate::model::LinePair;
use crate::report::{mean, quantile};
use crate::search::SimCase;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("manifest line {line}: {message}")]
    Manifest { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EntryStats {
    pub n: usize,
    pub m: usize,
    /// Deleted plus added lines in the plain shortest diff.
    pub changed_lines: usize,
    pub initial_distance: usize,
    /// The histogram diff differs from the plain shortest diff.
    pub diverges: bool,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub old_path: PathBuf,
    pub new_path: PathBuf,
    pub stats: EntryStats,
    pub case: SimCase,
}

impl CorpusEntry {
    /// Loads both files, strips blank lines when asked and computes the
    /// entry's statistics with the histogram diff as target.
    pub fn load(id: String, old_path: PathBuf, new_path: PathBuf, strip_blank: bool) -> Result<Self, String> {
        let read = |p: &Path| fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()));
        let pair = LinePair::from_texts(&read(&old_path)?, &read(&new_path)?, strip_blank);
        Ok(Self::from_pair(id, old_path, new_path, pair))
    }

    pub fn from_pair(id: String, old_path: PathBuf, new_path: PathBuf, pair: LinePair) -> Self {
        let target = histogram_diff(&pair);
        let case = SimCase::new(id.clone(), pair, target).expect("histogram diffs are valid");
        let stats = EntryStats {
            n: case.pair.n(),
            m: case.pair.m(),
            changed_lines: case.initial_diff().changed_lines(),
            initial_distance: case.initial_distance(),
            diverges: !case.is_trivial(),
        };
        Self {
            id,
            old_path,
            new_path,
            stats,
            case,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub id: String,
    pub reason: String,
}

#[derive(Debug, Default)]
pub struct Ingested {
    /// Sorted by id.
    pub entries: Vec<CorpusEntry>,
    pub skipped: Vec<Skipped>,
}

/// Reads every `<root>/<case>/old.*` + `new.*` pair, or the manifest when
/// `root` is a file. Unreadable pairs are skipped, never fatal.
pub fn ingest(root: &Path, strip_blank: bool) -> Result<Ingested, CorpusError> {
    if root.is_file() {
        return ingest_manifest(root, strip_blank);
    }
    let io = |source| CorpusError::Io {
        path: root.to_path_buf(),
        source,
    };
    let mut pairs = Vec::new();
    let mut skipped = Vec::new();
    for dir in fs::read_dir(root).map_err(io)? {
        let dir = dir.map_err(io)?.path();
        if !dir.is_dir() {
            continue;
        }
        let id = dir.file_name().unwrap_or_default().to_string_lossy().into_owned();
        match find_pair(&dir) {
            Ok((old, new)) => pairs.push((id, old, new)),
            Err(reason) => skipped.push(Skipped { id, reason }),
        }
    }
    Ok(load_all(pairs, skipped, strip_blank))
}

#[derive(Deserialize)]
struct ManifestLine {
    id: String,
    old: PathBuf,
    new: PathBuf,
}

pub fn ingest_manifest(manifest: &Path, strip_blank: bool) -> Result<Ingested, CorpusError> {
    let text = fs::read_to_string(manifest).map_err(|source| CorpusError::Io {
        path: manifest.to_path_buf(),
        source,
    })?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    let mut pairs = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let entry: ManifestLine = serde_json::from_str(line).map_err(|e| CorpusError::Manifest {
            line: k + 1,
            message: e.to_string(),
        })?;
        pairs.push((entry.id, base.join(entry.old), base.join(entry.new)));
    }
    Ok(load_all(pairs, Vec::new(), strip_blank))
}

fn find_pair(dir: &Path) -> Result<(PathBuf, PathBuf), String> {
    let mut old = None;
    let mut new = None;
    let files = fs::read_dir(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    for file in files.flatten() {
        let path = file.path();
        match path.file_stem().and_then(|s| s.to_str()) {
            Some("old") => old = Some(path),
            Some("new") => new = Some(path),
            _ => {}
        }
    }
    match (old, new) {
        (Some(old), Some(new)) => Ok((old, new)),
        (None, _) => Err("missing old.* file".to_string()),
        (_, None) => Err("missing new.* file".to_string()),
    }
}

fn load_all(pairs: Vec<(String, PathBuf, PathBuf)>, mut skipped: Vec<Skipped>, strip_blank: bool) -> Ingested {
    let loaded: Vec<Result<CorpusEntry, Skipped>> = pairs
        .into_par_iter()
        .map(|(id, old, new)| {
            CorpusEntry::load(id.clone(), old, new, strip_blank).map_err(|reason| Skipped { id, reason })
        })
        .collect();
    let mut entries = Vec::new();
    for result in loaded {
        match result {
            Ok(entry) => entries.push(entry),
            Err(skip) => {
                log::warn!("skipping {}: {}", skip.id, skip.reason);
                skipped.push(skip);
            }
        }
    }
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    skipped.sort_by(|a, b| a.id.cmp(&b.id));
    Ingested { entries, skipped }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterConfig {
    pub max_loc: usize,
    pub max_candidates: usize,
    /// Entry ids excluded by hand.
    pub exclude: BTreeSet<String>,
}

impl Default for FilterConfig {
    fn default() -> Self {
        Self {
            max_loc: crate::MAX_LINES,
            max_candidates: 30,
            exclude: BTreeSet::new(),
        }
    }
}

impl FilterConfig {
    /// Reads an exclusion list: one id per line, `#` starts a comment.
    pub fn read_exclusions(path: &Path) -> Result<BTreeSet<String>, CorpusError> {
        let text = fs::read_to_string(path).map_err(|source| CorpusError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect())
    }

    pub fn keeps(&self, entry: &CorpusEntry) -> bool {
        let s = &entry.stats;
        s.n <= self.max_loc
            && s.m <= self.max_loc
            && s.initial_distance >= 1
            && s.initial_distance <= self.max_candidates
            && s.diverges
            && !self.exclude.contains(&entry.id)
    }
}

/// Entries within the size and candidate bounds whose histogram diff differs
/// from the plain shortest diff.
pub fn filter(entries: Vec<CorpusEntry>, config: &FilterConfig) -> Vec<CorpusEntry> {
    entries.into_iter().filter(|e| config.keeps(e)).collect()
}

/// Min, quartiles, max and mean of one attribute.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SixStats {
    pub min: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    pub max: f64,
    pub average: f64,
}

impl SixStats {
    pub fn of(values: &[usize]) -> Option<Self> {
        let mut sorted: Vec<f64> = values.iter().map(|&v| v as f64).collect();
        sorted.sort_by(f64::total_cmp);
        Some(Self {
            min: *sorted.first()?,
            q1: quantile(&sorted, 0.25)?,
            q2: quantile(&sorted, 0.5)?,
            q3: quantile(&sorted, 0.75)?,
            max: *sorted.last()?,
            average: mean(&sorted)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub attribute: &'static str,
    pub stats: Option<SixStats>,
}

/// Dataset attributes: LOC per version, changed lines, initial distance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub rows: Vec<SummaryRow>,
}

pub fn summarize(entries: &[CorpusEntry]) -> Summary {
    let column = |pick: fn(&EntryStats) -> usize| -> Vec<usize> { entries.iter().map(|e| pick(&e.stats)).collect() };
    let rows = [
        ("LOC in the old version", column(|s| s.n)),
        ("LOC in the new version", column(|s| s.m)),
        ("# changed lines", column(|s| s.changed_lines)),
        ("initial similarity distance", column(|s| s.initial_distance)),
    ]
    .into_iter()
    .map(|(attribute, values)| SummaryRow {
        attribute,
        stats: SixStats::of(&values),
    })
    .collect();
    Summary { rows }
}

const HEADERS: [&str; 6] = ["Min", "Q1", "Q2", "Q3", "Max", "Average"];

fn cells(stats: Option<SixStats>) -> Vec<String> {
    match stats {
        Some(s) => [s.min, s.q1, s.q2, s.q3, s.max]
            .iter()
            .map(|v| format_number(*v))
            .chain([format!("{:.2}", s.average)])
            .collect(),
        None => vec!["N/A".to_string(); 6],
    }
}

fn format_number(v: f64) -> String {
    if v.fract() == 0.0 {
        format!("{v:.0}")
    } else {
        format!("{v:.2}")
    }
}

impl Summary {
    /// Aligned plain-text table.
    pub fn render_text(&self) -> String {
        let label_width = self.rows.iter().map(|r| r.attribute.len()).max().unwrap_or(0);
        let body: Vec<Vec<String>> = self.rows.iter().map(|r| cells(r.stats)).collect();
        let widths: Vec<usize> = (0..HEADERS.len())
            .map(|c| {
                body.iter()
                    .map(|row| row[c].len())
                    .chain([HEADERS[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        let _ = write!(out, "{:label_width$}", "");
        for (h, w) in HEADERS.iter().zip(&widths) {
            let _ = write!(out, "  {h:>w$}");
        }
        out.push('\n');
        for (row, values) in self.rows.iter().zip(&body) {
            let _ = write!(out, "{:label_width$}", row.attribute);
            for (v, w) in values.iter().zip(&widths) {
                let _ = write!(out, "  {v:>w$}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = csv::Writer::from_writer(Vec::new());
        out.write_record(["attribute"].iter().chain(HEADERS.iter()))
            .expect("in-memory write");
        for row in &self.rows {
            let mut record = vec![row.attribute.to_string()];
            record.extend(match row.stats {
                Some(s) => [s.min, s.q1, s.q2, s.q3, s.max, s.average]
                    .iter()
                    .map(f64::to_string)
                    .collect(),
                None => vec!["N/A".to_string(); 6],
            });
            out.write_record(&record).expect("in-memory write");
        }
        String::from_utf8(out.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }
}
