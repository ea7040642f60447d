//! Aggregate statistics over simulation results and their CSV/JSON forms.

use std::collections::BTreeMap;
use std::io;

use serde::Serialize;

use crate::search::{CaseStatus, SimResult};

/// Linear-interpolation quantile of already sorted values, `q` in `[0, 1]`.
pub fn quantile(sorted: &[f64], q: f64) -> Option<f64> {
    let last = sorted.len().checked_sub(1)?;
    let pos = q.clamp(0.0, 1.0) * last as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    Some(sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64))
}

pub fn mean(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    Some(values.iter().sum::<f64>() / values.len() as f64)
}

/// Box-plot data with whiskers at the 1st and 99th percentiles.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoxStats {
    pub count: usize,
    pub min: f64,
    pub p1: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub p99: f64,
    pub max: f64,
    pub mean: f64,
}

impl BoxStats {
    pub fn of(values: &[f64]) -> Option<Self> {
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let q = |p| quantile(&sorted, p);
        Some(Self {
            count: sorted.len(),
            min: *sorted.first()?,
            p1: q(0.01)?,
            q1: q(0.25)?,
            median: q(0.5)?,
            q3: q(0.75)?,
            p99: q(0.99)?,
            max: *sorted.last()?,
            mean: mean(&sorted)?,
        })
    }
}

/// Improvement per action for one feedback category.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CategoryStats {
    /// Mean improvement per action across cases.
    pub mean: f64,
    /// Mean over cases of (category improvement / ideal average speed).
    pub ratio_to_ideal: f64,
    /// Share of cases whose improvement is below zero.
    pub negative_share: f64,
    pub distribution: BoxStats,
}

impl CategoryStats {
    /// `pairs` holds (category value, ideal average speed) per case.
    pub fn of(pairs: &[(f64, f64)]) -> Option<Self> {
        let values: Vec<f64> = pairs.iter().map(|p| p.0).collect();
        let ratios: Vec<f64> = pairs.iter().map(|(v, ideal)| v / ideal).collect();
        let negative = values.iter().filter(|v| **v < 0.0).count();
        Some(Self {
            mean: mean(&values)?,
            ratio_to_ideal: mean(&ratios)?,
            negative_share: negative as f64 / values.len() as f64,
            distribution: BoxStats::of(&values)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValueCount {
    pub value: f64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinFeedbackStats {
    pub distribution: BTreeMap<usize, usize>,
    pub mean: f64,
    pub share_one: f64,
    pub share_at_most_three: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeedStats {
    pub distribution: Vec<ValueCount>,
    pub summary: BoxStats,
}

/// Depth-1 improvement by category, next to the ideal average speed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaTable {
    pub ideal: CategoryStats,
    pub best: CategoryStats,
    pub average: CategoryStats,
    pub worst: CategoryStats,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub cases: usize,
    pub solved: usize,
    pub failed: BTreeMap<String, usize>,
    pub min_feedback: Option<MinFeedbackStats>,
    pub average_speed: Option<SpeedStats>,
    pub delta_distance: Option<DeltaTable>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

/// Folds per-case results into distributions and category means. Cases that
/// were not solved only contribute to the failure counts.
pub fn aggregate(results: &[SimResult]) -> Report {
    let mut failed = BTreeMap::new();
    for r in results.iter().filter(|r| r.status != CaseStatus::Solved) {
        *failed.entry(r.status.as_str().to_string()).or_insert(0) += 1;
    }
    let solved: Vec<&SimResult> = results
        .iter()
        .filter(|r| r.status == CaseStatus::Solved && r.average_speed().is_some())
        .collect();

    let counts: Vec<usize> = solved
        .iter()
        .filter_map(|r| r.min_feedback.as_ref().map(|mf| mf.min_feedback))
        .collect();
    let min_feedback = (!counts.is_empty()).then(|| {
        let mut distribution = BTreeMap::new();
        for &c in &counts {
            *distribution.entry(c).or_insert(0) += 1;
        }
        let total = counts.len() as f64;
        MinFeedbackStats {
            distribution,
            mean: counts.iter().sum::<usize>() as f64 / total,
            share_one: counts.iter().filter(|c| **c == 1).count() as f64 / total,
            share_at_most_three: counts.iter().filter(|c| **c <= 3).count() as f64 / total,
        }
    });

    let speeds: Vec<f64> = solved.iter().filter_map(|r| r.average_speed()).collect();
    let average_speed = BoxStats::of(&speeds).map(|summary| {
        let mut by_value: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for r in &solved {
            let (num, den) = r.speed_fraction().expect("solved cases have a speed");
            let g = gcd(num, den);
            *by_value.entry((num / g, den / g)).or_insert(0) += 1;
        }
        let mut distribution: Vec<ValueCount> = by_value
            .into_iter()
            .map(|((num, den), count)| ValueCount {
                value: num as f64 / den as f64,
                count,
            })
            .collect();
        distribution.sort_by(|a, b| a.value.total_cmp(&b.value));
        SpeedStats { distribution, summary }
    });

    let rows: Vec<CaseCategories> = solved.iter().filter_map(|r| CaseCategories::of(r)).collect();
    let delta_distance = delta_table(&rows);

    Report {
        cases: results.len(),
        solved: solved.len(),
        failed,
        min_feedback,
        average_speed,
        delta_distance,
    }
}

/// Per-case values of the four categories.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseCategories {
    pub ideal: f64,
    pub best: f64,
    pub average: f64,
    pub worst: f64,
}

impl CaseCategories {
    pub fn of(result: &SimResult) -> Option<Self> {
        let ideal = result.average_speed()?;
        let summary = result.depth1_summary()?;
        Some(Self {
            ideal,
            best: summary.best as f64,
            average: summary.average,
            worst: summary.worst as f64,
        })
    }
}

/// Category means and ratios to the ideal average speed.
pub fn delta_table(rows: &[CaseCategories]) -> Option<DeltaTable> {
    let column =
        |pick: fn(&CaseCategories) -> f64| -> Vec<(f64, f64)> { rows.iter().map(|r| (pick(r), r.ideal)).collect() };
    Some(DeltaTable {
        ideal: CategoryStats::of(&column(|r| r.ideal))?,
        best: CategoryStats::of(&column(|r| r.best))?,
        average: CategoryStats::of(&column(|r| r.average))?,
        worst: CategoryStats::of(&column(|r| r.worst))?,
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Serialize)]
struct CaseRow<'a> {
    case_id: &'a str,
    #[serde(rename = "N")]
    n: usize,
    #[serde(rename = "M")]
    m: usize,
    changed_lines: usize,
    initial_distance: usize,
    mismatch_areas: usize,
    min_feedback: Option<usize>,
    average_speed: Option<f64>,
    depth1_best: Option<i64>,
    depth1_avg: Option<f64>,
    depth1_worst: Option<i64>,
    status: &'static str,
    wall_ms: Option<u128>,
}

/// Writes one CSV row per case. Without `timing`, `wall_ms` is left empty so
/// repeated runs produce identical files.
pub fn write_cases_csv<W: io::Write>(results: &[SimResult], writer: W, timing: bool) -> Result<(), csv::Error> {
    let mut out = csv::Writer::from_writer(writer);
    for r in results {
        let summary = r.depth1_summary();
        out.serialize(CaseRow {
            case_id: &r.case_id,
            n: r.n,
            m: r.m,
            changed_lines: r.changed_lines,
            initial_distance: r.initial_distance,
            mismatch_areas: r.mismatch_areas,
            min_feedback: r.min_feedback.as_ref().map(|mf| mf.min_feedback),
            average_speed: r.average_speed(),
            depth1_best: summary.map(|s| s.best),
            depth1_avg: summary.map(|s| s.average),
            depth1_worst: summary.map(|s| s.worst),
            status: r.status.as_str(),
            wall_ms: timing.then_some(r.wall_time.as_millis()),
        })?;
    }
    out.flush()?;
    Ok(())
}
