//! Acceptance checks, one line per criterion. Run with
//! `cargo test -p idiff-cli --test acceptance -- --nocapture`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use idiff::report::aggregate;
use idiff::search::{successors, CaseStatus, Depth1Record, Depth1Study, MinFeedback, SearchState, SimCase, SimResult};
use idiff::{
    candidates, diff_fix, histogram_diff, mismatch_area_count, shortest_diff, solve_min_feedback, ConstraintSet,
    FeedbackAction, FeedbackState, LinePair,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use FeedbackAction::*;

type Check = Result<String, String>;
type Criterion = fn() -> Check;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn workspace() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn corpus() -> PathBuf {
    workspace().join("corpus/synthetic")
}

const ALPHABET: [&str; 3] = ["a", "b", "c"];

fn random_pair(rng: &mut ChaCha8Rng, max: usize) -> LinePair {
    let mut side = || -> Vec<&str> {
        let len = rng.gen_range(0..=max);
        (0..len).map(|_| ALPHABET[rng.gen_range(0..3)]).collect()
    };
    let old = side();
    let new = side();
    LinePair::from_lines(&old, &new)
}

fn random_constraints(rng: &mut ChaCha8Rng, pair: &LinePair) -> ConstraintSet {
    let mut c = ConstraintSet::new();
    for i in 1..=pair.n() {
        for j in 1..=pair.m() {
            if pair.eq(i, j) && rng.gen_bool(0.2) {
                c.removed_diagonals.insert((i, j));
            }
        }
        if rng.gen_bool(0.1) {
            c.banned_old.insert(i);
        }
    }
    for j in 1..=pair.m() {
        if rng.gen_bool(0.1) {
            c.banned_new.insert(j);
        }
    }
    c
}

const STEPS: [(usize, usize); 3] = [(1, 1), (1, 0), (0, 1)];

fn allowed(pair: &LinePair, c: &ConstraintSet, at: (usize, usize), step: (usize, usize)) -> bool {
    let (i, j) = (at.0 + step.0, at.1 + step.1);
    if i > pair.n() || j > pair.m() {
        return false;
    }
    match step {
        (1, 1) => pair.eq(i, j) && !c.removed_diagonals.contains(&(i, j)),
        (1, 0) => !c.banned_old.contains(&i),
        _ => !c.banned_new.contains(&j),
    }
}

/// Walks every origin-to-sink path, abandoning a path once it cannot beat
/// the best complete one.
fn enumerate_min_length(pair: &LinePair, c: &ConstraintSet) -> Option<usize> {
    fn walk(pair: &LinePair, c: &ConstraintSet, at: (usize, usize), len: usize, best: &mut Option<usize>) {
        let rest = (pair.n() - at.0).max(pair.m() - at.1);
        if best.is_some_and(|b| len + rest >= b) {
            return;
        }
        if rest == 0 {
            *best = Some(len);
            return;
        }
        for step in STEPS {
            if allowed(pair, c, at, step) {
                walk(pair, c, (at.0 + step.0, at.1 + step.1), len + 1, best);
            }
        }
    }
    let mut best = None;
    walk(pair, c, (0, 0), 0, &mut best);
    best
}

fn bfs_length(pair: &LinePair, c: &ConstraintSet) -> Option<usize> {
    let mut dist = vec![vec![usize::MAX; pair.m() + 1]; pair.n() + 1];
    let mut queue = VecDeque::from([(0, 0)]);
    dist[0][0] = 0;
    while let Some(at) = queue.pop_front() {
        for step in STEPS {
            if allowed(pair, c, at, step) {
                let to = (at.0 + step.0, at.1 + step.1);
                if dist[to.0][to.1] == usize::MAX {
                    dist[to.0][to.1] = dist[at.0][at.1] + 1;
                    queue.push_back(to);
                }
            }
        }
    }
    let d = dist[pair.n()][pair.m()];
    (d != usize::MAX).then_some(d)
}

fn differ_oracle() -> Check {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    let total = 1000;
    let mut infeasible = 0;
    for k in 0..total {
        let pair = random_pair(&mut rng, 12);
        let c = random_constraints(&mut rng, &pair);
        let expected = enumerate_min_length(&pair, &c);
        let got = shortest_diff(&pair, &c, None).ok().map(|d| d.len());
        ensure(
            got == expected,
            format!("pair {k}: shortest_diff {got:?}, enumeration {expected:?}"),
        )?;
        infeasible += usize::from(expected.is_none());
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(60), format!("took {elapsed:.1?}"))?;
    Ok(format!("{total} pairs ({infeasible} infeasible) in {elapsed:.1?}"))
}

fn all_actions(pair: &LinePair) -> Vec<FeedbackAction> {
    let mut out: Vec<FeedbackAction> = (1..=pair.n()).map(OldOrphan).collect();
    out.extend((1..=pair.m()).map(NewOrphan));
    for i in 1..=pair.n() {
        for j in 1..=pair.m() {
            if pair.eq(i, j) {
                out.push(Mismatch { old: i, new: j });
            }
        }
    }
    out
}

fn own_constraints(actions: &[FeedbackAction]) -> ConstraintSet {
    let mut c = ConstraintSet::new();
    for a in actions {
        match *a {
            Mismatch { old, new } => {
                c.removed_diagonals.insert((old, new));
            }
            OldOrphan(i) => {
                c.banned_old.insert(i);
            }
            NewOrphan(j) => {
                c.banned_new.insert(j);
            }
        }
    }
    c
}

fn feedback_semantics() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    let mut samples = 0;
    while samples < 600 {
        let pair = random_pair(&mut rng, 8);
        let actions = all_actions(&pair);
        let Some(&action) = actions.choose(&mut rng) else {
            continue;
        };
        samples += 1;
        let state = FeedbackState::new()
            .with(&pair, action)
            .map_err(|e| format!("{action:?}: {e}"))?;
        let result = diff_fix(&pair, &state);
        match action {
            Mismatch { old, new } => {
                let d = result.as_ref().map_err(|e| format!("mismatch infeasible: {e}"))?;
                ensure(!d.matches().contains(&(old, new)), format!("{action:?} still matched"))?;
            }
            OldOrphan(i) => {
                let can_match = (1..=pair.m()).any(|j| pair.eq(i, j));
                ensure(
                    result.is_ok() == can_match,
                    format!("{action:?}: feasibility {}", result.is_ok()),
                )?;
                if let Ok(d) = &result {
                    ensure(
                        d.matches().iter().any(|m| m.0 == i),
                        format!("{action:?}: old line unmatched"),
                    )?;
                }
            }
            NewOrphan(j) => {
                let can_match = (1..=pair.n()).any(|i| pair.eq(i, j));
                ensure(
                    result.is_ok() == can_match,
                    format!("{action:?}: feasibility {}", result.is_ok()),
                )?;
                if let Ok(d) = &result {
                    ensure(
                        d.matches().iter().any(|m| m.1 == j),
                        format!("{action:?}: new line unmatched"),
                    )?;
                }
            }
        }
        let optimal = bfs_length(&pair, &own_constraints(&[action]));
        ensure(
            result.as_ref().ok().map(|d| d.len()) == optimal,
            format!("{action:?}: length differs from oracle {optimal:?}"),
        )?;

        let count = rng.gen_range(2..=4).min(actions.len());
        let mut chosen: Vec<FeedbackAction> = actions.choose_multiple(&mut rng, count).copied().collect();
        let reference = FeedbackState::from_actions(&pair, chosen.clone()).map(|s| diff_fix(&pair, &s));
        let reference = reference.map_err(|e| e.to_string())?;
        ensure(
            reference.as_ref().ok().map(|d| d.len()) == bfs_length(&pair, &own_constraints(&chosen)),
            "batch length differs from oracle",
        )?;
        for _ in 0..3 {
            chosen.shuffle(&mut rng);
            let again = FeedbackState::from_actions(&pair, chosen.clone())
                .map(|s| diff_fix(&pair, &s))
                .map_err(|e| e.to_string())?;
            ensure(again == reference, format!("order changed the result for {chosen:?}"))?;
        }
    }
    Ok(format!("{samples} samples"))
}

fn bfs_min_feedback(case: &SimCase, max_depth: usize) -> Option<usize> {
    let mut frontier: Vec<BTreeSet<FeedbackAction>> = vec![BTreeSet::new()];
    let mut seen = HashSet::new();
    for depth in 0..=max_depth {
        let mut next = Vec::new();
        for state in &frontier {
            let Some(diff) = case.diff_for(state) else { continue };
            if diff == case.target {
                return Some(depth);
            }
            for action in candidates(&diff, &case.target) {
                let mut child = state.clone();
                child.insert(action);
                if seen.insert(child.clone()) {
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    None
}

fn search_optimality() -> Check {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    let mut cases = 0;
    let mut depths = BTreeMap::new();
    let mut single = 0;
    while cases < 250 {
        let case = SimCase::from_histogram(format!("c{cases}"), random_pair(&mut rng, 14));
        if case.is_trivial() || case.initial_distance() > 6 {
            continue;
        }
        // Keep single-region cases from crowding out the deeper ones.
        if case.initial_mismatch_areas() == 1 {
            if single >= 100 {
                continue;
            }
            single += 1;
        }
        cases += 1;
        let bfs = bfs_min_feedback(&case, 10).ok_or_else(|| format!("{:?}: no goal by BFS", case.pair))?;
        let found = solve_min_feedback(&case, Default::default()).map_err(|e| format!("{:?}: {e}", case.pair))?;
        ensure(
            found.min_feedback == bfs,
            format!("{:?}: A* {} vs BFS {bfs}", case.pair, found.min_feedback),
        )?;
        let h = mismatch_area_count(case.initial_diff(), &case.target);
        ensure(h <= bfs, format!("{:?}: heuristic {h} exceeds {bfs}", case.pair))?;
        *depths.entry(bfs).or_insert(0) += 1;
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(300), format!("took {elapsed:.1?}"))?;
    Ok(format!("{cases} cases, depths {depths:?}, in {elapsed:.1?}"))
}

fn fixture_case(dir: &str, old: &str, new: &str) -> SimCase {
    let root = workspace().join("fixtures").join(dir);
    let read = |f: &str| fs::read_to_string(root.join(f)).unwrap();
    SimCase::from_histogram(dir, LinePair::from_texts(&read(old), &read(new), true))
}

fn reference_fixtures() -> Check {
    let case = fixture_case("interface", "old.java", "new.java");
    let state = SearchState::evaluate(&case, [OldOrphan(2)].into());
    let children: BTreeSet<BTreeSet<FeedbackAction>> =
        successors(&state, &case).into_iter().map(|s| s.actions).collect();
    let expected: BTreeSet<BTreeSet<FeedbackAction>> = [
        [OldOrphan(2), OldOrphan(5)].into(),
        [OldOrphan(2), Mismatch { old: 9, new: 8 }].into(),
    ]
    .into();
    ensure(children == expected, format!("children of {{(2,*)}}: {children:?}"))?;

    let case = fixture_case("two-regions", "old.txt", "new.txt");
    let areas = mismatch_area_count(case.initial_diff(), &case.target);
    let mf = solve_min_feedback(&case, Default::default())
        .map_err(|e| e.to_string())?
        .min_feedback;
    ensure(
        (areas, mf) == (2, 2),
        format!("two regions: areas {areas}, min_feedback {mf}"),
    )?;
    Ok("branching children and two-region counts reproduced".into())
}

/// Splits `total` into `n` integers differing by at most one.
fn spread(total: i64, n: usize) -> Vec<i64> {
    let n = n as i64;
    (0..n).map(|k| (k + 1) * total / n - k * total / n).collect()
}

/// A synthetic result with the given initial distance, minimum feedback and
/// depth-1 reductions.
fn synthetic_result(id: usize, distance: usize, min_feedback: usize, deltas: &[i64]) -> SimResult {
    let records = deltas
        .iter()
        .enumerate()
        .map(|(k, d)| Depth1Record {
            action: Mismatch { old: k + 1, new: k + 1 },
            distance: Some((distance as i64 - d) as usize),
        })
        .collect();
    SimResult {
        case_id: format!("s{id}"),
        n: 0,
        m: 0,
        changed_lines: 0,
        initial_distance: distance,
        mismatch_areas: 1,
        status: CaseStatus::Solved,
        min_feedback: Some(MinFeedback {
            min_feedback,
            witness: BTreeSet::new(),
            phase1_depth: min_feedback,
            phase2_ran: false,
            expansions: 0,
        }),
        depth1: Some(Depth1Study {
            initial_distance: distance,
            records,
        }),
        wall_time: Duration::ZERO,
    }
}

#[allow(clippy::approx_constant)]
/// Builds 600 cases in two speed groups whose category means are the
/// published ones, then checks the ratios that come out of `aggregate`.
fn metric_table() -> Result<(), String> {
    // (count, initial distance, min feedback)
    let groups = [(313usize, 6usize, 3usize), (287, 16, 2)];
    let weights: Vec<f64> = groups.iter().map(|g| g.0 as f64 / 600.0).collect();
    let ideals: Vec<f64> = groups.iter().map(|g| g.1 as f64 / g.2 as f64).collect();
    // Group means x with w.x = mean and sum(w x / ideal) = ratio.
    let split = |mean: f64, ratio: f64| -> [f64; 2] {
        let a = (ratio - mean / ideals[1]) / (weights[0] * (1.0 / ideals[0] - 1.0 / ideals[1]));
        let b = (mean - weights[0] * a) / weights[1];
        [a, b]
    };
    let best = split(5.67, 1.14);
    let avg = split(3.14, 0.68);
    let worst = split(0.71, 0.22);

    let mut results = Vec::new();
    for (g, &(count, distance, mf)) in groups.iter().enumerate() {
        let bests = spread((best[g] * count as f64).round() as i64, count);
        let worsts = spread((worst[g] * count as f64).round() as i64, count);
        let sums = spread((avg[g] * (count * distance) as f64).round() as i64, count);
        for k in 0..count {
            let (b, w, s) = (bests[k], worsts[k], sums[k]);
            let mut deltas = vec![b, w];
            deltas.extend(spread(s - b - w, distance - 2));
            ensure(
                deltas.iter().all(|d| (w..=b).contains(d) && *d <= distance as i64),
                format!("group {g} case {k}: deltas {deltas:?} out of range"),
            )?;
            results.push(synthetic_result(results.len(), distance, mf, &deltas));
        }
    }

    let table = aggregate(&results).delta_distance.ok_or("no delta table")?;
    let rows = [
        ("ideal", &table.ideal, 4.87, 1.0),
        ("best", &table.best, 5.67, 1.14),
        ("avg", &table.average, 3.14, 0.68),
        ("worst", &table.worst, 0.71, 0.22),
    ];
    for (name, stats, mean, ratio) in rows {
        ensure(
            (stats.mean - mean).abs() <= 0.005 && (stats.ratio_to_ideal - ratio).abs() <= 0.005,
            format!(
                "{name}: mean {:.4} ratio {:.4}, want {mean} / {ratio}",
                stats.mean, stats.ratio_to_ideal
            ),
        )?;
    }
    Ok(())
}

fn simulate(out: &Path, jobs: usize) -> Result<(), String> {
    let status = Command::new(env!("CARGO_BIN_EXE_idiff"))
        .env_remove("IDIFF_BUDGET_SECS")
        .arg("simulate")
        .arg(corpus())
        .arg("--out")
        .arg(out)
        .args(["--budget", "120s", "--omit-timing", "--jobs", &jobs.to_string()])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(
        status.status.success(),
        format!(
            "simulate exited {:?}: {}",
            status.status.code(),
            String::from_utf8_lossy(&status.stderr)
        ),
    )
}

fn close(a: f64, b: &Value) -> bool {
    b.as_f64().is_some_and(|b| (a - b).abs() <= 1e-12 * a.abs().max(1.0))
}

fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let (lo, hi) = (pos.floor() as usize, pos.ceil() as usize);
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

/// Recomputes every aggregate in summary.json from cases.csv.
fn recompute(dir: &Path) -> Result<usize, String> {
    let summary: Value =
        serde_json::from_str(&fs::read_to_string(dir.join("summary.json")).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
    let mut reader = csv::Reader::from_path(dir.join("cases.csv")).map_err(|e| e.to_string())?;
    let rows: Vec<BTreeMap<String, String>> = reader
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let num = |r: &BTreeMap<String, String>, k: &str| -> f64 { r[k].parse().unwrap() };
    let solved: Vec<&BTreeMap<String, String>> = rows.iter().filter(|r| r["status"] == "solved").collect();
    ensure(summary["cases"] == rows.len(), "case count")?;
    ensure(summary["solved"] == solved.len(), "solved count")?;
    ensure(solved.len() >= 20, format!("only {} solved", solved.len()))?;

    let mf: Vec<f64> = solved.iter().map(|r| num(r, "min_feedback")).collect();
    let n = mf.len() as f64;
    let s = &summary["min_feedback"];
    let mut dist = BTreeMap::new();
    for v in &mf {
        *dist.entry((*v as usize).to_string()).or_insert(0usize) += 1;
    }
    for (k, v) in &dist {
        ensure(s["distribution"][k] == *v, format!("min_feedback distribution at {k}"))?;
    }
    ensure(
        s["distribution"].as_object().map(|o| o.len()) == Some(dist.len()),
        "distribution keys",
    )?;
    ensure(close(mf.iter().sum::<f64>() / n, &s["mean"]), "min_feedback mean")?;
    ensure(
        close(mf.iter().filter(|v| **v == 1.0).count() as f64 / n, &s["share_one"]),
        "share_one",
    )?;
    ensure(
        close(
            mf.iter().filter(|v| **v <= 3.0).count() as f64 / n,
            &s["share_at_most_three"],
        ),
        "share <= 3",
    )?;

    let mut speeds: Vec<f64> = solved
        .iter()
        .map(|r| num(r, "initial_distance") / num(r, "min_feedback"))
        .collect();
    for (r, v) in solved.iter().zip(&speeds) {
        ensure(num(r, "average_speed") == *v, "average_speed column")?;
    }
    speeds.sort_by(f64::total_cmp);
    let b = &summary["average_speed"]["summary"];
    let expected = [
        ("min", speeds[0]),
        ("p1", quantile(&speeds, 0.01)),
        ("q1", quantile(&speeds, 0.25)),
        ("median", quantile(&speeds, 0.5)),
        ("q3", quantile(&speeds, 0.75)),
        ("p99", quantile(&speeds, 0.99)),
        ("max", *speeds.last().unwrap()),
        ("mean", speeds.iter().sum::<f64>() / n),
    ];
    for (k, v) in expected {
        ensure(close(v, &b[k]), format!("average speed {k}"))?;
    }

    let t = &summary["delta_distance"];
    for (key, column) in [
        ("ideal", "average_speed"),
        ("best", "depth1_best"),
        ("average", "depth1_avg"),
        ("worst", "depth1_worst"),
    ] {
        let values: Vec<f64> = solved.iter().map(|r| num(r, column)).collect();
        let ratios: Vec<f64> = solved
            .iter()
            .map(|r| num(r, column) / num(r, "average_speed"))
            .collect();
        let negative = values.iter().filter(|v| **v < 0.0).count() as f64 / n;
        ensure(
            close(values.iter().sum::<f64>() / n, &t[key]["mean"]),
            format!("{key} mean"),
        )?;
        ensure(
            close(ratios.iter().sum::<f64>() / n, &t[key]["ratio_to_ideal"]),
            format!("{key} ratio"),
        )?;
        ensure(
            close(negative, &t[key]["negative_share"]),
            format!("{key} negative share"),
        )?;
    }
    Ok(solved.len())
}

fn metric_arithmetic() -> Check {
    metric_table()?;
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    simulate(tmp.path(), 1)?;
    let solved = recompute(tmp.path())?;
    Ok(format!(
        "table ratios within 0.005; {solved} corpus cases recomputed from CSV"
    ))
}

fn determinism() -> Check {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let runs = [("a", 1), ("b", 1), ("c", 8)];
    for (name, jobs) in runs {
        simulate(&tmp.path().join(name), jobs)?;
    }
    for file in ["cases.csv", "summary.json"] {
        let read = |name: &str| fs::read(tmp.path().join(name).join(file)).unwrap();
        let first = read("a");
        for (name, _) in &runs[1..] {
            ensure(read(name) == first, format!("{file} differs in run {name}"))?;
        }
    }
    Ok("cases.csv and summary.json identical over 2 runs at --jobs 1 and 1 at --jobs 8".into())
}

fn histogram_divergence() -> Check {
    let ingested = idiff::corpus::ingest(&corpus(), true).map_err(|e| e.to_string())?;
    let total = ingested.entries.len();
    let diverging = ingested
        .entries
        .iter()
        .filter(|e| {
            let pair = &e.case.pair;
            histogram_diff(pair) != diff_fix(pair, &FeedbackState::new()).unwrap()
        })
        .count();
    let share = diverging as f64 / total.max(1) as f64;
    ensure(share >= 0.3, format!("{diverging} of {total} pairs diverge"))?;
    Ok(format!("{diverging} of {total} pairs ({:.0}%)", share * 100.0))
}

fn main() {
    let criteria: [(&str, Criterion); 7] = [
        ("differ oracle equivalence", differ_oracle),
        ("feedback semantics", feedback_semantics),
        ("search optimality and admissibility", search_optimality),
        ("reference fixtures", reference_fixtures),
        ("metric arithmetic", metric_arithmetic),
        ("end-to-end determinism", determinism),
        ("histogram divergence", histogram_divergence),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                println!("FAIL {name}: {reason}");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
