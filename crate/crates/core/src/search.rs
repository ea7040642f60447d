//! Interactive optimization as a search problem.
//!
//! A state is a set of feedback actions, its diff is `diff_fix(state)`, and a
//! state is a goal when that diff equals the target. The children of a state
//! add one feedback candidate each: an action obtainable from the current
//! diff but not from the target. Every path to a state has the same length
//! (its size), so states are deduplicated as sets without losing minimality.
//!
//! [`solve_min_feedback`] finds the fewest actions that reach the target with
//! A* in two phases: first guided by the similarity distance, which is fast
//! but can overestimate, then, only when the first answer is above the
//! mismatch-area lower bound, again with the admissible mismatch-area count.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashMap, HashSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::differ::{shortest_diff, ConstraintSet};
use crate::feedback::{actions_of, expand_action, FeedbackAction};
use crate::histogram::histogram_diff;
use crate::model::{Diff, EdgeKind, LinePair, ModelError, Node};

/// Feedback candidates: actions obtainable from `d` but not from `d_star`.
pub fn candidates(d: &Diff, d_star: &Diff) -> BTreeSet<FeedbackAction> {
    let target = actions_of(d_star);
    actions_of(d).into_iter().filter(|a| !target.contains(a)).collect()
}

/// Number of feedback candidates. Not symmetric.
pub fn similarity_distance(d: &Diff, d_star: &Diff) -> usize {
    candidates(d, d_star).len()
}

/// Nodes both paths enter, through different edges. Each such node closes
/// a region enclosed by the two paths.
pub fn mismatch_area_count(d: &Diff, d_star: &Diff) -> usize {
    let incoming: HashMap<Node, EdgeKind> = d_star.edges().iter().map(|e| (e.to(), e.kind)).collect();
    d.edges()
        .iter()
        .filter(|e| incoming.get(&e.to()).is_some_and(|kind| *kind != e.kind))
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaseError {
    #[error("target diff does not fit the line pair: {0}")]
    InvalidTarget(#[from] ModelError),
}

/// One simulation instance: a line pair and the diff feedback should reach.
#[derive(Debug, Clone)]
pub struct SimCase {
    pub id: String,
    pub pair: LinePair,
    pub target: Diff,
    initial: Diff,
    initial_distance: usize,
}

impl SimCase {
    pub fn new(id: impl Into<String>, pair: LinePair, target: Diff) -> Result<Self, CaseError> {
        target.validate(&pair)?;
        let initial = shortest_diff(&pair, &ConstraintSet::new(), None).expect("unconstrained graphs are feasible");
        let initial_distance = similarity_distance(&initial, &target);
        Ok(Self {
            id: id.into(),
            pair,
            target,
            initial,
            initial_distance,
        })
    }

    /// A case whose target is the histogram diff of `pair`.
    pub fn from_histogram(id: impl Into<String>, pair: LinePair) -> Self {
        let target = histogram_diff(&pair);
        Self::new(id, pair, target).expect("histogram diffs are valid")
    }

    /// The diff before any feedback.
    pub fn initial_diff(&self) -> &Diff {
        &self.initial
    }

    pub fn initial_distance(&self) -> usize {
        self.initial_distance
    }

    pub fn initial_mismatch_areas(&self) -> usize {
        mismatch_area_count(&self.initial, &self.target)
    }

    /// The initial diff already is the target.
    pub fn is_trivial(&self) -> bool {
        self.initial == self.target
    }

    /// `diff_fix` for a set of actions, or `None` when the actions leave
    /// no path.
    pub fn diff_for(&self, actions: &BTreeSet<FeedbackAction>) -> Option<Diff> {
        let mut constraints = ConstraintSet::new();
        for &action in actions {
            let delta = expand_action(action, &self.pair).ok()?;
            constraints.extend(&delta.constraints);
        }
        shortest_diff(&self.pair, &constraints, None).ok()
    }
}

/// A search state with its diff evaluated. `diff` is `None` for dead states
/// whose actions conflict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchState {
    pub actions: BTreeSet<FeedbackAction>,
    pub diff: Option<Diff>,
    pub distance: Option<usize>,
}

impl SearchState {
    pub fn evaluate(case: &SimCase, actions: BTreeSet<FeedbackAction>) -> Self {
        let diff = case.diff_for(&actions);
        let distance = diff.as_ref().map(|d| similarity_distance(d, &case.target));
        Self {
            actions,
            diff,
            distance,
        }
    }

    pub fn root(case: &SimCase) -> Self {
        Self::evaluate(case, BTreeSet::new())
    }

    pub fn is_dead(&self) -> bool {
        self.diff.is_none()
    }
}

/// Whether the state's diff is the target.
pub fn goal(state: &SearchState, case: &SimCase) -> bool {
    state.diff.as_ref() == Some(&case.target)
}

/// One child per feedback candidate of the state's diff. Dead states have no
/// children.
pub fn successors(state: &SearchState, case: &SimCase) -> Vec<SearchState> {
    let Some(diff) = &state.diff else {
        return Vec::new();
    };
    candidates(diff, &case.target)
        .into_iter()
        .map(|action| {
            let mut actions = state.actions.clone();
            actions.insert(action);
            SearchState::evaluate(case, actions)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseStatus {
    Solved,
    Timeout,
    OutOfMemory,
    /// The search space holds no goal state.
    Unreachable,
}

impl CaseStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseStatus::Solved => "solved",
            CaseStatus::Timeout => "timeout",
            CaseStatus::OutOfMemory => "out_of_memory",
            CaseStatus::Unreachable => "unreachable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SearchFailure {
    #[error("time budget exceeded")]
    Timeout,
    #[error("state limit exceeded")]
    OutOfMemory,
    #[error("no feedback sequence reaches the target")]
    Unreachable,
}

impl From<SearchFailure> for CaseStatus {
    fn from(f: SearchFailure) -> Self {
        match f {
            SearchFailure::Timeout => CaseStatus::Timeout,
            SearchFailure::OutOfMemory => CaseStatus::OutOfMemory,
            SearchFailure::Unreachable => CaseStatus::Unreachable,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Wall-clock budget for the whole case, both phases included.
    pub budget: Duration,
    /// Maximum number of distinct states generated.
    pub max_states: usize,
}

impl SearchLimits {
    pub const DEFAULT_BUDGET: Duration = Duration::from_secs(30 * 60);
    pub const DEFAULT_MAX_STATES: usize = 2_000_000;

    pub fn with_budget(budget: Duration) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            budget: Self::DEFAULT_BUDGET,
            max_states: Self::DEFAULT_MAX_STATES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Heuristic {
    /// Number of feedback candidates; not admissible.
    SimilarityDistance,
    /// Number of mismatch areas; admissible.
    MismatchAreas,
}

impl Heuristic {
    fn estimate(self, diff: &Diff, target: &Diff, candidate_count: usize) -> usize {
        match self {
            Heuristic::SimilarityDistance => candidate_count,
            Heuristic::MismatchAreas => mismatch_area_count(diff, target),
        }
    }
}

/// Outcome of one A* run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AStarOutcome {
    pub actions: BTreeSet<FeedbackAction>,
    pub expansions: usize,
    pub generated: usize,
}

struct Entry {
    actions: Vec<FeedbackAction>,
    candidates: Vec<FeedbackAction>,
    goal: bool,
}

/// A* over feedback sets with unit action cost.
///
/// The open list is ordered by `g + h`, then `h`, then insertion order.
/// Goal tests happen when a state is expanded.
pub fn astar(
    case: &SimCase,
    heuristic: Heuristic,
    deadline: Instant,
    max_states: usize,
) -> Result<AStarOutcome, SearchFailure> {
    let mut entries: Vec<Entry> = Vec::new();
    let mut seen: HashSet<Vec<FeedbackAction>> = HashSet::new();
    let mut open: BinaryHeap<Reverse<(usize, usize, usize)>> = BinaryHeap::new();
    let mut expansions = 0;

    let make_entry = |actions: Vec<FeedbackAction>| -> Option<(Entry, usize)> {
        let set: BTreeSet<FeedbackAction> = actions.iter().copied().collect();
        let diff = case.diff_for(&set)?;
        let candidates: Vec<FeedbackAction> = candidates(&diff, &case.target).into_iter().collect();
        let h = heuristic.estimate(&diff, &case.target, candidates.len());
        let goal = diff == case.target;
        Some((
            Entry {
                actions,
                candidates,
                goal,
            },
            h,
        ))
    };

    let (root, h) = make_entry(Vec::new()).expect("the empty feedback set is feasible");
    seen.insert(Vec::new());
    entries.push(root);
    open.push(Reverse((h, h, 0)));

    while let Some(Reverse((_, _, index))) = open.pop() {
        if Instant::now() >= deadline {
            return Err(SearchFailure::Timeout);
        }
        expansions += 1;
        if entries[index].goal {
            return Ok(AStarOutcome {
                actions: entries[index].actions.iter().copied().collect(),
                expansions,
                generated: entries.len(),
            });
        }
        let g = entries[index].actions.len() + 1;
        for k in 0..entries[index].candidates.len() {
            let action = entries[index].candidates[k];
            let mut child = entries[index].actions.clone();
            let at = child.binary_search(&action).unwrap_or_else(|at| at);
            child.insert(at, action);
            if !seen.insert(child.clone()) {
                continue;
            }
            if seen.len() > max_states {
                return Err(SearchFailure::OutOfMemory);
            }
            if let Some((entry, h)) = make_entry(child) {
                entries.push(entry);
                open.push(Reverse((g + h, h, entries.len() - 1)));
            }
        }
    }
    Err(SearchFailure::Unreachable)
}

/// Result of the minimum-feedback search for one case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinFeedback {
    pub min_feedback: usize,
    /// One optimal action set.
    pub witness: BTreeSet<FeedbackAction>,
    pub phase1_depth: usize,
    pub phase2_ran: bool,
    pub expansions: usize,
}

/// Fewest feedback actions that turn the initial diff into the target.
pub fn solve_min_feedback(case: &SimCase, limits: SearchLimits) -> Result<MinFeedback, SearchFailure> {
    solve_by(case, limits, Instant::now() + limits.budget)
}

fn solve_by(case: &SimCase, limits: SearchLimits, deadline: Instant) -> Result<MinFeedback, SearchFailure> {
    let phase1 = astar(case, Heuristic::SimilarityDistance, deadline, limits.max_states)?;
    let phase1_depth = phase1.actions.len();
    if phase1_depth <= case.initial_mismatch_areas() {
        return Ok(MinFeedback {
            min_feedback: phase1_depth,
            witness: phase1.actions,
            phase1_depth,
            phase2_ran: false,
            expansions: phase1.expansions,
        });
    }
    let phase2 = astar(case, Heuristic::MismatchAreas, deadline, limits.max_states)?;
    Ok(MinFeedback {
        min_feedback: phase2.actions.len(),
        witness: phase2.actions,
        phase1_depth,
        phase2_ran: true,
        expansions: phase1.expansions + phase2.expansions,
    })
}

/// Outcome of a single feedback action applied to the initial diff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Depth1Record {
    pub action: FeedbackAction,
    /// Similarity distance after the action; `None` when infeasible.
    pub distance: Option<usize>,
}

impl Depth1Record {
    /// Reduction in similarity distance. Negative when the action moved the
    /// diff away from the target.
    pub fn delta(&self, initial_distance: usize) -> Option<i64> {
        self.distance.map(|d| initial_distance as i64 - d as i64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Depth1Summary {
    pub best: i64,
    pub average: f64,
    pub worst: i64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Depth1Study {
    pub initial_distance: usize,
    pub records: Vec<Depth1Record>,
}

impl Depth1Study {
    pub fn deltas(&self) -> Vec<i64> {
        self.records
            .iter()
            .filter_map(|r| r.delta(self.initial_distance))
            .collect()
    }

    /// Best, mean and worst reduction over feasible actions.
    pub fn summary(&self) -> Option<Depth1Summary> {
        let deltas = self.deltas();
        let best = *deltas.iter().max()?;
        let worst = *deltas.iter().min()?;
        let average = deltas.iter().sum::<i64>() as f64 / deltas.len() as f64;
        Some(Depth1Summary { best, average, worst })
    }
}

/// Applies every initial feedback candidate on its own and records how far
/// each moves the diff toward the target.
pub fn depth1_study(case: &SimCase) -> Depth1Study {
    let root = SearchState::root(case);
    let records = successors(&root, case)
        .into_iter()
        .map(|child| {
            let action = *child.actions.iter().next().expect("depth-1 states hold one action");
            Depth1Record {
                action,
                distance: child.distance,
            }
        })
        .collect();
    Depth1Study {
        initial_distance: case.initial_distance(),
        records,
    }
}

/// Everything measured for one case.
#[derive(Debug, Clone, PartialEq)]
pub struct SimResult {
    pub case_id: String,
    pub n: usize,
    pub m: usize,
    pub changed_lines: usize,
    pub initial_distance: usize,
    pub mismatch_areas: usize,
    pub status: CaseStatus,
    pub min_feedback: Option<MinFeedback>,
    /// Only computed for solved cases.
    pub depth1: Option<Depth1Study>,
    pub wall_time: Duration,
}

impl SimResult {
    /// Initial distance per ideal action, as an exact fraction.
    pub fn speed_fraction(&self) -> Option<(usize, usize)> {
        self.min_feedback
            .as_ref()
            .filter(|mf| mf.min_feedback > 0)
            .map(|mf| (self.initial_distance, mf.min_feedback))
    }

    pub fn average_speed(&self) -> Option<f64> {
        self.speed_fraction().map(|(num, den)| num as f64 / den as f64)
    }

    pub fn depth1_summary(&self) -> Option<Depth1Summary> {
        self.depth1.as_ref().and_then(Depth1Study::summary)
    }

    pub fn expansions(&self) -> usize {
        self.min_feedback.as_ref().map_or(0, |mf| mf.expansions)
    }
}

/// Runs both studies on one case within `limits`.
pub fn simulate_case(case: &SimCase, limits: SearchLimits) -> SimResult {
    let started = Instant::now();
    let deadline = started + limits.budget;
    let outcome = solve_by(case, limits, deadline);
    let (status, min_feedback, depth1) = match outcome {
        Ok(mf) => {
            let depth1 = depth1_study(case);
            if Instant::now() > deadline {
                (CaseStatus::Timeout, None, None)
            } else {
                (CaseStatus::Solved, Some(mf), Some(depth1))
            }
        }
        Err(failure) => (failure.into(), None, None),
    };
    SimResult {
        case_id: case.id.clone(),
        n: case.pair.n(),
        m: case.pair.m(),
        changed_lines: case.initial_diff().changed_lines(),
        initial_distance: case.initial_distance(),
        mismatch_areas: case.initial_mismatch_areas(),
        status,
        min_feedback,
        depth1,
        wall_time: started.elapsed(),
    }
}

/// Simulates every case on a pool of `jobs` threads. Results keep the order
/// of `cases`.
pub fn simulate_all(cases: &[SimCase], limits: SearchLimits, jobs: usize) -> Vec<SimResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| cases.par_iter().map(|case| simulate_case(case, limits)).collect())
}
