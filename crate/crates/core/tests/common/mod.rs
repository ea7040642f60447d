//! Independent oracles and generators shared by the integration tests.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use idiff::search::SimCase;
use idiff::{candidates, ConstraintSet, FeedbackAction, LinePair};
use rand::Rng;

pub const ALPHABET: [&str; 3] = ["a", "b", "c"];

pub fn random_lines<R: Rng>(rng: &mut R, max: usize) -> Vec<&'static str> {
    let len = rng.gen_range(0..=max);
    (0..len).map(|_| ALPHABET[rng.gen_range(0..ALPHABET.len())]).collect()
}

pub fn random_pair<R: Rng>(rng: &mut R, max: usize) -> LinePair {
    let old = random_lines(rng, max);
    let new = random_lines(rng, max);
    LinePair::from_lines(&old, &new)
}

/// Removes a few random edges of every kind.
pub fn random_constraints<R: Rng>(rng: &mut R, pair: &LinePair) -> ConstraintSet {
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

fn allowed(pair: &LinePair, c: &ConstraintSet, from: (usize, usize), step: (usize, usize)) -> bool {
    let (i, j) = (from.0 + step.0, from.1 + step.1);
    if i > pair.n() || j > pair.m() {
        return false;
    }
    match step {
        (1, 1) => pair.eq(i, j) && !c.removed_diagonals.contains(&(i, j)),
        (1, 0) => !c.banned_old.contains(&i),
        _ => !c.banned_new.contains(&j),
    }
}

const STEPS: [(usize, usize); 3] = [(1, 1), (1, 0), (0, 1)];

/// Fewest edges from origin to sink by breadth-first search, `None` when the
/// sink is cut off.
pub fn bfs_length(pair: &LinePair, c: &ConstraintSet) -> Option<usize> {
    let sink = (pair.n(), pair.m());
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
    let d = dist[sink.0][sink.1];
    (d != usize::MAX).then_some(d)
}

/// Minimum over every origin-to-sink path, enumerated one by one.
pub fn enumerate_min_length(pair: &LinePair, c: &ConstraintSet) -> Option<usize> {
    fn walk(pair: &LinePair, c: &ConstraintSet, at: (usize, usize), len: usize, best: &mut Option<usize>) {
        if at == (pair.n(), pair.m()) {
            *best = Some(best.map_or(len, |b| b.min(len)));
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

/// Fewest feedback actions reaching the target, by breadth-first search over
/// action sets. `None` if no goal exists within `max_depth`.
pub fn bfs_min_feedback(case: &SimCase, max_depth: usize) -> Option<usize> {
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
        if next.is_empty() {
            return None;
        }
        frontier = next;
    }
    None
}
