//! Shortest paths on the constrained edit graph.
//!
//! The graph is never materialized. A [`ConstraintSet`] records which edges
//! feedback has removed, and [`shortest_diff`] runs a dynamic program over the
//! `(N+1) x (M+1)` grid that skips those edges.
//!
//! Path cost is lexicographic: first the number of edges, then the number of
//! edges that are not part of an optional reference path. Remaining ties are
//! broken by preferring, at every node walked from the origin, a diagonal
//! step, then a horizontal step, then a vertical one. Deletions therefore come
//! before insertions inside a changed block.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::model::{Diff, Edge, EdgeKind, LinePair, Node};

/// Edges removed from the edit graph.
///
/// An edge is removed iff it is the diagonal into a node in
/// `removed_diagonals`, a horizontal edge into a row in `banned_old`, or a
/// vertical edge into a column in `banned_new`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConstraintSet {
    pub removed_diagonals: BTreeSet<(usize, usize)>,
    /// Old lines that may not be shown as deleted.
    pub banned_old: BTreeSet<usize>,
    /// New lines that may not be shown as added.
    pub banned_new: BTreeSet<usize>,
}

impl ConstraintSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.removed_diagonals.is_empty() && self.banned_old.is_empty() && self.banned_new.is_empty()
    }

    pub fn is_removed(&self, edge: &Edge) -> bool {
        let to = edge.to();
        match edge.kind {
            EdgeKind::Diagonal => self.removed_diagonals.contains(&(to.i, to.j)),
            EdgeKind::Horizontal => self.banned_old.contains(&to.i),
            EdgeKind::Vertical => self.banned_new.contains(&to.j),
        }
    }

    pub fn extend(&mut self, other: &ConstraintSet) {
        self.removed_diagonals.extend(other.removed_diagonals.iter().copied());
        self.banned_old.extend(other.banned_old.iter().copied());
        self.banned_new.extend(other.banned_new.iter().copied());
    }

    /// Whether every edge removed by `self` is also removed by `other`.
    pub fn is_subset(&self, other: &ConstraintSet) -> bool {
        self.removed_diagonals.is_subset(&other.removed_diagonals)
            && self.banned_old.is_subset(&other.banned_old)
            && self.banned_new.is_subset(&other.banned_new)
    }
}

/// No path survives the constraints.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct Infeasible {
    /// Banned old lines that have no remaining diagonal to any new line.
    pub unmatched_old: Vec<usize>,
    /// Banned new lines that have no remaining diagonal to any old line.
    pub unmatched_new: Vec<usize>,
    pub banned_old: Vec<usize>,
    pub banned_new: Vec<usize>,
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |side: &str, v: &[usize]| -> Option<String> {
            (!v.is_empty()).then(|| {
                format!(
                    "{side} {}",
                    v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
                )
            })
        };
        let join = |a: Option<String>, b: Option<String>| a.into_iter().chain(b).collect::<Vec<_>>().join("; ");
        f.write_str("no diff satisfies the feedback; ")?;
        if self.unmatched_old.is_empty() && self.unmatched_new.is_empty() {
            let lines = join(list("old lines", &self.banned_old), list("new lines", &self.banned_new));
            write!(f, "kept lines conflict: {lines}")
        } else {
            let lines = join(
                list("old lines", &self.unmatched_old),
                list("new lines", &self.unmatched_new),
            );
            write!(f, "kept but matching nothing: {lines}")
        }
    }
}

impl Infeasible {
    fn diagnose(pair: &LinePair, constraints: &ConstraintSet) -> Self {
        let unmatched_old = constraints
            .banned_old
            .iter()
            .copied()
            .filter(|&i| i >= 1 && i <= pair.n())
            .filter(|&i| !(1..=pair.m()).any(|j| pair.eq(i, j) && !constraints.removed_diagonals.contains(&(i, j))))
            .collect();
        let unmatched_new = constraints
            .banned_new
            .iter()
            .copied()
            .filter(|&j| j >= 1 && j <= pair.m())
            .filter(|&j| !(1..=pair.n()).any(|i| pair.eq(i, j) && !constraints.removed_diagonals.contains(&(i, j))))
            .collect();
        Self {
            unmatched_old,
            unmatched_new,
            banned_old: constraints.banned_old.iter().copied().collect(),
            banned_new: constraints.banned_new.iter().copied().collect(),
        }
    }
}

const INF: u64 = u64::MAX;
const LENGTH_UNIT: u64 = 1 << 32;

const NONE: u8 = 0;
const DIAGONAL: u8 = 1;
const HORIZONTAL: u8 = 2;
const VERTICAL: u8 = 3;

/// Outgoing edge kinds of a reference path, indexed by row.
struct ReferenceRows {
    rows: Vec<(usize, Vec<EdgeKind>)>,
}

impl ReferenceRows {
    fn new(reference: &Diff, n: usize) -> Self {
        let mut rows: Vec<(usize, Vec<EdgeKind>)> = vec![(0, Vec::new()); n + 1];
        for edge in reference {
            let Some((start, kinds)) = rows.get_mut(edge.from.i) else {
                continue;
            };
            if kinds.is_empty() {
                *start = edge.from.j;
            }
            kinds.push(edge.kind);
        }
        Self { rows }
    }

    fn outgoing(&self, i: usize, j: usize) -> Option<EdgeKind> {
        let (start, kinds) = &self.rows[i];
        j.checked_sub(*start).and_then(|k| kinds.get(k)).copied()
    }
}

/// A shortest path avoiding every removed edge.
///
/// With a `reference`, the path shares as many edges with it as any shortest
/// path can; if the reference itself survives the constraints and is
/// shortest, it is returned unchanged.
pub fn shortest_diff(
    pair: &LinePair,
    constraints: &ConstraintSet,
    reference: Option<&Diff>,
) -> Result<Diff, Infeasible> {
    let (n, m) = (pair.n(), pair.m());
    let width = m + 1;
    let old_ids = pair.old_ids();
    let new_ids = pair.new_ids();

    let banned_old: Vec<bool> = (0..=n).map(|i| constraints.banned_old.contains(&i)).collect();
    let banned_new: Vec<bool> = (0..=m).map(|j| constraints.banned_new.contains(&j)).collect();
    let reference = reference.map(|r| ReferenceRows::new(r, n));
    let edge_cost = |i: usize, j: usize, kind: EdgeKind| -> u64 {
        let shared = reference.as_ref().is_some_and(|r| r.outgoing(i, j) == Some(kind));
        LENGTH_UNIT + u64::from(!shared)
    };

    // Cost-to-sink, two rows at a time; `choice` keeps the preferred
    // outgoing edge of every node for the forward walk.
    let mut choice = vec![NONE; (n + 1) * width];
    let mut below = vec![INF; width];
    let mut row = vec![INF; width];
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            if i == n && j == m {
                row[j] = 0;
                continue;
            }
            let mut best = INF;
            let mut pick = NONE;
            if i < n && j < m && old_ids[i] == new_ids[j] && !constraints.removed_diagonals.contains(&(i + 1, j + 1)) {
                if let Some(c) = add(below[j + 1], edge_cost(i, j, EdgeKind::Diagonal)) {
                    best = c;
                    pick = DIAGONAL;
                }
            }
            if i < n && !banned_old[i + 1] {
                if let Some(c) = add(below[j], edge_cost(i, j, EdgeKind::Horizontal)) {
                    if c < best {
                        best = c;
                        pick = HORIZONTAL;
                    }
                }
            }
            if j < m && !banned_new[j + 1] {
                if let Some(c) = add(row[j + 1], edge_cost(i, j, EdgeKind::Vertical)) {
                    if c < best {
                        best = c;
                        pick = VERTICAL;
                    }
                }
            }
            row[j] = best;
            choice[i * width + j] = pick;
        }
        std::mem::swap(&mut row, &mut below);
    }
    if below[0] == INF {
        return Err(Infeasible::diagnose(pair, constraints));
    }

    let mut edges = Vec::with_capacity(n + m);
    let mut at = Node::ORIGIN;
    while at != pair.sink() {
        let kind = match choice[at.i * width + at.j] {
            DIAGONAL => EdgeKind::Diagonal,
            HORIZONTAL => EdgeKind::Horizontal,
            VERTICAL => EdgeKind::Vertical,
            _ => unreachable!("reachable node without a successor"),
        };
        let edge = Edge::new(at, kind);
        at = edge.to();
        edges.push(edge);
    }
    Ok(Diff::from_edges(edges).expect("walk produces a chained path"))
}

fn add(cost: u64, edge: u64) -> Option<u64> {
    (cost != INF).then(|| cost + edge)
}

/// Number of matched lines on a shortest constrained path. The path has
/// `N + M - lcs_length` edges.
pub fn lcs_length(pair: &LinePair, constraints: &ConstraintSet) -> Result<usize, Infeasible> {
    shortest_diff(pair, constraints, None).map(|d| d.count(EdgeKind::Diagonal))
}
