//! Line sequences, the implicit edit graph, and diffs as paths on it.
//!
//! Indices follow the edit-graph convention: old line `i` and new line `j`
//! are 1-based, and node `(i, j)` is the state after reading `i` old lines and
//! `j` new lines. Node `(0, 0)` is the origin and `(N, M)` the sink.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("{side} line {index} is out of range (1..={len})")]
    IndexOutOfRange { side: Side, index: usize, len: usize },
    #[error("edge {position} does not start where the previous edge ends")]
    BrokenPath { position: usize },
    #[error("path ends at {found}, expected sink {expected}")]
    WrongSink { expected: Node, found: Node },
    #[error("diagonal into {0} matches lines that are not equal")]
    MissingDiagonal(Node),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Old,
    New,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Old => "old",
            Side::New => "new",
        })
    }
}

/// Original 1-based line numbers of the lines that survived blank stripping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlankMap {
    pub old: Vec<usize>,
    pub new: Vec<usize>,
}

/// The old and new versions of a file as line sequences.
///
/// Lines are compared byte-for-byte after the line terminator is removed.
/// Each distinct line is interned to a small integer so the differencers
/// only ever compare integers.
#[derive(Debug, Clone)]
pub struct LinePair {
    old: Vec<String>,
    new: Vec<String>,
    old_ids: Vec<u32>,
    new_ids: Vec<u32>,
    blank_map: Option<BlankMap>,
}

impl LinePair {
    pub fn new(old: Vec<String>, new: Vec<String>) -> Self {
        Self::with_blank_map(old, new, None)
    }

    pub fn from_lines(old: &[&str], new: &[&str]) -> Self {
        Self::new(
            old.iter().map(|s| s.to_string()).collect(),
            new.iter().map(|s| s.to_string()).collect(),
        )
    }

    /// Splits both texts into lines. With `strip_blank`, lines that are empty
    /// once the terminator is removed are dropped and their original numbers
    /// are kept in the blank map.
    pub fn from_texts(old_text: &str, new_text: &str, strip_blank: bool) -> Self {
        let split = |text: &str| -> (Vec<String>, Vec<usize>) {
            text.lines()
                .enumerate()
                .filter(|(_, line)| !strip_blank || !line.is_empty())
                .map(|(k, line)| (line.to_string(), k + 1))
                .unzip()
        };
        let (old, old_map) = split(old_text);
        let (new, new_map) = split(new_text);
        let blank_map = strip_blank.then_some(BlankMap {
            old: old_map,
            new: new_map,
        });
        Self::with_blank_map(old, new, blank_map)
    }

    fn with_blank_map(old: Vec<String>, new: Vec<String>, blank_map: Option<BlankMap>) -> Self {
        let mut interner: HashMap<&str, u32> = HashMap::new();
        let old_ids = intern(&mut interner, &old);
        let new_ids = intern(&mut interner, &new);
        Self {
            old,
            new,
            old_ids,
            new_ids,
            blank_map,
        }
    }

    /// Number of old lines (N).
    pub fn n(&self) -> usize {
        self.old.len()
    }

    /// Number of new lines (M).
    pub fn m(&self) -> usize {
        self.new.len()
    }

    pub fn sink(&self) -> Node {
        Node::new(self.n(), self.m())
    }

    pub fn old_lines(&self) -> &[String] {
        &self.old
    }

    pub fn new_lines(&self) -> &[String] {
        &self.new
    }

    pub fn old_line(&self, i: usize) -> &str {
        &self.old[i - 1]
    }

    pub fn new_line(&self, j: usize) -> &str {
        &self.new[j - 1]
    }

    /// Interned line identities; equal ids mean byte-identical lines.
    pub fn old_ids(&self) -> &[u32] {
        &self.old_ids
    }

    pub fn new_ids(&self) -> &[u32] {
        &self.new_ids
    }

    pub fn blank_map(&self) -> Option<&BlankMap> {
        self.blank_map.as_ref()
    }

    /// Original line number of old line `i` before any blank stripping.
    pub fn old_origin(&self, i: usize) -> usize {
        match &self.blank_map {
            Some(map) if i > 0 => map.old[i - 1],
            _ => i,
        }
    }

    pub fn new_origin(&self, j: usize) -> usize {
        match &self.blank_map {
            Some(map) if j > 0 => map.new[j - 1],
            _ => j,
        }
    }

    /// Whether old line `i` equals new line `j`.
    ///
    /// Panics when either index is out of range; see [`LinePair::try_eq`].
    pub fn eq(&self, i: usize, j: usize) -> bool {
        match self.try_eq(i, j) {
            Ok(eq) => eq,
            Err(err) => panic!("{err}"),
        }
    }

    pub fn try_eq(&self, i: usize, j: usize) -> Result<bool, ModelError> {
        self.check_old(i)?;
        self.check_new(j)?;
        Ok(self.old_ids[i - 1] == self.new_ids[j - 1])
    }

    pub(crate) fn check_old(&self, i: usize) -> Result<(), ModelError> {
        if i == 0 || i > self.n() {
            return Err(ModelError::IndexOutOfRange {
                side: Side::Old,
                index: i,
                len: self.n(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_new(&self, j: usize) -> Result<(), ModelError> {
        if j == 0 || j > self.m() {
            return Err(ModelError::IndexOutOfRange {
                side: Side::New,
                index: j,
                len: self.m(),
            });
        }
        Ok(())
    }
}

fn intern<'a>(interner: &mut HashMap<&'a str, u32>, lines: &'a [String]) -> Vec<u32> {
    lines
        .iter()
        .map(|line| {
            let next = interner.len() as u32;
            *interner.entry(line.as_str()).or_insert(next)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub i: usize,
    pub j: usize,
}

impl Node {
    pub const ORIGIN: Node = Node { i: 0, j: 0 };

    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    /// Old line deleted.
    Horizontal,
    /// New line added.
    Vertical,
    /// Old line matched with new line.
    Diagonal,
}

impl EdgeKind {
    fn step(self) -> (usize, usize) {
        match self {
            EdgeKind::Horizontal => (1, 0),
            EdgeKind::Vertical => (0, 1),
            EdgeKind::Diagonal => (1, 1),
        }
    }
}

/// A single edit-graph edge. The target node is derived from the source
/// and the kind, so an edge can never connect non-adjacent nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: Node,
    pub kind: EdgeKind,
}

impl Edge {
    pub const fn new(from: Node, kind: EdgeKind) -> Self {
        Self { from, kind }
    }

    /// The edge of `kind` that enters `to`.
    pub fn into_node(to: Node, kind: EdgeKind) -> Self {
        let (di, dj) = kind.step();
        Self::new(Node::new(to.i - di, to.j - dj), kind)
    }

    /// Classifies the edge between two adjacent nodes.
    pub fn between(from: Node, to: Node) -> Option<Self> {
        let kind = match (to.i.checked_sub(from.i)?, to.j.checked_sub(from.j)?) {
            (1, 0) => EdgeKind::Horizontal,
            (0, 1) => EdgeKind::Vertical,
            (1, 1) => EdgeKind::Diagonal,
            _ => return None,
        };
        Some(Self::new(from, kind))
    }

    pub fn to(&self) -> Node {
        let (di, dj) = self.kind.step();
        Node::new(self.from.i + di, self.from.j + dj)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to())
    }
}

/// A path from the origin to the sink of an edit graph.
///
/// Paths are monotone, so two diffs have the same edge set exactly when
/// they have the same edge sequence; `==` compares sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Diff {
    edges: Vec<Edge>,
}

impl Diff {
    /// Builds the path that starts at the origin and takes `kinds` in order.
    pub fn from_kinds<I: IntoIterator<Item = EdgeKind>>(kinds: I) -> Self {
        let mut at = Node::ORIGIN;
        let edges = kinds
            .into_iter()
            .map(|kind| {
                let edge = Edge::new(at, kind);
                at = edge.to();
                edge
            })
            .collect();
        Self { edges }
    }

    /// Builds the canonical path through the given matched `(old, new)`
    /// pairs, ending at `sink`. Between matches, deletions come before
    /// additions. Pairs must be strictly increasing on both sides.
    pub fn from_matches(matches: &[(usize, usize)], sink: Node) -> Result<Self, ModelError> {
        let mut kinds = Vec::new();
        let mut at = Node::ORIGIN;
        for (position, &(i, j)) in matches.iter().enumerate() {
            if i <= at.i || j <= at.j || i > sink.i || j > sink.j {
                return Err(ModelError::BrokenPath { position });
            }
            kinds.extend(std::iter::repeat_n(EdgeKind::Horizontal, i - 1 - at.i));
            kinds.extend(std::iter::repeat_n(EdgeKind::Vertical, j - 1 - at.j));
            kinds.push(EdgeKind::Diagonal);
            at = Node { i, j };
        }
        kinds.extend(std::iter::repeat_n(EdgeKind::Horizontal, sink.i - at.i));
        kinds.extend(std::iter::repeat_n(EdgeKind::Vertical, sink.j - at.j));
        Ok(Self::from_kinds(kinds))
    }

    pub fn from_edges(edges: Vec<Edge>) -> Result<Self, ModelError> {
        let mut at = Node::ORIGIN;
        for (position, edge) in edges.iter().enumerate() {
            if edge.from != at {
                return Err(ModelError::BrokenPath { position });
            }
            at = edge.to();
        }
        Ok(Self { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn sink(&self) -> Node {
        self.edges.last().map_or(Node::ORIGIN, Edge::to)
    }

    pub fn kinds(&self) -> impl Iterator<Item = EdgeKind> + '_ {
        self.edges.iter().map(|e| e.kind)
    }

    pub fn count(&self, kind: EdgeKind) -> usize {
        self.kinds().filter(|k| *k == kind).count()
    }

    /// Horizontal plus vertical edges: the lines shown as changed.
    pub fn changed_lines(&self) -> usize {
        self.len() - self.count(EdgeKind::Diagonal)
    }

    pub fn has_changes(&self) -> bool {
        self.kinds().any(|k| k != EdgeKind::Diagonal)
    }

    /// Checks that the path ends at the pair's sink and that every diagonal
    /// joins equal lines.
    pub fn validate(&self, pair: &LinePair) -> Result<(), ModelError> {
        if self.sink() != pair.sink() {
            return Err(ModelError::WrongSink {
                expected: pair.sink(),
                found: self.sink(),
            });
        }
        for edge in &self.edges {
            let to = edge.to();
            if edge.kind == EdgeKind::Diagonal && !pair.eq(to.i, to.j) {
                return Err(ModelError::MissingDiagonal(to));
            }
        }
        Ok(())
    }

    /// Old line numbers shown as deleted.
    pub fn deleted_old(&self) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Horizontal)
            .map(|e| e.to().i)
            .collect()
    }

    /// New line numbers shown as added.
    pub fn added_new(&self) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Vertical)
            .map(|e| e.to().j)
            .collect()
    }

    /// Matched `(old, new)` line pairs.
    pub fn matches(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .filter(|e| e.kind == EdgeKind::Diagonal)
            .map(|e| {
                let to = e.to();
                (to.i, to.j)
            })
            .collect()
    }

    /// Compact textual form, one letter per edge: `d`, `h`, `v`.
    pub fn signature(&self) -> String {
        self.kinds()
            .map(|k| match k {
                EdgeKind::Horizontal => 'h',
                EdgeKind::Vertical => 'v',
                EdgeKind::Diagonal => 'd',
            })
            .collect()
    }
}

impl<'a> IntoIterator for &'a Diff {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

/// Renders `diff` as unified-diff hunks without file headers. Identical
/// inputs render as the empty string.
///
/// Hunk headers use original line numbers, so when blank lines were
/// stripped the numbers point into the unstripped files.
pub fn render_unified(pair: &LinePair, diff: &Diff, context: usize) -> Result<String, ModelError> {
    if diff.sink() != pair.sink() {
        return Err(ModelError::WrongSink {
            expected: pair.sink(),
            found: diff.sink(),
        });
    }
    let edges = diff.edges();
    let changes: Vec<usize> = (0..edges.len())
        .filter(|&k| edges[k].kind != EdgeKind::Diagonal)
        .collect();
    let mut out = String::new();
    let Some(&first) = changes.first() else {
        return Ok(out);
    };

    // Group changes whose separating context fits within both radii.
    let mut groups: Vec<(usize, usize)> = Vec::new();
    let (mut start, mut end) = (first, first);
    for &k in &changes[1..] {
        if k - end - 1 > context.saturating_mul(2) {
            groups.push((start, end));
            start = k;
        }
        end = k;
    }
    groups.push((start, end));

    for (first_change, last_change) in groups {
        let lo = first_change.saturating_sub(context);
        let hi = last_change.saturating_add(context).min(edges.len() - 1);
        let hunk = &edges[lo..=hi];
        let before = hunk[0].from;
        let old_count = hunk.iter().filter(|e| e.kind != EdgeKind::Vertical).count();
        let new_count = hunk.iter().filter(|e| e.kind != EdgeKind::Horizontal).count();
        let old_start = if old_count > 0 {
            pair.old_origin(before.i + 1)
        } else {
            pair.old_origin(before.i)
        };
        let new_start = if new_count > 0 {
            pair.new_origin(before.j + 1)
        } else {
            pair.new_origin(before.j)
        };
        writeln!(
            out,
            "@@ -{} +{} @@",
            HunkRange(old_start, old_count),
            HunkRange(new_start, new_count)
        )
        .unwrap();
        for edge in hunk {
            let to = edge.to();
            if to.i > pair.n() || to.j > pair.m() {
                return Err(ModelError::WrongSink {
                    expected: pair.sink(),
                    found: to,
                });
            }
            match edge.kind {
                EdgeKind::Diagonal => writeln!(out, " {}", pair.old_line(to.i)),
                EdgeKind::Horizontal => writeln!(out, "-{}", pair.old_line(to.i)),
                EdgeKind::Vertical => writeln!(out, "+{}", pair.new_line(to.j)),
            }
            .unwrap();
        }
    }
    Ok(out)
}

/// [`render_unified`] preceded by `---`/`+++` file headers. Returns the empty
/// string when there are no hunks.
pub fn render_unified_with_header(
    pair: &LinePair,
    diff: &Diff,
    context: usize,
    old_label: &str,
    new_label: &str,
) -> Result<String, ModelError> {
    let body = render_unified(pair, diff, context)?;
    if body.is_empty() {
        return Ok(body);
    }
    Ok(format!("--- {old_label}\n+++ {new_label}\n{body}"))
}

struct HunkRange(usize, usize);

impl fmt::Display for HunkRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.1 {
            1 => write!(f, "{}", self.0),
            count => write!(f, "{},{}", self.0, count),
        }
    }
}
