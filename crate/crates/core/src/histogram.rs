//! Histogram differencing.
//!
//! Splits the old and new regions on the common line that occurs least often
//! and recurses on both sides of it. Rare lines such as method signatures
//! make better anchors than braces and blank comment lines, so the result
//! often differs from a shortest edit script. The output is always a valid
//! path but is not necessarily shortest.

use std::collections::HashMap;

use crate::differ::{shortest_diff, ConstraintSet};
use crate::model::{Diff, Edge, EdgeKind, LinePair, Node};

/// Lines occurring more often than this in a region are never anchors.
pub const DEFAULT_MAX_OCCURRENCES: usize = 64;

pub fn histogram_diff(pair: &LinePair) -> Diff {
    histogram_diff_with(pair, DEFAULT_MAX_OCCURRENCES)
}

/// Histogram diff with a custom occurrence cap.
///
/// A line's occurrence count is the number of times it appears in the old
/// region plus the new region. Ties go to the lowest old line index; the
/// anchor is matched with the first occurrence in the new region.
pub fn histogram_diff_with(pair: &LinePair, max_occurrences: usize) -> Diff {
    let mut builder = PathBuilder {
        pair,
        max_occurrences,
        edges: Vec::with_capacity(pair.n() + pair.m()),
        at: Node::ORIGIN,
    };
    builder.region(0, pair.n(), 0, pair.m());
    Diff::from_edges(builder.edges).expect("regions are emitted in order")
}

struct PathBuilder<'a> {
    pair: &'a LinePair,
    max_occurrences: usize,
    edges: Vec<Edge>,
    at: Node,
}

impl PathBuilder<'_> {
    fn push(&mut self, kind: EdgeKind) {
        let edge = Edge::new(self.at, kind);
        self.at = edge.to();
        self.edges.push(edge);
    }

    /// Emits the path through old lines `old_lo..old_hi` and new lines
    /// `new_lo..new_hi` (0-based, half open).
    fn region(&mut self, old_lo: usize, old_hi: usize, new_lo: usize, new_hi: usize) {
        if old_lo == old_hi || new_lo == new_hi {
            (old_lo..old_hi).for_each(|_| self.push(EdgeKind::Horizontal));
            (new_lo..new_hi).for_each(|_| self.push(EdgeKind::Vertical));
            return;
        }
        match self.anchor(old_lo, old_hi, new_lo, new_hi) {
            Some((i, j)) => {
                self.region(old_lo, i, new_lo, j);
                self.push(EdgeKind::Diagonal);
                self.region(i + 1, old_hi, j + 1, new_hi);
            }
            None => self.fallback(old_lo, old_hi, new_lo, new_hi),
        }
    }

    fn anchor(&self, old_lo: usize, old_hi: usize, new_lo: usize, new_hi: usize) -> Option<(usize, usize)> {
        let old_ids = &self.pair.old_ids()[old_lo..old_hi];
        let new_ids = &self.pair.new_ids()[new_lo..new_hi];
        // id -> (occurrences, first new index)
        let mut counts: HashMap<u32, (usize, Option<usize>)> = HashMap::new();
        for &id in old_ids {
            counts.entry(id).or_insert((0, None)).0 += 1;
        }
        for (k, &id) in new_ids.iter().enumerate() {
            if let Some(entry) = counts.get_mut(&id) {
                entry.0 += 1;
                entry.1.get_or_insert(new_lo + k);
            }
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for (k, id) in old_ids.iter().enumerate() {
            let (count, first_new) = counts[id];
            let Some(j) = first_new else { continue };
            if count > self.max_occurrences {
                continue;
            }
            if best.is_none_or(|(c, _, _)| count < c) {
                best = Some((count, old_lo + k, j));
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn fallback(&mut self, old_lo: usize, old_hi: usize, new_lo: usize, new_hi: usize) {
        let sub = LinePair::new(
            self.pair.old_lines()[old_lo..old_hi].to_vec(),
            self.pair.new_lines()[new_lo..new_hi].to_vec(),
        );
        let diff = shortest_diff(&sub, &ConstraintSet::new(), None).expect("unconstrained graphs are feasible");
        diff.kinds().for_each(|kind| self.push(kind));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use EdgeKind::*;

    #[test]
    fn identical_files_are_all_diagonal() {
        let pair = LinePair::from_lines(&["a", "b", "c"], &["a", "b", "c"]);
        assert_eq!(histogram_diff(&pair), Diff::from_kinds([Diagonal; 3]));
    }

    #[test]
    fn rare_line_is_the_first_anchor() {
        // "c" occurs twice in total, "a" four times: split on c, then match
        // the a's on either side.
        let pair = LinePair::from_lines(&["a", "u", "c", "a"], &["a", "v", "c", "a"]);
        let diff = histogram_diff(&pair);
        assert_eq!(
            diff,
            Diff::from_kinds([Diagonal, Horizontal, Vertical, Diagonal, Diagonal])
        );
        assert_eq!(diff.matches(), vec![(1, 1), (3, 3), (4, 4)]);
    }

    #[test]
    fn prefers_unique_lines_over_a_longer_match() {
        let old = ["}", "}", "f()", "}"];
        let new = ["f()", "}", "}", "}"];
        let pair = LinePair::from_lines(&old, &new);
        let hist = histogram_diff(&pair);
        hist.validate(&pair).unwrap();
        assert!(hist.matches().contains(&(3, 1)));
        let shortest = shortest_diff(&pair, &ConstraintSet::new(), None).unwrap();
        assert!(hist.len() > shortest.len());
    }

    #[test]
    fn capped_lines_fall_back_to_shortest() {
        let pair = LinePair::from_lines(&["x", "y", "x"], &["y", "x", "y"]);
        let hist = histogram_diff_with(&pair, 1);
        assert_eq!(hist, shortest_diff(&pair, &ConstraintSet::new(), None).unwrap());
    }

    #[test]
    fn disjoint_files() {
        let pair = LinePair::from_lines(&["a", "b"], &["c"]);
        assert_eq!(
            histogram_diff(&pair),
            Diff::from_kinds([Horizontal, Horizontal, Vertical])
        );
        let pair = LinePair::from_lines(&[], &["c"]);
        assert_eq!(histogram_diff(&pair), Diff::from_kinds([Vertical]));
    }
}
