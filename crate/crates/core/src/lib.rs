//! Interactive optimization of line diffs.
//!
//! A diff between two versions of a file is a path through their edit graph.
//! This crate computes shortest paths on that graph, lets a reviewer remove
//! edges by pointing at lines they dislike, and recomputes the diff under the
//! accumulated feedback. It also contains the machinery for measuring how much
//! feedback such a loop needs: a histogram differencer that produces target
//! diffs, an A* search over feedback sets, and corpus tooling.
//!
//! ```
//! use idiff::{diff_fix, FeedbackAction, FeedbackState, LinePair};
//!
//! let pair = LinePair::from_lines(&["x", "a"], &["a", "x"]);
//! let first = diff_fix(&pair, &FeedbackState::new()).unwrap();
//! assert_eq!(first.matches(), vec![(2, 1)]);
//!
//! // "old line 2 should not be matched with new line 1"
//! let state = FeedbackState::new()
//!     .with(&pair, FeedbackAction::Mismatch { old: 2, new: 1 })
//!     .unwrap();
//! assert_eq!(diff_fix(&pair, &state).unwrap().matches(), vec![(1, 2)]);
//! ```

pub mod corpus;
pub mod differ;
pub mod feedback;
pub mod histogram;
pub mod model;
pub mod report;
pub mod search;

pub use differ::{lcs_length, shortest_diff, ConstraintSet, Infeasible};
pub use feedback::{
    action_from_edge, diff_fix, diff_fix_from, expand_action, replay, FeedbackAction, FeedbackError, FeedbackState,
};
pub use histogram::histogram_diff;
pub use model::{render_unified, render_unified_with_header, Diff, Edge, EdgeKind, LinePair, Node};
pub use search::{
    candidates, depth1_study, mismatch_area_count, similarity_distance, solve_min_feedback, SimCase, SimResult,
};

/// Largest file, in lines per side, accepted by the interactive service and
/// kept by the default corpus filter.
pub const MAX_LINES: usize = 3000;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/edit-graph.md")]
    mod edit_graph {}
    #[doc = include_str!("../../../book/src/feedback.md")]
    mod feedback {}
    #[doc = include_str!("../../../book/src/histogram.md")]
    mod histogram {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/corpus.md")]
    mod corpus {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
