//! One interactive session: a line pair, its feedback history and the diff
//! currently shown.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::time::Instant;

use idiff::{
    action_from_edge, diff_fix, diff_fix_from, render_unified, render_unified_with_header, Diff, EdgeKind,
    FeedbackAction, FeedbackError, FeedbackState, LinePair,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LineKind {
    Ctx,
    Del,
    Add,
}

impl From<EdgeKind> for LineKind {
    fn from(kind: EdgeKind) -> Self {
        match kind {
            EdgeKind::Diagonal => LineKind::Ctx,
            EdgeKind::Horizontal => LineKind::Del,
            EdgeKind::Vertical => LineKind::Add,
        }
    }
}

/// One displayed row. `old` and `new` are 1-based positions in the
/// compared sequences, the same coordinates actions use.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PayloadLine {
    pub kind: LineKind,
    pub old: Option<usize>,
    pub new: Option<usize>,
    pub text: String,
}

/// A click on a displayed row, stamped with the revision it was seen at.
#[derive(Debug, Clone, Deserialize)]
pub struct Click {
    pub kind: LineKind,
    pub old: Option<usize>,
    pub new: Option<usize>,
    pub revision: String,
}

/// Everything a client needs to render the session. Depends only on the
/// applied feedback, so returning to an earlier state reproduces its payload
/// byte for byte; redo availability travels in the `x-redo-depth` header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Payload {
    pub id: String,
    /// Identifies the feedback state; equal states give equal revisions.
    pub revision: String,
    pub feasible: bool,
    /// Why the last click was rolled back.
    pub conflict: Option<String>,
    /// Set when the last click was accepted but can never be satisfied on
    /// its own terms.
    pub warning: Option<String>,
    pub actions: Vec<FeedbackAction>,
    pub can_undo: bool,
    pub lines: Vec<PayloadLine>,
}

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("revision {given} is stale, the session is at {current}")]
    StaleRevision { given: String, current: String },
    #[error("the clicked line is not part of the current diff")]
    StaleClick,
    #[error(transparent)]
    Feedback(#[from] FeedbackError),
}

/// What happened to a click.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClickOutcome {
    Applied {
        warning: Option<String>,
    },
    /// The action left no diff; nothing changed.
    RolledBack {
        conflict: String,
    },
}

pub struct Session {
    pub id: String,
    pub pair: LinePair,
    old_name: Option<String>,
    new_name: Option<String>,
    /// Every action given, including undone ones still available to redo.
    history: Vec<FeedbackAction>,
    /// How many of `history` are in effect.
    applied: usize,
    state: FeedbackState,
    /// Diff after each applied prefix of `history`, the first with no
    /// feedback.
    diffs: Vec<Diff>,
    pub last_used: Instant,
}

impl Session {
    pub fn new(id: String, pair: LinePair, old_name: Option<String>, new_name: Option<String>) -> Self {
        let initial = diff_fix(&pair, &FeedbackState::new()).expect("a graph without feedback always has a path");
        Self {
            id,
            pair,
            old_name,
            new_name,
            history: Vec::new(),
            applied: 0,
            state: FeedbackState::new(),
            diffs: vec![initial],
            last_used: Instant::now(),
        }
    }

    pub fn diff(&self) -> &Diff {
        self.diffs.last().expect("at least the initial diff")
    }

    pub fn actions(&self) -> &[FeedbackAction] {
        self.state.actions()
    }

    pub fn revision(&self) -> String {
        let mut hasher = DefaultHasher::new();
        self.actions().hash(&mut hasher);
        format!("{}-{:016x}", self.applied, hasher.finish())
    }

    pub fn can_undo(&self) -> bool {
        self.applied > 0
    }

    pub fn can_redo(&self) -> bool {
        self.redo_depth() > 0
    }

    /// Undone actions available to redo.
    pub fn redo_depth(&self) -> usize {
        self.history.len() - self.applied
    }

    /// Applies a click made on the diff seen at `click.revision`.
    pub fn click(&mut self, click: &Click) -> Result<ClickOutcome, SessionError> {
        let current = self.revision();
        if click.revision != current {
            return Err(SessionError::StaleRevision {
                given: click.revision.clone(),
                current,
            });
        }
        let edge = self
            .diff()
            .edges()
            .iter()
            .find(|e| {
                let to = e.to();
                LineKind::from(e.kind) == click.kind
                    && match e.kind {
                        EdgeKind::Diagonal => click.old == Some(to.i) && click.new == Some(to.j),
                        EdgeKind::Horizontal => click.old == Some(to.i),
                        EdgeKind::Vertical => click.new == Some(to.j),
                    }
            })
            .ok_or(SessionError::StaleClick)?;
        self.apply(action_from_edge(edge))
    }

    /// Adds `action` on top of the applied prefix. Undone actions are
    /// dropped. Infeasible actions leave the session untouched.
    pub fn apply(&mut self, action: FeedbackAction) -> Result<ClickOutcome, SessionError> {
        let warning = idiff::expand_action(action, &self.pair)?.warning;
        let next = self.state.with(&self.pair, action)?;
        match diff_fix_from(&self.pair, &next, self.diff()) {
            Ok(diff) => {
                self.history.truncate(self.applied);
                self.history.push(action);
                self.applied += 1;
                self.state = next;
                self.diffs.push(diff);
                Ok(ClickOutcome::Applied { warning })
            }
            Err(infeasible) => Ok(ClickOutcome::RolledBack {
                conflict: format!("feedback {action} rejected: {infeasible}"),
            }),
        }
    }

    /// Returns false when there was nothing to undo.
    pub fn undo(&mut self) -> bool {
        if !self.can_undo() {
            return false;
        }
        self.applied -= 1;
        self.diffs.pop();
        self.state = self.state.without_last(&self.pair);
        true
    }

    /// Returns false when there was nothing to redo.
    pub fn redo(&mut self) -> bool {
        if !self.can_redo() {
            return false;
        }
        let action = self.history[self.applied];
        self.state = self.state.with(&self.pair, action).expect("redone actions were valid");
        let diff = diff_fix_from(&self.pair, &self.state, self.diff()).expect("redone actions were feasible");
        self.diffs.push(diff);
        self.applied += 1;
        true
    }

    pub fn payload(&self, outcome: Option<&ClickOutcome>) -> Payload {
        let lines = self
            .diff()
            .edges()
            .iter()
            .map(|e| {
                let to = e.to();
                let (old, new, text) = match e.kind {
                    EdgeKind::Diagonal => (Some(to.i), Some(to.j), self.pair.old_line(to.i)),
                    EdgeKind::Horizontal => (Some(to.i), None, self.pair.old_line(to.i)),
                    EdgeKind::Vertical => (None, Some(to.j), self.pair.new_line(to.j)),
                };
                PayloadLine {
                    kind: e.kind.into(),
                    old,
                    new,
                    text: text.to_string(),
                }
            })
            .collect();
        let (conflict, warning) = match outcome {
            Some(ClickOutcome::RolledBack { conflict }) => (Some(conflict.clone()), None),
            Some(ClickOutcome::Applied { warning }) => (None, warning.clone()),
            None => (None, None),
        };
        Payload {
            id: self.id.clone(),
            revision: self.revision(),
            feasible: conflict.is_none(),
            conflict,
            warning,
            actions: self.actions().to_vec(),
            can_undo: self.can_undo(),
            lines,
        }
    }

    /// Unified hunks of the current diff, with file headers when the session
    /// was given names.
    pub fn export_unified(&self, context: usize) -> String {
        let diff = self.diff();
        let rendered = match (&self.old_name, &self.new_name) {
            (Some(old), Some(new)) => render_unified_with_header(&self.pair, diff, context, old, new),
            _ => render_unified(&self.pair, diff, context),
        };
        rendered.expect("session diffs fit their pair")
    }

    /// The applied actions as JSON lines.
    pub fn export_actions(&self) -> String {
        self.actions().iter().map(|a| a.to_json() + "\n").collect()
    }
}
