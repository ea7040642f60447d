//! Feedback actions and the feedback-aware differencer.
//!
//! A reviewer who dislikes how a line is shown points at it. Pointing at a
//! matched pair removes that one diagonal; pointing at a deleted old line or
//! an added new line removes every edge that would show that line as deleted
//! or added again.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::differ::{shortest_diff, ConstraintSet, Infeasible};
use crate::model::{Diff, Edge, EdgeKind, LinePair, ModelError};

/// One unit of reviewer dissatisfaction.
///
/// Written `(i,j)`, `(i,*)` and `(*,j)`; serialized as
/// `{"old": i, "new": j}` with `null` for the wildcard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FeedbackAction {
    /// Old line `old` should not be matched with new line `new`.
    Mismatch { old: usize, new: usize },
    /// Old line should not be shown as deleted.
    OldOrphan(usize),
    /// New line should not be shown as added.
    NewOrphan(usize),
}

impl FeedbackAction {
    pub fn old(&self) -> Option<usize> {
        match *self {
            FeedbackAction::Mismatch { old, .. } | FeedbackAction::OldOrphan(old) => Some(old),
            FeedbackAction::NewOrphan(_) => None,
        }
    }

    pub fn new_index(&self) -> Option<usize> {
        match *self {
            FeedbackAction::Mismatch { new, .. } | FeedbackAction::NewOrphan(new) => Some(new),
            FeedbackAction::OldOrphan(_) => None,
        }
    }

    pub fn from_parts(old: Option<usize>, new: Option<usize>) -> Result<Self, ActionParseError> {
        match (old, new) {
            (Some(0), _) | (_, Some(0)) => Err(ActionParseError::ZeroIndex),
            (Some(old), Some(new)) => Ok(FeedbackAction::Mismatch { old, new }),
            (Some(old), None) => Ok(FeedbackAction::OldOrphan(old)),
            (None, Some(new)) => Ok(FeedbackAction::NewOrphan(new)),
            (None, None) => Err(ActionParseError::BothWildcards),
        }
    }

    /// Parses the JSON object form.
    pub fn from_json(text: &str) -> Result<Self, ActionParseError> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| ActionParseError::Json(e.to_string()))?;
        if !value.is_object() {
            return Err(ActionParseError::Json("expected a JSON object".to_string()));
        }
        serde_json::from_value(value).map_err(|e| ActionParseError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("actions always serialize")
    }
}

/// The action a click on `edge` produces.
pub fn action_from_edge(edge: &Edge) -> FeedbackAction {
    let to = edge.to();
    match edge.kind {
        EdgeKind::Diagonal => FeedbackAction::Mismatch { old: to.i, new: to.j },
        EdgeKind::Horizontal => FeedbackAction::OldOrphan(to.i),
        EdgeKind::Vertical => FeedbackAction::NewOrphan(to.j),
    }
}

/// The set of actions obtainable from the edges of `diff`.
pub fn actions_of(diff: &Diff) -> BTreeSet<FeedbackAction> {
    diff.edges().iter().map(action_from_edge).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionParseError {
    #[error("an action needs at least one of old/new")]
    BothWildcards,
    #[error("line numbers are 1-based")]
    ZeroIndex,
    #[error("malformed action: {0}")]
    Json(String),
    #[error("malformed action {0:?}, expected (i,j), (i,*) or (*,j)")]
    Syntax(String),
}

#[derive(Serialize, Deserialize)]
struct WireAction {
    old: Option<usize>,
    new: Option<usize>,
}

impl Serialize for FeedbackAction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WireAction {
            old: self.old(),
            new: self.new_index(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FeedbackAction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = WireAction::deserialize(deserializer)?;
        FeedbackAction::from_parts(wire.old, wire.new).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for FeedbackAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeedbackAction::Mismatch { old, new } => write!(f, "({old},{new})"),
            FeedbackAction::OldOrphan(old) => write!(f, "({old},*)"),
            FeedbackAction::NewOrphan(new) => write!(f, "(*,{new})"),
        }
    }
}

impl FromStr for FeedbackAction {
    type Err = ActionParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || ActionParseError::Syntax(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(syntax)?;
        let (old, new) = inner.split_once(',').ok_or_else(syntax)?;
        let part = |p: &str| -> Result<Option<usize>, ActionParseError> {
            match p.trim() {
                "*" => Ok(None),
                n => n.parse().map(Some).map_err(|_| syntax()),
            }
        };
        FeedbackAction::from_parts(part(old)?, part(new)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FeedbackError {
    #[error(transparent)]
    OutOfRange(#[from] ModelError),
    #[error("old line {old} and new line {new} are not equal, so they are never matched")]
    NoSuchMatch { old: usize, new: usize },
    #[error(transparent)]
    Infeasible(#[from] Infeasible),
}

/// Edge removals contributed by a single action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintDelta {
    pub constraints: ConstraintSet,
    /// Set when the action alone already leaves no feasible diff.
    pub warning: Option<String>,
}

/// Translates `action` into the edges it removes from the pair's edit graph.
pub fn expand_action(action: FeedbackAction, pair: &LinePair) -> Result<ConstraintDelta, FeedbackError> {
    let mut constraints = ConstraintSet::new();
    let mut warning = None;
    match action {
        FeedbackAction::Mismatch { old, new } => {
            if !pair.try_eq(old, new)? {
                return Err(FeedbackError::NoSuchMatch { old, new });
            }
            constraints.removed_diagonals.insert((old, new));
        }
        FeedbackAction::OldOrphan(old) => {
            pair.check_old(old)?;
            if !(1..=pair.m()).any(|j| pair.eq(old, j)) {
                warning = Some(format!(
                    "old line {old} equals no new line, so keeping it is trivially infeasible"
                ));
            }
            constraints.banned_old.insert(old);
        }
        FeedbackAction::NewOrphan(new) => {
            pair.check_new(new)?;
            if !(1..=pair.n()).any(|i| pair.eq(i, new)) {
                warning = Some(format!(
                    "new line {new} equals no old line, so keeping it is trivially infeasible"
                ));
            }
            constraints.banned_new.insert(new);
        }
    }
    Ok(ConstraintDelta { constraints, warning })
}

/// Accumulated feedback for one line pair.
///
/// Actions keep the order they were given in; the constraint set is their
/// union and ignores order and duplicates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FeedbackState {
    actions: Vec<FeedbackAction>,
    constraints: ConstraintSet,
}

impl FeedbackState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_actions<I>(pair: &LinePair, actions: I) -> Result<Self, FeedbackError>
    where
        I: IntoIterator<Item = FeedbackAction>,
    {
        actions
            .into_iter()
            .try_fold(Self::new(), |state, action| state.with(pair, action))
    }

    /// A new state with `action` added. Duplicates leave the state unchanged.
    pub fn with(&self, pair: &LinePair, action: FeedbackAction) -> Result<Self, FeedbackError> {
        let mut next = self.clone();
        if self.actions.contains(&action) {
            return Ok(next);
        }
        let delta = expand_action(action, pair)?;
        next.constraints.extend(&delta.constraints);
        next.actions.push(action);
        Ok(next)
    }

    /// The state without its most recent action, rebuilt from the rest.
    pub fn without_last(&self, pair: &LinePair) -> Self {
        let mut actions = self.actions.clone();
        actions.pop();
        Self::from_actions(pair, actions).expect("prefix of a valid state is valid")
    }

    pub fn actions(&self) -> &[FeedbackAction] {
        &self.actions
    }

    pub fn action_set(&self) -> BTreeSet<FeedbackAction> {
        self.actions.iter().copied().collect()
    }

    pub fn constraints(&self) -> &ConstraintSet {
        &self.constraints
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }
}

/// The shortest diff under all feedback in `state`, with every action
/// treated as given at once.
pub fn diff_fix(pair: &LinePair, state: &FeedbackState) -> Result<Diff, Infeasible> {
    shortest_diff(pair, state.constraints(), None)
}

/// Same as [`diff_fix`] but keeps as much of `previous` as a shortest path
/// allows. This is what an interactive session shows after a click.
pub fn diff_fix_from(pair: &LinePair, state: &FeedbackState, previous: &Diff) -> Result<Diff, Infeasible> {
    shortest_diff(pair, state.constraints(), Some(previous))
}

/// Replays `actions` one at a time, each step using the previous diff as its
/// reference. Returns the final state and the diff after every step, the
/// first being the diff with no feedback.
pub fn replay(pair: &LinePair, actions: &[FeedbackAction]) -> Result<(FeedbackState, Vec<Diff>), FeedbackError> {
    let mut state = FeedbackState::new();
    let mut diffs = vec![diff_fix(pair, &state)?];
    for &action in actions {
        state = state.with(pair, action)?;
        let previous = diffs.last().expect("at least the initial diff");
        diffs.push(diff_fix_from(pair, &state, previous)?);
    }
    Ok((state, diffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Node;
    use FeedbackAction::*;

    #[test]
    fn actions_from_edges() {
        let d = Edge::new(Node::new(2, 5), EdgeKind::Diagonal);
        assert_eq!(action_from_edge(&d), Mismatch { old: 3, new: 6 });
        let h = Edge::new(Node::new(1, 3), EdgeKind::Horizontal);
        assert_eq!(action_from_edge(&h), OldOrphan(2));
        let v = Edge::new(Node::new(4, 6), EdgeKind::Vertical);
        assert_eq!(action_from_edge(&v), NewOrphan(7));
    }

    #[test]
    fn json_encoding() {
        assert_eq!(OldOrphan(2).to_json(), r#"{"old":2,"new":null}"#);
        assert_eq!(NewOrphan(7).to_json(), r#"{"old":null,"new":7}"#);
        assert_eq!(Mismatch { old: 3, new: 6 }.to_json(), r#"{"old":3,"new":6}"#);
        assert_eq!(
            FeedbackAction::from_json(r#"{"old":3,"new":6}"#),
            Ok(Mismatch { old: 3, new: 6 })
        );
        assert!(FeedbackAction::from_json(r#"{"old":null,"new":null}"#).is_err());
        assert!(FeedbackAction::from_json(r#"{"old":0,"new":1}"#).is_err());
        assert!(FeedbackAction::from_json("[1,2]").is_err());
    }

    #[test]
    fn display_and_parse() {
        for a in [OldOrphan(2), NewOrphan(7), Mismatch { old: 9, new: 8 }] {
            assert_eq!(a.to_string().parse::<FeedbackAction>(), Ok(a));
        }
        assert_eq!(OldOrphan(2).to_string(), "(2,*)");
        assert!("(*,*)".parse::<FeedbackAction>().is_err());
        assert!("2,3".parse::<FeedbackAction>().is_err());
    }

    #[test]
    fn expand_mismatch_and_orphans() {
        let old: Vec<&str> = vec!["a", "b", "c"];
        let new: Vec<&str> = vec!["x", "a", "x", "x", "x", "c", "x", "x", "x"];
        let pair = LinePair::from_lines(&old, &new);
        let delta = expand_action(Mismatch { old: 3, new: 6 }, &pair).unwrap();
        assert!(delta.constraints.removed_diagonals.contains(&(3, 6)));
        assert!(delta.warning.is_none());

        let delta = expand_action(OldOrphan(2), &pair).unwrap();
        assert_eq!(delta.constraints.banned_old, BTreeSet::from([2]));
        for j in 0..=pair.m() {
            assert!(delta
                .constraints
                .is_removed(&Edge::into_node(Node::new(2, j), EdgeKind::Horizontal)));
        }
        assert!(delta.warning.unwrap().contains("trivially infeasible"));

        assert!(expand_action(OldOrphan(1), &pair).unwrap().warning.is_none());
        assert!(expand_action(NewOrphan(1), &pair).unwrap().warning.is_some());
    }

    #[test]
    fn expand_rejects_bad_actions() {
        let pair = LinePair::from_lines(&["a", "b"], &["a", "c"]);
        assert_eq!(
            expand_action(Mismatch { old: 2, new: 2 }, &pair),
            Err(FeedbackError::NoSuchMatch { old: 2, new: 2 })
        );
        assert!(matches!(
            expand_action(OldOrphan(3), &pair),
            Err(FeedbackError::OutOfRange(_))
        ));
        assert!(matches!(
            expand_action(NewOrphan(0), &pair),
            Err(FeedbackError::OutOfRange(_))
        ));
    }

    #[test]
    fn state_ignores_duplicates_and_order() {
        let pair = LinePair::from_lines(&["a", "b", "a"], &["b", "a", "b"]);
        let a = FeedbackState::from_actions(&pair, [OldOrphan(1), Mismatch { old: 2, new: 1 }, OldOrphan(1)]).unwrap();
        let b = FeedbackState::from_actions(&pair, [Mismatch { old: 2, new: 1 }, OldOrphan(1)]).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.constraints(), b.constraints());
        assert_eq!(a.without_last(&pair).actions(), [OldOrphan(1)]);
    }

    #[test]
    fn empty_feedback_is_the_plain_diff() {
        let pair = LinePair::from_lines(&["a", "b", "c"], &["a", "c"]);
        assert_eq!(
            diff_fix(&pair, &FeedbackState::new()).unwrap(),
            shortest_diff(&pair, &ConstraintSet::new(), None).unwrap()
        );
    }

    #[test]
    fn mismatch_switches_to_the_other_match() {
        // Both shortest diffs match exactly one line: x or a.
        let pair = LinePair::from_lines(&["x", "a"], &["a", "x"]);
        let initial = diff_fix(&pair, &FeedbackState::new()).unwrap();
        let (old, new) = initial.matches()[0];
        let state = FeedbackState::from_actions(&pair, [Mismatch { old, new }]).unwrap();
        let fixed = diff_fix(&pair, &state).unwrap();
        let other = if (old, new) == (1, 2) { (2, 1) } else { (1, 2) };
        assert_eq!(fixed.matches(), vec![other]);
    }

    #[test]
    fn replay_starts_from_the_plain_diff() {
        let pair = LinePair::from_lines(&["x", "a"], &["a", "x"]);
        let (state, diffs) = replay(&pair, &[Mismatch { old: 2, new: 1 }]).unwrap();
        assert_eq!(state.len(), 1);
        assert_eq!(diffs.len(), 2);
        assert_eq!(diffs[0], diff_fix(&pair, &FeedbackState::new()).unwrap());
    }
}
