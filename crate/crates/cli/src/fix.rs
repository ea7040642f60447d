//! Feedback sessions stored as JSON lines, one action per line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use idiff::{replay, FeedbackAction, FeedbackError};

use crate::{PairArgs, EXIT_INFEASIBLE};

#[derive(clap::Args)]
pub struct Args {
    #[command(flatten)]
    pair: PairArgs,
    /// Feedback action such as '{"old":2,"new":null}'. Repeatable.
    #[arg(long = "action", value_name = "JSON")]
    actions: Vec<String>,
    /// Session file holding earlier actions; updated in place.
    #[arg(long)]
    session: Option<PathBuf>,
    /// Drop the most recent session action before applying new ones.
    #[arg(long)]
    undo: bool,
}

pub fn read_session(path: &Path) -> anyhow::Result<Vec<FeedbackAction>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let text = fs::read_to_string(path).with_context(|| format!("cannot read session {}", path.display()))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(k, l)| FeedbackAction::from_json(l).with_context(|| format!("{}:{}", path.display(), k + 1)))
        .collect()
}

fn write_session(path: &Path, actions: &[FeedbackAction]) -> anyhow::Result<()> {
    let text: String = actions.iter().map(|a| a.to_json() + "\n").collect();
    fs::write(path, text).with_context(|| format!("cannot write session {}", path.display()))
}

pub fn run(args: Args) -> anyhow::Result<ExitCode> {
    let mut actions = match &args.session {
        Some(path) => read_session(path)?,
        None => Vec::new(),
    };
    if args.undo && actions.pop().is_none() {
        eprintln!("idiff: nothing to undo");
    }
    for text in &args.actions {
        let action = FeedbackAction::from_json(text).with_context(|| format!("bad --action {text}"))?;
        if !actions.contains(&action) {
            actions.push(action);
        }
    }
    let pair = args.pair.load()?;
    let diffs = match replay(&pair, &actions) {
        Ok((_, diffs)) => diffs,
        Err(FeedbackError::Infeasible(conflict)) => {
            eprintln!("idiff: feedback leaves no diff: {conflict}");
            return Ok(ExitCode::from(EXIT_INFEASIBLE));
        }
        Err(e) => bail!(e),
    };
    if let Some(path) = &args.session {
        write_session(path, &actions)?;
    }
    let diff = diffs.last().expect("replay yields the initial diff");
    print!("{}", args.pair.render(&pair, diff));
    Ok(ExitCode::from(u8::from(diff.has_changes())))
}
