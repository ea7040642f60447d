mod diff;
mod fix;
mod serve;
mod simulate;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Exit status for infeasible feedback.
pub const EXIT_INFEASIBLE: u8 = 3;
/// Exit status when a simulation solved no case.
pub const EXIT_NO_CASES: u8 = 4;

#[derive(Parser)]
#[command(name = "idiff", version, about = "Line diffs you can correct by pointing at lines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a unified diff. Exits 0 when equal, 1 when different, 2 on error.
    Diff(diff::Args),
    /// Apply feedback actions and print the resulting diff.
    Fix(fix::Args),
    /// Measure how much feedback a corpus needs.
    Simulate(simulate::Args),
    /// Print dataset attributes of a corpus.
    Summarize(simulate::SummarizeArgs),
    /// Run the local session service.
    Serve(serve::Args),
}

/// Options shared by commands that read a pair of files.
#[derive(clap::Args)]
pub struct PairArgs {
    pub old: PathBuf,
    pub new: PathBuf,
    /// Ignore empty lines.
    #[arg(long)]
    pub strip_blank: bool,
    /// Lines of context around changes.
    #[arg(long, short = 'U', default_value_t = 3)]
    pub context: usize,
}

impl PairArgs {
    pub fn load(&self) -> anyhow::Result<idiff::LinePair> {
        use anyhow::Context;
        let read = |p: &PathBuf| std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()));
        Ok(idiff::LinePair::from_texts(
            &read(&self.old)?,
            &read(&self.new)?,
            self.strip_blank,
        ))
    }

    /// Unified text with the paths as headers, empty when there are no
    /// changes.
    pub fn render(&self, pair: &idiff::LinePair, diff: &idiff::Diff) -> String {
        idiff::render_unified_with_header(
            pair,
            diff,
            self.context,
            &self.old.display().to_string(),
            &self.new.display().to_string(),
        )
        .expect("diffs computed for this pair fit it")
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Diff(args) => diff::run(args),
        Command::Fix(args) => fix::run(args),
        Command::Simulate(args) => simulate::run(args),
        Command::Summarize(args) => simulate::summarize(args),
        Command::Serve(args) => serve::run(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("idiff: {e:#}");
            ExitCode::from(2)
        }
    }
}
