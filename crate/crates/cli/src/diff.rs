use std::process::ExitCode;

use idiff::{diff_fix, histogram_diff, FeedbackState};

use crate::PairArgs;

#[derive(clap::Args)]
pub struct Args {
    #[command(flatten)]
    pair: PairArgs,
    /// Use the histogram differencer instead of the shortest diff.
    #[arg(long)]
    histogram: bool,
}

pub fn run(args: Args) -> anyhow::Result<ExitCode> {
    let pair = args.pair.load()?;
    let diff = if args.histogram {
        histogram_diff(&pair)
    } else {
        diff_fix(&pair, &FeedbackState::new()).expect("no feedback, always feasible")
    };
    print!("{}", args.pair.render(&pair, &diff));
    Ok(ExitCode::from(u8::from(diff.has_changes())))
}
