use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::Context;
use idiff::corpus::{self, filter, ingest, FilterConfig};
use idiff::report::{aggregate, write_cases_csv};
use idiff::search::{simulate_all, CaseStatus, SearchLimits, SimCase};

use crate::EXIT_NO_CASES;

#[derive(clap::Args)]
pub struct CorpusArgs {
    /// Directory of `<case>/old.*` + `<case>/new.*`, or a JSON-lines manifest.
    root: PathBuf,
    /// Keep empty lines instead of dropping them before diffing.
    #[arg(long)]
    keep_blank: bool,
    /// Largest file, in lines, kept by the filter.
    #[arg(long, default_value_t = idiff::MAX_LINES)]
    max_loc: usize,
    /// Largest initial candidate count kept by the filter.
    #[arg(long, default_value_t = 30)]
    max_candidates: usize,
    /// File of case ids to leave out, one per line.
    #[arg(long)]
    exclude: Option<PathBuf>,
}

impl CorpusArgs {
    fn load(&self) -> anyhow::Result<(usize, Vec<idiff::corpus::CorpusEntry>)> {
        let ingested = ingest(&self.root, !self.keep_blank)?;
        for skip in &ingested.skipped {
            eprintln!("idiff: skipped {}: {}", skip.id, skip.reason);
        }
        let exclude = match &self.exclude {
            Some(path) => FilterConfig::read_exclusions(path)?,
            None => Default::default(),
        };
        let config = FilterConfig {
            max_loc: self.max_loc,
            max_candidates: self.max_candidates,
            exclude,
        };
        let total = ingested.entries.len();
        Ok((total, filter(ingested.entries, &config)))
    }
}

#[derive(clap::Args)]
pub struct Args {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Output directory for cases.csv and summary.json.
    #[arg(long)]
    out: PathBuf,
    /// Time limit per case, e.g. 30min or 500ms. Defaults to
    /// IDIFF_BUDGET_SECS seconds, or 30 minutes.
    #[arg(long, value_parser = humantime::parse_duration)]
    budget: Option<Duration>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Leave the wall_ms column empty so repeated runs give identical files.
    #[arg(long)]
    omit_timing: bool,
}

fn budget(flag: Option<Duration>) -> anyhow::Result<Duration> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("IDIFF_BUDGET_SECS") {
        Ok(secs) => {
            let secs: f64 = secs.trim().parse().context("IDIFF_BUDGET_SECS is not a number")?;
            Duration::try_from_secs_f64(secs).context("IDIFF_BUDGET_SECS out of range")
        }
        Err(_) => Ok(SearchLimits::DEFAULT_BUDGET),
    }
}

pub fn run(args: Args) -> anyhow::Result<ExitCode> {
    let limits = SearchLimits::with_budget(budget(args.budget)?);
    let (total, entries) = args.corpus.load()?;
    let cases: Vec<SimCase> = entries.into_iter().map(|e| e.case).collect();
    eprintln!(
        "idiff: {} of {total} pairs kept, simulating on {} threads",
        cases.len(),
        args.jobs.max(1)
    );

    let started = Instant::now();
    let results = simulate_all(&cases, limits, args.jobs);
    let report = aggregate(&results);

    fs::create_dir_all(&args.out).with_context(|| format!("cannot create {}", args.out.display()))?;
    let csv_path = args.out.join("cases.csv");
    let file = fs::File::create(&csv_path).with_context(|| format!("cannot write {}", csv_path.display()))?;
    write_cases_csv(&results, file, !args.omit_timing)?;
    let json_path = args.out.join("summary.json");
    fs::write(&json_path, report.to_json()).with_context(|| format!("cannot write {}", json_path.display()))?;

    eprintln!(
        "idiff: {} solved, {} failed in {:.1?}",
        report.solved,
        results.iter().filter(|r| r.status != CaseStatus::Solved).count(),
        started.elapsed()
    );
    if report.solved == 0 {
        eprintln!("idiff: no cases solved");
        return Ok(ExitCode::from(EXIT_NO_CASES));
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(clap::Args)]
pub struct SummarizeArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Print CSV instead of an aligned table.
    #[arg(long)]
    csv: bool,
}

pub fn summarize(args: SummarizeArgs) -> anyhow::Result<ExitCode> {
    let (_, entries) = args.corpus.load()?;
    let summary = corpus::summarize(&entries);
    if args.csv {
        print!("{}", summary.to_csv());
    } else {
        print!("{}", summary.render_text());
    }
    Ok(ExitCode::SUCCESS)
}
