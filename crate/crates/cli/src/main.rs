use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use trace_poincare::cache::SeriesCache;
use trace_poincare::compute::{compute, Engine};
use trace_poincare::scan::{parse_range, scan, write_csv, ScanOptions, DEFAULT_COEFFICIENT_BUDGET};
use trace_poincare::suites::{self, Scope, VerifyOptions};
use trace_poincare_core::{ProblemSpec, Ring};

#[derive(Parser)]
#[command(name = "trace-poincare", version, about = "Exact Poincaré series of trace rings of generic matrices")]
struct Cli {
    /// Directory for cached engine output; TRACE_POINCARE_CACHE takes precedence.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Pure,
    Mixed,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Self {
        match r {
            RingArg::Pure => Ring::PureTrace,
            RingArg::Mixed => Ring::MixedTrace,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute one series and print it as a rational function.
    Compute {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "pure")]
        ring: RingArg,
        #[arg(long, value_enum, default_value = "molien")]
        engine: Engine,
        /// Truncation order for the molien engine; default deg(denominator) + 10.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exits nonzero if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        scope: Scope,
        /// Allowed |ratio - 1| in the asymptotic ratio test.
        #[arg(long, default_value_t = 0.01)]
        tolerance: f64,
        /// Write the JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Tabulate conjectured denominators over a grid as CSV.
    Scan {
        /// `a..b` (inclusive) or a single value.
        #[arg(long)]
        n: String,
        #[arg(long)]
        k: String,
        #[arg(long, value_enum, default_value = "pure")]
        ring: RingArg,
        #[arg(long)]
        order: Option<usize>,
        /// Also try every denominator with one cyclotomic exponent lowered.
        #[arg(long)]
        probe_smaller: bool,
        #[arg(long)]
        jobs: Option<usize>,
        /// Seconds per cell.
        #[arg(long, default_value_t = 600)]
        timeout: u64,
        /// Laurent table coefficients allowed per cell.
        #[arg(long, default_value_t = DEFAULT_COEFFICIENT_BUDGET)]
        budget: usize,
        /// Leave the seconds column empty.
        #[arg(long)]
        no_timing: bool,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<bool> {
    let cache = SeriesCache::resolve(cli.cache_dir.as_deref());
    match cli.command {
        Command::Compute { n, k, ring, engine, order, json } => {
            let spec = ProblemSpec::new(n, k, ring.into())?;
            let out = compute(&spec, engine, order, cache.as_ref())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                print!("{}", out.render_text());
            }
            Ok(true)
        }
        Command::Verify { scope, tolerance, output, json } => {
            let report = suites::run(scope, &VerifyOptions { tolerance, cache })?;
            if let Some(path) = output {
                let f = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                serde_json::to_writer_pretty(f, &report)?;
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.render_text());
            }
            Ok(report.ok())
        }
        Command::Scan { n, k, ring, order, probe_smaller, jobs, timeout, budget, no_timing, output } => {
            let mut opts = ScanOptions::new(parse_range(&n)?, parse_range(&k)?, ring.into());
            opts.order = order;
            opts.probe_smaller = probe_smaller;
            if let Some(j) = jobs {
                opts.jobs = j;
            }
            opts.timeout = Duration::from_secs(timeout);
            opts.coefficient_budget = budget;
            opts.cache = cache;
            opts.timing = !no_timing;
            let rows = scan(&opts)?;
            match output {
                Some(path) => {
                    let f = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    write_csv(&rows, f)?;
                }
                None => {
                    let stdout = io::stdout();
                    write_csv(&rows, stdout.lock())?;
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            let _ = writeln!(io::stderr(), "error: {e:#}");
            ExitCode::from(2)
        }
    }
}
