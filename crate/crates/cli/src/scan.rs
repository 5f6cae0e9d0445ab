//! The `scan` subcommand: conjectured denominators over an `(n, k)` grid,
//! each checked against fixtures and, where the engine finishes in budget,
//! against the series itself.

use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use serde::Serialize;
use trace_poincare_core::denomconj::{compare_denominators, conjectured_denominator, known_denominator, lcm_reading};
use trace_poincare_core::molien::{reconstruct_proper, MolienOptions, DEFAULT_GUARD_MARGIN};
use trace_poincare_core::verify::{check_functional_equation, leastness_certificate, probe_smaller_denominators};
use trace_poincare_core::{Error, FactoredDenominator, ProblemSpec, Ring};

use crate::cache::SeriesCache;
use crate::compute::cached_series;
use crate::fixtures::dokovic;
use crate::format::exponents_cell;

/// Table coefficients a cell may hold, summed over all terms; the per-term
/// limit handed to the engine is this divided by `order + 1`.
pub const DEFAULT_COEFFICIENT_BUDGET: usize = 20_000_000;
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(600);

/// Parses `a..b`, `a..=b` (both inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let parse = |x: &str| x.trim().parse::<usize>().with_context(|| format!("bad range bound {x:?}"));
    let r = match s.split_once("..") {
        Some((a, b)) => parse(a)?..=parse(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let v = parse(s)?;
            v..=v
        }
    };
    if r.is_empty() {
        bail!("empty range {s:?}");
    }
    Ok(r)
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub n: RangeInclusive<usize>,
    pub k: RangeInclusive<usize>,
    pub ring: Ring,
    /// Overrides `deg(conjectured) + 10`.
    pub order: Option<usize>,
    pub probe_smaller: bool,
    pub jobs: usize,
    pub timeout: Duration,
    pub coefficient_budget: usize,
    pub cache: Option<SeriesCache>,
    /// Leave the `seconds` column empty so output is reproducible.
    pub timing: bool,
}

impl ScanOptions {
    pub fn new(n: RangeInclusive<usize>, k: RangeInclusive<usize>, ring: Ring) -> Self {
        Self {
            n,
            k,
            ring,
            order: None,
            probe_smaller: false,
            jobs: std::thread::available_parallelism().map_or(1, |p| p.get()),
            timeout: DEFAULT_TIMEOUT,
            coefficient_budget: DEFAULT_COEFFICIENT_BUDGET,
            cache: None,
            timing: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellStatus {
    /// Reconstruction over the conjectured denominator succeeded.
    Verified,
    /// The series is not a polynomial over the conjectured denominator.
    Failed,
    /// No series: out of time.
    Timeout,
    /// No series: the Laurent table outgrew the coefficient budget.
    Limit,
    /// No product form, or the order is too short to decide.
    Unverified,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub n: usize,
    pub k: usize,
    pub ring: &'static str,
    pub conjectured_cyclotomic: String,
    pub conjectured_product: String,
    pub lcm_reading: String,
    /// `match`, `mismatch` or `none` against the proven or tabulated denominator.
    pub fixture: &'static str,
    pub status: CellStatus,
    pub order: usize,
    /// `+1`, `-1`, `fail`, or empty when there is no function.
    pub functional_equation: String,
    /// `yes`, `no`, or empty.
    pub least: String,
    /// `rejected a/b`, or empty when not requested.
    pub probe_smaller: String,
    pub detail: String,
    pub seconds: String,
}

fn reference(n: usize, k: usize, ring: Ring) -> Option<FactoredDenominator> {
    known_denominator(n, k, ring).or_else(|| dokovic(n, k, ring))
}

fn run_cell(n: usize, k: usize, opts: &ScanOptions, cancel: &AtomicBool) -> Result<ScanRow> {
    let start = Instant::now();
    let ring = opts.ring;
    let spec = ProblemSpec::new(n, k, ring)?;
    let conj = conjectured_denominator(n, k, ring)?;
    let lcm = lcm_reading(n, k, ring)?;
    let fixture = match (reference(n, k, ring), &conj.product) {
        (Some(r), Some(p)) if compare_denominators(&r, p).is_equal() => "match",
        (Some(r), None) if r.to_cyclotomic() == conj.cyclotomic => "match",
        (Some(_), _) => "mismatch",
        (None, _) => "none",
    };
    let order = opts.order.unwrap_or(conj.degree() + 10);
    let mut row = ScanRow {
        n,
        k,
        ring: ring.as_str(),
        conjectured_cyclotomic: exponents_cell(conj.cyclotomic.iter()),
        conjectured_product: conj.product.as_ref().map_or_else(String::new, |p| exponents_cell(p.iter())),
        lcm_reading: exponents_cell(lcm.cyclotomic.iter()),
        fixture,
        status: CellStatus::Unverified,
        order,
        functional_equation: String::new(),
        least: String::new(),
        probe_smaller: String::new(),
        detail: String::new(),
        seconds: String::new(),
    };
    let finish = |mut row: ScanRow| {
        if opts.timing {
            row.seconds = format!("{:.3}", start.elapsed().as_secs_f64());
        }
        Ok(row)
    };

    let Some(den) = conj.product.clone() else {
        row.detail = "no (1 - t^i) product form".into();
        return finish(row);
    };
    let engine = MolienOptions {
        cancel: Some(cancel),
        max_terms: Some((opts.coefficient_budget / (order + 1)).max(1)),
        ..MolienOptions::default()
    };
    let series = match cached_series(&spec, order, opts.cache.as_ref(), &engine) {
        Ok(s) => s,
        Err(e @ Error::Cancelled) => {
            row.status = CellStatus::Timeout;
            row.detail = e.to_string();
            return finish(row);
        }
        Err(e @ Error::TermLimit { .. }) => {
            row.status = CellStatus::Limit;
            row.detail = e.to_string();
            return finish(row);
        }
        Err(e) => return Err(e.into()),
    };
    match reconstruct_proper(&series, &den, DEFAULT_GUARD_MARGIN) {
        Ok(f) => {
            row.status = CellStatus::Verified;
            row.functional_equation = match check_functional_equation(&f, n, k) {
                Ok(s) => format!("{:+}", s.as_i64()),
                Err(_) => "fail".into(),
            };
            row.least = if leastness_certificate(&f).is_least() { "yes" } else { "no" }.into();
            row.detail = format!("numerator degree {}", f.numerator.degree().unwrap_or(0));
            if opts.probe_smaller {
                let probes = probe_smaller_denominators(&series, &f.cyclotomic_denominator(), &spec, DEFAULT_GUARD_MARGIN);
                let rejected = probes.iter().filter(|p| p.rejected()).count();
                row.probe_smaller = format!("rejected {rejected}/{}", probes.len());
            }
        }
        Err(e @ Error::InsufficientOrder { .. }) => row.detail = e.to_string(),
        Err(e) => {
            row.status = CellStatus::Failed;
            row.detail = e.to_string();
        }
    }
    finish(row)
}

struct Slot {
    started: Mutex<Option<Instant>>,
    cancel: AtomicBool,
    done: AtomicBool,
}

/// Runs every cell, `jobs` at a time, in row-major `(n, k)` order. A
/// watchdog raises each cell's cancel flag once it exceeds the timeout.
pub fn scan(opts: &ScanOptions) -> Result<Vec<ScanRow>> {
    if *opts.n.start() < 2 {
        bail!("the conjectured denominators need n >= 2");
    }
    if *opts.k.start() < 2 {
        bail!("k must be at least 2");
    }
    let cells: Vec<(usize, usize)> = opts.n.clone().flat_map(|n| opts.k.clone().map(move |k| (n, k))).collect();
    let slots: Vec<Slot> = cells
        .iter()
        .map(|_| Slot {
            started: Mutex::new(None),
            cancel: AtomicBool::new(false),
            done: AtomicBool::new(false),
        })
        .collect();
    let results: Mutex<Vec<Option<Result<ScanRow>>>> = Mutex::new(cells.iter().map(|_| None).collect());
    let next = AtomicUsize::new(0);
    let finished = AtomicUsize::new(0);

    std::thread::scope(|s| {
        for _ in 0..opts.jobs.clamp(1, cells.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(&(n, k)) = cells.get(i) else { break };
                *slots[i].started.lock().expect("slot lock") = Some(Instant::now());
                let row = run_cell(n, k, opts, &slots[i].cancel);
                results.lock().expect("results lock")[i] = Some(row);
                slots[i].done.store(true, Ordering::SeqCst);
                finished.fetch_add(1, Ordering::SeqCst);
            });
        }
        s.spawn(|| {
            while finished.load(Ordering::SeqCst) < cells.len() {
                for slot in &slots {
                    let started = *slot.started.lock().expect("slot lock");
                    if let Some(t) = started {
                        if !slot.done.load(Ordering::SeqCst) && t.elapsed() > opts.timeout {
                            slot.cancel.store(true, Ordering::SeqCst);
                        }
                    }
                }
                std::thread::sleep(Duration::from_millis(20));
            }
        });
    });

    results
        .into_inner()
        .expect("results lock")
        .into_iter()
        .map(|r| r.expect("every cell ran"))
        .collect()
}

pub fn write_csv<W: std::io::Write>(rows: &[ScanRow], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in rows {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..4").unwrap(), 2..=4);
        assert_eq!(parse_range("2..=4").unwrap(), 2..=4);
        assert_eq!(parse_range("3").unwrap(), 3..=3);
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("a..2").is_err());
    }

    #[test]
    fn small_grid_verifies() {
        let mut opts = ScanOptions::new(2..=3, 2..=3, Ring::PureTrace);
        opts.timing = false;
        let rows = scan(&opts).unwrap();
        assert_eq!(rows.len(), 4);
        for r in &rows {
            assert_eq!(r.status, CellStatus::Verified, "{r:?}");
            assert_eq!(r.fixture, "match");
            assert_eq!(r.least, "yes");
            assert!(r.seconds.is_empty());
        }
        assert_eq!(rows[0].conjectured_product, "1:2 2:3");
        assert_eq!(rows[0].functional_equation, "-1");
    }

    #[test]
    fn tiny_budget_hits_the_limit() {
        let mut opts = ScanOptions::new(3..=3, 2..=2, Ring::PureTrace);
        opts.coefficient_budget = 1000;
        let rows = scan(&opts).unwrap();
        assert_eq!(rows[0].status, CellStatus::Limit);
        assert!(rows[0].functional_equation.is_empty());
    }

    #[test]
    fn zero_timeout_cancels() {
        let mut opts = ScanOptions::new(3..=3, 4..=4, Ring::PureTrace);
        opts.timeout = Duration::ZERO;
        let rows = scan(&opts).unwrap();
        assert_eq!(rows[0].status, CellStatus::Timeout);
    }

    #[test]
    fn probes_reject_smaller_denominators() {
        let mut opts = ScanOptions::new(2..=2, 2..=2, Ring::PureTrace);
        opts.probe_smaller = true;
        let rows = scan(&opts).unwrap();
        assert_eq!(rows[0].probe_smaller, "rejected 2/2");
    }
}
