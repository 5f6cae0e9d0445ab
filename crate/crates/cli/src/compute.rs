//! The `compute` subcommand: one series from one engine.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{bail, Result};
use serde::Serialize;
use trace_poincare_core::closedforms::{c2k_closed, r2k_closed, teranishi_c2k, thm21_sum};
use trace_poincare_core::denomconj::{conjectured_denominator, known_denominator};
use trace_poincare_core::molien::{molien_series_with, reconstruct_proper, MolienOptions, DEFAULT_GUARD_MARGIN};
use trace_poincare_core::verify::check_functional_equation;
use trace_poincare_core::{Error, FactoredDenominator, FactoredRationalFunction, ProblemSpec, Ring, TruncatedSeries};

use crate::cache::SeriesCache;
use crate::format::{cyclotomic_to_json, den_to_json, poly_to_json, rationals_to_json};

/// How many series coefficients are printed.
pub const HEAD: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Engine {
    Molien,
    Closed,
    Teranishi,
    Thm21,
}

impl Engine {
    pub fn as_str(self) -> &'static str {
        match self {
            Engine::Molien => "molien",
            Engine::Closed => "closed",
            Engine::Teranishi => "teranishi",
            Engine::Thm21 => "thm21",
        }
    }
}

/// Engine output, from the cache when possible; fresh results are stored.
pub fn cached_series(
    spec: &ProblemSpec,
    order: usize,
    cache: Option<&SeriesCache>,
    opts: &MolienOptions<'_>,
) -> Result<TruncatedSeries, Error> {
    if let Some(s) = cache.and_then(|c| c.load(spec, order)) {
        return Ok(s);
    }
    let s = molien_series_with(spec, order, opts)?;
    if let Some(c) = cache {
        // a cache that cannot be written only costs time
        let _ = c.store(spec, &s);
    }
    Ok(s)
}

/// The denominator the `molien` engine reconstructs over: the proven one for
/// `n <= 3`, `(1 - t)^k` for `n = 1`, the conjectured one otherwise.
pub fn target_denominator(spec: &ProblemSpec) -> Option<FactoredDenominator> {
    let (n, k, ring) = (spec.n(), spec.k(), spec.ring());
    if n == 1 {
        return Some(FactoredDenominator::new([(1, k as u32)]));
    }
    known_denominator(n, k, ring).or_else(|| conjectured_denominator(n, k, ring).ok()?.product)
}

#[derive(Debug, Clone, Serialize)]
pub struct ComputeOutput {
    pub n: usize,
    pub k: usize,
    pub ring: &'static str,
    pub engine: &'static str,
    pub order: Option<usize>,
    pub numerator: Option<Vec<String>>,
    pub denominator: Option<BTreeMap<usize, u32>>,
    pub cyclotomic: Option<BTreeMap<usize, u32>>,
    /// `+1` or `-1` in `f(1/t) = s t^{kn^2} f(t)`; absent when it fails.
    pub functional_equation_sign: Option<i64>,
    pub series: Vec<String>,
    pub note: Option<String>,
    #[serde(skip)]
    function: Option<FactoredRationalFunction>,
}

impl ComputeOutput {
    pub fn function(&self) -> Option<&FactoredRationalFunction> {
        self.function.as_ref()
    }

    fn new(spec: &ProblemSpec, engine: Engine, order: Option<usize>) -> Self {
        Self {
            n: spec.n(),
            k: spec.k(),
            ring: spec.ring().as_str(),
            engine: engine.as_str(),
            order,
            numerator: None,
            denominator: None,
            cyclotomic: None,
            functional_equation_sign: None,
            series: Vec::new(),
            note: None,
            function: None,
        }
    }

    fn with_function(mut self, f: FactoredRationalFunction) -> Self {
        self.numerator = Some(poly_to_json(&f.numerator));
        self.denominator = Some(den_to_json(&f.denominator));
        self.cyclotomic = Some(cyclotomic_to_json(&f.cyclotomic_denominator()));
        self.functional_equation_sign = check_functional_equation(&f, self.n, self.k).ok().map(|s| s.as_i64());
        self.series = rationals_to_json(f.series(HEAD - 1).coeffs());
        self.function = Some(f);
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ring {} n = {} k = {} engine {}", self.ring, self.n, self.k, self.engine);
        if let Some(f) = &self.function {
            let _ = writeln!(out, "numerator:   {}", f.numerator);
            let _ = writeln!(out, "denominator: {}", f.denominator);
            let _ = writeln!(out, "cyclotomic:  {}", f.cyclotomic_denominator());
            match self.functional_equation_sign {
                Some(s) => {
                    let _ = writeln!(out, "functional equation: f(1/t) = {}t^{} f(t)", if s < 0 { "-" } else { "" }, self.k * self.n * self.n);
                }
                None => {
                    let _ = writeln!(out, "functional equation: fails at t^{}", self.k * self.n * self.n);
                }
            }
        }
        let shown: Vec<&str> = self.series.iter().map(|c| c.strip_suffix("/1").unwrap_or(c)).collect();
        let _ = writeln!(out, "series:      {}", shown.join(", "));
        if let Some(note) = &self.note {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

pub fn compute(
    spec: &ProblemSpec,
    engine: Engine,
    order: Option<usize>,
    cache: Option<&SeriesCache>,
) -> Result<ComputeOutput> {
    let k = spec.k();
    if engine != Engine::Molien {
        if spec.n() != 2 {
            bail!("engine {} only covers n = 2", engine.as_str());
        }
        let f = match (engine, spec.ring()) {
            (Engine::Closed, Ring::PureTrace) => c2k_closed(k)?,
            (Engine::Closed, Ring::MixedTrace) => {
                if k < 3 {
                    bail!("the closed mixed formula needs k >= 3");
                }
                r2k_closed(k)?
            }
            (Engine::Teranishi, Ring::PureTrace) => teranishi_c2k(k)?,
            (Engine::Thm21, Ring::PureTrace) => thm21_sum(k)?,
            _ => bail!("engine {} only covers the pure ring", engine.as_str()),
        };
        return Ok(ComputeOutput::new(spec, engine, None).with_function(f));
    }

    let den = target_denominator(spec);
    let order = order.unwrap_or_else(|| den.as_ref().map_or(HEAD - 1, |d| d.degree() + 10));
    let series = cached_series(spec, order, cache, &MolienOptions::default())?;
    let mut out = ComputeOutput::new(spec, engine, Some(order));
    let fallback = |mut out: ComputeOutput, note: String| {
        out.series = rationals_to_json(&series.coeffs()[..=order.min(HEAD - 1)]);
        out.note = Some(note);
        out
    };
    let Some(den) = den else {
        return Ok(fallback(out, "no (1 - t^i) product form for the conjectured denominator".into()));
    };
    match reconstruct_proper(&series, &den, DEFAULT_GUARD_MARGIN) {
        Ok(f) => {
            out = out.with_function(f);
            Ok(out)
        }
        Err(Error::InsufficientOrder { required, .. }) => Ok(fallback(
            out,
            format!("order {order} is below {required}, the minimum for reconstruction over {den}"),
        )),
        Err(e) => Ok(fallback(out, format!("reconstruction over {den} failed: {e}"))),
    }
}
