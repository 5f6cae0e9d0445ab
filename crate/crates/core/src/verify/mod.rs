//! Invariants every Poincaré series here must satisfy: the `t -> 1/t`
//! functional equation, the pole order at `t = 1`, lowest terms against the
//! cyclotomic factors of the denominator, and the leading asymptotics.

mod asymptotics;

use alloc::vec::Vec;

pub use asymptotics::{
    asymptotic_ratio_test, asymptotics, coefficient_at, constant_denominator_report,
    AsymptoticEstimate, ConstantDenominatorReport,
};

use crate::exactmath::{
    cyclotomic, to_rational, totient, CyclotomicExponents, DensePolynomial,
    FactoredRationalFunction, Sign, TruncatedSeries,
};
use crate::molien::reconstruct_numerator;
use crate::{Error, ProblemSpec};

/// Checks `f(1/t) = s t^{kn^2} f(t)` and returns `s`.
///
/// With `f = N / prod (1 - t^i)^{e_i}` and `1 - t^{-i} = -t^{-i} (1 - t^i)`,
/// this is `(-1)^{sum e} t^{deg den - deg N} rev(N) = s t^{kn^2} N`.
pub fn check_functional_equation(f: &FactoredRationalFunction, n: usize, k: usize) -> Result<Sign, Error> {
    let num = &f.numerator;
    let Some(deg_n) = num.degree() else {
        return Err(Error::InvalidProblem("the zero function has no functional equation"));
    };
    let parity = Sign::from_parity(f.denominator.total_exponent() % 2 == 1);
    let rev = num.reversed(deg_n).scale(&to_rational(parity.as_i64()));
    let shift = f.denominator.degree() as i64 - deg_n as i64 - (k * n * n) as i64;
    let (lhs, rhs) = if shift >= 0 {
        (rev.shift(shift as usize), num.clone())
    } else {
        (rev, num.shift((-shift) as usize))
    };
    if lhs == rhs {
        Ok(Sign::Plus)
    } else if lhs == -&rhs {
        Ok(Sign::Minus)
    } else {
        // Report against whichever sign the leading terms suggest.
        let minus = matches!(
            (lhs.leading(), rhs.leading()),
            (Some(a), Some(b)) if *a == -b.clone()
        );
        let residual = if minus { &lhs + &rhs } else { &lhs - &rhs };
        Err(Error::FunctionalEquationViolated { residual })
    }
}

/// Order of the pole of `f` at `t = 1`, after numerator roots at 1 cancel.
pub fn pole_order_at_one(f: &FactoredRationalFunction) -> i64 {
    f.denominator.total_exponent() as i64 - f.numerator.root_one_multiplicity() as i64
}

/// Checks the pole at `t = 1` has order `(k - 1) n^2 + 1` and returns it.
pub fn check_pole_order(f: &FactoredRationalFunction, n: usize, k: usize) -> Result<usize, Error> {
    let expected = (k - 1) * n * n + 1;
    let found = pole_order_at_one(f);
    if found == expected as i64 {
        Ok(expected)
    } else {
        Err(Error::PoleOrderMismatch {
            expected,
            found: found.max(0) as usize,
        })
    }
}

/// Which cyclotomic factors of a denominator also divide the numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeastnessReport {
    /// `phi_d` in the denominator that divide the numerator, with the
    /// multiplicity that could cancel.
    pub cancellable: Vec<(usize, u32)>,
    /// All `phi_d` dividing the numerator, whether or not they appear below.
    pub numerator_factors: Vec<(usize, u32)>,
}

impl LeastnessReport {
    pub fn is_least(&self) -> bool {
        self.cancellable.is_empty()
    }
}

/// Exact remainders of the numerator modulo each `phi_d`.
pub fn leastness_certificate(f: &FactoredRationalFunction) -> LeastnessReport {
    let cyc = f.cyclotomic_denominator();
    let num = &f.numerator;
    let deg = num.degree().unwrap_or(0);
    let mut numerator_factors = Vec::new();
    let reach = deg.max(cyc.max_index());
    for d in 1..=reach.max(1) {
        if totient(d) > deg {
            continue;
        }
        let m = num.multiplicity_of(&cyclotomic(d));
        if m > 0 {
            numerator_factors.push((d, m as u32));
        }
    }
    let cancellable = numerator_factors
        .iter()
        .filter_map(|&(d, m)| {
            let e = cyc.exponent(d);
            (e > 0).then(|| (d, m.min(e)))
        })
        .collect();
    LeastnessReport {
        cancellable,
        numerator_factors,
    }
}

/// One smaller candidate denominator and what reconstruction made of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeastnessProbe {
    /// The cyclotomic index whose exponent was lowered by one.
    pub index: usize,
    pub candidate: CyclotomicExponents,
    pub outcome: Result<DensePolynomial, Error>,
}

impl LeastnessProbe {
    /// The candidate was rejected because the product with the series is not
    /// a polynomial.
    pub fn rejected(&self) -> bool {
        matches!(self.outcome, Err(Error::ReconstructionFailed { .. }))
    }
}

/// Lowers each nonzero exponent of `den` by one in turn and attempts
/// reconstruction of `series` over the result.
pub fn probe_smaller_denominators(
    series: &TruncatedSeries,
    den: &CyclotomicExponents,
    spec: &ProblemSpec,
    margin: usize,
) -> Vec<LeastnessProbe> {
    den.iter()
        .filter(|&(_, e)| e > 0)
        .map(|(d, e)| {
            let candidate = den.with_exponent(d, e - 1);
            let outcome = reconstruct_numerator(series, &candidate.expand(), spec, margin);
            LeastnessProbe {
                index: d,
                candidate,
                outcome,
            }
        })
        .collect()
}

/// `true` when the numerator equals its own reversal.
pub fn is_palindromic(p: &DensePolynomial) -> bool {
    p.palindromic_sign() == Some(Sign::Plus)
}
