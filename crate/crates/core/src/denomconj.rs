//! Conjectured least denominators for the `n x n` trace rings.
//!
//! The conjecture takes the denominator of `F(t) = prod (1 - t^i)^{-alpha(i)}`
//! (pure) or `G(t) = prod (1 - t^i)^{-beta(i)}` (mixed) and raises the exponent
//! of every cyclotomic factor `phi_d`, `d <= n`, by `(n - 1)(k - 1)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::exactmath::{
    cyclotomic_to_den, den_to_cyclotomic, CyclotomicExponents, DensePolynomial,
    FactoredDenominator,
};
use crate::{Error, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProfileKind {
    Alpha,
    Beta,
}

/// Exponents of `(1 - t^i)`, `1 <= i <= n`, in the denominator of `F` or `G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentProfile {
    pub kind: ProfileKind,
    pub n: usize,
    pub k: usize,
    pub values: BTreeMap<usize, u32>,
}

impl ExponentProfile {
    pub fn value(&self, i: usize) -> u32 {
        self.values.get(&i).copied().unwrap_or(0)
    }

    pub fn as_denominator(&self) -> FactoredDenominator {
        FactoredDenominator::new(self.values.iter().map(|(&i, &e)| (i, e)))
    }
}

fn check_nk(n: usize, k: usize) -> Result<(), Error> {
    if n < 2 || k < 2 {
        Err(Error::InvalidProblem("the conjecture is stated for n >= 2 and k >= 2"))
    } else {
        Ok(())
    }
}

/// `alpha` for the pure ring, `beta` for the mixed one.
pub fn profile(n: usize, k: usize, ring: Ring) -> Result<ExponentProfile, Error> {
    check_nk(n, k)?;
    let step = |i: usize| (2 * (k - 1) * (n - i)) as u32;
    let (kind, values) = match ring {
        Ring::PureTrace => (
            ProfileKind::Alpha,
            (1..=n)
                .map(|i| (i, if i == n { k as u32 } else { step(i) }))
                .collect(),
        ),
        Ring::MixedTrace => (
            ProfileKind::Beta,
            (1..=n)
                .map(|i| {
                    let v = match i {
                        1 => step(1) + 2,
                        _ if i == n => k as u32 - 2,
                        _ => step(i),
                    };
                    (i, v)
                })
                .collect(),
        ),
    };
    Ok(ExponentProfile { kind, n, k, values })
}

/// The literal products of `F`, or of `G` when `mixed`, with the net exponent
/// of each `(1 - t^m)` tallied factor by factor.
fn literal_product(n: usize, k: usize, mixed: bool) -> (DensePolynomial, DensePolynomial, BTreeMap<usize, i64>) {
    let mut num = DensePolynomial::one();
    let mut den = DensePolynomial::one();
    let mut net: BTreeMap<usize, i64> = BTreeMap::new();
    for i in 1..=n as i64 {
        for j in 1..=n as i64 {
            if i != j {
                let m = (i - j).unsigned_abs() as usize;
                num = &num * &DensePolynomial::one_minus_t_pow(m);
                *net.entry(m).or_default() -= 1;
            }
            if i != j - 1 {
                let m = (i - j + 1).unsigned_abs() as usize;
                den = &den * &DensePolynomial::one_minus_t_pow(m).pow(k as u32);
                *net.entry(m).or_default() += k as i64;
            }
        }
    }
    if mixed {
        let s = DensePolynomial::from_ints(&alloc::vec![1; n]);
        num = &num * &s.pow(2);
    }
    (num, den, net)
}

/// Outcome of expanding the literal double product for `F` (or `G`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileCheck {
    pub n: usize,
    pub k: usize,
    pub kind: ProfileKind,
    /// Whether the literal quotient equals `prod (1 - t^i)^{-profile(i)}`.
    pub holds: bool,
    /// Net exponent of each `(1 - t^m)` after cancelling the literal factors,
    /// before the `(1 + ... + t^{n-1})^2` factor of `G` is absorbed.
    pub literal_exponents: BTreeMap<usize, i64>,
}

fn check_profile(n: usize, k: usize, ring: Ring) -> Result<ProfileCheck, Error> {
    if !(2..=8).contains(&n) {
        return Err(Error::InvalidProblem("the literal expansion is limited to 2 <= n <= 8"));
    }
    let prof = profile(n, k, ring)?;
    let (num, den, net) = literal_product(n, k, ring == Ring::MixedTrace);
    // num / den == 1 / prod(1 - t^i)^{profile(i)}
    let holds = &num * &prof.as_denominator().expand() == den;
    Ok(ProfileCheck {
        n,
        k,
        kind: prof.kind,
        holds,
        literal_exponents: net.into_iter().filter(|&(_, e)| e != 0).collect(),
    })
}

/// Expands the double product defining `F` and checks it against `alpha`.
pub fn verify_lemma51(n: usize, k: usize) -> Result<ProfileCheck, Error> {
    check_profile(n, k, Ring::PureTrace)
}

/// Same for `G`, including its `(1 + t + ... + t^{n-1})^2` numerator, against `beta`.
pub fn verify_beta_profile(n: usize, k: usize) -> Result<ProfileCheck, Error> {
    check_profile(n, k, Ring::MixedTrace)
}

/// A conjectured denominator in cyclotomic form, plus its `(1 - t^i)` product
/// form when every exponent there is nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjecturedDenominator {
    pub cyclotomic: CyclotomicExponents,
    pub product: Option<FactoredDenominator>,
}

impl ConjecturedDenominator {
    fn from_cyclotomic(cyclotomic: CyclotomicExponents) -> Self {
        let product = cyclotomic_to_den(&cyclotomic).ok();
        Self { cyclotomic, product }
    }

    pub fn degree(&self) -> usize {
        self.cyclotomic.degree()
    }
}

impl fmt::Display for ConjecturedDenominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.product {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "{}", self.cyclotomic),
        }
    }
}

/// `e_d = sum_{d | i <= n} profile(i) + (n - 1)(k - 1)` for every `d <= n`.
pub fn conjectured_denominator(n: usize, k: usize, ring: Ring) -> Result<ConjecturedDenominator, Error> {
    let prof = profile(n, k, ring)?;
    let base = den_to_cyclotomic(&prof.as_denominator());
    let shift = ((n - 1) * (k - 1)) as u32;
    let cyc = CyclotomicExponents::new((1..=n).map(|d| (d, base.exponent(d) + shift)));
    Ok(ConjecturedDenominator::from_cyclotomic(cyc))
}

/// The least common multiple of `(1 - t^i)^{profile(i) + (n-1)(k-1)}`,
/// `1 <= i <= n`: `e_d = max_{d | i} (profile(i) + (n - 1)(k - 1))`.
pub fn lcm_reading(n: usize, k: usize, ring: Ring) -> Result<ConjecturedDenominator, Error> {
    let prof = profile(n, k, ring)?;
    let shift = ((n - 1) * (k - 1)) as u32;
    let cyc = CyclotomicExponents::new((1..=n).map(|d| {
        let e = (d..=n).step_by(d).map(|i| prof.value(i) + shift).max().unwrap_or(0);
        (d, e)
    }));
    Ok(ConjecturedDenominator::from_cyclotomic(cyc))
}

/// Denominators established for `n = 2` and `n = 3`.
pub fn known_denominator(n: usize, k: usize, ring: Ring) -> Option<FactoredDenominator> {
    if k < 2 {
        return None;
    }
    let k = k as u32;
    let exps: [(usize, u32); 3] = match (n, ring) {
        (2, Ring::PureTrace) => [(1, 2 * k - 2), (2, 2 * k - 1), (3, 0)],
        (2, Ring::MixedTrace) => [(1, 2 * k), (2, 2 * k - 3), (3, 0)],
        (3, Ring::PureTrace) => [(1, 2 * k - 2), (2, 4 * k - 4), (3, 3 * k - 2)],
        (3, Ring::MixedTrace) => [(1, 2 * k), (2, 4 * k - 4), (3, 3 * k - 4)],
        _ => return None,
    };
    Some(FactoredDenominator::new(exps))
}

/// Cyclotomic exponents that differ between two denominators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DenominatorDiff {
    /// `(d, exponent in a, exponent in b)` for each `phi_d` that differs.
    pub entries: Vec<(usize, u32, u32)>,
}

impl DenominatorDiff {
    pub fn is_equal(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for DenominatorDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("equal");
        }
        for (n, (d, a, b)) in self.entries.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "phi_{d}: {a} vs {b}")?;
        }
        Ok(())
    }
}

pub fn compare_denominators(a: &FactoredDenominator, b: &FactoredDenominator) -> DenominatorDiff {
    compare_cyclotomic(&a.to_cyclotomic(), &b.to_cyclotomic())
}

pub fn compare_cyclotomic(a: &CyclotomicExponents, b: &CyclotomicExponents) -> DenominatorDiff {
    DenominatorDiff { entries: a.diff(b) }
}
