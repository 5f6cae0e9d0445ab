use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::laurent::{expand_geometric_factor, Exponent, LaurentTable, Pruning};
use super::{ProblemSpec, Ring};
use crate::exactmath::{factorial, ExactRational, TruncatedSeries};
use crate::Error;

/// How each `(1 - t z_i/z_j)^{-k}` factor is folded into the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FoldStrategy {
    /// `k` successive divisions by `(1 - t z^v)`, each a single pass.
    #[default]
    Division,
    /// Multiply by the explicit binomial expansion of the factor.
    Multiply,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct MolienOptions<'a> {
    pub pruning: Pruning,
    pub strategy: FoldStrategy,
    /// Index of the variable set to 1; defaults to the last one.
    pub pinned: Option<usize>,
    /// Checked between factors; when set the computation stops with
    /// [`Error::Cancelled`].
    pub cancel: Option<&'a AtomicBool>,
    /// Stop with [`Error::TermLimit`] once the table holds more terms.
    pub max_terms: Option<usize>,
}

/// Coefficients `0..=order` of the Poincaré series of the ring described by
/// `spec`.
pub fn molien_series(spec: &ProblemSpec, order: usize) -> TruncatedSeries {
    molien_series_with(spec, order, &MolienOptions::default())
        .expect("no cancellation flag was supplied")
}

pub fn molien_series_with(
    spec: &ProblemSpec,
    order: usize,
    opts: &MolienOptions<'_>,
) -> Result<TruncatedSeries, Error> {
    let n = spec.n();
    let k = spec.k();
    let pinned = opts.pinned.unwrap_or(n - 1);
    if pinned >= n {
        return Err(Error::InvalidProblem("pinned variable index out of range"));
    }
    let dims = n - 1;
    let reduce = |i: usize| -> Exponent {
        let mut v = vec![0; dims];
        if i != pinned {
            v[if i < pinned { i } else { i - 1 }] = 1;
        }
        v
    };
    let ratio = |i: usize, j: usize| -> Exponent {
        reduce(i).iter().zip(reduce(j)).map(|(a, b)| a - b).collect()
    };
    let check = |table: &LaurentTable| {
        if matches!(opts.cancel, Some(flag) if flag.load(Ordering::Relaxed)) {
            return Err(Error::Cancelled);
        }
        match opts.max_terms {
            Some(limit) if table.len() > limit => Err(Error::TermLimit { terms: table.len() }),
            _ => Ok(()),
        }
    };

    let off_diagonal: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();

    // The t-free numerator goes first so that budget pruning is sound for
    // every later step.
    let mut table = LaurentTable::one(dims, order);
    for &(i, j) in &off_diagonal {
        table = table.mul_monomials(&[(vec![0; dims], BigInt::one()), (ratio(i, j), BigInt::from(-1))]);
    }
    if spec.ring() == Ring::MixedTrace {
        let mut sum: Vec<(Exponent, BigInt)> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                sum.push((ratio(i, j), BigInt::one()));
            }
        }
        table = table.mul_monomials(&sum);
    }
    table.prune(opts.pruning);

    let mut directions: Vec<Exponent> = off_diagonal.iter().map(|&(i, j)| ratio(i, j)).collect();
    directions.sort_by_key(|v| (v.iter().map(|c| c.unsigned_abs()).sum::<u32>(), v.clone()));
    for v in &directions {
        check(&table)?;
        table = match opts.strategy {
            FoldStrategy::Division => {
                let mut t = table;
                for _ in 0..k {
                    t = t.div_geometric(v, opts.pruning);
                    check(&t)?;
                }
                t
            }
            FoldStrategy::Multiply => table.mul(&expand_geometric_factor(v, k, order), opts.pruning),
        };
    }
    check(&table)?;

    // Diagonal factors: (1 - t)^{-nk}, then the 1/n! from the Weyl measure.
    let mut ct = table.constant_term();
    for _ in 0..n * k {
        for m in 1..ct.len() {
            let prev = ct[m - 1].clone();
            ct[m] += prev;
        }
    }
    let weyl = factorial(n as u64);
    let coeffs = ct
        .into_iter()
        .map(|c| {
            let (q, r) = c.div_rem(&weyl);
            debug_assert!(r.is_zero(), "constant term not divisible by n!");
            if r.is_zero() {
                ExactRational::from_integer(q)
            } else {
                ExactRational::new(c, weyl.clone())
            }
        })
        .collect();
    Ok(TruncatedSeries::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{binomial, DensePolynomial, FactoredDenominator, FactoredRationalFunction};

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn two_by_two_pure_head() {
        assert_eq!(ints(&molien_series(&ProblemSpec::pure(2, 2), 4)), vec![1, 2, 6, 10, 20]);
    }

    #[test]
    fn one_by_one_is_free_commutative() {
        assert_eq!(ints(&molien_series(&ProblemSpec::pure(1, 3), 2)), vec![1, 3, 6]);
        let mixed = molien_series(&ProblemSpec::mixed(1, 3), 5);
        assert_eq!(mixed, molien_series(&ProblemSpec::pure(1, 3), 5));
    }

    /// Independent route: the two-variable constant term by brute-force double
    /// sum over the geometric expansions, keeping only `a = b` and `a = b +- 1`.
    #[test]
    fn agrees_with_direct_double_sum() {
        for k in 2..5usize {
            let order = 12;
            let c = |a: usize| binomial((a + k - 1) as i64, k as i64 - 1);
            let mut ct = vec![BigInt::zero(); order + 1];
            for a in 0..=order {
                for b in 0..=order - a {
                    let w = match a as i64 - b as i64 {
                        0 => 2,
                        1 | -1 => -1,
                        _ => 0,
                    };
                    ct[a + b] += c(a) * c(b) * w;
                }
            }
            let f = FactoredRationalFunction::new(
                DensePolynomial::new(ct.into_iter().map(|x| ExactRational::new(x, 2.into())).collect()),
                FactoredDenominator::new([(1, 2 * k as u32)]),
            );
            assert_eq!(f.series(order), molien_series(&ProblemSpec::pure(2, k), order), "k = {k}");
        }
    }

    #[test]
    fn cancellation_is_reported() {
        let flag = AtomicBool::new(true);
        let opts = MolienOptions {
            cancel: Some(&flag),
            ..Default::default()
        };
        assert_eq!(
            molien_series_with(&ProblemSpec::pure(3, 2), 10, &opts),
            Err(Error::Cancelled)
        );
    }

    #[test]
    fn term_limit_is_reported() {
        let opts = MolienOptions {
            max_terms: Some(10),
            ..Default::default()
        };
        assert!(matches!(
            molien_series_with(&ProblemSpec::pure(3, 2), 20, &opts),
            Err(Error::TermLimit { .. })
        ));
    }

    #[test]
    fn pinned_index_is_validated() {
        let opts = MolienOptions {
            pinned: Some(3),
            ..Default::default()
        };
        assert!(molien_series_with(&ProblemSpec::pure(3, 2), 3, &opts).is_err());
    }

    #[test]
    fn low_degrees_match_trace_counts() {
        // degree 0: the constant; degree 1: tr X_1 .. tr X_k for the pure ring,
        // plus X_1 .. X_k for the mixed one.
        for n in 1..=3 {
            for k in 2..=5 {
                let s = ints(&molien_series(&ProblemSpec::pure(n, k), 1));
                assert_eq!(s, vec![1, k as i64], "pure n={n} k={k}");
                let m = ints(&molien_series(&ProblemSpec::mixed(n, k), 1));
                let expected = if n == 1 { k as i64 } else { 2 * k as i64 };
                assert_eq!(m, vec![1, expected], "mixed n={n} k={k}");
            }
        }
    }
}
