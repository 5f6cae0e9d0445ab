use alloc::vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Ring;
use crate::exactmath::{binomial, ExactRational, TruncatedSeries};

/// The `n = 2` series through a single `z`: with `C_a = C(a+k-1, k-1)`,
///
/// ```text
/// P(t) = 1/2 (1-t)^{-2k} CT_z [ c(z) * sum_a C_a t^a z^a * sum_b C_b t^b z^-b ]
/// ```
///
/// with `c(z) = 2 - z - 1/z` for the pure ring and `2 - z^2 - z^-2` for the
/// mixed one. Only the pairs `(a, b)` with `a - b` in the support of `c` are
/// visited.
pub fn two_by_two_series(k: usize, ring: Ring, order: usize) -> TruncatedSeries {
    let offsets: [(i64, i64); 3] = match ring {
        Ring::PureTrace => [(0, 2), (1, -1), (-1, -1)],
        Ring::MixedTrace => [(0, 2), (2, -1), (-2, -1)],
    };
    let c = |a: i64| binomial(a + k as i64 - 1, k as i64 - 1);
    let mut ct = vec![BigInt::zero(); order + 1];
    for b in 0..=order as i64 {
        for &(delta, weight) in &offsets {
            let a = b + delta;
            if a < 0 || (a + b) as usize > order {
                continue;
            }
            ct[(a + b) as usize] += c(a) * c(b) * weight;
        }
    }
    for _ in 0..2 * k {
        for m in 1..ct.len() {
            let prev = ct[m - 1].clone();
            ct[m] += prev;
        }
    }
    TruncatedSeries::new(
        ct.into_iter()
            .map(|x| ExactRational::new(x, BigInt::from(2)))
            .collect(),
    )
}
