use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactmath::{binomial, ExactRational, TruncatedSeries};

/// Exponent vector of `z_1 .. z_{n-1}` (one variable is pinned to 1).
pub type Exponent = Vec<i32>;

/// Which terms may be dropped because they can no longer reach the constant
/// term. Only sound once every remaining factor is of the form
/// `(1 - t z_i/z_j)^-1`, i.e. each further step in `z` costs one power of `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pruning {
    /// Keep everything up to the truncation order.
    None,
    /// Drop degree `s` at `w` when some `|w_c|` exceeds `order - s`.
    Component,
    /// Drop degree `s` at `w` when the positive part of the full exponent
    /// vector (pinned coordinate restored) exceeds `order - s`.
    #[default]
    Spread,
}

/// Sparse Laurent polynomial in the `z` variables whose coefficients are
/// integer power series in `t` truncated at a common order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentTable {
    order: usize,
    dims: usize,
    terms: BTreeMap<Exponent, Vec<BigInt>>,
}

fn is_zero_series(s: &[BigInt]) -> bool {
    s.iter().all(Zero::is_zero)
}

fn add_vec(a: &[i32], b: &[i32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scaled(v: &[i32], a: i32) -> Exponent {
    v.iter().map(|x| x * a).collect()
}

impl LaurentTable {
    pub fn zero(dims: usize, order: usize) -> Self {
        Self {
            order,
            dims,
            terms: BTreeMap::new(),
        }
    }

    /// The constant 1.
    pub fn one(dims: usize, order: usize) -> Self {
        let mut out = Self::zero(dims, order);
        let mut s = vec![BigInt::zero(); order + 1];
        s[0] = BigInt::one();
        out.terms.insert(vec![0; dims], s);
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * t^deg * z^w`.
    pub fn add_term(&mut self, w: Exponent, deg: usize, c: BigInt) {
        assert_eq!(w.len(), self.dims);
        if deg > self.order || c.is_zero() {
            return;
        }
        let order = self.order;
        let s = self
            .terms
            .entry(w.clone())
            .or_insert_with(|| vec![BigInt::zero(); order + 1]);
        s[deg] += c;
        if is_zero_series(s) {
            self.terms.remove(&w);
        }
    }

    pub fn coefficient(&self, w: &[i32], deg: usize) -> BigInt {
        self.terms
            .get(w)
            .and_then(|s| s.get(deg).cloned())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn series_at(&self, w: &[i32]) -> TruncatedSeries {
        match self.terms.get(w) {
            Some(s) => TruncatedSeries::new(s.iter().cloned().map(ExactRational::from_integer).collect()),
            None => TruncatedSeries::zero(self.order),
        }
    }

    /// Integer coefficients of the `z`-constant term.
    pub fn constant_term(&self) -> Vec<BigInt> {
        self.terms
            .get(&vec![0; self.dims])
            .cloned()
            .unwrap_or_else(|| vec![BigInt::zero(); self.order + 1])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Vec<BigInt>)> {
        self.terms.iter()
    }

    /// Largest degree that may still contribute to the constant term.
    fn budget(w: &[i32], order: usize, pruning: Pruning) -> Option<usize> {
        let reach = match pruning {
            Pruning::None => return Some(order),
            Pruning::Component => w.iter().map(|c| c.unsigned_abs() as usize).max().unwrap_or(0),
            Pruning::Spread => {
                let pos: i64 = w.iter().map(|&c| i64::from(c.max(0))).sum();
                let pinned = -w.iter().map(|&c| i64::from(c)).sum::<i64>();
                (pos + pinned.max(0)) as usize
            }
        };
        order.checked_sub(reach)
    }

    fn prune_series(w: &[i32], s: &mut [BigInt], order: usize, pruning: Pruning) -> bool {
        match Self::budget(w, order, pruning) {
            None => false,
            Some(b) => {
                for c in s.iter_mut().skip(b + 1) {
                    c.set_zero();
                }
                !is_zero_series(s)
            }
        }
    }

    pub fn prune(&mut self, pruning: Pruning) {
        let order = self.order;
        self.terms
            .retain(|w, s| Self::prune_series(w, s, order, pruning));
    }

    /// Multiplies by a Laurent polynomial in `z` with integer coefficients and
    /// no `t` dependence.
    pub fn mul_monomials(&self, poly: &[(Exponent, BigInt)]) -> Self {
        let mut out = Self::zero(self.dims, self.order);
        for (w, s) in &self.terms {
            for (m, c) in poly {
                let key = add_vec(w, m);
                let order = self.order;
                let dst = out
                    .terms
                    .entry(key)
                    .or_insert_with(|| vec![BigInt::zero(); order + 1]);
                for (d, x) in dst.iter_mut().zip(s) {
                    *d += x * c;
                }
            }
        }
        out.terms.retain(|_, s| !is_zero_series(s));
        out
    }

    /// Full product in both `z` and `t`, truncated at the common order.
    pub fn mul(&self, other: &Self, pruning: Pruning) -> Self {
        assert_eq!(self.dims, other.dims);
        let order = self.order.min(other.order);
        let mut out = Self::zero(self.dims, order);
        for (w1, s1) in &self.terms {
            for (w2, s2) in &other.terms {
                let key = add_vec(w1, w2);
                let Some(budget) = Self::budget(&key, order, pruning) else {
                    continue;
                };
                let dst = out
                    .terms
                    .entry(key)
                    .or_insert_with(|| vec![BigInt::zero(); order + 1]);
                for (i, a) in s1.iter().enumerate().take(budget + 1) {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in s2.iter().enumerate().take(budget + 1 - i) {
                        if !b.is_zero() {
                            dst[i + j] += a * b;
                        }
                    }
                }
            }
        }
        out.prune(pruning);
        out
    }

    /// Divides by `(1 - t z^v)`: the result `P` satisfies
    /// `P[w] = Q[w] + t * P[w - v]`, evaluated along each line in direction `v`
    /// in increasing order of `<w, v>`.
    pub fn div_geometric(&self, v: &[i32], pruning: Pruning) -> Self {
        assert_eq!(v.len(), self.dims);
        assert!(v.iter().any(|&c| c != 0), "direction must be nonzero");
        let order = self.order;
        let dot = |w: &[i32]| -> i64 { w.iter().zip(v).map(|(&a, &b)| i64::from(a) * i64::from(b)).sum() };
        let mut queue: BTreeSet<(i64, Exponent)> =
            self.terms.keys().map(|w| (dot(w), w.clone())).collect();
        let mut out = Self::zero(self.dims, order);
        while let Some((_, w)) = queue.pop_first() {
            let mut s = self
                .terms
                .get(&w)
                .cloned()
                .unwrap_or_else(|| vec![BigInt::zero(); order + 1]);
            let prev: Exponent = w.iter().zip(v).map(|(a, b)| a - b).collect();
            if let Some(p) = out.terms.get(&prev) {
                for i in 1..=order {
                    if !p[i - 1].is_zero() {
                        s[i] += &p[i - 1];
                    }
                }
            }
            if Self::prune_series(&w, &mut s, order, pruning) {
                let next = add_vec(&w, v);
                queue.insert((dot(&next), next));
                out.terms.insert(w, s);
            }
        }
        out
    }
}

/// Truncation of `(1 - t z^v)^{-k}`: `sum_{a <= order} C(a+k-1, k-1) t^a z^{a v}`.
pub fn expand_geometric_factor(v: &[i32], k: usize, order: usize) -> LaurentTable {
    let mut out = LaurentTable::zero(v.len(), order);
    for a in 0..=order {
        out.add_term(
            scaled(v, a as i32),
            a,
            binomial((a + k) as i64 - 1, k as i64 - 1),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(t: &LaurentTable, w: &[i32]) -> Vec<i64> {
        t.series_at(w)
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c.to_integer()).unwrap())
            .collect()
    }

    #[test]
    fn binomial_series_in_one_variable() {
        let g = expand_geometric_factor(&[1], 2, 3);
        assert_eq!(g.len(), 4);
        for a in 0..4 {
            let mut expected = vec![0; 4];
            expected[a as usize] = a + 1;
            assert_eq!(coeffs(&g, &[a as i32]), expected);
        }
    }

    #[test]
    fn geometric_series_with_zero_direction() {
        let g = expand_geometric_factor(&[0], 1, 2);
        assert_eq!(g.len(), 1);
        assert_eq!(coeffs(&g, &[0]), vec![1, 1, 1]);
    }

    #[test]
    fn negative_direction_triangular_numbers() {
        let g = expand_geometric_factor(&[-1], 3, 2);
        assert_eq!(coeffs(&g, &[0]), vec![1, 0, 0]);
        assert_eq!(coeffs(&g, &[-1]), vec![0, 3, 0]);
        assert_eq!(coeffs(&g, &[-2]), vec![0, 0, 6]);
    }

    #[test]
    fn division_matches_multiplication_by_expansion() {
        let order = 8;
        let mut q = LaurentTable::zero(2, order);
        q.add_term(vec![0, 0], 0, BigInt::from(2));
        q.add_term(vec![1, -1], 0, BigInt::from(-1));
        q.add_term(vec![-1, 0], 1, BigInt::from(3));
        for v in [[1, -1], [0, 1], [-1, 0]] {
            for k in 1..4 {
                let mut by_div = q.clone();
                for _ in 0..k {
                    by_div = by_div.div_geometric(&v, Pruning::None);
                }
                let by_mul = q.mul(&expand_geometric_factor(&v, k, order), Pruning::None);
                assert_eq!(by_div, by_mul, "v = {v:?}, k = {k}");
            }
        }
    }

    #[test]
    fn monomial_product_cancels() {
        // (1 - z)(1 + z) = 1 - z^2
        let base = LaurentTable::one(1, 0).mul_monomials(&[(vec![0], 1.into()), (vec![1], (-1).into())]);
        let prod = base.mul_monomials(&[(vec![0], 1.into()), (vec![1], 1.into())]);
        assert_eq!(prod.len(), 2);
        assert_eq!(prod.coefficient(&[2], 0), BigInt::from(-1));
        assert_eq!(prod.coefficient(&[1], 0), BigInt::zero());
    }

    #[test]
    fn spread_counts_the_pinned_coordinate() {
        // w = (1, 1) means z1 z2 / z3^2 in full coordinates: spread 2.
        assert_eq!(LaurentTable::budget(&[1, 1], 5, Pruning::Spread), Some(3));
        assert_eq!(LaurentTable::budget(&[1, 1], 5, Pruning::Component), Some(4));
        assert_eq!(LaurentTable::budget(&[-2, 0], 5, Pruning::Spread), Some(3));
        assert_eq!(LaurentTable::budget(&[3, -1], 2, Pruning::Spread), None);
    }
}
