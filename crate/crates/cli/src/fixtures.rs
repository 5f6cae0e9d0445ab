//! Reference data compiled into the binary.

use std::collections::BTreeMap;

use serde::Deserialize;
use trace_poincare_core::{DensePolynomial, FactoredDenominator, Ring};

const NUMERATORS: &str = include_str!("../fixtures/numerators.json");
const DOKOVIC: &str = include_str!("../fixtures/dokovic_denominators.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Correction {
    pub table: String,
    pub k: usize,
    pub printed: String,
    pub stored: String,
    pub reason: String,
}

/// Numerator tables, ascending integer coefficients keyed by `k`.
#[derive(Debug, Clone, Deserialize)]
pub struct ReferenceNumerators {
    pub n2_pure: BTreeMap<usize, Vec<i64>>,
    pub n2_mixed: BTreeMap<usize, Vec<i64>>,
    pub n3_pure: BTreeMap<usize, Vec<i64>>,
    pub n3_pure_at_one: BTreeMap<usize, i64>,
    pub catalan: Vec<i64>,
    pub narayana: Vec<Vec<i64>>,
    pub corrections: Vec<Correction>,
}

impl ReferenceNumerators {
    pub fn table(&self, n: usize, ring: Ring) -> Option<&BTreeMap<usize, Vec<i64>>> {
        match (n, ring) {
            (2, Ring::PureTrace) => Some(&self.n2_pure),
            (2, Ring::MixedTrace) => Some(&self.n2_mixed),
            (3, Ring::PureTrace) => Some(&self.n3_pure),
            _ => None,
        }
    }

    pub fn numerator(&self, n: usize, k: usize, ring: Ring) -> Option<DensePolynomial> {
        self.table(n, ring)?.get(&k).map(|c| DensePolynomial::from_ints(c))
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct DokovicEntry {
    pub name: String,
    pub n: usize,
    pub k: usize,
    ring: String,
    denominator: BTreeMap<usize, u32>,
}

impl DokovicEntry {
    pub fn ring(&self) -> Ring {
        if self.ring == "mixed" {
            Ring::MixedTrace
        } else {
            Ring::PureTrace
        }
    }

    pub fn denominator(&self) -> FactoredDenominator {
        FactoredDenominator::new(self.denominator.iter().map(|(&i, &e)| (i, e)))
    }
}

pub fn reference_numerators() -> ReferenceNumerators {
    serde_json::from_str(NUMERATORS).expect("bundled numerator fixture is valid JSON")
}

pub fn dokovic_denominators() -> Vec<DokovicEntry> {
    serde_json::from_str(DOKOVIC).expect("bundled denominator fixture is valid JSON")
}

pub fn dokovic(n: usize, k: usize, ring: Ring) -> Option<FactoredDenominator> {
    dokovic_denominators()
        .into_iter()
        .find(|e| e.n == n && e.k == k && e.ring() == ring)
        .map(|e| e.denominator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use trace_poincare_core::exactmath::{binomial, catalan};
    use trace_poincare_core::verify::is_palindromic;

    #[test]
    fn tables_load() {
        let p = reference_numerators();
        assert_eq!(p.n2_pure.len(), 7);
        assert_eq!(p.n2_mixed.len(), 9);
        assert_eq!(p.n3_pure.len(), 3);
        assert_eq!(dokovic_denominators().len(), 6);
    }

    #[test]
    fn reference_rows() {
        let p = reference_numerators();
        for (m, &c) in p.catalan.iter().enumerate() {
            assert_eq!(catalan(m as u64), c.into());
        }
        for (m, row) in p.narayana.iter().enumerate() {
            let m = m as i64 + 1;
            for (i, &v) in row.iter().enumerate() {
                let i = i as i64;
                assert_eq!(binomial(m, i) * binomial(m, i + 1) / m, v.into());
            }
        }
    }

    #[test]
    fn numerators_are_palindromic() {
        let p = reference_numerators();
        for (n, ring) in [(2, Ring::PureTrace), (2, Ring::MixedTrace), (3, Ring::PureTrace)] {
            for &k in p.table(n, ring).unwrap().keys() {
                assert!(is_palindromic(&p.numerator(n, k, ring).unwrap()), "{n} {k} {ring}");
            }
        }
    }

    #[test]
    fn values_at_one() {
        let p = reference_numerators();
        for (&k, &v) in &p.n3_pure_at_one {
            let sum: i64 = p.n3_pure[&k].iter().sum();
            assert_eq!(sum, v);
        }
    }
}
