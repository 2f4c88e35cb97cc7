#![allow(dead_code)]

use hilb_spine::{CMonomial, CPolynomial, CVar, Grading, MonomialIdeal};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn ideal(s: &str) -> MonomialIdeal {
    s.parse().unwrap()
}

pub fn hf(v: &[u64]) -> hilb_spine::HilbertFunction {
    hilb_spine::HilbertFunction::new(v.to_vec())
}

/// Gradings the exhaustive checks run under.
pub fn sweep_gradings() -> Vec<Grading> {
    [(1, 1), (1, 2), (2, 1), (2, 3), (1, 3)]
        .iter()
        .map(|&(a, b)| Grading::new(a, b).unwrap())
        .collect()
}

/// Partition count by the standard recurrence on largest part, independent
/// of the enumerator under test.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    // p[k][m]: partitions of m into parts of size at most k
    let mut p = vec![vec![0u64; n + 1]; n + 1];
    for row in p.iter_mut() {
        row[0] = 1;
    }
    for k in 1..=n {
        for m in 1..=n {
            p[k][m] = p[k - 1][m] + if m >= k { p[k][m - k] } else { 0 };
        }
    }
    p[n][n]
}

pub fn small_poly() -> impl Strategy<Value = CPolynomial> {
    let var = (1u32..4, 1u32..3).prop_map(|(i, l)| CVar::new(i, l));
    let mono = prop::collection::vec((var, 1u32..3), 0..3).prop_map(CMonomial::from_powers);
    prop::collection::vec((mono, -3i64..4), 0..4).prop_map(|terms| {
        terms.into_iter().fold(CPolynomial::zero(), |acc, (m, c)| {
            acc + CPolynomial::term(BigInt::from(c), m)
        })
    })
}
