//! Exact fields used as specialization targets, and the small amount of
//! linear algebra needed over them (rank, echelon pivots).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// An exact field with elements of type `Elem`.
///
/// The field value carries whatever parameters the elements need (the
/// modulus of a prime field, the sampling range of the rationals).
pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    /// A random element from the field's sampling distribution.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn describe(&self) -> String;

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut out = self.one();
        for _ in 0..e {
            out = self.mul(&out, a);
        }
        out
    }
}

/// `ℚ`, sampled as integers in `[-bound, bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationals {
    pub sample_bound: i64,
}

impl Default for Rationals {
    fn default() -> Self {
        Rationals { sample_bound: 10 }
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad rational {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        let b = self.sample_bound;
        BigRational::from_integer(BigInt::from(rng.gen_range(-b..=b)))
    }
    fn describe(&self) -> String {
        format!("QQ (samples in [-{0},{0}])", self.sample_bound)
    }
}

/// `GF(p)` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub const DEFAULT_PRIME: u64 = 32003;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat: a^(p-2)
        let (mut base, mut e, mut acc) = (*a, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p))
            .to_u64()
            .expect("reduced residue fits in u64")
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let n: BigInt = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
        Ok(self.from_bigint(&n))
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn describe(&self) -> String {
        format!("GF({})", self.p)
    }
}

/// Row-reduces `rows` in place (each row a vector over `field`), scanning
/// columns left to right. Returns the pivot column of each nonzero row.
pub fn echelon_pivots<F: Field>(field: &F, rows: &mut [Vec<F::Elem>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !field.is_zero(&rows[k][col])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][col]);
        for v in rows[r].iter_mut() {
            *v = field.mul(v, &inv);
        }
        for k in 0..rows.len() {
            if k != r && !field.is_zero(&rows[k][col]) {
                let factor = rows[k][col].clone();
                for c in col..ncols {
                    let delta = field.mul(&factor, &rows[r][c]);
                    rows[k][c] = field.sub(&rows[k][c], &delta);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Rank of a list of vectors.
pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut work = rows.to_vec();
    echelon_pivots(field, &mut work).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn rank_over_both_fields() {
        let q = Rationals::default();
        let rows: Vec<Vec<BigRational>> = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
            .iter()
            .map(|r| r.iter().map(|&v| q.from_bigint(&BigInt::from(v))).collect())
            .collect();
        assert_eq!(rank(&q, &rows), 2);
        let f = PrimeField::new(5).unwrap();
        let rows = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(rank(&f, &rows), 1);
    }

    #[test]
    fn parses_rationals() {
        let q = Rationals::default();
        assert_eq!(q.parse("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(q.parse("1/0").is_err());
    }

    proptest! {
        #[test]
        fn prime_field_inverse(a in 1u64..32003) {
            let f = PrimeField::default();
            prop_assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }

        #[test]
        fn prime_field_distributes(a in 0u64..32003, b in 0u64..32003, c in 0u64..32003) {
            let f = PrimeField::default();
            prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
            prop_assert_eq!(f.add(&a, &f.neg(&a)), 0);
        }
    }
}
