//! Sparse multivariate polynomials over `ℤ` in the cell coordinates `c_i^ℓ`.
//!
//! Each positive significant arrow `(i, ℓ)` contributes one variable. The
//! variables are ordered by `(i, ℓ)`, and monomials are compared
//! lexicographically starting from the largest variable, so that
//! `c_i^ℓ ≻ c_j^ℓ'` when `i > j`, or `i = j` and `ℓ > ℓ'`. Terms are kept
//! in a sorted map without zero coefficients, so structural equality is
//! polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Field;

/// The variable `c_index^length`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CVar {
    pub index: u32,
    pub length: u32,
}

impl CVar {
    pub const fn new(index: u32, length: u32) -> Self {
        CVar { index, length }
    }
}

impl fmt::Display for CVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c({},{})", self.index, self.length)
    }
}

impl FromStr for CVar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad variable {s:?}, expected c(i,l)"));
        let inner = s
            .trim()
            .strip_prefix("c(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (i, l) = inner.split_once(',').ok_or_else(bad)?;
        Ok(CVar::new(
            i.trim().parse().map_err(|_| bad())?,
            l.trim().parse().map_err(|_| bad())?,
        ))
    }
}

/// A monomial in the `c` variables: `(variable, exponent)` pairs sorted by
/// decreasing variable, all exponents positive.
///
/// The derived order compares the pair sequences lexicographically, which
/// is exactly lex order with the largest variable compared first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CMonomial(Vec<(CVar, u32)>);

impl CMonomial {
    pub fn one() -> Self {
        CMonomial(Vec::new())
    }

    pub fn var(v: CVar) -> Self {
        CMonomial(vec![(v, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (CVar, u32)>) -> Self {
        let mut acc: BTreeMap<CVar, u32> = BTreeMap::new();
        for (v, e) in powers {
            if e > 0 {
                *acc.entry(v).or_default() += e;
            }
        }
        CMonomial(acc.into_iter().rev().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(CVar, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: CVar) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map(|(_, e)| *e).unwrap_or(0)
    }

    /// Weighted degree with `deg(c_i^ℓ) = ℓ`.
    pub fn weighted_degree(&self) -> u64 {
        self.0.iter().map(|(v, e)| v.length as u64 * *e as u64).sum()
    }

    pub fn mul(&self, other: &CMonomial) -> CMonomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut p, mut q) = (0, 0);
        while p < a.len() && q < b.len() {
            match a[p].0.cmp(&b[q].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[p]);
                    p += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[q]);
                    q += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[p].0, a[p].1 + b[q].1));
                    p += 1;
                    q += 1;
                }
            }
        }
        out.extend_from_slice(&a[p..]);
        out.extend_from_slice(&b[q..]);
        CMonomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &CMonomial) -> Option<CMonomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut q = 0;
        for &(v, e) in &self.0 {
            let f = if q < other.0.len() && other.0[q].0 == v {
                q += 1;
                other.0[q - 1].1
            } else {
                0
            };
            if f > e {
                return None;
            }
            if e > f {
                out.push((v, e - f));
            }
        }
        if q != other.0.len() {
            return None;
        }
        Some(CMonomial(out))
    }

    pub fn variables(&self) -> impl Iterator<Item = CVar> + '_ {
        self.0.iter().map(|(v, _)| *v)
    }
}

impl fmt::Display for CMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in `ℤ[c_i^ℓ]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CPolynomial {
    terms: BTreeMap<CMonomial, BigInt>,
}

impl CPolynomial {
    pub fn zero() -> Self {
        CPolynomial::default()
    }

    pub fn one() -> Self {
        CPolynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        CPolynomial::term(c, CMonomial::one())
    }

    pub fn var(v: CVar) -> Self {
        CPolynomial::term(BigInt::one(), CMonomial::var(v))
    }

    pub fn term(c: BigInt, m: CMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        CPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&CMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &CMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The lex-leading term.
    pub fn leading_term(&self) -> Option<(&CMonomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: CMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &CPolynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &CPolynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c);
        }
    }

    pub fn mul_ref(&self, other: &CPolynomial) -> CPolynomial {
        let mut out = CPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, c: &BigInt, m: &CMonomial) -> CPolynomial {
        let mut out = CPolynomial::zero();
        if c.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            out.terms.insert(m1.mul(m), c1 * c);
        }
        out
    }

    /// Exact division; `None` when `divisor` does not divide `self` in `ℤ[c]`.
    pub fn exact_div(&self, divisor: &CPolynomial) -> Option<CPolynomial> {
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = CPolynomial::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(&lm)?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            rem.sub_assign_ref(&divisor.mul_term(&qc, &qm));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// The common weighted degree (`deg c_i^ℓ = ℓ`) if homogeneous; `None`
    /// for the zero polynomial.
    pub fn weighted_degree(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(CMonomial::weighted_degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Every variable occurring in some term.
    pub fn variables(&self) -> std::collections::BTreeSet<CVar> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    /// Sets every variable satisfying `kill` to zero.
    pub fn set_to_zero(&self, kill: impl Fn(&CVar) -> bool) -> CPolynomial {
        CPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.variables().any(|v| kill(&v)))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at a point of the given field.
    pub fn specialize<F: Field>(&self, point: &BTreeMap<CVar, F::Elem>, field: &F) -> Result<F::Elem> {
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = field.from_bigint(c);
            for (v, e) in m.powers() {
                let val = point.get(v).ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                t = field.mul(&t, &field.pow(val, *e));
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> CPolynomial {
        let mut out = CPolynomial::one();
        for _ in 0..e {
            out = out.mul_ref(self);
        }
        out
    }
}

impl From<CVar> for CPolynomial {
    fn from(v: CVar) -> Self {
        CPolynomial::var(v)
    }
}

impl From<i64> for CPolynomial {
    fn from(c: i64) -> Self {
        CPolynomial::constant(BigInt::from(c))
    }
}

impl Add for &CPolynomial {
    type Output = CPolynomial;
    fn add(self, rhs: &CPolynomial) -> CPolynomial {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &CPolynomial {
    type Output = CPolynomial;
    fn sub(self, rhs: &CPolynomial) -> CPolynomial {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl Mul for &CPolynomial {
    type Output = CPolynomial;
    fn mul(self, rhs: &CPolynomial) -> CPolynomial {
        self.mul_ref(rhs)
    }
}

impl Neg for &CPolynomial {
    type Output = CPolynomial;
    fn neg(self) -> CPolynomial {
        CPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for CPolynomial {
    type Output = CPolynomial;
    fn add(mut self, rhs: CPolynomial) -> CPolynomial {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for CPolynomial {
    type Output = CPolynomial;
    fn sub(mut self, rhs: CPolynomial) -> CPolynomial {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl Mul for CPolynomial {
    type Output = CPolynomial;
    fn mul(self, rhs: CPolynomial) -> CPolynomial {
        self.mul_ref(&rhs)
    }
}

impl Neg for CPolynomial {
    type Output = CPolynomial;
    fn neg(self) -> CPolynomial {
        -&self
    }
}

/// Canonical form: terms in increasing lex order joined by `+`/`-`, each
/// monomial with its variables in decreasing order, e.g.
/// `c(2,1)*c(1,1)+c(2,2)`.
impl fmt::Display for CPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if k > 0 {
                write!(f, "+")?;
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CPolynomial {
    type Err = Error;

    /// Parses the canonical form (and any sum of signed products of
    /// integers and `c(i,l)` powers).
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = CPolynomial::zero();
        let mut terms = Vec::new();
        let mut start = 0;
        let mut depth = 0;
        let bytes = s.as_bytes();
        for (k, &ch) in bytes.iter().enumerate() {
            match ch {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 && k > start => {
                    terms.push(&s[start..k]);
                    start = k;
                }
                _ => {}
            }
        }
        terms.push(&s[start..]);
        for t in terms {
            let (sign, body) = match t.as_bytes()[0] {
                b'-' => (-1, &t[1..]),
                b'+' => (1, &t[1..]),
                _ => (1, t),
            };
            let mut coeff = BigInt::from(sign);
            let mut powers = Vec::new();
            for factor in body.split('*').filter(|f| !f.is_empty()) {
                if factor.starts_with("c(") {
                    let (var, exp) = match factor.rfind(")^") {
                        Some(p) => (
                            &factor[..=p],
                            factor[p + 2..]
                                .parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?,
                        ),
                        None => (factor, 1),
                    };
                    powers.push((var.parse::<CVar>()?, exp));
                } else {
                    let c: BigInt = factor
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad factor {factor:?}")))?;
                    coeff *= c;
                }
            }
            out.add_term(CMonomial::from_powers(powers), coeff);
        }
        Ok(out)
    }
}
