//! Monomial ideals of finite colength in `K[x,y]`, encoded as staircases.
//!
//! An ideal is stored by the row lengths of its staircase (a partition);
//! generators, lcms and graded data are derived from the rows. Row `j` of
//! the staircase holds the standard monomials `x^i y^j` with `i < rows[j]`.
//!
//! Monomials are compared lexicographically with `x ≺ y`: the `y`-exponent
//! decides first, so pure powers of `x` are the smallest monomials of each
//! degree.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^i y^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0 };

    pub const fn new(i: u32, j: u32) -> Self {
        Monomial { i, j }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.i.max(other.i), self.j.max(other.j))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.i + other.i, self.j + other.j)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        Some(Monomial::new(
            self.i.checked_sub(other.i)?,
            self.j.checked_sub(other.j)?,
        ))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.j, self.i).cmp(&(other.j, other.i))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn power(f: &mut fmt::Formatter<'_>, var: char, e: u32) -> fmt::Result {
            if e == 1 {
                write!(f, "{var}")
            } else {
                write!(f, "{var}^{e}")
            }
        }
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (i, 0) => power(f, 'x', i),
            (0, j) => power(f, 'y', j),
            (i, j) => {
                power(f, 'x', i)?;
                write!(f, "*")?;
                power(f, 'y', j)
            }
        }
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::ONE);
        }
        let mut m = Monomial::ONE;
        for factor in s.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (
                    v.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in monomial {s:?}")))?,
                ),
                None => (factor, 1),
            };
            match var {
                "x" => m.i += exp,
                "y" => m.j += exp,
                _ => return Err(Error::Parse(format!("bad monomial {s:?}"))),
            }
        }
        Ok(m)
    }
}

/// The grading `deg(x) = a`, `deg(y) = b` with `a, b` positive and coprime.
///
/// The slope monomial `r = x^b / y^a` has degree zero; [`Grading::shift`]
/// applies its powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u32; 2]", into = "[u32; 2]")]
pub struct Grading {
    a: u32,
    b: u32,
}

impl Grading {
    pub const STANDARD: Grading = Grading { a: 1, b: 1 };

    /// Builds a grading, dividing out `gcd(a, b)`.
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidGrading(a, b));
        }
        let g = a.gcd(&b);
        Ok(Grading { a: a / g, b: b / g })
    }

    pub fn x_weight(&self) -> u32 {
        self.a
    }

    pub fn y_weight(&self) -> u32 {
        self.b
    }

    pub fn is_standard(&self) -> bool {
        *self == Grading::STANDARD
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        self.a as u64 * m.i as u64 + self.b as u64 * m.j as u64
    }

    /// `m · r^ell`, or `None` when an exponent would go negative.
    pub fn shift(&self, m: &Monomial, ell: i64) -> Option<Monomial> {
        let i = m.i as i64 + ell * self.b as i64;
        let j = m.j as i64 - ell * self.a as i64;
        if i < 0 || j < 0 {
            return None;
        }
        Some(Monomial::new(u32::try_from(i).ok()?, u32::try_from(j).ok()?))
    }

    /// The `ell` with `to = from · r^ell`, if the two monomials lie on one
    /// line of slope `-a/b`.
    pub fn shift_between(&self, from: &Monomial, to: &Monomial) -> Option<i64> {
        let di = to.i as i64 - from.i as i64;
        let dj = from.j as i64 - to.j as i64;
        let (a, b) = (self.a as i64, self.b as i64);
        if di % b != 0 || dj % a != 0 || di / b != dj / a {
            return None;
        }
        Some(di / b)
    }

    /// All monomials of degree `d`, increasing in the `x ≺ y` order.
    pub fn monomials_of_degree(&self, d: u64) -> Vec<Monomial> {
        let (a, b) = (self.a as u64, self.b as u64);
        (0..=d / b)
            .filter(|j| (d - b * j) % a == 0)
            .map(|j| Monomial::new(((d - b * j) / a) as u32, j as u32))
            .collect()
    }

    /// Number of monomials of degree `d`.
    pub fn count_of_degree(&self, d: u64) -> usize {
        self.monomials_of_degree(d).len()
    }

    /// Coprime gradings `(a, b)` with `1 <= a, b <= bound`, ordered by `(a, b)`.
    pub fn all_up_to(bound: u32) -> Vec<Grading> {
        let mut out = Vec::new();
        for a in 1..=bound {
            for b in 1..=bound {
                if a.gcd(&b) == 1 {
                    out.push(Grading { a, b });
                }
            }
        }
        out
    }

    /// The grading with the two weights swapped.
    pub fn transpose(&self) -> Grading {
        Grading { a: self.b, b: self.a }
    }
}

impl TryFrom<[u32; 2]> for Grading {
    type Error = Error;
    fn try_from(v: [u32; 2]) -> Result<Self> {
        Grading::new(v[0], v[1])
    }
}

impl From<Grading> for [u32; 2] {
    fn from(g: Grading) -> Self {
        [g.a, g.b]
    }
}

impl fmt::Display for Grading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl FromStr for Grading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let nums = parse_list(s)?;
        match nums.as_slice() {
            [a, b] => Grading::new(*a, *b),
            _ => Err(Error::Parse(format!("grading must be \"a,b\", got {s:?}"))),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

/// A graded Hilbert function `d ↦ h(d)` with finite support.
///
/// Trailing zeros are trimmed, so structural equality is equality of
/// functions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u64>", into = "Vec<u64>")]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        HilbertFunction { values }
    }

    pub fn get(&self, d: u64) -> u64 {
        self.values.get(d as usize).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// The colength `N = Σ h(d)`.
    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    /// Largest degree with `h(d) > 0`.
    pub fn dmax(&self) -> Option<u64> {
        self.values.len().checked_sub(1).map(|d| d as u64)
    }

    /// Whether `h(d)` never exceeds the number of degree-`d` monomials.
    pub fn is_feasible(&self, g: &Grading) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(d, &v)| v as usize <= g.count_of_degree(d as u64))
    }
}

impl From<Vec<u64>> for HilbertFunction {
    fn from(v: Vec<u64>) -> Self {
        HilbertFunction::new(v)
    }
}

impl From<HilbertFunction> for Vec<u64> {
    fn from(h: HilbertFunction) -> Self {
        h.values
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for HilbertFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(HilbertFunction::new(
            parse_list(s)?.into_iter().map(u64::from).collect(),
        ))
    }
}

/// A monomial ideal of finite colength in `K[x,y]`.
///
/// `rows` is the partition of the staircase. The minimal generators
/// `m_0 ≺ … ≺ m_e` are the inner corners: `m_0` is a power of `x` and `m_e`
/// a power of `y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct MonomialIdeal {
    rows: Vec<u32>,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        if rows.is_empty() || rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(rows));
        }
        let mut generators = vec![Monomial::new(rows[0], 0)];
        for j in 1..rows.len() {
            if rows[j] < rows[j - 1] {
                generators.push(Monomial::new(rows[j], j as u32));
            }
        }
        generators.push(Monomial::new(0, rows.len() as u32));
        Ok(MonomialIdeal { rows, generators })
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn colength(&self) -> u64 {
        self.rows.iter().map(|&r| r as u64).sum()
    }

    /// Minimal generators `m_0 ≺ m_1 ≺ … ≺ m_e`.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn generator(&self, k: usize) -> Monomial {
        self.generators[k]
    }

    /// The index `e` of the last generator.
    pub fn last_index(&self) -> usize {
        self.generators.len() - 1
    }

    /// `w_k = lcm(m_k, m_{k-1})` for `1 <= k <= e`.
    pub fn lcm_w(&self, k: usize) -> Monomial {
        assert!(k >= 1 && k < self.generators.len(), "w_k needs 1 <= k <= e");
        self.generators[k].lcm(&self.generators[k - 1])
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        match self.rows.get(m.j as usize) {
            None => true,
            Some(&len) => m.i >= len,
        }
    }

    /// Standard monomials (not in the ideal), row by row.
    pub fn staircase(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(j, &len)| (0..len).map(move |i| Monomial::new(i, j as u32)))
    }

    fn dividing_generators(&self, m: &Monomial) -> Result<impl Iterator<Item = usize> + '_> {
        if !self.contains(m) {
            return Err(Error::NotInIdeal(*m));
        }
        let m = *m;
        Ok(self
            .generators
            .iter()
            .enumerate()
            .filter(move |(_, g)| g.divides(&m))
            .map(|(k, _)| k))
    }

    /// Largest index `k` with `m_k | m`.
    pub fn j_plus(&self, m: &Monomial) -> Result<usize> {
        Ok(self.dividing_generators(m)?.last().expect("m in M has a divisor"))
    }

    /// Smallest index `k` with `m_k | m`.
    pub fn j_minus(&self, m: &Monomial) -> Result<usize> {
        Ok(self.dividing_generators(m)?.next().expect("m in M has a divisor"))
    }

    /// The conjugate partition; swaps the roles of `x` and `y`.
    pub fn transpose(&self) -> MonomialIdeal {
        let cols = (0..self.rows[0])
            .map(|i| self.rows.iter().filter(|&&r| r > i).count() as u32)
            .collect();
        MonomialIdeal::new(cols).expect("conjugate of a partition is a partition")
    }

    /// Rows strictly decreasing: the lex-least ideals of the standard grading.
    pub fn has_strict_rows(&self) -> bool {
        self.rows.windows(2).all(|w| w[0] > w[1])
    }

    /// Columns strictly decreasing: the lex-most ideals of the standard grading.
    pub fn has_strict_columns(&self) -> bool {
        self.transpose().has_strict_rows()
    }

    pub fn hilbert_function(&self, g: &Grading) -> HilbertFunction {
        let mut values = Vec::new();
        for m in self.staircase() {
            let d = g.degree(&m) as usize;
            if values.len() <= d {
                values.resize(d + 1, 0);
            }
            values[d] += 1;
        }
        HilbertFunction::new(values)
    }

    /// Monomials of the ideal in degree `d`, increasing in `x ≺ y`.
    pub fn monomials_of_degree(&self, g: &Grading, d: u64) -> Vec<Monomial> {
        g.monomials_of_degree(d)
            .into_iter()
            .filter(|m| self.contains(m))
            .collect()
    }

    /// Generators written as `<x^6, x^4*y, ...>`.
    pub fn generators_string(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|m| m.to_string()).collect();
        format!("<{}>", gens.join(", "))
    }

    /// The ideal generated by `gens` (minimality is not required).
    pub fn from_generators(gens: &[Monomial]) -> Result<Self> {
        let height = gens
            .iter()
            .filter(|m| m.i == 0)
            .map(|m| m.j)
            .min()
            .ok_or_else(|| Error::Parse("no pure power of y among generators".into()))?;
        let mut rows = Vec::with_capacity(height as usize);
        for j in 0..height {
            let len = gens
                .iter()
                .filter(|m| m.j <= j)
                .map(|m| m.i)
                .min()
                .ok_or_else(|| Error::Parse("no pure power of x among generators".into()))?;
            rows.push(len);
        }
        MonomialIdeal::new(rows)
    }
}

impl TryFrom<Vec<u32>> for MonomialIdeal {
    type Error = Error;
    fn try_from(rows: Vec<u32>) -> Result<Self> {
        MonomialIdeal::new(rows)
    }
}

impl From<MonomialIdeal> for Vec<u32> {
    fn from(m: MonomialIdeal) -> Self {
        m.rows
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for MonomialIdeal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MonomialIdeal::new(parse_list(s)?)
    }
}

/// All partitions of `n` in reverse-lexicographic order, `[n]` first.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut current = vec![n];
    loop {
        out.push(current.clone());
        // rightmost part larger than one
        let Some(k) = current.iter().rposition(|&p| p > 1) else {
            break;
        };
        let ones = (current.len() - k - 1) as u32;
        let v = current[k] - 1;
        current.truncate(k);
        current.push(v);
        let mut rest = ones + 1;
        while rest > 0 {
            let part = rest.min(v);
            current.push(part);
            rest -= part;
        }
    }
    out
}

/// Every monomial ideal of colength `n`, in reverse-lexicographic order of partitions.
pub fn enumerate_ideals(n: u32) -> Vec<MonomialIdeal> {
    if n == 0 {
        return Vec::new();
    }
    partitions(n)
        .into_iter()
        .map(|p| MonomialIdeal::new(p).expect("generated partitions are valid"))
        .collect()
}

/// The monomial ideals with Hilbert function `h` under `g`.
pub fn ideals_with_hf(h: &HilbertFunction, g: &Grading) -> Vec<MonomialIdeal> {
    if h.total() == 0 || !h.is_feasible(g) {
        return Vec::new();
    }
    enumerate_ideals(h.total() as u32)
        .into_iter()
        .filter(|m| m.hilbert_function(g) == *h)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    fn mono(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    fn hf(v: &[u64]) -> HilbertFunction {
        HilbertFunction::new(v.to_vec())
    }

    #[test]
    fn generators_of_single_row() {
        let m = ideal("4");
        assert_eq!(m.generators(), &[Monomial::new(4, 0), Monomial::new(0, 1)]);
        assert_eq!(m.colength(), 4);
    }

    #[test]
    fn generators_of_worked_examples() {
        let m = ideal("6,4,2,1");
        assert_eq!(m.generators_string(), "<x^6, x^4*y, x^2*y^2, x*y^3, y^4>");
        let m = ideal("11,8,4,1,1,1,1");
        assert_eq!(m.generators_string(), "<x^11, x^8*y, x^4*y^2, x*y^3, y^7>");
        assert_eq!(m.lcm_w(2), mono("x^8*y^2"));
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(MonomialIdeal::new(vec![]).is_err());
        assert!(MonomialIdeal::new(vec![2, 0]).is_err());
        assert!(MonomialIdeal::new(vec![1, 2]).is_err());
    }

    #[test]
    fn generators_round_trip() {
        for m in enumerate_ideals(7) {
            assert_eq!(MonomialIdeal::from_generators(m.generators()).unwrap(), m);
            assert_eq!(m.generators().len(), {
                let mut d = m.rows().to_vec();
                d.dedup();
                d.len() + 1
            });
        }
    }

    #[test]
    fn graded_hilbert_functions() {
        let g11 = Grading::STANDARD;
        assert_eq!(ideal("2,2").hilbert_function(&g11), hf(&[1, 2, 1]));
        assert_eq!(
            ideal("5,1").hilbert_function(&Grading::new(1, 2).unwrap()),
            hf(&[1, 1, 2, 1, 1])
        );
        assert_eq!(
            ideal("4").hilbert_function(&Grading::new(1, 3).unwrap()),
            hf(&[1, 1, 1, 1])
        );
    }

    #[test]
    fn slices_of_degree() {
        let g = Grading::STANDARD;
        assert_eq!(g.monomials_of_degree(2), vec![mono("x^2"), mono("x*y"), mono("y^2")]);
        let g = Grading::new(2, 3).unwrap();
        assert_eq!(
            g.monomials_of_degree(18),
            vec![mono("x^9"), mono("x^6*y^2"), mono("x^3*y^4"), mono("y^6")]
        );
        assert!(g.monomials_of_degree(1).is_empty());
    }

    #[test]
    fn grading_normalizes() {
        assert_eq!(Grading::new(4, 6).unwrap(), Grading::new(2, 3).unwrap());
        assert!(Grading::new(0, 1).is_err());
        assert_eq!("2,3".parse::<Grading>().unwrap().to_string(), "(2,3)");
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_ideals(4).len(), 5);
        assert_eq!(enumerate_ideals(6).len(), 11);
        assert_eq!(
            partitions(4),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn fibers() {
        let g12 = Grading::new(1, 2).unwrap();
        let fiber: Vec<String> = ideals_with_hf(&hf(&[1, 1, 2, 1, 1]), &g12)
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(fiber, vec!["5,1", "4,1,1", "3,3", "3,2,1"]);
        let fiber: Vec<String> = ideals_with_hf(&hf(&[1, 2, 1]), &Grading::STANDARD)
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(fiber, vec!["3,1", "2,2", "2,1,1"]);
        assert!(ideals_with_hf(&hf(&[2]), &Grading::STANDARD).is_empty());
    }

    #[test]
    fn j_plus_and_minus() {
        let m = ideal("6,4,2,1");
        assert_eq!(m.j_minus(&mono("x^2*y^2")).unwrap(), 2);
        assert_eq!(m.j_plus(&mono("x^6*y^4")).unwrap(), 4);
        assert_eq!(m.j_minus(&mono("x^6*y^4")).unwrap(), 0);
        assert!(m.j_plus(&mono("x*y")).is_err());
        for (k, g) in m.generators().iter().enumerate() {
            assert_eq!(m.j_plus(g).unwrap(), k);
            assert_eq!(m.j_minus(g).unwrap(), k);
        }
    }

    #[test]
    fn slope_shift() {
        let g = Grading::new(1, 2).unwrap();
        assert_eq!(g.shift(&mono("x^8*y"), 1), Some(mono("x^10")));
        assert_eq!(g.shift(&mono("x^8*y"), 2), None);
        assert_eq!(g.shift_between(&mono("x^8*y"), &mono("x^10")), Some(1));
        assert_eq!(g.shift_between(&mono("x^8*y"), &mono("x^9")), None);
    }

    #[test]
    fn monomial_text() {
        for s in ["1", "x", "y^3", "x^4*y^2", "x*y"] {
            assert_eq!(mono(s).to_string(), s);
        }
        assert_eq!(mono("x^1*y^0"), mono("x"));
        assert!("z".parse::<Monomial>().is_err());
    }

    #[test]
    fn lex_order_puts_x_powers_first() {
        assert!(mono("x^10") < mono("y"));
        assert!(mono("x^2*y") < mono("x*y^2"));
    }
}
