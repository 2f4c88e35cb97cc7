//! Evain's universal family `f_0, …, f_e` over the cell of a monomial
//! ideal, built two ways: the defining recursion, and sums over paths.

use std::collections::BTreeMap;
use std::fmt;

use crate::arrows::CellArrows;
use crate::poly::CPolynomial;
use crate::staircase::{Grading, Monomial, MonomialIdeal};

/// One generator `f_i`, stored as carrier monomial → coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyPolynomial {
    terms: BTreeMap<Monomial, CPolynomial>,
}

impl FamilyPolynomial {
    pub fn monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, CPolynomial::one());
        FamilyPolynomial { terms }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CPolynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, carrier: &Monomial) -> CPolynomial {
        self.terms.get(carrier).cloned().unwrap_or_default()
    }

    /// Leading carrier in the `x ≺ y` order and its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &CPolynomial)> {
        self.terms.iter().next_back()
    }

    pub fn carriers(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    fn add_term(&mut self, carrier: Monomial, coeff: &CPolynomial) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(carrier).or_default();
        slot.add_assign_ref(coeff);
        if slot.is_zero() {
            self.terms.remove(&carrier);
        }
    }
}

impl fmt::Display for FamilyPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (carrier, coeff)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let plain = coeff.num_terms() == 1 && coeff.leading_term().is_some_and(|(_, c)| *c == 1.into());
            match (coeff.is_one(), *carrier == Monomial::ONE) {
                (true, _) => write!(f, "{carrier}")?,
                (false, true) if plain => write!(f, "{coeff}")?,
                (false, true) => write!(f, "({coeff})")?,
                (false, false) if plain => write!(f, "{coeff}*{carrier}")?,
                (false, false) => write!(f, "({coeff})*{carrier}")?,
            }
        }
        Ok(())
    }
}

/// The generators `f_0, …, f_e` of the universal ideal over the cell of
/// `ideal` with respect to `grading`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalFamily {
    pub ideal: MonomialIdeal,
    pub grading: Grading,
    pub generators: Vec<FamilyPolynomial>,
}

impl UniversalFamily {
    pub fn generator(&self, k: usize) -> &FamilyPolynomial {
        &self.generators[k]
    }

    /// Coefficient of `m_k r^ℓ` in `f_k`.
    pub fn coefficient_at_shift(&self, k: usize, ell: i64) -> CPolynomial {
        match self.grading.shift(&self.ideal.generator(k), ell) {
            Some(carrier) => self.generators[k].coefficient(&carrier),
            None => CPolynomial::zero(),
        }
    }
}

impl fmt::Display for UniversalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, fk) in self.generators.iter().enumerate() {
            writeln!(f, "f_{k} = {fk}")?;
        }
        Ok(())
    }
}

fn laurent_shift(m: &Monomial, di: i64, dj: i64) -> Monomial {
    let i = m.i as i64 + di;
    let j = m.j as i64 + dj;
    assert!(i >= 0 && j >= 0, "carrier left the polynomial ring");
    Monomial::new(i as u32, j as u32)
}

/// `f_0 = m_0` and
/// `f_i = (m_i/m_{i-1}) f_{i-1} + Σ c_i^ℓ (m_i r^ℓ / m_j) f_j` with
/// `j = j^+(w_i r^ℓ)`, computed with Laurent monomial arithmetic.
pub fn universal_generators(ideal: &MonomialIdeal, grading: &Grading) -> UniversalFamily {
    let cell = CellArrows::new(ideal, grading);
    let mut fs: Vec<FamilyPolynomial> = vec![FamilyPolynomial::monomial(ideal.generator(0))];
    for i in 1..=ideal.last_index() {
        let mi = ideal.generator(i);
        let prev = ideal.generator(i - 1);
        let mut fi = FamilyPolynomial::default();
        let (di, dj) = (mi.i as i64 - prev.i as i64, mi.j as i64 - prev.j as i64);
        for (carrier, coeff) in fs[i - 1].terms() {
            fi.add_term(laurent_shift(carrier, di, dj), coeff);
        }
        for arrow in cell.arrows().iter().filter(|a| a.index == i) {
            let j = cell.landing(arrow);
            let head = grading.shift(&mi, arrow.length).expect("arrow head is a monomial");
            let mj = ideal.generator(j);
            let (di, dj) = (head.i as i64 - mj.i as i64, head.j as i64 - mj.j as i64);
            let c = CPolynomial::var(arrow.var());
            for (carrier, coeff) in fs[j].terms() {
                fi.add_term(laurent_shift(carrier, di, dj), &c.mul_ref(coeff));
            }
        }
        fs.push(fi);
    }
    UniversalFamily {
        ideal: ideal.clone(),
        grading: *grading,
        generators: fs,
    }
}

/// The table `S(k, ℓ) = Σ c_P` over paths `P` from `m_k` of length `ℓ`.
#[derive(Clone, Debug)]
pub struct PathSums {
    max_length: i64,
    table: Vec<Vec<CPolynomial>>,
}

impl PathSums {
    pub fn new(cell: &CellArrows) -> Self {
        let e = cell.ideal().last_index();
        let max_length = cell.max_path_length();
        let mut table = vec![vec![CPolynomial::zero(); max_length as usize + 1]; e + 1];
        // landings are strictly below the arrow index, so increasing ℓ
        // only reads finished entries
        for ell in 0..=max_length {
            for k in 0..=e {
                let mut s = if ell == 0 {
                    CPolynomial::one()
                } else {
                    CPolynomial::zero()
                };
                for (arrow, landing) in cell.descending() {
                    if arrow.index <= k && arrow.length <= ell {
                        let tail = &table[landing][(ell - arrow.length) as usize];
                        if !tail.is_zero() {
                            s.add_assign_ref(&CPolynomial::var(arrow.var()).mul_ref(tail));
                        }
                    }
                }
                table[k][ell as usize] = s;
            }
        }
        PathSums { max_length, table }
    }

    /// `S(k, ℓ)`; zero outside `0 <= ℓ <= ` the longest path.
    pub fn get(&self, k: usize, ell: i64) -> CPolynomial {
        if ell < 0 || ell > self.max_length {
            return CPolynomial::zero();
        }
        self.table[k][ell as usize].clone()
    }

    pub fn max_length(&self) -> i64 {
        self.max_length
    }
}

/// `f_i = Σ_P c_P · m_i r^{l(P)}` over all paths `P` from `m_i`.
pub fn universal_generators_pathsum(ideal: &MonomialIdeal, grading: &Grading) -> UniversalFamily {
    let cell = CellArrows::new(ideal, grading);
    let sums = PathSums::new(&cell);
    let generators = (0..=ideal.last_index())
        .map(|k| {
            let mk = ideal.generator(k);
            let mut fk = FamilyPolynomial::default();
            for ell in 0..=sums.max_length() {
                let s = sums.get(k, ell);
                if !s.is_zero() {
                    let carrier = grading
                        .shift(&mk, ell)
                        .expect("path sums vanish past the last valid carrier");
                    fk.add_term(carrier, &s);
                }
            }
            fk
        })
        .collect();
    UniversalFamily {
        ideal: ideal.clone(),
        grading: *grading,
        generators,
    }
}
