//! The universal family evaluated at a point of the cell: per-degree
//! coefficient matrices over an exact field, Hilbert functions, initial
//! ideals in either lex order, and the Monte-Carlo spine-edge probe.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arrows::CellArrows;
use crate::error::{Error, Result};
use crate::field::{echelon_pivots, rank, Field};
use crate::poly::CVar;
use crate::poset::lex_extremes;
use crate::staircase::{ideals_with_hf, Grading, HilbertFunction, Monomial, MonomialIdeal};
use crate::universal::{universal_generators_pathsum, UniversalFamily};

/// Name of the generator behind every seeded sample.
pub const RNG_NAME: &str = "ChaCha8";

/// Which lex order picks leading monomials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LexOrder {
    /// `x ≺ y`: the order whose cells are parametrized by positive arrows.
    #[default]
    XLessY,
    /// The opposite order, `y ≺ x`.
    YLessX,
}

impl LexOrder {
    pub fn opposite(self) -> Self {
        match self {
            LexOrder::XLessY => LexOrder::YLessX,
            LexOrder::YLessX => LexOrder::XLessY,
        }
    }
}

/// An assignment of field elements to cell coordinates.
pub type Point<F> = BTreeMap<CVar, <F as Field>::Elem>;

/// A polynomial in `x, y` over `F`, as carrier → nonzero coefficient.
pub type FieldPolynomial<F> = BTreeMap<Monomial, <F as Field>::Elem>;

/// The universal ideal at one point of the cell of `ideal`.
#[derive(Clone, Debug)]
pub struct SpecializedIdeal<F: Field> {
    pub ideal: MonomialIdeal,
    pub grading: Grading,
    pub field: F,
    pub point: Point<F>,
    /// The specialized `f_0, …, f_e`.
    pub generators: Vec<FieldPolynomial<F>>,
    hf: HilbertFunction,
}

impl<F: Field> SpecializedIdeal<F> {
    pub fn expected_hilbert_function(&self) -> &HilbertFunction {
        &self.hf
    }

    pub fn dmax(&self) -> u64 {
        self.hf.dmax().unwrap_or(0)
    }

    /// Coordinates, against `grading.monomials_of_degree(d)`, of every
    /// monomial multiple `x^α y^β f_i` of degree `d`.
    pub fn multiples_of_degree(&self, d: u64) -> Vec<Vec<F::Elem>> {
        let basis = self.grading.monomials_of_degree(d);
        let position: BTreeMap<Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        let mut out = Vec::new();
        for (k, f) in self.generators.iter().enumerate() {
            let mk = self.ideal.generator(k);
            for target in basis.iter().filter(|t| mk.divides(t)) {
                let shift = target.checked_div(&mk).expect("generator divides target");
                let mut v = vec![self.field.zero(); basis.len()];
                for (carrier, c) in f {
                    let at = position[&carrier.mul(&shift)];
                    v[at] = c.clone();
                }
                out.push(v);
            }
        }
        out
    }

    /// Columns `g_m`, `m` in the ideal's degree-`d` part, of the specialized
    /// Macaulay matrix, each as a coordinate vector against the degree-`d`
    /// monomials.
    pub fn macaulay_columns(&self, d: u64) -> Vec<Vec<F::Elem>> {
        let basis = self.grading.monomials_of_degree(d);
        let position: BTreeMap<Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        self.ideal
            .monomials_of_degree(&self.grading, d)
            .into_iter()
            .map(|m| {
                let j = self.ideal.j_minus(&m).expect("column lies in the ideal");
                let shift = m.checked_div(&self.ideal.generator(j)).expect("m_j divides m");
                let mut v = vec![self.field.zero(); basis.len()];
                for (carrier, c) in &self.generators[j] {
                    v[position[&carrier.mul(&shift)]] = c.clone();
                }
                v
            })
            .collect()
    }

    /// Renders the specialized generators, leading carriers first.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (k, f) in self.generators.iter().enumerate() {
            let terms: Vec<String> = f
                .iter()
                .rev()
                .map(|(m, c)| {
                    if *c == self.field.one() {
                        m.to_string()
                    } else if *m == Monomial::ONE {
                        c.to_string()
                    } else {
                        format!("{c}*{m}")
                    }
                })
                .collect();
            let _ = writeln!(s, "f_{k} = {}", terms.join(" + "));
        }
        s
    }
}

/// Evaluates the universal family of `(ideal, grading)` at `point`.
pub fn specialize_ideal<F: Field>(
    ideal: &MonomialIdeal,
    grading: &Grading,
    point: &Point<F>,
    field: &F,
) -> Result<SpecializedIdeal<F>> {
    specialize_family(&universal_generators_pathsum(ideal, grading), point, field)
}

/// Evaluates an already computed universal family at `point`.
pub fn specialize_family<F: Field>(
    family: &UniversalFamily,
    point: &Point<F>,
    field: &F,
) -> Result<SpecializedIdeal<F>> {
    let cell = CellArrows::new(&family.ideal, &family.grading);
    for v in cell.vars() {
        if !point.contains_key(&v) {
            return Err(Error::MissingVariable(v.to_string()));
        }
    }
    let generators = family
        .generators
        .iter()
        .map(|f| {
            let mut out = FieldPolynomial::<F>::new();
            for (carrier, coeff) in f.terms() {
                let c = coeff.specialize(point, field)?;
                if !field.is_zero(&c) {
                    out.insert(*carrier, c);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(SpecializedIdeal {
        ideal: family.ideal.clone(),
        grading: family.grading,
        field: field.clone(),
        point: point.clone(),
        generators,
        hf: family.ideal.hilbert_function(&family.grading),
    })
}

/// `d ↦ q_d − rank` of all monomial multiples of the specialized generators,
/// for `d` up to one past the expected top degree.
pub fn specialized_hilbert_function<F: Field>(j: &SpecializedIdeal<F>) -> HilbertFunction {
    let values = (0..=j.dmax() + 1)
        .map(|d| {
            let q = j.grading.count_of_degree(d);
            (q - rank(&j.field, &j.multiples_of_degree(d))) as u64
        })
        .collect();
    HilbertFunction::new(values)
}

/// The leading monomials of the degree-`d` part, by row reduction with
/// columns sorted from the largest monomial down.
fn initial_monomials<F: Field>(j: &SpecializedIdeal<F>, d: u64, order: LexOrder) -> Vec<Monomial> {
    let mut basis = j.grading.monomials_of_degree(d);
    let mut rows = j.multiples_of_degree(d);
    // coordinates are increasing in x ≺ y; put the order's largest first
    if order == LexOrder::XLessY {
        basis.reverse();
        for r in rows.iter_mut() {
            r.reverse();
        }
    }
    echelon_pivots(&j.field, &mut rows)
        .into_iter()
        .map(|c| basis[c])
        .collect()
}

/// The initial ideal under `order`, assembled degree by degree up to
/// `dmax`; every monomial of larger degree is taken to be in it. Fails if
/// the standard monomials found do not form a staircase.
pub fn initial_ideal<F: Field>(j: &SpecializedIdeal<F>, order: LexOrder) -> Result<MonomialIdeal> {
    let mut standard = Vec::new();
    for d in 0..=j.dmax() {
        let lead = initial_monomials(j, d, order);
        standard.extend(
            j.grading
                .monomials_of_degree(d)
                .into_iter()
                .filter(|m| !lead.contains(m)),
        );
    }
    let height = standard.iter().map(|m| m.j + 1).max().unwrap_or(0);
    let mut rows = vec![0u32; height as usize];
    for m in &standard {
        rows[m.j as usize] += 1;
    }
    let ideal = MonomialIdeal::new(rows).map_err(|_| Error::InconsistentInitialIdeal)?;
    if standard.iter().any(|m| ideal.contains(m)) {
        return Err(Error::InconsistentInitialIdeal);
    }
    Ok(ideal)
}

/// Independent uniform samples for every coordinate of the cell.
pub fn random_point<F: Field, R: rand::Rng + ?Sized>(cell: &CellArrows, field: &F, rng: &mut R) -> Point<F> {
    cell.vars().into_iter().map(|v| (v, field.sample(rng))).collect()
}

/// The origin of the cell.
pub fn zero_point<F: Field>(cell: &CellArrows, field: &F) -> Point<F> {
    cell.vars().into_iter().map(|v| (v, field.zero())).collect()
}

/// Parses `"c(2,2)=1 c(1,1)=3"`; commas between assignments are allowed.
pub fn parse_point<F: Field>(field: &F, s: &str) -> Result<Point<F>> {
    let mut out = Point::<F>::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let close = rest.find(')').ok_or_else(|| Error::Parse(format!("bad point {s:?}")))?;
        let var: CVar = rest[..=close].trim().parse()?;
        let after = rest[close + 1..].trim_start();
        let after = after
            .strip_prefix('=')
            .ok_or_else(|| Error::Parse(format!("expected '=' after {var}")))?;
        let end = after
            .find(|c: char| c.is_whitespace() || c == ',')
            .unwrap_or(after.len());
        out.insert(var, field.parse(&after[..end])?);
        rest = after[end..].trim_start_matches(|c: char| c.is_whitespace() || c == ',');
    }
    Ok(out)
}

pub fn format_point<F: Field>(point: &Point<F>) -> String {
    point
        .iter()
        .map(|(v, c)| format!("{v}={c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A point on the cell of `M^-` whose opposite initial ideal is `M^+`.
#[derive(Clone, Debug)]
pub struct EdgeWitness<F: Field> {
    pub m_minus: MonomialIdeal,
    pub m_plus: MonomialIdeal,
    /// Zero-based index of the successful trial.
    pub trial: usize,
    pub point: Point<F>,
}

/// Samples up to `trials` points on the cell of `M^-` for `(h, g)` with a
/// ChaCha8 generator seeded by `seed`, returning the first whose initial
/// ideal in the opposite order is `M^+`. `None` means no witness was found,
/// not that none exists.
pub fn edge_probe<F: Field>(
    h: &HilbertFunction,
    g: &Grading,
    field: &F,
    trials: usize,
    seed: u64,
) -> Result<Option<EdgeWitness<F>>> {
    match ideals_with_hf(h, g).len() {
        0 => {
            return Err(Error::EmptyFiber {
                hf: h.clone(),
                grading: *g,
            })
        }
        1 => {
            return Err(Error::SingletonFiber {
                hf: h.clone(),
                grading: *g,
            })
        }
        _ => {}
    }
    let (m_minus, m_plus) = lex_extremes(h, g)?;
    let cell = CellArrows::new(&m_minus, g);
    let family = universal_generators_pathsum(&m_minus, g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let point = random_point(&cell, field, &mut rng);
        let j = specialize_family(&family, &point, field)?;
        if initial_ideal(&j, LexOrder::YLessX).ok().as_ref() == Some(&m_plus) {
            return Ok(Some(EdgeWitness {
                m_minus,
                m_plus,
                trial,
                point,
            }));
        }
    }
    Ok(None)
}
