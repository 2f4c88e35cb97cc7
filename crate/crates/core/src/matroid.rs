//! Degreewise matroids `M(I_d)` of specialized ideals and their tropical
//! fingerprints.
//!
//! A set `E` of `h(d)` monomials is a basis when no polynomial of `I_d` is
//! supported in `E`, i.e. when the rows of the degree-`d` Macaulay matrix
//! outside `E` have full rank.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::det::combinations;
use crate::error::{Error, Result};
use crate::field::{rank, Field};
use crate::specialize::SpecializedIdeal;
use crate::staircase::Monomial;

/// A matroid on at most 64 monomials; subsets are bitmasks over `ground`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "MatroidDump", try_from = "MatroidDump")]
pub struct Matroid {
    ground: Vec<Monomial>,
    rank: usize,
    bases: Vec<u64>,
}

fn mask_of(elems: &[usize]) -> u64 {
    elems.iter().fold(0, |m, &k| m | 1 << k)
}

impl Matroid {
    /// A matroid from its bases; each basis is a list of ground indices.
    pub fn from_bases(ground: Vec<Monomial>, rank: usize, bases: &[Vec<usize>]) -> Result<Self> {
        if ground.len() > 64 {
            return Err(Error::GroundTooLarge(ground.len()));
        }
        if bases.is_empty()
            || bases
                .iter()
                .any(|b| b.len() != rank || b.iter().any(|&k| k >= ground.len()))
        {
            return Err(Error::Precondition(format!(
                "bases must be nonempty {rank}-subsets of a {}-element ground set",
                ground.len()
            )));
        }
        let mut masks: Vec<u64> = bases.iter().map(|b| mask_of(b)).collect();
        masks.sort_unstable();
        masks.dedup();
        Ok(Matroid {
            ground,
            rank,
            bases: masks,
        })
    }

    pub fn ground(&self) -> &[Monomial] {
        &self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn elements(&self, mask: u64) -> Vec<usize> {
        (0..self.ground.len()).filter(|&k| mask & (1 << k) != 0).collect()
    }

    fn monomials(&self, mask: u64) -> Vec<Monomial> {
        self.elements(mask).into_iter().map(|k| self.ground[k]).collect()
    }

    /// Bases as sorted lists of ground indices, in lexicographic order.
    pub fn bases(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.bases.iter().map(|&b| self.elements(b)).collect();
        out.sort();
        out
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        self.bases.iter().any(|&b| b & mask == mask)
    }

    /// Minimal dependent sets, by size then lexicographically.
    pub fn circuits(&self) -> Vec<Vec<usize>> {
        let n = self.ground.len();
        let mut out = Vec::new();
        for size in 1..=(self.rank + 1).min(n) {
            for set in combinations(n, size) {
                let mask = mask_of(&set);
                if !self.is_independent(mask) && set.iter().all(|&k| self.is_independent(mask & !(1 << k))) {
                    out.push(set);
                }
            }
        }
        out
    }

    /// Elements in no basis.
    pub fn loops(&self) -> Vec<usize> {
        (0..self.ground.len())
            .filter(|&k| self.bases.iter().all(|&b| b & (1 << k) == 0))
            .collect()
    }

    /// Elements in every basis.
    pub fn coloops(&self) -> Vec<usize> {
        (0..self.ground.len())
            .filter(|&k| self.bases.iter().all(|&b| b & (1 << k) != 0))
            .collect()
    }

    /// Whether every `rank`-subset is a basis.
    pub fn is_uniform(&self) -> bool {
        self.bases.len() as u128 == crate::det::binomial(self.ground.len() as u64, self.rank as u64)
    }

    /// For bases `A ≠ B` and `a ∈ A \ B` there is `b ∈ B \ A` with
    /// `A - a + b` a basis.
    pub fn satisfies_basis_exchange(&self) -> bool {
        let is_basis = |m: u64| self.bases.binary_search(&m).is_ok();
        self.bases.iter().all(|&a| {
            self.bases.iter().all(|&b| {
                self.elements(a & !b).into_iter().all(|x| {
                    self.elements(b & !a)
                        .into_iter()
                        .any(|y| is_basis((a & !(1 << x)) | (1 << y)))
                })
            })
        })
    }

    pub fn circuit_monomials(&self) -> Vec<Vec<Monomial>> {
        self.circuits().iter().map(|c| self.monomials(mask_of(c))).collect()
    }

    pub fn loop_monomials(&self) -> Vec<Monomial> {
        self.loops().into_iter().map(|k| self.ground[k]).collect()
    }

    pub fn coloop_monomials(&self) -> Vec<Monomial> {
        self.coloops().into_iter().map(|k| self.ground[k]).collect()
    }
}

/// Serialized matroid: monomials written out as strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidDump {
    pub ground: Vec<String>,
    pub rank: usize,
    pub bases: Vec<Vec<String>>,
    pub circuits: Vec<Vec<String>>,
    pub uniform: bool,
    pub loops: Vec<String>,
    pub coloops: Vec<String>,
}

fn strings(ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| m.to_string()).collect()
}

impl From<Matroid> for MatroidDump {
    fn from(m: Matroid) -> Self {
        MatroidDump {
            ground: strings(&m.ground),
            rank: m.rank,
            bases: m.bases().iter().map(|b| strings(&m.monomials(mask_of(b)))).collect(),
            circuits: m.circuit_monomials().iter().map(|c| strings(c)).collect(),
            uniform: m.is_uniform(),
            loops: strings(&m.loop_monomials()),
            coloops: strings(&m.coloop_monomials()),
        }
    }
}

impl TryFrom<MatroidDump> for Matroid {
    type Error = Error;

    fn try_from(d: MatroidDump) -> Result<Self> {
        let ground: Vec<Monomial> = d.ground.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        let index = |s: &String| -> Result<usize> {
            let m: Monomial = s.parse()?;
            ground
                .iter()
                .position(|g| *g == m)
                .ok_or_else(|| Error::Parse(format!("{m} is not in the ground set")))
        };
        let bases: Vec<Vec<usize>> = d
            .bases
            .iter()
            .map(|b| b.iter().map(index).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        let m = Matroid::from_bases(ground, d.rank, &bases)?;
        if MatroidDump::from(m.clone()) != d {
            return Err(Error::Parse("derived matroid data does not match its bases".into()));
        }
        Ok(m)
    }
}

/// The matroid `M(I_d)` of a specialized ideal.
pub fn matroid_of_degree<F: Field>(j: &SpecializedIdeal<F>, d: u64) -> Result<Matroid> {
    let ground = j.grading.monomials_of_degree(d);
    let q = ground.len();
    if q > 64 {
        return Err(Error::GroundTooLarge(q));
    }
    let columns = j.macaulay_columns(d);
    let n0 = rank(&j.field, &columns);
    let r = q - n0;
    let mut bases = Vec::new();
    for e in combinations(q, r) {
        let outside: Vec<usize> = (0..q).filter(|k| !e.contains(k)).collect();
        let restricted: Vec<Vec<F::Elem>> = columns
            .iter()
            .map(|v| outside.iter().map(|&k| v[k].clone()).collect())
            .collect();
        if rank(&j.field, &restricted) == n0 {
            bases.push(e);
        }
    }
    Matroid::from_bases(ground, r, &bases)
}

/// `d ↦ M(I_d)` for `0 <= d <= dmax`.
pub fn tropical_fingerprint<F: Field>(j: &SpecializedIdeal<F>) -> Result<BTreeMap<u64, Matroid>> {
    (0..=j.dmax()).map(|d| Ok((d, matroid_of_degree(j, d)?))).collect()
}
