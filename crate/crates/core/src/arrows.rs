//! Significant arrows at a monomial ideal, paths of positive arrows, and
//! direct paths.
//!
//! A positive arrow `(i, ℓ)` starts at the generator `m_i` and points to
//! `m_i r^ℓ`; it is significant when `m_i r^ℓ` is a standard monomial and
//! `w_i r^ℓ` lies in the ideal. Each positive arrow is a coordinate `c_i^ℓ`
//! of the cell of the ideal.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::{CMonomial, CVar};
use crate::staircase::{Grading, MonomialIdeal};

/// A significant arrow `(index, length)`; positive arrows have
/// `length >= 1`, negative ones `length <= -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arrow {
    pub index: usize,
    pub length: i64,
}

impl Arrow {
    pub const fn new(index: usize, length: i64) -> Self {
        Arrow { index, length }
    }

    /// The cell coordinate `c_i^ℓ` of a positive arrow.
    pub fn var(&self) -> CVar {
        assert!(self.length > 0, "only positive arrows are coordinates");
        CVar::new(self.index as u32, self.length as u32)
    }
}

impl From<CVar> for Arrow {
    fn from(v: CVar) -> Self {
        Arrow::new(v.index as usize, v.length as i64)
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.index, self.length)
    }
}

/// `T^+(M)`, sorted by `(index, length)`.
pub fn positive_arrows(m: &MonomialIdeal, g: &Grading) -> Vec<Arrow> {
    let mut out = Vec::new();
    for i in 1..=m.last_index() {
        let mi = m.generator(i);
        let wi = m.lcm_w(i);
        // m_i r^ℓ needs ℓ·a <= y-exponent of m_i
        for ell in 1..=(mi.j / g.x_weight()) as i64 {
            let (Some(head), Some(tail)) = (g.shift(&mi, ell), g.shift(&wi, ell)) else {
                continue;
            };
            if !m.contains(&head) && m.contains(&tail) {
                out.push(Arrow::new(i, ell));
            }
        }
    }
    out
}

/// `T^-(M)`, sorted by `(index, length)`.
pub fn negative_arrows(m: &MonomialIdeal, g: &Grading) -> Vec<Arrow> {
    let mut out = Vec::new();
    for i in 0..m.last_index() {
        let mi = m.generator(i);
        let wnext = m.lcm_w(i + 1);
        let mut found = Vec::new();
        for k in 1..=(mi.i / g.y_weight()) as i64 {
            let ell = -k;
            let (Some(head), Some(tail)) = (g.shift(&mi, ell), g.shift(&wnext, ell)) else {
                continue;
            };
            if !m.contains(&head) && m.contains(&tail) {
                found.push(Arrow::new(i, ell));
            }
        }
        found.reverse();
        out.extend(found);
    }
    out
}

/// The positive arrows of one ideal together with where each one lands:
/// `j^+(w_i r^ℓ)`, the generator a path continues from.
#[derive(Clone, Debug)]
pub struct CellArrows {
    ideal: MonomialIdeal,
    grading: Grading,
    arrows: Vec<Arrow>,
    landing: Vec<usize>,
}

impl CellArrows {
    pub fn new(ideal: &MonomialIdeal, grading: &Grading) -> Self {
        let arrows = positive_arrows(ideal, grading);
        let landing = arrows
            .iter()
            .map(|a| {
                let w = grading
                    .shift(&ideal.lcm_w(a.index), a.length)
                    .expect("arrow tail is a monomial");
                ideal.j_plus(&w).expect("arrow tail lies in the ideal")
            })
            .collect();
        CellArrows {
            ideal: ideal.clone(),
            grading: *grading,
            arrows,
            landing,
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vars(&self) -> Vec<CVar> {
        self.arrows.iter().map(Arrow::var).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `j^+(w_i r^ℓ)` for a positive arrow.
    pub fn landing(&self, arrow: &Arrow) -> usize {
        let k = self
            .arrows
            .binary_search(arrow)
            .unwrap_or_else(|_| panic!("{arrow} is not a positive significant arrow"));
        self.landing[k]
    }

    /// Arrows with `(arrow, landing)`, ordered by decreasing index, then
    /// decreasing length.
    pub(crate) fn descending(&self) -> impl Iterator<Item = (Arrow, usize)> + '_ {
        self.arrows.iter().copied().zip(self.landing.iter().copied()).rev()
    }

    /// `ℓ_j`: the longest length of an arrow at index `j`, 0 if none.
    pub fn longest(&self, j: usize) -> i64 {
        self.arrows
            .iter()
            .filter(|a| a.index == j)
            .map(|a| a.length)
            .max()
            .unwrap_or(0)
    }

    pub fn contains(&self, arrow: &Arrow) -> bool {
        self.arrows.binary_search(arrow).is_ok()
    }

    /// Largest total length of any path: indices strictly decrease along a
    /// path, so each index is used at most once.
    pub fn max_path_length(&self) -> i64 {
        (1..=self.ideal.last_index()).map(|j| self.longest(j)).sum()
    }
}

/// A sequence of positive arrows `((i_1,ℓ_1), …, (i_d,ℓ_d))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub steps: Vec<Arrow>,
}

impl Path {
    pub fn empty() -> Self {
        Path::default()
    }

    pub fn length(&self) -> i64 {
        self.steps.iter().map(|a| a.length).sum()
    }

    /// `c_P`, the product of the step variables.
    pub fn monomial(&self) -> CMonomial {
        CMonomial::from_powers(self.steps.iter().map(|a| (a.var(), 1)))
    }

    /// Whether this is a path from `m_k`.
    pub fn is_path_from(&self, cell: &CellArrows, k: usize) -> bool {
        let mut from = k;
        for step in &self.steps {
            if step.index > from || !cell.contains(step) {
                return false;
            }
            from = cell.landing(step);
        }
        true
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.steps.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// All paths from `m_k` of total length `ell`, first steps by decreasing
/// index then decreasing length.
pub fn paths_from(cell: &CellArrows, k: usize, ell: i64) -> Vec<Path> {
    fn walk(cell: &CellArrows, from: usize, rest: i64, prefix: &mut Vec<Arrow>, out: &mut Vec<Path>) {
        if rest == 0 {
            out.push(Path { steps: prefix.clone() });
            return;
        }
        for (arrow, landing) in cell.descending() {
            if arrow.index <= from && arrow.length <= rest {
                prefix.push(arrow);
                walk(cell, landing, rest - arrow.length, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if ell >= 0 {
        walk(cell, k, ell, &mut Vec::new(), &mut out);
    }
    out
}

/// The sequence `z_1, z_2, …` of longest arrows followed greedily from
/// `m_k`, skipping down an index whenever the current one has no arrow.
pub fn greedy_arrows(cell: &CellArrows, k: usize) -> Vec<Arrow> {
    let mut out = Vec::new();
    let mut i = k;
    while i > 0 {
        let longest = cell.longest(i);
        if longest > 0 {
            let arrow = Arrow::new(i, longest);
            out.push(arrow);
            i = cell.landing(&arrow);
        } else {
            i -= 1;
        }
    }
    out
}

/// The direct path `p_{k,ℓ}` from `m_k`, if it exists.
///
/// It is either a prefix `z_1 … z_s` of [`greedy_arrows`] of total length
/// `ℓ`, or such a prefix followed by a shorter arrow `(i', ℓ')` at the
/// index of `z_{s+1}`.
pub fn direct_path(cell: &CellArrows, k: usize, ell: i64) -> Option<Path> {
    if k == 0 || ell < 1 {
        return None;
    }
    let z = greedy_arrows(cell, k);
    let mut steps = Vec::new();
    let mut acc = 0;
    for next in z {
        if acc + next.length == ell {
            steps.push(next);
            return Some(Path { steps });
        }
        if acc + next.length > ell {
            let last = Arrow::new(next.index, ell - acc);
            return cell.contains(&last).then(|| {
                steps.push(last);
                Path { steps }
            });
        }
        acc += next.length;
        steps.push(next);
    }
    None
}
