//! Graded dominance on the monomial ideals of one Hilbert function, the
//! lex-least and lex-most ideals, and the spine graph `G*_N`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrows::{negative_arrows, positive_arrows};
use crate::error::{Error, Result};
use crate::staircase::{enumerate_ideals, ideals_with_hf, Grading, HilbertFunction, Monomial, MonomialIdeal};

/// Ideal monomials of each degree up to `dmax`, increasing in `x ≺ y`.
fn degree_slices(m: &MonomialIdeal, g: &Grading, dmax: u64) -> Vec<Vec<Monomial>> {
    (0..=dmax).map(|d| m.monomials_of_degree(g, d)).collect()
}

fn dominated(lhs: &[Vec<Monomial>], rhs: &[Vec<Monomial>]) -> bool {
    lhs.iter().zip(rhs).all(|(l, r)| l.iter().zip(r).all(|(a, b)| a >= b))
}

/// `M ⪯ M'` in the graded dominance order: in every degree the `k`-th
/// smallest monomial of `M` is at least the `k`-th smallest of `M'`.
/// Both ideals must have the same Hilbert function under `g`.
pub fn dominance_leq(m: &MonomialIdeal, m2: &MonomialIdeal, g: &Grading) -> Result<bool> {
    let h = m.hilbert_function(g);
    let h2 = m2.hilbert_function(g);
    if h != h2 {
        return Err(Error::HilbertFunctionMismatch {
            grading: *g,
            left: h,
            right: h2,
        });
    }
    let dmax = h.dmax().unwrap_or(0);
    Ok(dominated(&degree_slices(m, g, dmax), &degree_slices(m2, g, dmax)))
}

/// The dominance poset on one fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominancePoset {
    pub grading: Grading,
    pub hf: HilbertFunction,
    pub elements: Vec<MonomialIdeal>,
    /// `leq[a][b]` iff `elements[a] ⪯ elements[b]`.
    pub leq: Vec<Vec<bool>>,
}

impl DominancePoset {
    pub fn new(h: &HilbertFunction, g: &Grading) -> Result<Self> {
        let elements = ideals_with_hf(h, g);
        if elements.is_empty() {
            return Err(Error::EmptyFiber {
                hf: h.clone(),
                grading: *g,
            });
        }
        let dmax = h.dmax().unwrap_or(0);
        let slices: Vec<_> = elements.iter().map(|m| degree_slices(m, g, dmax)).collect();
        let leq = slices
            .iter()
            .map(|a| slices.iter().map(|b| dominated(a, b)).collect())
            .collect();
        Ok(DominancePoset {
            grading: *g,
            hf: h.clone(),
            elements,
            leq,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of the element below every other one.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq[a][b]))
    }

    /// Index of the element above every other one.
    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&a| (0..self.len()).all(|b| self.leq[b][a]))
    }

    /// Cover relations `(a, b)`: `a ≺ b` with nothing strictly between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let lt = |a: usize, b: usize| a != b && self.leq[a][b];
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Text rendering: elements, then cover relations.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "grading {} hf {}", self.grading, self.hf);
        for (k, m) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  [{k}] {m}  {}", m.generators_string());
        }
        for (a, b) in self.hasse() {
            let _ = writeln!(s, "  {} < {}", self.elements[a], self.elements[b]);
        }
        s
    }
}

/// The fiber of `(h, g)` as a poset.
pub fn poset_hasse(h: &HilbertFunction, g: &Grading) -> Result<DominancePoset> {
    DominancePoset::new(h, g)
}

/// Minimum and maximum of a set of ideals sharing one Hilbert function.
fn extremes_of(fiber: &[MonomialIdeal], g: &Grading, dmax: u64) -> Option<(usize, usize)> {
    let slices: Vec<_> = fiber.iter().map(|m| degree_slices(m, g, dmax)).collect();
    let mut lo = 0;
    let mut hi = 0;
    for k in 1..fiber.len() {
        if dominated(&slices[k], &slices[lo]) {
            lo = k;
        }
        if dominated(&slices[hi], &slices[k]) {
            hi = k;
        }
    }
    let ok = (0..fiber.len()).all(|k| dominated(&slices[lo], &slices[k]) && dominated(&slices[k], &slices[hi]));
    ok.then_some((lo, hi))
}

/// `(M^-, M^+)` computed from dominance and checked against the arrow
/// characterization: `M^-` is the only ideal of the fiber without negative
/// arrows and `M^+` the only one without positive arrows.
fn checked_extremes(fiber: &[MonomialIdeal], h: &HilbertFunction, g: &Grading) -> Result<(usize, usize)> {
    let mismatch = || Error::ExtremesMismatch {
        hf: h.clone(),
        grading: *g,
    };
    let (lo, hi) = extremes_of(fiber, g, h.dmax().unwrap_or(0)).ok_or_else(mismatch)?;
    for (k, m) in fiber.iter().enumerate() {
        if negative_arrows(m, g).is_empty() != (k == lo) || positive_arrows(m, g).is_empty() != (k == hi) {
            return Err(mismatch());
        }
    }
    Ok((lo, hi))
}

/// The lex-least and lex-most ideals `(M^-, M^+)` of the fiber of `(h, g)`.
pub fn lex_extremes(h: &HilbertFunction, g: &Grading) -> Result<(MonomialIdeal, MonomialIdeal)> {
    let fiber = ideals_with_hf(h, g);
    if fiber.is_empty() {
        return Err(Error::EmptyFiber {
            hf: h.clone(),
            grading: *g,
        });
    }
    let (lo, hi) = checked_extremes(&fiber, h, g)?;
    Ok((fiber[lo].clone(), fiber[hi].clone()))
}

/// A grading and Hilbert function whose fiber has the edge's endpoints as
/// extremes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub grading: Grading,
    pub hf: HilbertFunction,
}

/// An undirected spine edge between `vertices[u]` and `vertices[v]`, `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpineEdge {
    pub u: usize,
    pub v: usize,
    pub witnesses: Vec<Witness>,
}

/// The spine `G*_N` on the monomial ideals of colength `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpineGraph {
    pub colength: u32,
    pub vertices: Vec<MonomialIdeal>,
    pub edges: Vec<SpineEdge>,
}

impl SpineGraph {
    pub fn has_edge(&self, a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
        let pos = |m: &MonomialIdeal| self.vertices.iter().position(|v| v == m);
        let (Some(x), Some(y)) = (pos(a), pos(b)) else {
            return false;
        };
        let (u, v) = (x.min(y), x.max(y));
        self.edges.iter().any(|e| e.u == u && e.v == v)
    }

    /// Edges as pairs of ideals.
    pub fn edge_pairs(&self) -> Vec<(MonomialIdeal, MonomialIdeal)> {
        self.edges
            .iter()
            .map(|e| (self.vertices[e.u].clone(), self.vertices[e.v].clone()))
            .collect()
    }

    /// Graphviz rendering; `labels` adds the witness gradings to each edge.
    pub fn to_dot(&self, labels: bool) -> String {
        let mut s = String::from("graph spine {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  n{k} [label=\"{v}\"];");
        }
        for e in &self.edges {
            if labels {
                let mut gradings: Vec<String> = e.witnesses.iter().map(|w| w.grading.to_string()).collect();
                gradings.dedup();
                let _ = writeln!(s, "  n{} -- n{} [label=\"{}\"];", e.u, e.v, gradings.join(" "));
            } else {
                let _ = writeln!(s, "  n{} -- n{};", e.u, e.v);
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Edges contributed by one grading: `(M^-, M^+, h)` for every fiber with at
/// least two ideals.
fn edges_for_grading(ideals: &[MonomialIdeal], g: &Grading) -> Result<Vec<(usize, usize, HilbertFunction)>> {
    let mut fibers: BTreeMap<HilbertFunction, Vec<usize>> = BTreeMap::new();
    for (k, m) in ideals.iter().enumerate() {
        fibers.entry(m.hilbert_function(g)).or_default().push(k);
    }
    let mut out = Vec::new();
    for (h, members) in fibers {
        if members.len() < 2 {
            continue;
        }
        let fiber: Vec<MonomialIdeal> = members.iter().map(|&k| ideals[k].clone()).collect();
        let (lo, hi) = checked_extremes(&fiber, &h, g)?;
        out.push((members[lo], members[hi], h));
    }
    Ok(out)
}

/// The spine for colength `n`, scanning coprime gradings in `[1, n]²`.
pub fn spine_graph(n: u32) -> Result<SpineGraph> {
    spine_graph_with_bound(n, n)
}

/// The spine built from coprime gradings in `[1, bound]²`.
///
/// Gradings with `a > n` or `b > n` never put two monomials of a colength-`n`
/// staircase in one degree, so any `bound >= n` gives the same graph.
pub fn spine_graph_with_bound(n: u32, bound: u32) -> Result<SpineGraph> {
    let vertices = enumerate_ideals(n);
    let gradings = Grading::all_up_to(bound);
    let per_grading: Vec<_> = gradings
        .par_iter()
        .map(|g| edges_for_grading(&vertices, g).map(|es| (*g, es)))
        .collect::<Result<_>>()?;
    let mut merged: BTreeMap<(usize, usize), Vec<Witness>> = BTreeMap::new();
    for (g, es) in per_grading {
        for (lo, hi, hf) in es {
            let key = (lo.min(hi), lo.max(hi));
            merged.entry(key).or_default().push(Witness { grading: g, hf });
        }
    }
    let edges = merged
        .into_iter()
        .map(|((u, v), witnesses)| SpineEdge { u, v, witnesses })
        .collect();
    Ok(SpineGraph {
        colength: n,
        vertices,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    fn hf(v: &[u64]) -> HilbertFunction {
        HilbertFunction::new(v.to_vec())
    }

    #[test]
    fn diamond_fiber_relations() {
        let g = Grading::new(1, 2).unwrap();
        assert!(dominance_leq(&ideal("5,1"), &ideal("3,3"), &g).unwrap());
        assert!(!dominance_leq(&ideal("4,1,1"), &ideal("3,3"), &g).unwrap());
        assert!(!dominance_leq(&ideal("3,3"), &ideal("4,1,1"), &g).unwrap());
        assert!(dominance_leq(&ideal("5,1"), &ideal("6"), &g).is_err());
    }

    #[test]
    fn diamond_fiber_shape() {
        let g = Grading::new(1, 2).unwrap();
        let p = poset_hasse(&hf(&[1, 1, 2, 1, 1]), &g).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.hasse().len(), 4);
        assert_eq!(p.elements[p.minimum().unwrap()], ideal("5,1"));
        assert_eq!(p.elements[p.maximum().unwrap()], ideal("3,2,1"));
    }

    #[test]
    fn standard_chain() {
        let p = poset_hasse(&hf(&[1, 2, 1]), &Grading::STANDARD).unwrap();
        let names: Vec<String> = p.elements.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["3,1", "2,2", "2,1,1"]);
        assert_eq!(p.hasse(), vec![(0, 1), (1, 2)]);
        assert_eq!(
            lex_extremes(&hf(&[1, 2, 1]), &Grading::STANDARD).unwrap(),
            (ideal("3,1"), ideal("2,1,1"))
        );
    }

    #[test]
    fn nonstandard_extremes() {
        let g = Grading::new(2, 3).unwrap();
        let lo = ideal("10,7,7,2,2,1");
        let (m_minus, m_plus) = lex_extremes(&lo.hilbert_function(&g), &g).unwrap();
        assert_eq!(m_minus, lo);
        assert_eq!(m_plus, ideal("9,5,5,4,4,1,1"));
    }

    #[test]
    fn empty_fiber_errors() {
        assert!(matches!(
            lex_extremes(&hf(&[2]), &Grading::STANDARD),
            Err(Error::EmptyFiber { .. })
        ));
    }

    #[test]
    fn spine_of_four_points() {
        let s = spine_graph(4).unwrap();
        assert_eq!(s.vertices.len(), 5);
        let mut pairs: Vec<(String, String)> = s
            .edge_pairs()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        pairs.sort();
        let mut expected: Vec<(String, String)> = [
            ("4", "3,1"),
            ("4", "2,2"),
            ("4", "1,1,1,1"),
            ("3,1", "2,1,1"),
            ("2,2", "1,1,1,1"),
            ("2,1,1", "1,1,1,1"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        expected.sort();
        assert_eq!(pairs, expected);
    }

    #[test]
    fn tiny_spines() {
        let s = spine_graph(1).unwrap();
        assert_eq!((s.vertices.len(), s.edges.len()), (1, 0));
        let s = spine_graph(2).unwrap();
        assert_eq!((s.vertices.len(), s.edges.len()), (2, 1));
    }

    #[test]
    fn dot_lists_every_vertex() {
        let dot = spine_graph(3).unwrap().to_dot(true);
        assert!(dot.starts_with("graph spine {"));
        assert!(dot.contains("label=\"2,1\""));
    }
}
