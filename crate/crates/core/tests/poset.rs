mod common;

use std::collections::BTreeMap;

use common::{hf, ideal, sweep_gradings};
use hilb_spine::poset::spine_graph_with_bound;
use hilb_spine::{
    dominance_leq, enumerate_ideals, lex_extremes, negative_arrows, poset_hasse, positive_arrows, spine_graph, Grading,
    HilbertFunction, Monomial, MonomialIdeal, SpineGraph,
};

/// Dominance by counting: in each degree, every upper set of monomials
/// holds at least as many monomials of the smaller ideal.
fn dominance_by_counting(m: &MonomialIdeal, m2: &MonomialIdeal, g: &Grading) -> bool {
    let dmax = m.hilbert_function(g).dmax().unwrap_or(0);
    (0..=dmax).all(|d| {
        let slice = g.monomials_of_degree(d);
        slice.iter().all(|t| {
            let above = |i: &MonomialIdeal| slice.iter().filter(|s| *s >= t && i.contains(s)).count();
            above(m) >= above(m2)
        })
    })
}

fn fibers(n: u32, g: &Grading) -> BTreeMap<HilbertFunction, Vec<MonomialIdeal>> {
    let mut out: BTreeMap<HilbertFunction, Vec<MonomialIdeal>> = BTreeMap::new();
    for m in enumerate_ideals(n) {
        out.entry(m.hilbert_function(g)).or_default().push(m);
    }
    out
}

#[test]
fn dominance_is_a_partial_order_and_matches_counting() {
    for g in sweep_gradings() {
        for n in 1..=8 {
            for fiber in fibers(n, &g).values() {
                let leq = |a: &MonomialIdeal, b: &MonomialIdeal| dominance_leq(a, b, &g).unwrap();
                for a in fiber {
                    assert!(leq(a, a));
                    for b in fiber {
                        assert_eq!(leq(a, b), dominance_by_counting(a, b, &g), "{a} vs {b} under {g}");
                        if a != b && leq(a, b) {
                            assert!(!leq(b, a), "antisymmetry fails for {a}, {b} under {g}");
                        }
                        for c in fiber {
                            if leq(a, b) && leq(b, c) {
                                assert!(leq(a, c), "transitivity fails for {a}, {b}, {c} under {g}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn extremes_are_the_arrow_free_ideals() {
    for g in sweep_gradings() {
        for n in 1..=8 {
            for (h, fiber) in fibers(n, &g) {
                let (lo, hi) = lex_extremes(&h, &g).unwrap();
                let no_neg: Vec<&MonomialIdeal> = fiber.iter().filter(|m| negative_arrows(m, &g).is_empty()).collect();
                let no_pos: Vec<&MonomialIdeal> = fiber.iter().filter(|m| positive_arrows(m, &g).is_empty()).collect();
                assert_eq!(no_neg, vec![&lo], "{h} under {g}");
                assert_eq!(no_pos, vec![&hi], "{h} under {g}");
            }
        }
    }
}

#[test]
fn standard_extremes_are_transposes() {
    let g = Grading::STANDARD;
    for n in 1..=8 {
        for h in fibers(n, &g).keys() {
            let (lo, hi) = lex_extremes(h, &g).unwrap();
            assert!(lo.has_strict_rows());
            assert!(hi.has_strict_columns());
            assert_eq!(lo.transpose(), hi);
            for k in 1..=lo.last_index() {
                assert_eq!(lo.lcm_w(k).checked_div(&lo.generator(k - 1)), Some(Monomial::new(0, 1)));
            }
        }
    }
}

#[test]
fn diamond_fiber_poset() {
    let g = Grading::new(1, 2).unwrap();
    let p = poset_hasse(&hf(&[1, 1, 2, 1, 1]), &g).unwrap();
    let names: Vec<String> = p.elements.iter().map(|m| m.to_string()).collect();
    assert_eq!(names, ["5,1", "4,1,1", "3,3", "3,2,1"]);
    assert_eq!(p.hasse(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    let gens: Vec<String> = p.elements.iter().map(|m| m.generators_string()).collect();
    assert_eq!(gens[0], "<x^5, x*y, y^2>");
    assert_eq!(gens[3], "<x^3, x^2*y, x*y^2, y^3>");
}

fn edge_names(s: &SpineGraph) -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = s
        .edge_pairs()
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    v.sort();
    v
}

#[test]
fn spine_goldens() {
    let counts: Vec<(usize, usize)> = (1..=6)
        .map(|n| {
            let s = spine_graph(n).unwrap();
            (s.vertices.len(), s.edges.len())
        })
        .collect();
    assert_eq!(counts, vec![(1, 0), (2, 1), (3, 3), (5, 6), (7, 13), (11, 17)]);
    let four = spine_graph(4).unwrap();
    assert!(four.has_edge(&ideal("4"), &ideal("1,1,1,1")));
    assert!(!four.has_edge(&ideal("3,1"), &ideal("2,2")));
}

#[test]
fn larger_gradings_add_no_edges() {
    for n in 1..=6 {
        let base = spine_graph(n).unwrap();
        let wide = spine_graph_with_bound(n, 3 * n).unwrap();
        assert_eq!(edge_names(&base), edge_names(&wide), "n = {n}");
    }
}

#[test]
fn spine_witnesses_are_extremes() {
    let s = spine_graph(6).unwrap();
    for e in &s.edges {
        for w in &e.witnesses {
            let (lo, hi) = lex_extremes(&w.hf, &w.grading).unwrap();
            let mut pair = [lo, hi];
            pair.sort();
            let mut ends = [s.vertices[e.u].clone(), s.vertices[e.v].clone()];
            ends.sort();
            assert_eq!(pair, ends);
            assert_eq!(s.vertices[e.u].hilbert_function(&w.grading), w.hf);
        }
    }
}

#[test]
fn spine_json_round_trip() {
    let s = spine_graph(5).unwrap();
    let json = serde_json::to_string(&s).unwrap();
    assert!(json.starts_with("{\"colength\":5,\"vertices\":[[5],[4,1],"));
    assert!(json.contains("\"witnesses\":[{\"grading\":[1,1],\"hf\":[1,2,2]}"));
    assert_eq!(serde_json::from_str::<SpineGraph>(&json).unwrap(), s);
}

#[test]
fn spine_is_deterministic() {
    let a = serde_json::to_string(&spine_graph(6).unwrap()).unwrap();
    let b = serde_json::to_string(&spine_graph(6).unwrap()).unwrap();
    assert_eq!(a, b);
}
