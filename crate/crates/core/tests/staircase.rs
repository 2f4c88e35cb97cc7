mod common;

use common::{hf, ideal, partition_count};
use hilb_spine::staircase::partitions;
use hilb_spine::{enumerate_ideals, ideals_with_hf, Grading, Monomial, MonomialIdeal};
use proptest::prelude::*;

#[test]
fn partition_counts_match_recurrence() {
    for n in 1..=12 {
        assert_eq!(enumerate_ideals(n).len() as u64, partition_count(n), "n = {n}");
    }
    assert_eq!(enumerate_ideals(4).len(), 5);
    assert_eq!(enumerate_ideals(6).len(), 11);
    assert_eq!(enumerate_ideals(10).len(), 42);
}

#[test]
fn partitions_are_distinct() {
    let mut all = partitions(9);
    let len = all.len();
    all.sort();
    all.dedup();
    assert_eq!(all.len(), len);
}

#[test]
fn generator_encodings() {
    let show = |s: &str| ideal(s).generators_string();
    assert_eq!(show("6,4,2,1"), "<x^6, x^4*y, x^2*y^2, x*y^3, y^4>");
    assert_eq!(show("11,8,4,1,1,1,1"), "<x^11, x^8*y, x^4*y^2, x*y^3, y^7>");
    assert_eq!(show("10,7,7,2,2,1"), "<x^10, x^7*y, x^2*y^3, x*y^5, y^6>");
    assert_eq!(show("9,5,5,4,4,1,1"), "<x^9, x^5*y, x^4*y^3, x*y^5, y^7>");
    assert_eq!(show("7,1,1,1"), "<x^7, x*y, y^4>");
}

#[test]
fn graded_hilbert_functions() {
    assert_eq!(ideal("2,2").hilbert_function(&Grading::STANDARD), hf(&[1, 2, 1]));
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
fn fibers() {
    let names =
        |h: &[u64], g: Grading| -> Vec<String> { ideals_with_hf(&hf(h), &g).iter().map(|m| m.to_string()).collect() };
    assert_eq!(
        names(&[1, 1, 2, 1, 1], Grading::new(1, 2).unwrap()),
        ["5,1", "4,1,1", "3,3", "3,2,1"]
    );
    assert_eq!(names(&[1, 2, 1], Grading::STANDARD), ["3,1", "2,2", "2,1,1"]);
    assert!(names(&[2], Grading::STANDARD).is_empty());
}

#[test]
fn degree_slices() {
    let g = Grading::new(2, 3).unwrap();
    let show = |d| {
        g.monomials_of_degree(d)
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(show(18), ["x^9", "x^6*y^2", "x^3*y^4", "y^6"]);
    assert!(show(1).is_empty());
    assert_eq!(
        Grading::STANDARD.monomials_of_degree(2),
        vec![Monomial::new(2, 0), Monomial::new(1, 1), Monomial::new(0, 2)]
    );
}

#[test]
fn membership_and_generator_indices() {
    let m = ideal("6,4,2,1");
    assert_eq!(m.j_minus(&Monomial::new(2, 2)).unwrap(), 2);
    assert_eq!(m.j_plus(&Monomial::new(6, 4)).unwrap(), 4);
    assert_eq!(m.j_minus(&Monomial::new(6, 4)).unwrap(), 0);
    assert!(m.j_plus(&Monomial::new(1, 1)).is_err());
}

fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(1u32..8, 1..7).prop_map(|mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        MonomialIdeal::new(rows).unwrap()
    })
}

fn arb_grading() -> impl Strategy<Value = Grading> {
    (1u32..6, 1u32..6).prop_map(|(a, b)| Grading::new(a, b).unwrap())
}

proptest! {
    #[test]
    fn hilbert_function_sums_to_colength(m in arb_ideal(), g in arb_grading()) {
        prop_assert_eq!(m.hilbert_function(&g).total(), m.colength());
    }

    #[test]
    fn degree_slices_increase(g in arb_grading(), d in 0u64..40) {
        let ms = g.monomials_of_degree(d);
        prop_assert!(ms.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(ms.iter().all(|m| g.degree(m) == d));
        if g.is_standard() {
            prop_assert_eq!(ms.len() as u64, d + 1);
        }
    }

    #[test]
    fn fiber_contains_ideal(m in arb_ideal(), g in arb_grading()) {
        prop_assert!(ideals_with_hf(&m.hilbert_function(&g), &g).contains(&m));
    }

    #[test]
    fn text_round_trip(m in arb_ideal()) {
        prop_assert_eq!(m.to_string().parse::<MonomialIdeal>().unwrap(), m.clone());
        prop_assert_eq!(MonomialIdeal::from_generators(m.generators()).unwrap(), m.clone());
        prop_assert_eq!(m.transpose().transpose(), m);
    }
}
