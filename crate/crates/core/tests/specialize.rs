mod common;

use common::{hf, ideal};
use hilb_spine::macaulay::standard_fibers;
use hilb_spine::specialize::{random_point, zero_point};
use hilb_spine::{
    edge_probe, enumerate_ideals, initial_ideal, matroid_of_degree, parse_point, specialize_ideal,
    specialized_hilbert_function, spine_graph, tropical_fingerprint, CellArrows, Grading, LexOrder, Monomial,
    PrimeField, Rationals,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn monos(v: &[&str]) -> Vec<Monomial> {
    v.iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn flat_at_random_points() {
    let f = PrimeField::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=6 {
        for g in Grading::all_up_to(n) {
            for m in enumerate_ideals(n) {
                let cell = CellArrows::new(&m, &g);
                for _ in 0..10 {
                    let j = specialize_ideal(&m, &g, &random_point(&cell, &f, &mut rng), &f).unwrap();
                    assert_eq!(
                        specialized_hilbert_function(&j),
                        m.hilbert_function(&g),
                        "{m} under {g}"
                    );
                    assert_eq!(initial_ideal(&j, LexOrder::XLessY).unwrap(), m, "{m} under {g}");
                }
            }
        }
    }
}

#[test]
fn flat_over_the_rationals() {
    let q = Rationals::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for m in enumerate_ideals(6) {
        let g = Grading::STANDARD;
        let cell = CellArrows::new(&m, &g);
        let j = specialize_ideal(&m, &g, &random_point(&cell, &q, &mut rng), &q).unwrap();
        assert_eq!(specialized_hilbert_function(&j), m.hilbert_function(&g));
    }
}

#[test]
fn generic_standard_points_are_uniform() {
    let f = PrimeField::default();
    let g = Grading::STANDARD;
    for seed in [1, 2, 3] {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (_, m) in standard_fibers(8) {
            let cell = CellArrows::new(&m, &g);
            let j = specialize_ideal(&m, &g, &random_point(&cell, &f, &mut rng), &f).unwrap();
            for (d, mat) in tropical_fingerprint(&j).unwrap() {
                assert!(mat.is_uniform(), "{m}, d={d}, seed {seed}");
                assert!(mat.satisfies_basis_exchange());
            }
        }
    }
}

#[test]
fn origin_and_generic_fingerprints() {
    let f = PrimeField::default();
    let g = Grading::STANDARD;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for m in enumerate_ideals(6) {
        let cell = CellArrows::new(&m, &g);
        let origin = specialize_ideal(&m, &g, &zero_point(&cell, &f), &f).unwrap();
        let fp0 = tropical_fingerprint(&origin).unwrap();
        let dmax = m.hilbert_function(&g).dmax().unwrap();
        assert_eq!(fp0.keys().copied().collect::<Vec<_>>(), (0..=dmax).collect::<Vec<_>>());
        for (d, mat) in &fp0 {
            assert!(mat.satisfies_basis_exchange());
            let standard: Vec<Monomial> = g
                .monomials_of_degree(*d)
                .into_iter()
                .filter(|x| !m.contains(x))
                .collect();
            assert_eq!(mat.coloop_monomials(), standard);
            assert_eq!(mat.loop_monomials(), m.monomials_of_degree(&g, *d));
        }
        let a = random_point(&cell, &f, &mut rng);
        let b = random_point(&cell, &f, &mut rng);
        let fa = tropical_fingerprint(&specialize_ideal(&m, &g, &a, &f).unwrap()).unwrap();
        let fb = tropical_fingerprint(&specialize_ideal(&m, &g, &b, &f).unwrap()).unwrap();
        if m.has_strict_rows() {
            assert_eq!(fa, fb, "{m}");
        }
        if !cell.is_empty() {
            assert_ne!(fp0, fa, "{m}");
        }
    }
}

#[test]
fn nonstandard_matroids() {
    let f = PrimeField::default();
    let g = Grading::new(2, 3).unwrap();
    let m = ideal("10,7,7,2,2,1");
    let cell = CellArrows::new(&m, &g);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let j = specialize_ideal(&m, &g, &random_point(&cell, &f, &mut rng), &f).unwrap();
    let mat = matroid_of_degree(&j, 18).unwrap();
    assert_eq!(mat.rank(), 2);
    assert_eq!(mat.ground(), monos(&["x^9", "x^6*y^2", "x^3*y^4", "y^6"]));
    assert_eq!(
        mat.circuit_monomials(),
        vec![
            monos(&["x^6*y^2", "x^3*y^4"]),
            monos(&["x^9", "x^6*y^2", "y^6"]),
            monos(&["x^9", "x^3*y^4", "y^6"]),
        ]
    );
    assert!(mat.loops().is_empty() && mat.coloops().is_empty() && !mat.is_uniform());
    assert!(mat.satisfies_basis_exchange());
}

#[test]
fn rational_point_of_7_1_1_1() {
    let q = Rationals::default();
    let g = Grading::new(2, 3).unwrap();
    let m = ideal("7,1,1,1");
    let j = specialize_ideal(&m, &g, &parse_point(&q, "c(2,2)=1").unwrap(), &q).unwrap();
    assert_eq!(j.render(), "f_0 = x^7\nf_1 = x*y\nf_2 = y^4 + x^6\n");
    assert_eq!(
        specialized_hilbert_function(&j),
        hf(&[1, 0, 1, 1, 1, 0, 2, 0, 1, 1, 1, 0, 1])
    );
}

#[test]
fn probe_witnesses_survive_reverification() {
    let f = PrimeField::default();
    for n in 2..=6 {
        let s = spine_graph(n).unwrap();
        for e in &s.edges {
            for w in &e.witnesses {
                let found = edge_probe(&w.hf, &w.grading, &f, 10, 2024)
                    .unwrap()
                    .unwrap_or_else(|| panic!("no witness for {} under {}", w.hf, w.grading));
                let j = specialize_ideal(&found.m_minus, &w.grading, &found.point, &f).unwrap();
                assert_eq!(initial_ideal(&j, LexOrder::XLessY).unwrap(), found.m_minus);
                assert_eq!(initial_ideal(&j, LexOrder::YLessX).unwrap(), found.m_plus);
            }
        }
    }
}

#[test]
fn probe_is_reproducible() {
    let q = Rationals::default();
    let h = hf(&[1, 2, 1]);
    let a = edge_probe(&h, &Grading::STANDARD, &q, 10, 3).unwrap().unwrap();
    let b = edge_probe(&h, &Grading::STANDARD, &q, 10, 3).unwrap().unwrap();
    assert_eq!((a.trial, a.point), (b.trial, b.point));
}
