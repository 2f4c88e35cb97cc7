mod common;

use common::{ideal, sweep_gradings};
use hilb_spine::det::{maximal_minors, select_rows};
use hilb_spine::macaulay::{certificate_monomial, standard_fibers, MatrixDump};
use hilb_spine::{
    bar_quotient, direct_path_certificate, enumerate_ideals, macaulay_matrix, paths_from, verify_minors_nonzero,
    verify_minors_sweep, CPolynomial, CellArrows, Grading, DEFAULT_MAX_MINORS,
};

#[test]
fn entries_are_path_sums() {
    for g in sweep_gradings() {
        for n in 1..=8 {
            for m in enumerate_ideals(n) {
                let cell = CellArrows::new(&m, &g);
                let dmax = m.hilbert_function(&g).dmax().unwrap_or(0);
                for d in 0..=dmax + 1 {
                    let r = macaulay_matrix(&m, &g, d);
                    for (ri, row) in r.rows.iter().enumerate() {
                        for (ci, col) in r.cols.iter().enumerate() {
                            let expect = match g.shift_between(col, row) {
                                Some(ell) if ell >= 0 => paths_from(&cell, m.j_minus(col).unwrap(), ell)
                                    .iter()
                                    .fold(CPolynomial::zero(), |acc, p| {
                                        acc + CPolynomial::term(1.into(), p.monomial())
                                    }),
                                _ => CPolynomial::zero(),
                            };
                            assert_eq!(r.entries[ri][ci], expect, "{m} under {g}, d={d}, ({row}, {col})");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn standard_graded_structure() {
    let g = Grading::STANDARD;
    for (h, m) in standard_fibers(8) {
        for d in 0..=h.dmax().unwrap() {
            let r = macaulay_matrix(&m, &g, d);
            let n0 = r.ncols();
            assert_eq!((r.nrows(), n0), ((d + 1) as usize, (d + 1 - h.get(d)) as usize));
            if n0 == 0 {
                continue;
            }
            let h_d = h.get(d) as usize;
            for (ri, row) in r.entries.iter().enumerate() {
                for (ci, e) in row.iter().enumerate() {
                    // column ci holds monomial at row position h_d + ci
                    let pos = h_d + ci;
                    if ri > pos {
                        assert!(e.is_zero());
                    }
                    if ri == pos {
                        assert!(e.is_one());
                    }
                    if ri <= pos {
                        assert_eq!(e.weighted_degree().unwrap_or((pos - ri) as u64), (pos - ri) as u64);
                    }
                }
            }
            let bar = bar_quotient(&r).unwrap();
            assert_eq!(bar.j_star, h_d);
            for (ri, row) in bar.matrix.entries.iter().enumerate() {
                for (ci, e) in row.iter().enumerate() {
                    if ri < ci {
                        assert!(e.is_zero(), "{m}, d={d}: bar entry ({ri},{ci}) = {e}");
                    }
                    if ri == ci {
                        assert!(!e.is_zero());
                    }
                }
            }
            for (rows, det) in maximal_minors(&r.entries, n0).unwrap() {
                assert!(det.weighted_degree().is_some(), "{m}, d={d}, rows {rows:?}");
                let degrees: Vec<usize> = rows.iter().enumerate().map(|(c, &s)| h_d + c - s).collect();
                assert!(degrees.windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }
}

#[test]
fn minors_sweep_up_to_eight() {
    let rep = verify_minors_sweep(8, DEFAULT_MAX_MINORS).unwrap();
    assert!(rep.all_nonzero);
    assert!(rep.all_certified);
    assert!(rep.failures.is_empty());
    assert_eq!(rep.matrices, 62);
    assert_eq!(rep.minors, 259);
}

#[test]
fn certificate_need_not_lead() {
    // Q has coefficient 1 but a larger monomial comes from another permutation
    let rep = verify_minors_nonzero(&ideal("4,3"), 3, DEFAULT_MAX_MINORS).unwrap();
    let rec = rep.records.iter().find(|r| r.rows == ["x^2*y", "x*y^2"]).unwrap();
    assert_eq!(rec.certificate, "c(2,1)^2");
    assert_eq!(rec.certificate_coefficient, "1");
    assert_eq!(rec.leading.as_deref(), Some("c(2,2)"));
    assert!(!rec.certificate_leads);
    let rep = verify_minors_sweep(8, DEFAULT_MAX_MINORS).unwrap();
    let listed: Vec<String> = rep.non_leading.iter().map(|(m, d)| format!("{m}@{d}")).collect();
    assert_eq!(listed, ["4,3@3", "5,3@3", "4,3,1@3"]);
}

#[test]
fn certificates_checked_by_second_backend() {
    let g = Grading::STANDARD;
    for (h, m) in standard_fibers(7) {
        for d in 0..=h.dmax().unwrap() {
            if h.get(d) == 0 || h.get(d) > d {
                continue;
            }
            let bar = bar_quotient(&macaulay_matrix(&m, &g, d)).unwrap();
            for (rows, det) in maximal_minors(&bar.matrix.entries, bar.matrix.ncols()).unwrap() {
                let q = direct_path_certificate(&bar, &rows).unwrap();
                assert_eq!(q, certificate_monomial(&bar, &rows).unwrap());
                assert!(det.coefficient(&q) == 1.into());
                assert_eq!(
                    hilb_spine::det::determinant(&select_rows(&bar.matrix.entries, &rows)).unwrap(),
                    det
                );
            }
        }
    }
}

#[test]
fn guard_trips_instead_of_truncating() {
    let err = verify_minors_nonzero(&ideal("6,4,2,1"), 4, 9).unwrap_err();
    assert!(matches!(err, hilb_spine::Error::MinorGuard { count: 10, cap: 9 }));
    assert!(verify_minors_nonzero(&ideal("6,4,2,1"), 4, 10).is_ok());
}

#[test]
fn dump_round_trip() {
    let r = macaulay_matrix(&ideal("6,4,2,1"), &Grading::STANDARD, 4);
    let json = serde_json::to_string(&r.to_dump()).unwrap();
    assert!(json.starts_with("{\"rows\":[\"x^4\",\"x^3*y\",\"x^2*y^2\",\"x*y^3\",\"y^4\"],\"cols\":[\"x^2*y^2\""));
    let back: MatrixDump = serde_json::from_str(&json).unwrap();
    let (rows, cols, entries) = back.parse().unwrap();
    assert_eq!(
        (rows, cols, entries),
        (r.rows.clone(), r.cols.clone(), r.entries.clone())
    );
    let text = r.to_bordered();
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("x^4     | c(2,1)*c(1,1)+c(2,2)"));
}
