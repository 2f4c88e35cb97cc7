//! Symbolic Macaulay matrices of the universal family, the quotient by the
//! high-index arrow variables, and verification of their maximal minors.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrows::{direct_path, CellArrows};
use crate::det::{binomial, determinant, maximal_minors, select_rows, PolyMatrix};
use crate::error::{Error, Result};
use crate::poly::{CMonomial, CPolynomial, CVar};
use crate::staircase::{Grading, HilbertFunction, Monomial, MonomialIdeal};
use crate::universal::PathSums;

/// Default cap on the number of maximal minors one verification may touch.
pub const DEFAULT_MAX_MINORS: u128 = 1_000_000;

/// The degree-`d` Macaulay matrix: column `m` holds the coefficients of
/// `g_m = (m / m_{j^-(m)}) f_{j^-(m)}` against the degree-`d` monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayMatrix {
    pub ideal: MonomialIdeal,
    pub grading: Grading,
    pub degree: u64,
    /// All degree-`d` monomials, increasing in `x ≺ y`.
    pub rows: Vec<Monomial>,
    /// Degree-`d` monomials of the ideal, increasing in `x ≺ y`.
    pub cols: Vec<Monomial>,
    pub entries: PolyMatrix,
}

impl MacaulayMatrix {
    pub fn entry(&self, row: &Monomial, col: &Monomial) -> Option<&CPolynomial> {
        let r = self.rows.iter().position(|m| m == row)?;
        let c = self.cols.iter().position(|m| m == col)?;
        Some(&self.entries[r][c])
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    /// Bordered text layout: a header of column monomials, then each row
    /// labelled by its monomial.
    pub fn to_bordered(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|p| p.to_string()).collect())
            .collect();
        let label_w = self.rows.iter().map(|m| m.to_string().len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.ncols())
            .map(|c| {
                cells
                    .iter()
                    .map(|r| r[c].len())
                    .chain([self.cols[c].to_string().len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut s = String::new();
        let _ = write!(s, "{:label_w$}", "");
        for (c, m) in self.cols.iter().enumerate() {
            let _ = write!(s, " | {:w$}", m.to_string(), w = widths[c]);
        }
        s.push('\n');
        for (r, m) in self.rows.iter().enumerate() {
            let _ = write!(s, "{:label_w$}", m.to_string());
            for (c, cell) in cells[r].iter().enumerate() {
                let _ = write!(s, " | {:w$}", cell, w = widths[c]);
            }
            s.push('\n');
        }
        s
    }

    pub fn to_dump(&self) -> MatrixDump {
        MatrixDump {
            rows: self.rows.iter().map(|m| m.to_string()).collect(),
            cols: self.cols.iter().map(|m| m.to_string()).collect(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|p| p.to_string()).collect())
                .collect(),
        }
    }
}

/// Machine-readable matrix: monomial labels and canonical entry strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDump {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDump {
    /// Parses labels and entries back into monomials and polynomials.
    pub fn parse(&self) -> Result<(Vec<Monomial>, Vec<Monomial>, PolyMatrix)> {
        let rows = self.rows.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        let cols = self.cols.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| s.parse()).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        Ok((rows, cols, entries))
    }
}

/// Entry law: the coefficient of `m r^ℓ` in `g_m` is the sum of `c_P` over
/// paths of length `ℓ` from `m_{j^-(m)}`.
fn build(ideal: &MonomialIdeal, grading: &Grading, d: u64, sums: &PathSums) -> MacaulayMatrix {
    let rows = grading.monomials_of_degree(d);
    let cols = ideal.monomials_of_degree(grading, d);
    let entries = rows
        .iter()
        .map(|row| {
            cols.iter()
                .map(|col| match grading.shift_between(col, row) {
                    Some(ell) if ell >= 0 => {
                        let j = ideal.j_minus(col).expect("column lies in the ideal");
                        sums.get(j, ell)
                    }
                    _ => CPolynomial::zero(),
                })
                .collect()
        })
        .collect();
    MacaulayMatrix {
        ideal: ideal.clone(),
        grading: *grading,
        degree: d,
        rows,
        cols,
        entries,
    }
}

pub fn macaulay_matrix(ideal: &MonomialIdeal, grading: &Grading, d: u64) -> MacaulayMatrix {
    let cell = CellArrows::new(ideal, grading);
    build(ideal, grading, d, &PathSums::new(&cell))
}

/// `R̄`: the Macaulay matrix with every `c_i^ℓ`, `i > j^-(m*)`, set to zero,
/// where `m*` is the smallest ideal monomial of the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarQuotient {
    pub matrix: MacaulayMatrix,
    pub m_star: Monomial,
    /// `j^-(m*)`; also the shift between a column and its main-diagonal row.
    pub j_star: usize,
    /// The variables set to zero.
    pub killed: Vec<CVar>,
}

impl BarQuotient {
    /// Entries `(m r^{j*}, m)` for each column `m`.
    pub fn main_diagonal(&self) -> Vec<CPolynomial> {
        let m = &self.matrix;
        m.cols
            .iter()
            .enumerate()
            .map(|(c, col)| {
                m.grading
                    .shift(col, self.j_star as i64)
                    .and_then(|row| m.rows.iter().position(|r| *r == row))
                    .map(|r| m.entries[r][c].clone())
                    .unwrap_or_default()
            })
            .collect()
    }
}

fn require_lex_least_standard(ideal: &MonomialIdeal, grading: &Grading) -> Result<()> {
    if !grading.is_standard() {
        return Err(Error::Precondition(format!(
            "needs the standard (1,1) grading, got {grading}"
        )));
    }
    if !ideal.has_strict_rows() {
        return Err(Error::Precondition(format!(
            "{ideal} is not lex-least for the standard grading"
        )));
    }
    Ok(())
}

pub fn bar_quotient(r: &MacaulayMatrix) -> Result<BarQuotient> {
    require_lex_least_standard(&r.ideal, &r.grading)?;
    let Some(&m_star) = r.cols.first() else {
        return Err(Error::Precondition(format!(
            "{} has no monomials of degree {}",
            r.ideal, r.degree
        )));
    };
    let j_star = r.ideal.j_minus(&m_star)?;
    let cell = CellArrows::new(&r.ideal, &r.grading);
    let killed: Vec<CVar> = cell.vars().into_iter().filter(|v| v.index as usize > j_star).collect();
    let mut matrix = r.clone();
    for row in matrix.entries.iter_mut() {
        for e in row.iter_mut() {
            *e = e.set_to_zero(|v| v.index as usize > j_star);
        }
    }
    Ok(BarQuotient {
        matrix,
        m_star,
        j_star,
        killed,
    })
}

/// Diagonal lengths `ℓ_{j,j}` of the square submatrix of `R̄` on `rows`.
fn diagonal_lengths(bar: &BarQuotient, rows: &[usize]) -> Result<Vec<i64>> {
    let m = &bar.matrix;
    if rows.len() != m.ncols() || rows.windows(2).any(|w| w[0] >= w[1]) || rows.iter().any(|&r| r >= m.nrows()) {
        return Err(Error::Precondition(format!(
            "need {} increasing row indices below {}",
            m.ncols(),
            m.nrows()
        )));
    }
    rows.iter()
        .zip(&m.cols)
        .map(|(&r, col)| match m.grading.shift_between(col, &m.rows[r]) {
            Some(ell) if ell >= 0 => Ok(ell),
            _ => Err(Error::Precondition(format!(
                "diagonal entry ({}, {col}) is not a nonnegative shift",
                m.rows[r]
            ))),
        })
        .collect()
}

/// `Q = Π_j c_{p_{j*, ℓ_{j,j}}}` for the submatrix of `R̄` on `rows`,
/// without checking it against the determinant.
pub fn certificate_monomial(bar: &BarQuotient, rows: &[usize]) -> Result<CMonomial> {
    let lengths = diagonal_lengths(bar, rows)?;
    let cell = CellArrows::new(&bar.matrix.ideal, &bar.matrix.grading);
    let mut q = CMonomial::one();
    for ell in lengths {
        if ell == 0 {
            continue;
        }
        let path = direct_path(&cell, bar.j_star, ell).ok_or(Error::MissingDirectPath {
            index: bar.j_star,
            length: ell as u32,
        })?;
        q = q.mul(&path.monomial());
    }
    Ok(q)
}

/// The direct-path monomial `Q` of the square submatrix of `R̄` on `rows`,
/// checked to occur with coefficient exactly 1 in its determinant.
pub fn direct_path_certificate(bar: &BarQuotient, rows: &[usize]) -> Result<CMonomial> {
    let q = certificate_monomial(bar, rows)?;
    let det = determinant(&select_rows(&bar.matrix.entries, rows))?;
    let coefficient = det.coefficient(&q);
    if !coefficient.is_one() {
        return Err(Error::CertificateMismatch {
            monomial: q.to_string(),
            coefficient: coefficient.to_string(),
        });
    }
    Ok(q)
}

/// One maximal minor of `R` and of `R̄`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorRecord {
    pub rows: Vec<String>,
    pub nonzero: bool,
    /// Lex-leading monomial of the minor of `R`.
    pub leading: Option<String>,
    /// The direct-path monomial `Q`.
    pub certificate: String,
    /// Coefficient of `Q` in the minor of `R̄`.
    pub certificate_coefficient: String,
    /// Whether `Q` is the lex-leading monomial of the minor of `R̄`.
    pub certificate_leads: bool,
}

/// Outcome of checking every maximal minor of one Macaulay matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorReport {
    pub ideal: MonomialIdeal,
    pub degree: u64,
    pub minor_count: u128,
    pub all_nonzero: bool,
    /// Every `Q` has coefficient 1 in its minor of `R̄`.
    pub all_certified: bool,
    /// Every `Q` is the lex-leading monomial of its minor of `R̄`.
    pub all_certificates_lead: bool,
    pub records: Vec<MinorRecord>,
}

/// Computes every maximal minor of the degree-`d` Macaulay matrix of a
/// standard-graded lex-least ideal, and the direct-path certificate of
/// each minor of `R̄`. `cap` bounds the number of minors.
pub fn verify_minors_nonzero(m_minus: &MonomialIdeal, d: u64, cap: u128) -> Result<MinorReport> {
    let g = Grading::STANDARD;
    require_lex_least_standard(m_minus, &g)?;
    let r = macaulay_matrix(m_minus, &g, d);
    let n0 = r.ncols();
    if n0 == 0 {
        return Err(Error::Precondition(format!("h({d}) = {d} + 1 for {m_minus}")));
    }
    let count = binomial(r.nrows() as u64, n0 as u64);
    if count > cap {
        return Err(Error::MinorGuard { count, cap });
    }
    let bar = bar_quotient(&r)?;
    let minors = maximal_minors(&r.entries, n0)?;
    let bar_minors = maximal_minors(&bar.matrix.entries, n0)?;
    let mut records = Vec::with_capacity(minors.len());
    for ((rows, det), (_, bar_det)) in minors.into_iter().zip(bar_minors) {
        let q = certificate_monomial(&bar, &rows)?;
        let coefficient: BigInt = bar_det.coefficient(&q);
        records.push(MinorRecord {
            rows: rows.iter().map(|&k| r.rows[k].to_string()).collect(),
            nonzero: !det.is_zero(),
            leading: det.leading_term().map(|(m, _)| m.to_string()),
            certificate: q.to_string(),
            certificate_coefficient: coefficient.to_string(),
            certificate_leads: bar_det.leading_term().is_some_and(|(m, c)| *m == q && c.is_one()),
        });
    }
    Ok(MinorReport {
        ideal: m_minus.clone(),
        degree: d,
        minor_count: count,
        all_nonzero: records.iter().all(|r| r.nonzero),
        all_certified: records.iter().all(|r| r.certificate_coefficient == "1"),
        all_certificates_lead: records.iter().all(|r| r.certificate_leads),
        records,
    })
}

/// Every standard-graded Hilbert function with `1 <= N <= max_colength`,
/// each with its lex-least ideal (the unique ideal with strictly
/// decreasing rows).
pub fn standard_fibers(max_colength: u32) -> Vec<(HilbertFunction, MonomialIdeal)> {
    let g = Grading::STANDARD;
    (1..=max_colength)
        .flat_map(crate::staircase::enumerate_ideals)
        .filter(|m| m.has_strict_rows())
        .map(|m| (m.hilbert_function(&g), m))
        .collect()
}

/// Summary of a minors sweep over all standard-graded Hilbert functions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_colength: u32,
    pub matrices: usize,
    pub minors: u128,
    pub all_nonzero: bool,
    pub all_certified: bool,
    pub all_certificates_lead: bool,
    /// `(ideal, degree)` pairs with a failing minor or certificate.
    pub failures: Vec<(MonomialIdeal, u64)>,
    /// `(ideal, degree)` pairs whose certificate is not the leading monomial.
    pub non_leading: Vec<(MonomialIdeal, u64)>,
}

/// Runs [`verify_minors_nonzero`] on every `(h, d)` with `N <= max_colength`
/// and `0 < h(d) < d + 1`, in parallel, merged in a fixed order.
pub fn verify_minors_sweep(max_colength: u32, cap: u128) -> Result<SweepReport> {
    let tasks: Vec<(MonomialIdeal, u64)> = standard_fibers(max_colength)
        .into_iter()
        .flat_map(|(h, m)| {
            let dmax = h.dmax().unwrap_or(0);
            (0..=dmax)
                .filter(move |&d| h.get(d) > 0 && h.get(d) < d + 1)
                .map(move |d| (m.clone(), d))
                .collect::<Vec<_>>()
        })
        .collect();
    let reports: Vec<MinorReport> = tasks
        .par_iter()
        .map(|(m, d)| verify_minors_nonzero(m, *d, cap))
        .collect::<Result<_>>()?;
    let mut out = SweepReport {
        max_colength,
        matrices: reports.len(),
        minors: 0,
        all_nonzero: true,
        all_certified: true,
        all_certificates_lead: true,
        failures: Vec::new(),
        non_leading: Vec::new(),
    };
    for rep in reports {
        out.minors += rep.minor_count;
        out.all_nonzero &= rep.all_nonzero;
        out.all_certified &= rep.all_certified;
        out.all_certificates_lead &= rep.all_certificates_lead;
        if !rep.all_nonzero || !rep.all_certified {
            out.failures.push((rep.ideal.clone(), rep.degree));
        }
        if !rep.all_certificates_lead {
            out.non_leading.push((rep.ideal, rep.degree));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> MonomialIdeal {
        s.parse().unwrap()
    }

    fn rendered(m: &MacaulayMatrix) -> Vec<Vec<String>> {
        m.to_dump().entries
    }

    #[test]
    fn degree_four_matrix_and_quotient() {
        let r = macaulay_matrix(&ideal("6,4,2,1"), &Grading::STANDARD, 4);
        let expect = [
            ["c(2,1)*c(1,1)+c(2,2)", "c(3,2)*c(1,1)", "c(4,3)*c(1,1)"],
            ["c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)+c(3,2)", "c(3,2)*c(1,1)+c(4,3)"],
            ["1", "c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)+c(3,2)"],
            ["0", "1", "c(1,1)+c(2,1)"],
            ["0", "0", "1"],
        ];
        assert_eq!(rendered(&r), expect.map(|r| r.map(String::from).to_vec()).to_vec());
        let bar = bar_quotient(&r).unwrap();
        assert_eq!(bar.m_star, Monomial::new(2, 2));
        assert_eq!(bar.j_star, 2);
        assert_eq!(bar.killed, vec![CVar::new(3, 2), CVar::new(4, 3)]);
        let expect = [
            ["c(2,1)*c(1,1)+c(2,2)", "0", "0"],
            ["c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)", "0"],
            ["1", "c(1,1)+c(2,1)", "c(2,1)*c(1,1)+c(2,2)"],
            ["0", "1", "c(1,1)+c(2,1)"],
            ["0", "0", "1"],
        ];
        assert_eq!(
            rendered(&bar.matrix),
            expect.map(|r| r.map(String::from).to_vec()).to_vec()
        );
        let diag: Vec<String> = bar.main_diagonal().iter().map(|p| p.to_string()).collect();
        assert_eq!(diag, vec!["c(2,1)*c(1,1)+c(2,2)"; 3]);
    }

    #[test]
    fn nonstandard_matrices() {
        let g = Grading::new(2, 3).unwrap();
        let r = macaulay_matrix(&ideal("10,7,7,2,2,1"), &g, 18);
        assert_eq!(
            rendered(&r),
            vec![
                vec!["0", "c(4,3)"],
                vec!["c(2,1)", "c(4,2)"],
                vec!["1", "c(2,1)"],
                vec!["0", "1"],
            ]
        );
        let r = macaulay_matrix(&ideal("7,1,1,1"), &g, 8);
        assert_eq!(rendered(&r), vec![vec!["0"], vec!["1"]]);
        let r = macaulay_matrix(&ideal("7,1,1,1"), &g, 12);
        assert_eq!(rendered(&r), vec![vec!["0", "c(2,2)"], vec!["1", "0"], vec!["0", "1"]]);
    }

    #[test]
    fn certificates_of_degree_four() {
        let r = macaulay_matrix(&ideal("6,4,2,1"), &Grading::STANDARD, 4);
        let bar = bar_quotient(&r).unwrap();
        assert!(direct_path_certificate(&bar, &[2, 3, 4]).unwrap().is_one());
        let q = direct_path_certificate(&bar, &[0, 1, 2]).unwrap();
        assert_eq!(q.to_string(), "c(2,2)^3");
        let q = direct_path_certificate(&bar, &[0, 2, 4]).unwrap();
        assert_eq!(q.to_string(), "c(2,2)*c(2,1)");
    }

    #[test]
    fn all_minors_of_degree_four() {
        let rep = verify_minors_nonzero(&ideal("6,4,2,1"), 4, DEFAULT_MAX_MINORS).unwrap();
        assert_eq!(rep.minor_count, 10);
        assert!(rep.all_nonzero && rep.all_certified);
        let rep = verify_minors_nonzero(&ideal("3,1"), 2, DEFAULT_MAX_MINORS).unwrap();
        assert_eq!(rep.minor_count, 3);
        assert!(rep.all_nonzero);
    }

    #[test]
    fn guard_and_preconditions() {
        assert!(matches!(
            verify_minors_nonzero(&ideal("6,4,2,1"), 4, 5),
            Err(Error::MinorGuard { count: 10, cap: 5 })
        ));
        assert!(verify_minors_nonzero(&ideal("2,2"), 2, DEFAULT_MAX_MINORS).is_err());
        let r = macaulay_matrix(&ideal("7,1,1,1"), &Grading::new(2, 3).unwrap(), 8);
        assert!(bar_quotient(&r).is_err());
    }
}
