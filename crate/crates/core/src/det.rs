//! Exact determinants of polynomial matrices.
//!
//! Two backends: Laplace expansion memoized over row subsets, which also
//! yields every maximal minor of a tall matrix in one pass, and Bareiss
//! fraction-free elimination with exact division.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::CPolynomial;

/// Default bound on the side length of a single determinant.
pub const DEFAULT_SIZE_LIMIT: usize = 16;

/// A dense matrix of polynomials, row-major.
pub type PolyMatrix = Vec<Vec<CPolynomial>>;

fn check_square(a: &[Vec<CPolynomial>], limit: usize) -> Result<usize> {
    let n = a.len();
    if let Some(row) = a.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            rows: n,
            cols: row.len(),
        });
    }
    if n > limit {
        return Err(Error::DeterminantTooLarge { size: n, limit });
    }
    Ok(n)
}

/// Determinant by Bareiss elimination, size at most [`DEFAULT_SIZE_LIMIT`].
pub fn determinant(a: &[Vec<CPolynomial>]) -> Result<CPolynomial> {
    determinant_with_limit(a, DEFAULT_SIZE_LIMIT)
}

pub fn determinant_with_limit(a: &[Vec<CPolynomial>], limit: usize) -> Result<CPolynomial> {
    check_square(a, limit)?;
    Ok(bareiss(a.to_vec()))
}

fn bareiss(mut m: PolyMatrix) -> CPolynomial {
    let n = m.len();
    if n == 0 {
        return CPolynomial::one();
    }
    let mut negate = false;
    let mut prev = CPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return CPolynomial::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j].mul_ref(&m[k][k]) - &m[i][k].mul_ref(&m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss quotients are exact");
            }
            m[i][k] = CPolynomial::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by Laplace expansion memoized over row subsets.
pub fn determinant_laplace(a: &[Vec<CPolynomial>]) -> Result<CPolynomial> {
    let n = check_square(a, DEFAULT_SIZE_LIMIT)?;
    let all: Vec<usize> = (0..n).collect();
    let minors = maximal_minors(a, n)?;
    Ok(minors
        .into_iter()
        .find(|(rows, _)| *rows == all)
        .map(|(_, d)| d)
        .unwrap_or_else(CPolynomial::one))
}

/// Every maximal minor of a tall `r × ncols` matrix (`r >= ncols`), as
/// `(selected rows, determinant)` with row sets in increasing
/// lexicographic order.
///
/// Level `k` of the expansion holds the determinants of the first `k`
/// columns on every `k`-subset of rows, each obtained from level `k - 1` by
/// expanding along column `k - 1`.
pub fn maximal_minors(a: &[Vec<CPolynomial>], ncols: usize) -> Result<Vec<(Vec<usize>, CPolynomial)>> {
    let r = a.len();
    if r > 64 || ncols > r {
        return Err(Error::Precondition(format!(
            "maximal minors need ncols <= rows <= 64, got {r} x {ncols}"
        )));
    }
    if ncols > DEFAULT_SIZE_LIMIT {
        return Err(Error::DeterminantTooLarge {
            size: ncols,
            limit: DEFAULT_SIZE_LIMIT,
        });
    }
    let mut level: HashMap<u64, CPolynomial> = HashMap::from([(0u64, CPolynomial::one())]);
    for k in 1..=ncols {
        let col = k - 1;
        let mut next: HashMap<u64, CPolynomial> = HashMap::new();
        for (&mask, sub) in &level {
            if sub.is_zero() {
                continue;
            }
            // adding row s: its position among the selected rows sets the sign
            for s in 0..r {
                if mask & (1 << s) != 0 || a[s][col].is_zero() {
                    continue;
                }
                let pos = (mask & ((1u64 << s) - 1)).count_ones() as usize;
                let term = a[s][col].mul_ref(sub);
                let slot = next.entry(mask | (1 << s)).or_default();
                if (pos + col) % 2 == 0 {
                    slot.add_assign_ref(&term);
                } else {
                    slot.sub_assign_ref(&term);
                }
            }
        }
        level = next;
    }
    let out = combinations(r, ncols)
        .into_iter()
        .map(|rows| {
            let mask = rows.iter().fold(0u64, |m, &s| m | (1 << s));
            let det = level.remove(&mask).unwrap_or_default();
            (rows, det)
        })
        .collect();
    Ok(out)
}

/// All `k`-subsets of `0..n` in increasing lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..n {
            if n - s < k - cur.len() {
                break;
            }
            cur.push(s);
            go(s + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// `C(n, k)` without overflow for the sizes used here.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (n - t) as u128 / (t + 1) as u128;
    }
    acc
}

/// The square submatrix on `rows` (all columns).
pub fn select_rows(a: &[Vec<CPolynomial>], rows: &[usize]) -> PolyMatrix {
    rows.iter().map(|&r| a[r].clone()).collect()
}
