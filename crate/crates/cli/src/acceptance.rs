//! The acceptance suite: one pass/fail outcome per criterion.
//!
//! Expected values are literal transcriptions, compared structurally
//! (polynomials are parsed, sets are compared as sets), so the checks do not
//! depend on the library's own printing conventions.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use anyhow::{anyhow, ensure, Result};
use hilb_spine::macaulay::{standard_fibers, SweepReport};
use hilb_spine::specialize::random_point;
use hilb_spine::{
    bar_quotient, dominance_leq, edge_probe, enumerate_ideals, initial_ideal, macaulay_matrix, matroid_of_degree,
    poset_hasse, positive_arrows, specialize_family, specialize_ideal, specialized_hilbert_function, spine_graph,
    tropical_fingerprint, universal_generators, universal_generators_pathsum, verify_minors_sweep, CPolynomial,
    CellArrows, Grading, HilbertFunction, LexOrder, Matroid, Monomial, MonomialIdeal, PrimeField, SpineGraph,
    DEFAULT_MAX_MINORS,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Result of one criterion. `elapsed` is kept out of serialized reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub id: u8,
    pub title: String,
    pub pass: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "{} criterion {:>2} {}: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail
        )
    }
}

/// Times `check` and turns its result into an outcome; errors fail.
pub fn evaluate(id: u8, title: &str, check: impl FnOnce() -> Result<(bool, String)>) -> Outcome {
    let start = Instant::now();
    let (pass, detail) = check().unwrap_or_else(|e| (false, format!("error: {e:#}")));
    Outcome {
        id,
        title: title.to_string(),
        pass,
        detail,
        elapsed: start.elapsed(),
    }
}

pub const SEED: u64 = 7;

fn ideal(s: &str) -> MonomialIdeal {
    s.parse().expect("literal partition")
}

fn mono(s: &str) -> Monomial {
    s.parse().expect("literal monomial")
}

fn poly(s: &str) -> CPolynomial {
    s.parse().expect("literal polynomial")
}

fn grading(a: u32, b: u32) -> Grading {
    Grading::new(a, b).expect("literal grading")
}

fn mono_set(v: &[&str]) -> BTreeSet<Monomial> {
    v.iter().map(|s| mono(s)).collect()
}

// ---------------------------------------------------------------- 1

pub const SPINE_FOUR_EDGES: [(&str, &str); 6] = [
    ("4", "3,1"),
    ("4", "2,2"),
    ("4", "1,1,1,1"),
    ("3,1", "2,1,1"),
    ("2,2", "1,1,1,1"),
    ("2,1,1", "1,1,1,1"),
];

/// Checks the JSON printed by `spine --colength 4 --format json`.
pub fn spine_four(json: &str, elapsed: Duration) -> Result<(bool, String)> {
    let g: SpineGraph = serde_json::from_str(json)?;
    let got: BTreeSet<BTreeSet<MonomialIdeal>> = g.edge_pairs().into_iter().map(|(a, b)| [a, b].into()).collect();
    let want: BTreeSet<BTreeSet<MonomialIdeal>> = SPINE_FOUR_EDGES
        .iter()
        .map(|(a, b)| [ideal(a), ideal(b)].into())
        .collect();
    let fast = elapsed < Duration::from_secs(1);
    Ok((
        got == want && g.vertices.len() == 5 && g.edges.len() == 6 && fast,
        format!(
            "{} vertices, {} edges, edge set {}, runtime {}",
            g.vertices.len(),
            g.edges.len(),
            if got == want { "matches" } else { "differs" },
            if fast { "< 1 s" } else { ">= 1 s" }
        ),
    ))
}

pub fn criterion_1() -> Outcome {
    evaluate(1, "spine N=4", || {
        let start = Instant::now();
        let json = crate::commands::spine(4, crate::commands::GraphFormat::Json, false)?;
        spine_four(&json, start.elapsed())
    })
}

// ---------------------------------------------------------------- 2

pub fn criterion_2() -> Outcome {
    evaluate(2, "arrows of 11,8,4,1,1,1,1", || {
        let got: BTreeSet<(usize, i64)> = positive_arrows(&ideal("11,8,4,1,1,1,1"), &grading(1, 2))
            .iter()
            .map(|a| (a.index, a.length))
            .collect();
        let want: BTreeSet<(usize, i64)> = [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)].into();
        Ok((got == want, format!("T+ = {got:?}")))
    })
}

// ---------------------------------------------------------------- 3

/// `f_1, f_2, f_3` of 11,8,4,1,1,1,1 under (1,2), carrier by carrier.
const RUNNING_FAMILY: [&[(&str, &str)]; 3] = [
    &[("x^8*y", "1"), ("x^10", "c(1,1)")],
    &[
        ("x^4*y^2", "1"),
        ("x^6*y", "c(1,1)+c(2,1)"),
        ("x^8", "c(2,1)*c(1,1)+c(2,2)"),
    ],
    &[
        ("x*y^3", "1"),
        ("x^3*y^2", "c(1,1)+c(2,1)+c(3,1)"),
        ("x^5*y", "c(2,1)*c(1,1)+c(2,2)+c(3,1)*c(1,1)+c(3,1)*c(2,1)+c(3,2)"),
        ("x^7", "c(3,1)*c(2,1)*c(1,1)+c(3,1)*c(2,2)+c(3,2)*c(1,1)"),
    ],
];

pub const UNIVERSAL_GRADINGS: [(u32, u32); 4] = [(1, 1), (1, 2), (2, 3), (1, 3)];

pub fn criterion_3() -> Outcome {
    evaluate(3, "universal family", || {
        let start = Instant::now();
        let fam = universal_generators(&ideal("11,8,4,1,1,1,1"), &grading(1, 2));
        let mut golden = fam.generator(0).to_string() == "x^11";
        for (k, terms) in RUNNING_FAMILY.iter().enumerate() {
            let f = fam.generator(k + 1);
            let carriers: BTreeSet<Monomial> = f.carriers().copied().collect();
            golden &= carriers == terms.iter().map(|(m, _)| mono(m)).collect();
            golden &= terms.iter().all(|(m, c)| f.coefficient(&mono(m)) == poly(c));
        }
        golden &= fam.generator(1).to_string() == "x^8*y + c(1,1)*x^10";
        golden &= fam.generator(2).to_string() == "x^4*y^2 + (c(1,1)+c(2,1))*x^6*y + (c(2,1)*c(1,1)+c(2,2))*x^8";
        let cases: Vec<(MonomialIdeal, Grading)> = (1..=8)
            .flat_map(enumerate_ideals)
            .flat_map(|m| UNIVERSAL_GRADINGS.iter().map(move |&(a, b)| (m.clone(), grading(a, b))))
            .collect();
        let disagree: Vec<String> = cases
            .par_iter()
            .filter(|(m, g)| universal_generators(m, g) != universal_generators_pathsum(m, g))
            .map(|(m, g)| format!("{m}@{g}"))
            .collect();
        let fast = start.elapsed() < Duration::from_secs(60);
        Ok((
            golden && disagree.is_empty() && fast,
            format!(
                "goldens {}, routes agree on {}/{} (ideal, grading) pairs, runtime {}",
                if golden { "match" } else { "differ" },
                cases.len() - disagree.len(),
                cases.len(),
                if fast { "< 1 min" } else { ">= 1 min" }
            ),
        ))
    })
}

// ---------------------------------------------------------------- 4

const MATRIX_R: [[&str; 3]; 5] = [
    ["c(1,1)*c(2,1)+c(2,2)", "c(1,1)*c(3,2)", "c(1,1)*c(4,3)"],
    ["c(1,1)+c(2,1)", "c(1,1)*c(2,1)+c(2,2)+c(3,2)", "c(1,1)*c(3,2)+c(4,3)"],
    ["1", "c(1,1)+c(2,1)", "c(1,1)*c(2,1)+c(2,2)+c(3,2)"],
    ["0", "1", "c(1,1)+c(2,1)"],
    ["0", "0", "1"],
];

const MATRIX_R_BAR: [[&str; 3]; 5] = [
    ["c(1,1)*c(2,1)+c(2,2)", "0", "0"],
    ["c(1,1)+c(2,1)", "c(1,1)*c(2,1)+c(2,2)", "0"],
    ["1", "c(1,1)+c(2,1)", "c(1,1)*c(2,1)+c(2,2)"],
    ["0", "1", "c(1,1)+c(2,1)"],
    ["0", "0", "1"],
];

fn matching_entries(got: &[Vec<CPolynomial>], want: &[[&str; 3]; 5]) -> usize {
    if got.len() != want.len() || got.iter().any(|r| r.len() != 3) {
        return 0;
    }
    got.iter()
        .zip(want)
        .flat_map(|(g, w)| g.iter().zip(w))
        .filter(|(g, w)| **g == poly(w))
        .count()
}

pub fn criterion_4() -> Outcome {
    evaluate(4, "degree-4 Macaulay matrices", || {
        let r = macaulay_matrix(&ideal("6,4,2,1"), &Grading::STANDARD, 4);
        let labels_ok = r.rows == ["x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"].map(mono)
            && r.cols == ["x^2*y^2", "x*y^3", "y^4"].map(mono);
        let bar = bar_quotient(&r)?;
        let a = matching_entries(&r.entries, &MATRIX_R);
        let b = matching_entries(&bar.matrix.entries, &MATRIX_R_BAR);
        Ok((
            labels_ok && a == 15 && b == 15,
            format!(
                "R {a}/15 entries, bar R {b}/15 entries, labels {}",
                if labels_ok { "match" } else { "differ" }
            ),
        ))
    })
}

// ---------------------------------------------------------------- 5

/// The `(ideal, degree)` pairs where the direct-path product has
/// coefficient 1 but is not the lex-leading monomial of its minor.
pub const KNOWN_NON_LEADING: [(&str, u64); 3] = [("4,3", 3), ("5,3", 3), ("4,3,1", 3)];

/// The minors sweep at `N <= 8`; `elapsed` is the sweep's wall time.
pub fn minors_sweep() -> Result<(SweepReport, Duration)> {
    let start = Instant::now();
    let sweep = verify_minors_sweep(8, DEFAULT_MAX_MINORS)?;
    Ok((sweep, start.elapsed()))
}

/// Judges the sweep. Nonvanishing and the unit coefficient of `Q` are the
/// theorem; the lex-leading clause is reported separately and fails on
/// the instances in [`KNOWN_NON_LEADING`].
pub fn judge_sweep(sweep: &SweepReport, elapsed: Duration) -> (bool, String) {
    let fast = elapsed < Duration::from_secs(600);
    let non_leading: Vec<String> = sweep.non_leading.iter().map(|(m, d)| format!("{m}@{d}")).collect();
    let pass = sweep.all_nonzero && sweep.all_certified && sweep.all_certificates_lead && fast;
    (
        pass,
        format!(
            "{} matrices, {} minors; all nonzero {}; Q coefficient 1 {}; Q lex-leading {}{}; guard not tripped; runtime {}",
            sweep.matrices,
            sweep.minors,
            sweep.all_nonzero,
            sweep.all_certified,
            sweep.all_certificates_lead,
            if non_leading.is_empty() { String::new() } else { format!(" (fails at {})", non_leading.join(", ")) },
            if fast { "< 10 min" } else { ">= 10 min" }
        ),
    )
}

pub fn criterion_5() -> Outcome {
    evaluate(5, "minors sweep N<=8", || {
        let (sweep, elapsed) = minors_sweep()?;
        Ok(judge_sweep(&sweep, elapsed))
    })
}

// ---------------------------------------------------------------- 6

pub const GENERICITY_SEEDS: [u64; 3] = [1, 2, 3];

/// Non-uniform `(ideal, degree)` pairs at a seeded random point per
/// standard fiber with `N <= 8`.
pub fn non_uniform(seed: u64) -> Result<Vec<(MonomialIdeal, u64)>> {
    let f = PrimeField::default();
    let g = Grading::STANDARD;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for (h, m) in standard_fibers(8) {
        let cell = CellArrows::new(&m, &g);
        let j = specialize_ideal(&m, &g, &random_point(&cell, &f, &mut rng), &f)?;
        for (d, mat) in tropical_fingerprint(&j)? {
            let rank_ok = mat.rank() as u64 == h.get(d) && mat.ground().len() as u64 == d + 1;
            if !mat.is_uniform() || !rank_ok {
                bad.push((m.clone(), d));
            }
        }
    }
    Ok(bad)
}

/// Seed used when `seed` fails once.
pub fn resample_seed(seed: u64) -> u64 {
    seed.wrapping_add(1_000_003)
}

pub fn criterion_6() -> Outcome {
    evaluate(6, "generic uniformity", || {
        let mut notes = Vec::new();
        let mut pass = true;
        for seed in GENERICITY_SEEDS {
            if non_uniform(seed)?.is_empty() {
                notes.push(format!("seed {seed} uniform"));
                continue;
            }
            let retry = resample_seed(seed);
            let bad = non_uniform(retry)?;
            pass &= bad.is_empty();
            notes.push(format!(
                "seed {seed} failed, resampled with {retry}: {} non-uniform",
                bad.len()
            ));
        }
        Ok((pass, format!("GF(32003), ChaCha8, N<=8: {}", notes.join("; "))))
    })
}

// ---------------------------------------------------------------- 7

fn circuit_sets(m: &Matroid) -> BTreeSet<BTreeSet<Monomial>> {
    m.circuit_monomials()
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect()
}

fn circuits_of(v: &[&[&str]]) -> BTreeSet<BTreeSet<Monomial>> {
    v.iter().map(|c| mono_set(c)).collect()
}

pub fn criterion_7() -> Outcome {
    evaluate(7, "non-uniform examples", || {
        let f = PrimeField::default();
        let g = grading(2, 3);
        let specialize = |m: &MonomialIdeal| {
            let cell = CellArrows::new(m, &g);
            let mut rng = ChaCha8Rng::seed_from_u64(SEED);
            specialize_ideal(m, &g, &random_point(&cell, &f, &mut rng), &f)
        };
        let small = specialize(&ideal("7,1,1,1"))?;
        let m12 = matroid_of_degree(&small, 12)?;
        let m8 = matroid_of_degree(&small, 8)?;
        let small_ok = circuit_sets(&m12) == circuits_of(&[&["x^3*y^2"], &["x^6", "y^4"]])
            && m12.loop_monomials() == [mono("x^3*y^2")]
            && circuit_sets(&m8) == circuits_of(&[&["x*y^2"]])
            && m8.coloop_monomials() == [mono("x^4")];
        let big_ideal = MonomialIdeal::from_generators(&["x^10", "x^7*y", "x^2*y^3", "x*y^5", "y^6"].map(mono))?;
        let big = specialize(&big_ideal)?;
        let m18 = matroid_of_degree(&big, 18)?;
        let big_ok = m18.rank() == 2
            && m18.ground().iter().copied().collect::<BTreeSet<_>>() == mono_set(&["x^9", "x^6*y^2", "x^3*y^4", "y^6"])
            && circuit_sets(&m18)
                == circuits_of(&[
                    &["x^3*y^4", "x^6*y^2"],
                    &["x^9", "x^3*y^4", "y^6"],
                    &["x^9", "x^6*y^2", "y^6"],
                ])
            && m18.loops().is_empty()
            && m18.coloops().is_empty()
            && !m18.is_uniform();
        Ok((
            small_ok && big_ok,
            format!(
                "7,1,1,1 degrees 12 and 8 {}; {} degree 18 {} (rank {}, {} circuits)",
                if small_ok { "match" } else { "differ" },
                big_ideal,
                if big_ok { "matches" } else { "differs" },
                m18.rank(),
                m18.circuits().len()
            ),
        ))
    })
}

// ---------------------------------------------------------------- 8

/// Every `(edge, witness grading, hf)` of the spines with `N <= max_n`.
pub fn spine_witnesses(max_n: u32) -> Result<Vec<(MonomialIdeal, MonomialIdeal, Grading, HilbertFunction)>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let s = spine_graph(n)?;
        for e in &s.edges {
            for w in &e.witnesses {
                out.push((
                    s.vertices[e.u].clone(),
                    s.vertices[e.v].clone(),
                    w.grading,
                    w.hf.clone(),
                ));
            }
        }
    }
    Ok(out)
}

/// Probes one witness and re-verifies the point through a separate
/// specialization and both initial ideals.
pub fn probe_and_verify(
    u: &MonomialIdeal,
    v: &MonomialIdeal,
    g: &Grading,
    h: &HilbertFunction,
    seed: u64,
) -> Result<bool> {
    let f = PrimeField::default();
    let Some(w) = edge_probe(h, g, &f, 10, seed)? else {
        return Ok(false);
    };
    let j = specialize_ideal(&w.m_minus, g, &w.point, &f)?;
    let ends: BTreeSet<&MonomialIdeal> = [u, v].into();
    Ok(ends == [&w.m_minus, &w.m_plus].into()
        && initial_ideal(&j, LexOrder::XLessY)? == w.m_minus
        && initial_ideal(&j, LexOrder::YLessX)? == w.m_plus)
}

pub fn criterion_8() -> Outcome {
    evaluate(8, "spine-edge realizability", || {
        let tasks = spine_witnesses(6)?;
        let results: Vec<bool> = tasks
            .par_iter()
            .map(|(u, v, g, h)| probe_and_verify(u, v, g, h, SEED))
            .collect::<Result<_>>()?;
        let ok = results.iter().filter(|&&b| b).count();
        Ok((
            ok == tasks.len() && !tasks.is_empty(),
            format!(
                "{ok}/{} witnesses found in 10 trials and re-verified (GF(32003), ChaCha8 seed {SEED})",
                tasks.len()
            ),
        ))
    })
}

// ---------------------------------------------------------------- 9

pub const FLATNESS_POINTS: usize = 100;

/// Cells whose specialized Hilbert function differs from `h` at some of
/// `points` random points; returns `(cells, bad cells)`.
pub fn flatness(max_n: u32, points: usize, seed: u64) -> Result<(usize, Vec<String>)> {
    let cells: Vec<(MonomialIdeal, Grading)> = (1..=max_n)
        .flat_map(|n| {
            let ideals = enumerate_ideals(n);
            Grading::all_up_to(n)
                .into_iter()
                .flat_map(move |g| ideals.clone().into_iter().map(move |m| (m, g)))
        })
        .collect();
    let bad: Vec<String> = cells
        .par_iter()
        .enumerate()
        .map(|(k, (m, g))| -> Result<Option<String>> {
            let f = PrimeField::default();
            let h = m.hilbert_function(g);
            let cell = CellArrows::new(m, g);
            let family = universal_generators_pathsum(m, g);
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
            for _ in 0..points {
                let j = specialize_family(&family, &random_point(&cell, &f, &mut rng), &f)?;
                if specialized_hilbert_function(&j) != h {
                    return Ok(Some(format!("{m}@{g}")));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((cells.len(), bad))
}

pub fn criterion_9() -> Outcome {
    evaluate(9, "flatness", || {
        let (cells, bad) = flatness(6, FLATNESS_POINTS, SEED)?;
        Ok((
            bad.is_empty(),
            format!(
                "{}/{cells} cells (N<=6, all coprime gradings in [1,N]^2) flat at {FLATNESS_POINTS} points each",
                cells - bad.len()
            ),
        ))
    })
}

// ---------------------------------------------------------------- 10

/// Reflexivity, antisymmetry, transitivity and a unique minimum and
/// maximum in every fiber with `N <= max_n`, over all coprime gradings in
/// `[1,N]²`. Returns the number of fibers checked and the failures.
pub fn dominance_axioms(max_n: u32) -> Result<(usize, Vec<String>)> {
    let mut fibers: Vec<(HilbertFunction, Grading, Vec<MonomialIdeal>)> = Vec::new();
    for n in 1..=max_n {
        let ideals = enumerate_ideals(n);
        for g in Grading::all_up_to(n) {
            let mut by_hf: BTreeMap<HilbertFunction, Vec<MonomialIdeal>> = BTreeMap::new();
            for m in &ideals {
                by_hf.entry(m.hilbert_function(&g)).or_default().push(m.clone());
            }
            fibers.extend(by_hf.into_iter().map(|(h, ms)| (h, g, ms)));
        }
    }
    let bad: Vec<String> = fibers
        .par_iter()
        .map(|(h, g, ms)| -> Result<Option<String>> {
            let n = ms.len();
            let mut leq = vec![vec![false; n]; n];
            for a in 0..n {
                for b in 0..n {
                    leq[a][b] = dominance_leq(&ms[a], &ms[b], g)?;
                }
            }
            let reflexive = (0..n).all(|a| leq[a][a]);
            let antisymmetric = (0..n).all(|a| (0..n).all(|b| a == b || !(leq[a][b] && leq[b][a])));
            let transitive = (0..n).all(|a| (0..n).all(|b| !leq[a][b] || (0..n).all(|c| !leq[b][c] || leq[a][c])));
            let minimum = (0..n).filter(|&a| (0..n).all(|b| leq[a][b])).count() == 1;
            let maximum = (0..n).filter(|&a| (0..n).all(|b| leq[b][a])).count() == 1;
            Ok((!(reflexive && antisymmetric && transitive && minimum && maximum)).then(|| format!("{h}@{g}")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((fibers.len(), bad))
}

pub fn criterion_10() -> Outcome {
    evaluate(10, "dominance poset", || {
        let p = poset_hasse(&"1,1,2,1,1".parse()?, &grading(1, 2))?;
        let lo = MonomialIdeal::from_generators(&["x^5", "x*y", "y^2"].map(mono))?;
        let hi = MonomialIdeal::from_generators(&["x^3", "x^2*y", "x*y^2", "y^3"].map(mono))?;
        let min = p.minimum().map(|k| p.elements[k].clone());
        let max = p.maximum().map(|k| p.elements[k].clone());
        let (lo_k, hi_k) = (p.minimum(), p.maximum());
        let covers = p.hasse();
        // a diamond: four covers, from the minimum to two incomparable
        // middle elements and from those to the maximum
        let middle: Vec<usize> = (0..p.len()).filter(|&k| Some(k) != lo_k && Some(k) != hi_k).collect();
        let diamond = p.len() == 4
            && covers.len() == 4
            && middle.len() == 2
            && !p.leq[middle[0]][middle[1]]
            && !p.leq[middle[1]][middle[0]]
            && middle
                .iter()
                .all(|&k| covers.contains(&(lo_k.unwrap_or(k), k)) && covers.contains(&(k, hi_k.unwrap_or(k))));
        let extremes = min.as_ref() == Some(&lo) && max.as_ref() == Some(&hi);
        let (fibers, bad) = dominance_axioms(8)?;
        ensure!(fibers > 0, anyhow!("no fibers enumerated"));
        Ok((
            diamond && extremes && bad.is_empty(),
            format!(
                "{} elements, diamond {}, extremes {} and {} {}; axioms hold on {}/{fibers} fibers with N<=8",
                p.len(),
                diamond,
                lo.generators_string(),
                hi.generators_string(),
                if extremes { "match" } else { "differ" },
                fibers - bad.len()
            ),
        ))
    })
}

/// Every criterion in order.
pub fn run_all() -> Vec<Outcome> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ]
}
