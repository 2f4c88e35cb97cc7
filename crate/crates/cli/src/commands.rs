//! Subcommands: argument parsing and rendering over the core library.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hilb_spine::specialize::{format_point, random_point, zero_point, RNG_NAME};
use hilb_spine::{
    bar_quotient, edge_probe, initial_ideal, lex_extremes, macaulay_matrix, matroid_of_degree, negative_arrows,
    parse_point, poset_hasse, positive_arrows, specialize_ideal, spine_graph, tropical_fingerprint,
    universal_generators, universal_generators_pathsum, verify_minors_sweep, Arrow, CellArrows, Field, Grading,
    HilbertFunction, LexOrder, Matroid, MatroidDump, MonomialIdeal, PrimeField, Rationals, DEFAULT_MAX_MINORS,
    DEFAULT_PRIME,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::acceptance;
use crate::report::{RunReport, Verdict};

/// Largest colength `spine` accepts; the grading scan grows quickly past it.
pub const MAX_SPINE_COLENGTH: u32 = 12;
/// Largest colength `verify-minors` accepts.
pub const MAX_MINOR_COLENGTH: u32 = 12;
/// Environment variable overriding the minor-count guard.
pub const MAX_MINORS_ENV: &str = "HILB_SPINE_MAX_MINORS";

#[derive(Parser, Debug)]
#[command(
    name = "hilb-spine",
    version,
    about = "Torus-fixed ideals of the Hilbert scheme of points in the plane"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spine graph on the monomial ideals of a given colength.
    Spine(SpineArgs),
    /// Dominance poset of one graded fiber.
    Poset(PosetArgs),
    /// Positive and negative significant arrows of an ideal.
    Arrows(IdealArgs),
    /// Universal family over the cell of an ideal.
    Universal(IdealArgs),
    /// Symbolic Macaulay matrix in one degree.
    Macaulay(MacaulayArgs),
    /// Degreewise matroids of a specialized ideal.
    Matroids(MatroidArgs),
    /// Nonvanishing of every maximal minor, standard grading.
    VerifyMinors(VerifyMinorsArgs),
    /// Sample the cell of the lex-least ideal for a spine-edge witness.
    EdgeProbe(EdgeProbeArgs),
    /// Run the full acceptance suite.
    VerifyAll(FormatArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    #[default]
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct FormatArgs {
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SpineArgs {
    #[arg(long)]
    pub colength: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: GraphFormat,
    /// Label DOT edges with their witness gradings.
    #[arg(long)]
    pub labels: bool,
}

#[derive(Args, Debug)]
pub struct PosetArgs {
    /// Hilbert function as "h(0),h(1),...".
    #[arg(long)]
    pub hf: HilbertFunction,
    #[arg(long, default_value = "1,1")]
    pub grading: Grading,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct IdealArgs {
    /// Partition of the staircase, e.g. "6,4,2,1".
    #[arg(long)]
    pub ideal: MonomialIdeal,
    #[arg(long, default_value = "1,1")]
    pub grading: Grading,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct MacaulayArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(long)]
    pub degree: u64,
    /// Print the quotient that kills arrows above j^-(m*); standard grading only.
    #[arg(long)]
    pub bar: bool,
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    /// Prime modulus of the coefficient field.
    #[arg(long, default_value_t = DEFAULT_PRIME, conflicts_with = "rationals")]
    pub prime: u64,
    /// Work over the rationals instead of a prime field.
    #[arg(long)]
    pub rationals: bool,
    /// Seed of the ChaCha8 generator behind random points.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
#[group(id = "source", multiple = false)]
pub struct PointArgs {
    /// A random point of the cell (the default).
    #[arg(long)]
    pub random: bool,
    /// An explicit point, e.g. "c(2,1)=3 c(4,2)=1".
    #[arg(long)]
    pub point: Option<String>,
    /// The origin of the cell, i.e. the monomial ideal itself.
    #[arg(long)]
    pub origin: bool,
}

#[derive(Args, Debug)]
pub struct MatroidArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[command(flatten)]
    pub source: PointArgs,
    #[command(flatten)]
    pub field: FieldArgs,
    /// Only this degree; default is every degree up to the last nonzero h(d).
    #[arg(long)]
    pub degree: Option<u64>,
}

#[derive(Args, Debug)]
pub struct VerifyMinorsArgs {
    #[arg(long, default_value_t = 8)]
    pub max_colength: u32,
    #[arg(long, default_value = "1,1")]
    pub grading: Grading,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct EdgeProbeArgs {
    #[arg(long)]
    pub hf: HilbertFunction,
    #[arg(long, default_value = "1,1")]
    pub grading: Grading,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

/// What a command prints, and how the process should exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub verdict: Verdict,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            verdict: Verdict::Ok,
        }
    }

    fn report(rep: &RunReport, text: Option<String>) -> Self {
        Output {
            text: text.unwrap_or_else(|| rep.to_json()),
            verdict: rep.verdict,
        }
    }
}

/// Dispatches one parsed command line.
pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Spine(a) => spine(a.colength, a.format, a.labels).map(Output::ok),
        Command::Poset(a) => poset(a),
        Command::Arrows(a) => arrows(a),
        Command::Universal(a) => universal(a),
        Command::Macaulay(a) => macaulay(a),
        Command::Matroids(a) => matroids(a),
        Command::VerifyMinors(a) => verify_minors(a),
        Command::EdgeProbe(a) => edge_probe_cmd(a),
        Command::VerifyAll(a) => verify_all(a.format),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("values serialize") + "\n"
}

/// The spine for colength `n` as DOT or JSON.
pub fn spine(n: u32, format: GraphFormat, labels: bool) -> Result<String> {
    ensure!(
        (1..=MAX_SPINE_COLENGTH).contains(&n),
        hilb_spine::Error::Precondition(format!("colength must be in 1..={MAX_SPINE_COLENGTH}, got {n}"))
    );
    let graph = spine_graph(n)?;
    Ok(match format {
        GraphFormat::Dot => graph.to_dot(labels),
        GraphFormat::Json => to_json(&graph),
    })
}

fn poset(a: &PosetArgs) -> Result<Output> {
    let p = poset_hasse(&a.hf, &a.grading)?;
    ensure!(
        !p.is_empty(),
        hilb_spine::Error::EmptyFiber {
            hf: a.hf.clone(),
            grading: a.grading
        }
    );
    let (lo, hi) = lex_extremes(&a.hf, &a.grading)?;
    Ok(Output::ok(match a.format {
        Format::Text => format!(
            "{}lex-least {}  {}\nlex-most {}  {}\n",
            p.render(),
            lo,
            lo.generators_string(),
            hi,
            hi.generators_string()
        ),
        Format::Json => to_json(&json!({
            "grading": p.grading,
            "hf": p.hf,
            "elements": p.elements,
            "hasse": p.hasse(),
            "minimum": lo,
            "maximum": hi,
        })),
    }))
}

fn arrow_list(arrows: &[Arrow]) -> String {
    let items: Vec<String> = arrows.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn arrow_pairs(arrows: &[Arrow]) -> Vec<(usize, i64)> {
    arrows.iter().map(|a| (a.index, a.length)).collect()
}

fn arrows(a: &IdealArgs) -> Result<Output> {
    let pos = positive_arrows(&a.ideal, &a.grading);
    let neg = negative_arrows(&a.ideal, &a.grading);
    Ok(Output::ok(match a.format {
        Format::Text => format!(
            "ideal {}  {}  grading {}\nT+ = {}\nT- = {}\n",
            a.ideal,
            a.ideal.generators_string(),
            a.grading,
            arrow_list(&pos),
            arrow_list(&neg)
        ),
        Format::Json => to_json(&json!({
            "ideal": a.ideal,
            "grading": a.grading,
            "positive": arrow_pairs(&pos),
            "negative": arrow_pairs(&neg),
        })),
    }))
}

fn universal(a: &IdealArgs) -> Result<Output> {
    let family = universal_generators(&a.ideal, &a.grading);
    // the path-sum construction is an independent route to the same family
    let agree = family == universal_generators_pathsum(&a.ideal, &a.grading);
    let text = match a.format {
        Format::Text => {
            let mut s = format!("ideal {}  grading {}\n{family}", a.ideal, a.grading);
            if !agree {
                s.push_str("COUNTEREXAMPLE: recursion and path sums disagree\n");
            }
            s
        }
        Format::Json => to_json(&json!({
            "ideal": a.ideal,
            "grading": a.grading,
            "generators": family.generators.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "routes_agree": agree,
        })),
    };
    Ok(Output {
        text,
        verdict: Verdict::from_pass(agree),
    })
}

fn macaulay(a: &MacaulayArgs) -> Result<Output> {
    let ia = &a.ideal;
    let r = macaulay_matrix(&ia.ideal, &ia.grading, a.degree);
    let text = if a.bar {
        let bar = bar_quotient(&r)?;
        match ia.format {
            Format::Text => {
                let killed: Vec<String> = bar.killed.iter().map(|v| v.to_string()).collect();
                format!(
                    "m* = {}  j* = {}  killed: {}\n{}",
                    bar.m_star,
                    bar.j_star,
                    if killed.is_empty() {
                        "none".to_string()
                    } else {
                        killed.join(" ")
                    },
                    bar.matrix.to_bordered()
                )
            }
            Format::Json => to_json(&bar.matrix.to_dump()),
        }
    } else {
        match ia.format {
            Format::Text => r.to_bordered(),
            Format::Json => to_json(&r.to_dump()),
        }
    };
    Ok(Output::ok(text))
}

fn matroid_text(d: u64, m: &Matroid) -> String {
    let show = |ms: &[hilb_spine::Monomial]| -> String {
        let items: Vec<String> = ms.iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", items.join(", "))
    };
    let circuits: Vec<String> = m.circuit_monomials().iter().map(|c| show(c)).collect();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "degree {d}: rank {} on {} {}",
        m.rank(),
        show(m.ground()),
        if m.is_uniform() { "uniform" } else { "not uniform" }
    );
    let _ = writeln!(
        s,
        "  circuits: {}",
        if circuits.is_empty() {
            "none".into()
        } else {
            circuits.join(" ")
        }
    );
    let _ = writeln!(
        s,
        "  loops: {}  coloops: {}",
        show(&m.loop_monomials()),
        show(&m.coloop_monomials())
    );
    s
}

fn matroids_over<F: Field>(a: &MatroidArgs, field: &F) -> Result<Output> {
    let ia = &a.ideal;
    let cell = CellArrows::new(&ia.ideal, &ia.grading);
    let (source, point) = if let Some(p) = &a.source.point {
        ("point", parse_point(field, p)?)
    } else if a.source.origin {
        ("origin", zero_point(&cell, field))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(a.field.seed);
        ("random", random_point(&cell, field, &mut rng))
    };
    let j = specialize_ideal(&ia.ideal, &ia.grading, &point, field)?;
    let matroids: BTreeMap<u64, Matroid> = match a.degree {
        Some(d) => BTreeMap::from([(d, matroid_of_degree(&j, d)?)]),
        None => tropical_fingerprint(&j)?,
    };
    let mut rep = RunReport::new("matroids")
        .param("ideal", &ia.ideal)
        .param("grading", ia.grading)
        .param("field", field.describe())
        .param("source", source);
    if source == "random" {
        rep = rep.param("rng", RNG_NAME).param("seed", a.field.seed);
    }
    if let Some(d) = a.degree {
        rep = rep.param("degree", d);
    }
    let dumps: BTreeMap<String, MatroidDump> = matroids
        .iter()
        .map(|(d, m)| (d.to_string(), MatroidDump::from(m.clone())))
        .collect();
    rep.results = json!({
        "point": format_point::<F>(&point),
        "generators": j.render().lines().collect::<Vec<_>>(),
        "matroids": dumps,
    });
    let text = match ia.format {
        Format::Json => None,
        Format::Text => {
            let mut s = format!(
                "ideal {}  grading {}  field {}\n",
                ia.ideal,
                ia.grading,
                field.describe()
            );
            if source == "random" {
                let _ = writeln!(s, "rng {RNG_NAME}  seed {}", a.field.seed);
            }
            let _ = writeln!(s, "point {}", format_point::<F>(&point));
            s.push_str(&j.render());
            for (d, m) in &matroids {
                s.push_str(&matroid_text(*d, m));
            }
            Some(s)
        }
    };
    Ok(Output::report(&rep, text))
}

fn matroids(a: &MatroidArgs) -> Result<Output> {
    if a.field.rationals {
        matroids_over(a, &Rationals::default())
    } else {
        matroids_over(a, &PrimeField::new(a.field.prime)?)
    }
}

/// The minor-count guard, from the environment or the default.
pub fn minor_cap() -> Result<u128> {
    match std::env::var(MAX_MINORS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| hilb_spine::Error::Parse(format!("{MAX_MINORS_ENV}={v:?} is not a count")).into()),
        Err(_) => Ok(DEFAULT_MAX_MINORS),
    }
}

fn verify_minors(a: &VerifyMinorsArgs) -> Result<Output> {
    if !a.grading.is_standard() {
        return Err(hilb_spine::Error::Precondition(format!(
            "verify-minors needs the standard (1,1)-grading, the hypothesis of the nonvanishing theorem; got {}",
            a.grading
        ))
        .into());
    }
    ensure!(
        (1..=MAX_MINOR_COLENGTH).contains(&a.max_colength),
        hilb_spine::Error::Precondition(format!("max colength must be in 1..={MAX_MINOR_COLENGTH}"))
    );
    let cap = minor_cap()?;
    let start = Instant::now();
    let sweep = verify_minors_sweep(a.max_colength, cap)?;
    eprintln!("verify-minors: {:.2?}", start.elapsed());
    let mut rep = RunReport::new("verify-minors")
        .param("max_colength", a.max_colength)
        .param("grading", a.grading)
        .param("max_minors", cap);
    rep.verdict = Verdict::from_pass(sweep.all_nonzero && sweep.all_certified);
    rep.results = serde_json::to_value(&sweep)?;
    let text = match a.format {
        Format::Json => None,
        Format::Text => {
            let list = |v: &[(MonomialIdeal, u64)]| -> String {
                let items: Vec<String> = v.iter().map(|(m, d)| format!("{m}@{d}")).collect();
                if items.is_empty() {
                    "none".into()
                } else {
                    items.join(" ")
                }
            };
            Some(format!(
                "matrices {}  minors {}\nall_nonzero={}\nall_certified={}\ncertificate_leads={} (not leading: {})\nfailures: {}\nverdict {}\n",
                sweep.matrices,
                sweep.minors,
                sweep.all_nonzero,
                sweep.all_certified,
                sweep.all_certificates_lead,
                list(&sweep.non_leading),
                list(&sweep.failures),
                rep.verdict
            ))
        }
    };
    Ok(Output::report(&rep, text))
}

fn edge_probe_over<F: Field>(a: &EdgeProbeArgs, field: &F) -> Result<Output> {
    let start = Instant::now();
    let found = edge_probe(&a.hf, &a.grading, field, a.trials, a.field.seed)?;
    eprintln!("edge-probe: {:.2?}", start.elapsed());
    let mut rep = RunReport::new("edge-probe")
        .param("hf", &a.hf)
        .param("grading", a.grading)
        .param("field", field.describe())
        .param("trials", a.trials)
        .param("rng", RNG_NAME)
        .param("seed", a.field.seed);
    let (lo, hi) = lex_extremes(&a.hf, &a.grading)?;
    let results = match &found {
        Some(w) => {
            // re-specialize from the printed point and check both initial ideals
            let j = specialize_ideal(&w.m_minus, &a.grading, &w.point, field)?;
            let minus_ok = initial_ideal(&j, LexOrder::XLessY)? == w.m_minus;
            let plus_ok = initial_ideal(&j, LexOrder::YLessX)? == w.m_plus;
            rep.verdict = Verdict::from_pass(minus_ok && plus_ok);
            json!({
                "m_minus": lo, "m_plus": hi, "witness": true, "trial": w.trial,
                "point": format_point::<F>(&w.point), "reverified": minus_ok && plus_ok,
            })
        }
        None => {
            rep.verdict = Verdict::Counterexample;
            json!({"m_minus": lo, "m_plus": hi, "witness": false})
        }
    };
    rep.results = results;
    let text = match a.format {
        Format::Json => None,
        Format::Text => {
            let mut s = format!(
                "hf {}  grading {}  field {}  rng {RNG_NAME}  seed {}\nM- = {}  {}\nM+ = {}  {}\n",
                a.hf,
                a.grading,
                field.describe(),
                a.field.seed,
                lo,
                lo.generators_string(),
                hi,
                hi.generators_string()
            );
            match &found {
                Some(w) => {
                    let _ = writeln!(s, "witness at trial {}: {}", w.trial, format_point::<F>(&w.point));
                    let _ = writeln!(s, "reverified {}", rep.results["reverified"]);
                }
                None => {
                    let _ = writeln!(s, "no witness in {} trials", a.trials);
                }
            }
            let _ = writeln!(s, "verdict {}", rep.verdict);
            Some(s)
        }
    };
    Ok(Output::report(&rep, text))
}

fn edge_probe_cmd(a: &EdgeProbeArgs) -> Result<Output> {
    if a.trials == 0 {
        bail!(hilb_spine::Error::Precondition("trials must be positive".into()));
    }
    if a.field.rationals {
        edge_probe_over(a, &Rationals::default())
    } else {
        edge_probe_over(a, &PrimeField::new(a.field.prime)?)
    }
}

fn verify_all(format: Format) -> Result<Output> {
    let outcomes = acceptance::run_all();
    for o in &outcomes {
        eprintln!("criterion {:>2}: {:.2?}", o.id, o.elapsed);
    }
    let mut rep = RunReport::new("verify-all");
    rep.verdict = Verdict::from_pass(outcomes.iter().all(|o| o.pass));
    rep.results = serde_json::to_value(&outcomes).context("serializing outcomes")?;
    let text = match format {
        Format::Json => None,
        Format::Text => {
            let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            let _ = writeln!(s, "verdict {}", rep.verdict);
            Some(s)
        }
    };
    Ok(Output::report(&rep, text))
}
