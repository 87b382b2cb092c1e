//! Command-line front end.
//!
//! Exit status: 0 on success (including verifications whose answer is
//! "does not hold" where that is a legitimate finding), 1 when a result
//! contradicts a proven statement or fails an internal consistency check,
//! 2 on usage or input errors.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::descent::{
    check_pi_divides_parts, classify, eval_g_int, reduce_by_pi, solve_g, verify_galois_commute,
    CubicKummerCover, DescentClassification, PointValue,
};
use crate::eisenstein::{parse_element, EisensteinRational};
use crate::error::{Error, Result};
use crate::report::certificate_json;
use crate::residue::{ResidueRing, SET_NAMES};
use crate::search::{search, HeightBound};
use crate::verify::{minimal_modulus, Lemma};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "eisenstein-descent",
    version,
    about = "Arithmetic descent for cubic Kummer covers over Q(w)"
)]
pub struct Cli {
    /// Worker threads for set construction and search (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Also write the report to this file.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exhaustively check a residue-ring statement mod 3^k.
    Verify {
        /// cube-closure or no-solution
        lemma: String,
        #[arg(long)]
        k: u32,
    },
    /// Smallest k <= max-k at which the no-solution check holds.
    MinimalModulus {
        #[arg(long)]
        max_k: u32,
    },
    /// Classify the specialization of t^3 = x at an element (or "inf").
    Classify { element: String },
    /// Find rational (x, y) with g(x, y) equal to the element.
    Solve { element: String },
    /// Factor an Eisenstein integer into canonical primes.
    Factor { element: String },
    /// Integers (x', y') with g(x', y') * pi^3 = g(x, y).
    #[command(allow_negative_numbers = true)]
    Reduce { x: BigInt, y: BigInt },
    /// Classify all rational points of height <= H on t^3 = f(z).
    Search {
        /// Coefficients of f, constant term first, comma separated.
        #[arg(long)]
        coeffs: String,
        #[arg(long)]
        height: u64,
    },
    /// Write an image set mod 3^k as CSV.
    DumpSet {
        /// image-g, cubes or rhs
        set: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        path: PathBuf,
    },
}

/// Output of one command: the serialized report and its exit status.
struct Outcome {
    json: String,
    status: i32,
}

impl Outcome {
    fn new<T: Serialize>(body: &T, elapsed: Duration, ok: bool) -> Self {
        Self {
            json: certificate_json(body, elapsed),
            status: if ok { EXIT_OK } else { EXIT_FAILED },
        }
    }
}

fn parse_point(text: &str) -> Result<PointValue> {
    match text.trim() {
        "inf" | "infinity" | "oo" => Ok(PointValue::Infinity),
        t => parse_element(t).map(PointValue::Finite),
    }
}

fn parse_coeffs(text: &str) -> Result<CubicKummerCover> {
    let coeffs = text
        .split(',')
        .map(parse_element)
        .collect::<Result<Vec<EisensteinRational>>>()?;
    CubicKummerCover::new(coeffs)
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    report: &'static str,
    input: &'a str,
    value: String,
    classification: &'a DescentClassification,
    consistent: bool,
}

#[derive(Serialize)]
struct SolveReport<'a> {
    report: &'static str,
    input: &'a str,
    value: String,
    solution: Option<crate::search::DescentWitnessText>,
}

#[derive(Serialize)]
struct FactorEntry {
    prime: String,
    norm: String,
    exponent: u32,
}

#[derive(Serialize)]
struct FactorReport<'a> {
    report: &'static str,
    input: &'a str,
    unit: String,
    factors: Vec<FactorEntry>,
}

#[derive(Serialize)]
struct ReduceReport {
    report: &'static str,
    x: String,
    y: String,
    g: String,
    x_reduced: String,
    y_reduced: String,
    g_reduced: String,
    pi_divides_both_parts: bool,
    identity_holds: bool,
}

#[derive(Serialize)]
struct MinimalModulusReport {
    report: &'static str,
    max_k: u32,
    minimal_k: Option<u32>,
}

#[derive(Serialize)]
struct DumpReport {
    report: &'static str,
    set: String,
    k: u32,
    size: u64,
    path: String,
}

fn execute(cmd: &Command) -> Result<Outcome> {
    let start = Instant::now();
    match cmd {
        Command::Verify { lemma, k } => {
            let lemma: Lemma = lemma.parse()?;
            let report = lemma.verify(*k)?;
            let ok = report.holds || !lemma.expected_to_hold(*k);
            Ok(Outcome::new(&report, report.elapsed, ok))
        }
        Command::MinimalModulus { max_k } => {
            let minimal_k = minimal_modulus(*max_k)?;
            let body = MinimalModulusReport {
                report: "minimal-modulus",
                max_k: *max_k,
                minimal_k,
            };
            Ok(Outcome::new(&body, start.elapsed(), true))
        }
        Command::Classify { element } => {
            let point = parse_point(element)?;
            let class = classify(&point);
            let consistent = match (&class, &point) {
                (DescentClassification::Descends(w), PointValue::Finite(a)) => {
                    !a.is_cube() && verify_galois_commute(a, w).unwrap_or(false)
                }
                (DescentClassification::Disconnected, PointValue::Finite(a)) => {
                    a.cube_root().is_some_and(|r| r.pow(3) == *a)
                }
                _ => true,
            };
            let body = ClassifyReport {
                report: "classify",
                input: element,
                value: point.to_string(),
                classification: &class,
                consistent,
            };
            Ok(Outcome::new(&body, start.elapsed(), consistent))
        }
        Command::Solve { element } => {
            let a = parse_element(element)?;
            let solution = solve_g(&a);
            let consistent = solution.as_ref().is_none_or(|w| w.value() == a);
            let body = SolveReport {
                report: "solve",
                input: element,
                value: a.to_string(),
                solution: solution.as_ref().map(Into::into),
            };
            Ok(Outcome::new(&body, start.elapsed(), consistent))
        }
        Command::Factor { element } => {
            let a = parse_element(element)?;
            let n = a
                .as_integer()
                .ok_or_else(|| Error::NotIntegral(a.to_string()))?;
            let f = n.factor()?;
            let body = FactorReport {
                report: "factor",
                input: element,
                unit: f.unit.to_string(),
                factors: f
                    .factors
                    .iter()
                    .map(|(p, e)| FactorEntry {
                        prime: p.to_string(),
                        norm: p.norm().to_string(),
                        exponent: *e,
                    })
                    .collect(),
            };
            Ok(Outcome::new(&body, start.elapsed(), f.product() == *n))
        }
        Command::Reduce { x, y } => {
            let (xr, yr) = reduce_by_pi(x, y)?;
            let parts = check_pi_divides_parts(x, y)?;
            let g = eval_g_int(x, y);
            let gr = eval_g_int(&xr, &yr);
            let identity_holds = &gr * &crate::eisenstein::EisensteinInt::pi().pow(3) == g;
            let body = ReduceReport {
                report: "reduce",
                x: x.to_string(),
                y: y.to_string(),
                g: g.to_string(),
                x_reduced: xr.to_string(),
                y_reduced: yr.to_string(),
                g_reduced: gr.to_string(),
                pi_divides_both_parts: parts,
                identity_holds,
            };
            Ok(Outcome::new(
                &body,
                start.elapsed(),
                parts && identity_holds,
            ))
        }
        Command::Search { coeffs, height } => {
            let cover = parse_coeffs(coeffs)?;
            let bound = HeightBound::new(*height)?;
            let report = search(&cover, bound);
            // t^3 = 3(z^3 + 2) is known to have no descending rational point.
            let contradiction =
                cover == CubicKummerCover::three_cube_plus_two() && report.counts.descends > 0;
            let ok = !contradiction && report.descends.iter().all(|d| d.galois_identity);
            Ok(Outcome::new(&report, report.elapsed, ok))
        }
        Command::DumpSet { set, k, path } => {
            if !SET_NAMES.contains(&set.as_str()) {
                return Err(Error::Unknown {
                    kind: "set",
                    name: set.clone(),
                });
            }
            let ring = ResidueRing::new(*k)?;
            let members = ring.named_set(set)?;
            let mut out = BufWriter::new(File::create(path)?);
            members.write_csv(set, &mut out)?;
            out.flush()?;
            let body = DumpReport {
                report: "dump-set",
                set: set.clone(),
                k: *k,
                size: members.len(),
                path: path.display().to_string(),
            };
            Ok(Outcome::new(&body, start.elapsed(), true))
        }
    }
}

/// Runs a parsed command, writing the report to `out` (and to `--json`).
pub fn run<W: Write, E: Write>(cli: &Cli, out: &mut W, err: &mut E) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let outcome = match pool.install(|| execute(&cli.command)) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, format!("{}\n", outcome.json)) {
            let _ = writeln!(err, "error: writing {}: {e}", path.display());
            return EXIT_USAGE;
        }
    }
    if writeln!(out, "{}", outcome.json).is_err() {
        return EXIT_FAILED;
    }
    outcome.status
}
