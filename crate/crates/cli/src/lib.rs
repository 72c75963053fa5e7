// SPDX-License-Identifier: Apache-2.0

//! In-process command dispatch for the `eislat` binary.
//!
//! Exit codes: 0 success, 1 valid input that is not realizable or not
//! representable, 2 malformed input. Structured output (`--json`) is one
//! document on stdout; diagnostics go to stderr.

pub mod svg;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use eisenstein_heron::embedding::{embed_traced, validate, EmbedError, RealizabilityReport};
use eisenstein_heron::factorization::{classify_prime, factor_eisenstein, lift_split_prime, FactorError};
use eisenstein_heron::oracle::{brute_force_embeddings, enumerate_norm_points};
use eisenstein_heron::{EisensteinInt, LatticeTriangle, TriangleSpec};
use serde::{Deserialize, Serialize};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_REALIZABLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        Self { exit_code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(exit_code: i32, stdout: String, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Self { exit_code, stdout, stderr }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self::fail(EXIT_USAGE, String::new(), format!("error: {message}"))
    }
}

#[derive(Debug, Parser)]
#[command(name = "eislat", version, about = "Triangles on the Eisenstein lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct SidesArgs {
    /// Squared length of side a = |BC|
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    a2: u64,
    /// Squared length of side b = |AC|
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    b2: u64,
    /// Squared length of side c = |AB|
    #[arg(value_parser = clap::value_parser!(u64).range(1..))]
    c2: u64,
}

impl SidesArgs {
    fn spec(&self) -> TriangleSpec {
        TriangleSpec::new(self.a2, self.b2, self.c2).expect("clap enforces positive sides")
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report whether the triangle is realizable on the lattice
    Check {
        #[command(flatten)]
        sides: SidesArgs,
        #[arg(long)]
        json: bool,
    },
    /// Construct lattice vertices for the triangle
    Embed {
        #[command(flatten)]
        sides: SidesArgs,
        #[arg(long)]
        json: bool,
        /// Also write an SVG drawing to FILE
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
    },
    /// Factor X + Yw into a unit and canonical primes
    Factor {
        #[arg(allow_negative_numbers = true)]
        x: i64,
        #[arg(allow_negative_numbers = true)]
        y: i64,
        #[arg(long)]
        json: bool,
    },
    /// Classify a rational prime as inert, ramified or split
    Classify { p: u64 },
    /// Canonical Eisenstein prime of norm P, for P = 1 mod 3
    Lift { p: u64 },
    /// Every embedding up to lattice symmetry, by exhaustive search
    Search {
        #[command(flatten)]
        sides: SidesArgs,
        #[arg(long)]
        json: bool,
    },
    /// All lattice points of norm K
    Enumerate {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long)]
        json: bool,
    },
}

pub type Point = [i128; 2];

fn point(z: EisensteinInt) -> Point {
    [z.x, z.y]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertices {
    #[serde(rename = "A")]
    pub a: Point,
    #[serde(rename = "B")]
    pub b: Point,
    #[serde(rename = "C")]
    pub c: Point,
}

impl From<&LatticeTriangle> for Vertices {
    fn from(t: &LatticeTriangle) -> Self {
        Self { a: point(t.a), b: point(t.b), c: point(t.c) }
    }
}

impl Vertices {
    pub fn triangle(&self) -> LatticeTriangle {
        let z = |p: Point| EisensteinInt::new(p[0], p[1]);
        LatticeTriangle::new(z(self.a), z(self.b), z(self.c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbedDoc {
    pub spec: [u64; 3],
    pub n: u64,
    pub vertices: Vertices,
    pub sides_squared: [u64; 3],
}

#[derive(Debug, Serialize)]
struct CheckDoc<'a> {
    spec: [u64; 3],
    realizable: bool,
    n: Option<u64>,
    cond_i: bool,
    cond_ii: bool,
    cond_iii: bool,
    witness_side: Option<&'static str>,
    offending_primes: &'a [u64],
    failure_reason: &'a str,
}

impl<'a> From<&'a RealizabilityReport> for CheckDoc<'a> {
    fn from(r: &'a RealizabilityReport) -> Self {
        Self {
            spec: r.spec.sides(),
            realizable: r.realizable,
            n: r.n,
            cond_i: r.cond_i,
            cond_ii: r.cond_ii,
            cond_iii: r.cond_iii,
            witness_side: r.witness_side.map(|s| s.as_str()),
            offending_primes: &r.offending_primes,
            failure_reason: &r.failure_reason,
        }
    }
}

#[derive(Debug, Serialize)]
struct FactorEntry {
    prime: Point,
    exponent: u32,
}

#[derive(Debug, Serialize)]
struct FactorDoc {
    input: Point,
    norm: i128,
    unit: Point,
    factors: Vec<FactorEntry>,
}

#[derive(Debug, Serialize)]
struct SearchDoc {
    spec: [u64; 3],
    count: usize,
    classes: Vec<Vertices>,
}

#[derive(Debug, Serialize)]
struct EnumerateDoc {
    k: u64,
    count: usize,
    points: Vec<Point>,
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// Parses `argv` (program name first) and runs the command.
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return CommandResult::ok(e.to_string());
        }
        Err(e) => {
            let rendered = e.to_string();
            let head = rendered.split("\n\n").next().unwrap_or_default();
            let line = head.split_whitespace().collect::<Vec<_>>().join(" ");
            return CommandResult::fail(EXIT_USAGE, String::new(), line);
        }
    };
    match cli.command {
        Command::Check { sides, json } => check(sides.spec(), json),
        Command::Embed { sides, json, svg } => embed(sides.spec(), json, svg),
        Command::Factor { x, y, json } => factor(x, y, json),
        Command::Classify { p } => classify(p),
        Command::Lift { p } => lift(p),
        Command::Search { sides, json } => search(sides.spec(), json),
        Command::Enumerate { k, json } => enumerate(k, json),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn check(spec: TriangleSpec, json: bool) -> CommandResult {
    let report = validate(&spec);
    let out = if json {
        to_json(&CheckDoc::from(&report))
    } else {
        let mut s = String::new();
        writeln!(s, "spec: {spec}").unwrap();
        writeln!(s, "realizable: {}", if report.realizable { "yes" } else { "no" }).unwrap();
        match report.n {
            Some(n) => writeln!(s, "n: {n}").unwrap(),
            None => writeln!(s, "n: none").unwrap(),
        }
        writeln!(s, "condition (i): {}", yes_no(report.cond_i)).unwrap();
        writeln!(s, "condition (ii): {}", yes_no(report.cond_ii)).unwrap();
        match report.witness_side {
            Some(side) => writeln!(s, "condition (iii): holds (witness side {side})").unwrap(),
            None => writeln!(s, "condition (iii): fails").unwrap(),
        }
        if !report.realizable {
            writeln!(s, "reason: {}", report.failure_reason).unwrap();
        }
        s
    };
    if report.realizable {
        CommandResult::ok(out)
    } else {
        CommandResult { exit_code: EXIT_NOT_REALIZABLE, stdout: out, stderr: String::new() }
    }
}

fn embed(spec: TriangleSpec, json: bool, svg_path: Option<PathBuf>) -> CommandResult {
    let emb = match embed_traced(&spec) {
        Ok(e) => e,
        Err(EmbedError::NotRealizable(report)) => {
            let stdout = if json { to_json(&CheckDoc::from(&*report)) } else { String::new() };
            return CommandResult::fail(
                EXIT_NOT_REALIZABLE,
                stdout,
                format!("not realizable: {}", report.failure_reason),
            );
        }
        Err(e) => return CommandResult::usage(e),
    };
    let t = emb.triangle;
    if let Some(path) = svg_path {
        if let Err(e) = std::fs::write(&path, svg::render(&t, &spec)) {
            return CommandResult::usage(format_args!("cannot write {}: {e}", path.display()));
        }
    }
    let out = if json {
        to_json(&EmbedDoc {
            spec: spec.sides(),
            n: emb.heron.n,
            vertices: Vertices::from(&t),
            sides_squared: [
                (t.b - t.c).norm() as u64,
                (t.a - t.c).norm() as u64,
                (t.a - t.b).norm() as u64,
            ],
        })
    } else {
        format!("A = {}\nB = {}\nC = {}\nn = {}\n", t.a, t.b, t.c, emb.heron.n)
    };
    CommandResult::ok(out)
}

fn factor(x: i64, y: i64, json: bool) -> CommandResult {
    let z = EisensteinInt::new(x.into(), y.into());
    let f = match factor_eisenstein(z) {
        Ok(f) => f,
        Err(e) => return CommandResult::usage(e),
    };
    let out = if json {
        to_json(&FactorDoc {
            input: point(z),
            norm: z.norm(),
            unit: point(f.unit.value()),
            factors: f
                .factors
                .iter()
                .map(|&(p, e)| FactorEntry { prime: point(p), exponent: e })
                .collect(),
        })
    } else {
        let factors = if f.factors.is_empty() {
            "none".to_string()
        } else {
            f.factors
                .iter()
                .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("norm: {}\nunit: {}\nfactors: {factors}\n", z.norm(), f.unit)
    };
    CommandResult::ok(out)
}

fn classify(p: u64) -> CommandResult {
    match classify_prime(p) {
        Ok(class) => CommandResult::ok(format!("{class}\n")),
        Err(e) => CommandResult::usage(e),
    }
}

fn lift(p: u64) -> CommandResult {
    match lift_split_prime(p) {
        Ok(pi) => CommandResult::ok(format!("{pi}\n")),
        Err(e @ FactorError::WrongResidue { .. }) => {
            CommandResult::fail(EXIT_NOT_REALIZABLE, String::new(), format!("error: {e}"))
        }
        Err(e) => CommandResult::usage(e),
    }
}

fn search(spec: TriangleSpec, json: bool) -> CommandResult {
    let classes = brute_force_embeddings(&spec);
    let out = if json {
        to_json(&SearchDoc {
            spec: spec.sides(),
            count: classes.len(),
            classes: classes.iter().map(|c| Vertices::from(&c.representative)).collect(),
        })
    } else {
        let mut s = format!("classes: {}\n", classes.len());
        for c in &classes {
            let t = c.representative;
            writeln!(s, "A = {} B = {} C = {}", t.a, t.b, t.c).unwrap();
        }
        s
    };
    if classes.is_empty() {
        CommandResult::fail(EXIT_NOT_REALIZABLE, out, format!("no embedding of {spec} exists"))
    } else {
        CommandResult::ok(out)
    }
}

fn enumerate(k: u64, json: bool) -> CommandResult {
    let points = enumerate_norm_points(k).expect("clap enforces k >= 1");
    let out = if json {
        to_json(&EnumerateDoc {
            k,
            count: points.len(),
            points: points.iter().copied().map(point).collect(),
        })
    } else {
        points.iter().map(|p| format!("{p}\n")).collect()
    };
    if points.is_empty() {
        CommandResult::fail(EXIT_NOT_REALIZABLE, out, format!("no lattice point has norm {k}"))
    } else {
        CommandResult::ok(out)
    }
}
