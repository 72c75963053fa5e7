// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use eisenstein_heron::embedding::{
    embed_traced, heron_n, recombined_c2, triangle_properties, validate, verify_embedding,
    Embedding, LatticeTriangle, TriangleSpec,
};
use eisenstein_heron::exec::Execution;
use eisenstein_heron::factorization::{
    condition_iii, factor_eisenstein, is_eisenstein_prime, lift_split_prime,
};
use eisenstein_heron::oracle::{
    box_triangle_classes, brute_force_embeddings, canonical_triangle, classes_by_spec, NormTable,
};
use eisenstein_heron::{arith, EisensteinInt};
use eislat::EmbedDoc;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_e15e;

fn e(x: i128, y: i128) -> EisensteinInt {
    EisensteinInt::new(x, y)
}

fn spec(a2: u64, b2: u64, c2: u64) -> TriangleSpec {
    TriangleSpec::new(a2, b2, c2).unwrap()
}

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self { passed, detail: detail.into() }
    }
}

/// Tally of the identity `(m-p)^2 - (m-p)(n-q) + (n-q)^2 = c2` over every
/// pipeline run of criteria 1-4, checked before the metric verification.
#[derive(Default)]
struct RecombinationTally {
    runs: usize,
    failures: Vec<String>,
}

impl RecombinationTally {
    fn record(&mut self, emb: &Embedding) {
        self.runs += 1;
        let c2 = recombined_c2(emb.f, emb.g).unwrap();
        if c2 != i128::from(emb.pipeline_spec.c2) {
            self.failures.push(format!("{}: got {c2}", emb.spec));
        }
    }

    fn merge(&mut self, other: RecombinationTally) {
        self.runs += other.runs;
        self.failures.extend(other.failures);
    }
}

/// Embeds and checks one spec; returns an error description on failure.
fn embed_and_check(s: &TriangleSpec, tally: &mut RecombinationTally) -> Result<Embedding, String> {
    let report = validate(s);
    if !report.realizable {
        return Err(format!("{s}: validate says {}", report.failure_reason));
    }
    let emb = embed_traced(s).map_err(|err| format!("{s}: {err}"))?;
    tally.record(&emb);
    if !verify_embedding(&emb.triangle, s) {
        return Err(format!("{s}: verification failed"));
    }
    Ok(emb)
}

fn criterion_1(tally: &mut RecombinationTally) -> Outcome {
    let start = Instant::now();
    let classes = box_triangle_classes(8, Execution::default());
    let specs: Vec<TriangleSpec> = classes_by_spec(&classes).into_keys().collect();
    let results = Execution::default().map(&specs, |s| {
        let mut local = RecombinationTally::default();
        let r = embed_and_check(s, &mut local).map(|_| ());
        (r, local)
    });
    let mut failures = Vec::new();
    for (r, local) in results {
        tally.merge(local);
        if let Err(msg) = r {
            failures.push(msg);
        }
    }
    let elapsed = start.elapsed();
    let within = elapsed < Duration::from_secs(120);
    Outcome::new(
        failures.is_empty() && within,
        format!(
            "{} classes, {} specs, {} failures{}, {:.1}s (limit 120s)",
            classes.len(),
            specs.len(),
            failures.len(),
            failures.first().map(|f| format!(" (first: {f})")).unwrap_or_default(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2(tally: &mut RecombinationTally) -> Outcome {
    const MAX: u64 = 200;
    let start = Instant::now();
    let table = NormTable::new(MAX);
    let a_values: Vec<u64> = (1..=MAX).collect();
    let per_a = Execution::default().map(&a_values, |&a2| {
        let mut local = RecombinationTally::default();
        let (mut unrealizable, mut realizable) = (0usize, 0usize);
        let mut disagreements = Vec::new();
        for b2 in 1..=MAX {
            for c2 in 1..=MAX {
                let s = spec(a2, b2, c2);
                let found = !table.brute_force_embeddings(&s).is_empty();
                if validate(&s).realizable {
                    realizable += 1;
                    if !found {
                        disagreements.push(format!("{s}: realizable but oracle empty"));
                    }
                    if let Err(msg) = embed_and_check(&s, &mut local) {
                        disagreements.push(msg);
                    }
                } else {
                    unrealizable += 1;
                    if found {
                        disagreements.push(format!("{s}: not realizable but oracle found one"));
                    }
                }
            }
        }
        (unrealizable, realizable, disagreements, local)
    });
    let (mut unrealizable, mut realizable, mut disagreements) = (0, 0, Vec::new());
    for (u, r, d, local) in per_a {
        unrealizable += u;
        realizable += r;
        disagreements.extend(d);
        tally.merge(local);
    }
    let elapsed = start.elapsed();
    let within = elapsed < Duration::from_secs(300);
    Outcome::new(
        disagreements.is_empty() && within,
        format!(
            "{unrealizable} unrealizable specs (+{realizable} realizable) up to {MAX}, {} disagreements{}, {:.1}s (limit 300s)",
            disagreements.len(),
            disagreements.first().map(|f| format!(" (first: {f})")).unwrap_or_default(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_3(tally: &mut RecombinationTally) -> Outcome {
    let expected = [
        (spec(1, 1, 1), LatticeTriangle::new(e(0, -1), e(1, 0), e(0, 0))),
        (spec(9, 3, 12), LatticeTriangle::new(e(-2, -1), e(0, -3), e(0, 0))),
        (spec(4, 4, 4), LatticeTriangle::new(e(0, -2), e(2, 0), e(0, 0))),
    ];
    let mut problems = Vec::new();
    for (s, reference) in expected {
        match embed_and_check(&s, tally) {
            Ok(emb) => {
                let got = canonical_triangle(&emb.triangle).unwrap();
                if got != canonical_triangle(&reference).unwrap() {
                    problems.push(format!("{s}: {:?} not equivalent to reference", emb.triangle));
                }
                if !brute_force_embeddings(&s).contains(&got) {
                    problems.push(format!("{s}: not among oracle classes"));
                }
            }
            Err(msg) => problems.push(msg),
        }
    }
    let r = validate(&spec(2, 2, 2));
    if r.realizable || !r.cond_i || r.cond_iii || !r.failure_reason.contains("condition (iii)") {
        problems.push(format!("(2, 2, 2): wrong rejection: {r:?}"));
    }
    if embed_traced(&spec(2, 2, 2)).is_ok() || !brute_force_embeddings(&spec(2, 2, 2)).is_empty() {
        problems.push("(2, 2, 2) embedded".into());
    }
    let r = validate(&spec(1, 1, 2));
    if r.realizable || r.cond_i || !r.failure_reason.contains("condition (i)") {
        problems.push(format!("(1, 1, 2): wrong rejection: {r:?}"));
    }
    if embed_traced(&spec(1, 1, 2)).is_ok() || !brute_force_embeddings(&spec(1, 1, 2)).is_empty() {
        problems.push("(1, 1, 2) embedded".into());
    }
    Outcome::new(
        problems.is_empty(),
        if problems.is_empty() {
            "3 embeddings match, 2 rejections with the right reasons".to_string()
        } else {
            problems.join("; ")
        },
    )
}

fn criterion_4(tally: &mut RecombinationTally) -> Outcome {
    let mut problems = Vec::new();
    for k in 1..=100u64 {
        let s = spec(k * k, k * k, k * k);
        match heron_n(&s) {
            Ok((n, _)) if n == k * k => {}
            other => problems.push(format!("k = {k}: heron gives {other:?}")),
        }
        if let Err(msg) = embed_and_check(&s, tally) {
            problems.push(msg);
        }
    }
    Outcome::new(
        problems.is_empty(),
        format!("k = 1..=100, {} failures{}", problems.len(), problems.first().map(|p| format!(" (first: {p})")).unwrap_or_default()),
    )
}

fn criterion_5() -> Outcome {
    const LIMIT: i128 = 1_000_000_000_000;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut inputs = Vec::with_capacity(10_000);
    while inputs.len() < 10_000 {
        // |x|, |y| <= 2 sqrt(LIMIT / 3) covers every point of norm <= LIMIT
        let z = e(rng.gen_range(-1_154_701..=1_154_701), rng.gen_range(-1_154_701..=1_154_701));
        if !z.is_zero() && z.norm() <= LIMIT {
            inputs.push(z);
        }
    }
    let failures: Vec<String> = Execution::default()
        .map(&inputs, |&z| {
            let f = match factor_eisenstein(z) {
                Ok(f) => f,
                Err(err) => return Some(format!("{z}: {err}")),
            };
            if f.product().ok() != Some(z) {
                return Some(format!("{z}: product mismatch"));
            }
            for &(p, _) in &f.factors {
                if !p.in_canonical_sector() || !is_eisenstein_prime(p).unwrap_or(false) {
                    return Some(format!("{z}: factor {p} not a canonical prime"));
                }
            }
            None
        })
        .into_iter()
        .flatten()
        .collect();
    Outcome::new(
        failures.is_empty(),
        format!("10000 inputs with norm <= 1e12, {} failures", failures.len()),
    )
}

fn criterion_6() -> Outcome {
    let primes: Vec<u64> = (7..100_000).filter(|&p| p % 3 == 1 && arith::is_prime(p)).collect();
    let failures: Vec<String> = Execution::default()
        .map(&primes, |&p| {
            let pi = match lift_split_prime(p) {
                Ok(pi) => pi,
                Err(err) => return Some(format!("{p}: {err}")),
            };
            if pi.norm() != p as i128 || !pi.in_canonical_sector() {
                return Some(format!("{p}: lift {pi} wrong"));
            }
            if p < 10_000 {
                // smallest canonical-sector solution by exhaustive search
                let k = p as i128;
                let oracle = (1..)
                    .take_while(|&x: &i128| 3 * x * x <= 4 * k)
                    .flat_map(|x| (0..x).map(move |y| e(x, y)))
                    .find(|z| z.norm() == k);
                if oracle != Some(pi) {
                    return Some(format!("{p}: lift {pi}, exhaustive search {oracle:?}"));
                }
            }
            None
        })
        .into_iter()
        .flatten()
        .collect();
    Outcome::new(
        failures.is_empty(),
        format!(
            "{} primes p = 1 mod 3 below 1e5, {} failures",
            primes.len(),
            failures.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut triangles = Vec::with_capacity(100_000);
    while triangles.len() < 100_000 {
        let mut pt = || e(rng.gen_range(-50..=50), rng.gen_range(-50..=50));
        let t = LatticeTriangle::new(pt(), pt(), pt());
        if t.determinant().unwrap() != 0 {
            triangles.push(t);
        }
    }
    let failures: Vec<String> = Execution::default()
        .map(&triangles, |t| {
            let props = match triangle_properties(t.a, t.b, t.c) {
                Ok(p) => p,
                Err(err) => return Some(format!("{t:?}: {err}")),
            };
            let [a2, b2, c2] = props.spec.sides().map(i128::from);
            let n = i128::from(props.n);
            let sixteen_area_sq = 2 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2);
            if sixteen_area_sq != 3 * n * n {
                return Some(format!("{t:?}: 3n^2 = {} but Heron gives {sixteen_area_sq}", 3 * n * n));
            }
            for side in props.spec.sides() {
                if !condition_iii(side).map(|r| r.holds).unwrap_or(false) {
                    return Some(format!("{t:?}: side {side} fails condition (iii)"));
                }
            }
            None
        })
        .into_iter()
        .flatten()
        .collect();
    Outcome::new(
        failures.is_empty(),
        format!("100000 random triangles in [-50, 50]^2, {} failures", failures.len()),
    )
}

fn criterion_8(tally: &RecombinationTally) -> Outcome {
    Outcome::new(
        tally.runs > 0 && tally.failures.is_empty(),
        format!(
            "{} pipeline runs, {} identity failures{}",
            tally.runs,
            tally.failures.len(),
            tally.failures.first().map(|f| format!(" (first: {f})")).unwrap_or_default()
        ),
    )
}

fn criterion_9() -> Outcome {
    const CORPUS: &[&[&str]] = &[
        &["embed", "1", "1", "1", "--json"],
        &["embed", "9", "3", "12", "--json"],
        &["embed", "4", "4", "4", "--json"],
        &["embed", "7", "13", "3", "--json"],
        &["embed", "10000", "10000", "10000", "--json"],
        &["embed", "2", "2", "2", "--json"],
        &["check", "9", "3", "12", "--json"],
        &["factor", "6", "3", "--json"],
        &["factor", "-1234", "987", "--json"],
        &["classify", "2"],
        &["lift", "31"],
        &["search", "9", "3", "12", "--json"],
        &["enumerate", "49", "--json"],
    ];
    let bin = env!("CARGO_BIN_EXE_eislat");
    let run = |args: &[&str]| Command::new(bin).args(args).output().expect("binary runs");
    let mut problems = Vec::new();
    let mut verified = 0;
    for args in CORPUS {
        let (first, second) = (run(args), run(args));
        if first.stdout != second.stdout
            || first.stderr != second.stderr
            || first.status.code() != second.status.code()
        {
            problems.push(format!("{args:?}: output differs between runs"));
        }
        if args[0] == "embed" && first.status.code() == Some(0) {
            match serde_json::from_slice::<EmbedDoc>(&first.stdout) {
                Ok(doc) => {
                    let s = spec(doc.spec[0], doc.spec[1], doc.spec[2]);
                    if verify_embedding(&doc.vertices.triangle(), &s) && doc.sides_squared == doc.spec {
                        verified += 1;
                    } else {
                        problems.push(format!("{args:?}: re-parsed output fails verification"));
                    }
                }
                Err(err) => problems.push(format!("{args:?}: {err}")),
            }
        }
    }
    Outcome::new(
        problems.is_empty() && verified == 5,
        format!(
            "{} invocations byte-identical across two runs, {verified} embed outputs re-verified{}",
            CORPUS.len(),
            if problems.is_empty() { String::new() } else { format!("; {}", problems.join("; ")) }
        ),
    )
}

fn main() -> ExitCode {
    let mut tally = RecombinationTally::default();
    let outcomes = [
        ("1 exhaustive theorem check", criterion_1(&mut tally)),
        ("2 converse check", criterion_2(&mut tally)),
        ("3 worked instances", criterion_3(&mut tally)),
        ("4 equilateral family", criterion_4(&mut tally)),
        ("5 factorization round-trip", criterion_5()),
        ("6 split-prime lifting", criterion_6()),
        ("7 necessity / corollary", criterion_7()),
        ("8 recombined c2 identity", criterion_8(&tally)),
        ("9 CLI golden stability", criterion_9()),
    ];
    let mut all = true;
    for (name, o) in &outcomes {
        all &= o.passed;
        println!("[{}] {name}: {}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
