// SPDX-License-Identifier: Apache-2.0

//! Realizability test and vertex construction for triangles on `Z[w]`.
//!
//! Given squared sides `(a2, b2, c2)` the construction runs
//!
//! 1. `3 n^2 = 2(a2 b2 + b2 c2 + c2 a2) - (a2^2 + b2^2 + c2^2)` and
//!    `delta = c2 - a2 - b2`, so that `delta^2 + 3 n^2 = 4 a2 b2`;
//! 2. `u = (delta + n) / 2`, `v = (delta - n) / 2`, giving
//!    `u^2 - uv + v^2 = a2 b2`;
//! 3. `z = (1 + w)(u + v w)`, which has norm `a2 b2`;
//! 4. split `z = -f g` with `N(f) = a2` by taking, for each prime above
//!    `a2`, a factor that divides `z`;
//! 5. with `f = m + n w` and `g = q + p w`, the triangle `C = 0`, `B = f`,
//!    `A = p + q w` has the requested sides. The coefficient swap between
//!    `g` and `A` is what makes `|A - B|^2 = c2` work out.

use std::fmt;

use thiserror::Error;

use crate::arith;
use crate::eisenstein::{EisensteinInt, RingError};
use crate::exec::Execution;
use crate::factorization::{
    self, condition_iii, factor_eisenstein, factor_integer, lift_split_prime, FactorError,
    PrimeClass, RAMIFIED_PRIME,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("squared side lengths must be positive")]
    NonPositiveSide,
    #[error("degenerate: squared sides violate the strict triangle inequality")]
    Degenerate,
    #[error("condition (i) fails: 16*area^2 = {0} is not 3*n^2 for an integer n")]
    NotEisensteinArea(i128),
    #[error("delta = {delta} and n = {n} differ in parity")]
    ParityMismatch { delta: i128, n: i128 },
    #[error("condition (iii) fails for {a2}: odd exponent at primes {offending:?}")]
    ConditionIIIViolated { a2: u64, offending: Vec<u64> },
    #[error("no factor of the required norm divides z")]
    NotDivisible,
    #[error("not realizable: {}", .0.failure_reason)]
    NotRealizable(Box<RealizabilityReport>),
    #[error("constructed triangle failed verification: {0}")]
    InternalVerificationFailed(String),
    #[error("vertices are collinear")]
    DegenerateTriangle,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Factor(#[from] FactorError),
}

pub type Result<T> = std::result::Result<T, EmbedError>;

/// Squared side lengths `a^2 = |BC|^2`, `b^2 = |AC|^2`, `c^2 = |AB|^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleSpec {
    pub a2: u64,
    pub b2: u64,
    pub c2: u64,
}

impl TriangleSpec {
    pub fn new(a2: u64, b2: u64, c2: u64) -> Result<Self> {
        if a2 == 0 || b2 == 0 || c2 == 0 {
            return Err(EmbedError::NonPositiveSide);
        }
        Ok(Self { a2, b2, c2 })
    }

    pub fn sides(&self) -> [u64; 3] {
        [self.a2, self.b2, self.c2]
    }

    pub fn side(&self, side: Side) -> u64 {
        self.sides()[side as usize]
    }

    /// Exchanges side `a` with `side`.
    fn relabel(self, side: Side) -> Self {
        let [a2, b2, c2] = self.sides();
        match side {
            Side::A => self,
            Side::B => Self { a2: b2, b2: a2, c2 },
            Side::C => Self { a2: c2, b2, c2: a2 },
        }
    }
}

impl fmt::Display for TriangleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a2, self.b2, self.c2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A = 0,
    B = 1,
    C = 2,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::A, Side::B, Side::C];

    pub fn as_str(self) -> &'static str {
        match self {
            Side::A => "a",
            Side::B => "b",
            Side::C => "c",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Intermediate values of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeronData {
    /// Area is `(sqrt(3)/4) n`.
    pub n: u64,
    pub delta: i128,
    pub u: i128,
    pub v: i128,
}

impl HeronData {
    pub fn from_spec(spec: &TriangleSpec) -> Result<Self> {
        let (n, delta) = heron_n(spec)?;
        let (u, v) = compute_uv(delta, n)?;
        Ok(Self { n, delta, u, v })
    }
}

fn ck(v: Option<i128>) -> Result<i128> {
    v.ok_or(EmbedError::Ring(RingError::Overflow))
}

/// Returns `(n, delta)` where the area is `(sqrt(3)/4) n` and
/// `delta = c2 - a2 - b2`.
pub fn heron_n(spec: &TriangleSpec) -> Result<(u64, i128)> {
    let [a, b, c] = spec.sides().map(i128::from);
    let cross = ck(ck(a.checked_mul(b))?
        .checked_add(ck(b.checked_mul(c))?)
        .and_then(|s| s.checked_add(c.checked_mul(a)?)))?;
    let squares = ck(ck(a.checked_mul(a))?
        .checked_add(ck(b.checked_mul(b))?)
        .and_then(|s| s.checked_add(c.checked_mul(c)?)))?;
    let p = ck(ck(cross.checked_mul(2))?.checked_sub(squares))?;
    if p <= 0 {
        return Err(EmbedError::Degenerate);
    }
    if p % 3 != 0 {
        return Err(EmbedError::NotEisensteinArea(p));
    }
    let n = arith::exact_sqrt((p / 3) as u128).ok_or(EmbedError::NotEisensteinArea(p))?;
    let n = u64::try_from(n).map_err(|_| EmbedError::Ring(RingError::Overflow))?;
    Ok((n, c - a - b))
}

pub fn compute_uv(delta: i128, n: u64) -> Result<(i128, i128)> {
    let n = i128::from(n);
    if (delta - n).rem_euclid(2) != 0 {
        return Err(EmbedError::ParityMismatch { delta, n });
    }
    Ok(((delta + n) / 2, (delta - n) / 2))
}

/// `(1 + w)(u + v w) = (u - v) + u w`.
pub fn build_z(u: i128, v: i128) -> Result<EisensteinInt> {
    Ok(EisensteinInt::new(ck(u.checked_sub(v))?, u))
}

/// A divisor `f` of `z` with `N(f) = a2`.
///
/// For each `p^e || a2`: inert `p` contributes `p^(e/2)`, `p = 3`
/// contributes `(2 + w)^e`, and split `p = pi pi*` contributes
/// `pi^i (pi*)^(e - i)` with `i = min(e, v_pi(z))`.
pub fn select_f(z: EisensteinInt, a2: u64) -> Result<EisensteinInt> {
    let report = condition_iii(a2)?;
    if !report.holds {
        return Err(EmbedError::ConditionIIIViolated {
            a2,
            offending: report.offending_primes,
        });
    }
    if z.is_zero() || z.checked_norm()? % i128::from(a2) != 0 {
        return Err(EmbedError::NotDivisible);
    }
    let zf = factor_eisenstein(z)?;
    let mut f = EisensteinInt::ONE;
    for (p, e) in factor_integer(a2).map_err(FactorError::from)? {
        let part = match factorization::classify_prime(p)? {
            PrimeClass::Inert => EisensteinInt::rational(p as i128).checked_pow(e / 2)?,
            PrimeClass::Ramified => RAMIFIED_PRIME.checked_pow(e)?,
            PrimeClass::Split => {
                let pi = lift_split_prime(p)?;
                let pi_bar = pi.conj().canonical()?;
                let i = e.min(zf.multiplicity(pi));
                if e - i > zf.multiplicity(pi_bar) {
                    return Err(EmbedError::NotDivisible);
                }
                pi.checked_pow(i)?.checked_mul(pi_bar.checked_pow(e - i)?)?
            }
        };
        f = f.checked_mul(part)?;
    }
    if !f.divides(z)? {
        return Err(EmbedError::NotDivisible);
    }
    Ok(f)
}

/// Vertices `A`, `B`, `C` in the `(1, w)` basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeTriangle {
    pub a: EisensteinInt,
    pub b: EisensteinInt,
    pub c: EisensteinInt,
}

impl LatticeTriangle {
    pub fn new(a: EisensteinInt, b: EisensteinInt, c: EisensteinInt) -> Self {
        Self { a, b, c }
    }

    /// Same triangle moved so that `C` is the origin.
    pub fn translated_to_origin(&self) -> std::result::Result<Self, RingError> {
        Ok(Self {
            a: self.a.checked_sub(self.c)?,
            b: self.b.checked_sub(self.c)?,
            c: EisensteinInt::ZERO,
        })
    }

    /// `(B - C) x (A - C)` in lattice coordinates; the area is
    /// `(sqrt(3)/4) |det|`.
    pub fn determinant(&self) -> std::result::Result<i128, RingError> {
        let t = self.translated_to_origin()?;
        let bx_ay = t.b.x.checked_mul(t.a.y).ok_or(RingError::Overflow)?;
        let by_ax = t.b.y.checked_mul(t.a.x).ok_or(RingError::Overflow)?;
        bx_ay.checked_sub(by_ax).ok_or(RingError::Overflow)
    }
}

/// `C = 0`, `B = f`, and `A = p + q w` for `g = q + p w`.
pub fn assemble_triangle(f: EisensteinInt, g: EisensteinInt) -> LatticeTriangle {
    LatticeTriangle::new(EisensteinInt::new(g.y, g.x), f, EisensteinInt::ZERO)
}

/// `(m - p)^2 - (m - p)(n - q) + (n - q)^2` for `f = m + n w`, `g = q + p w`,
/// which equals `c2` for the factors produced by the construction.
pub fn recombined_c2(f: EisensteinInt, g: EisensteinInt) -> Result<i128> {
    let (m, n, q, p) = (f.x, f.y, g.x, g.y);
    Ok(EisensteinInt::new(ck(m.checked_sub(p))?, ck(n.checked_sub(q))?).checked_norm()?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityReport {
    pub spec: TriangleSpec,
    pub realizable: bool,
    pub n: Option<u64>,
    pub degenerate: bool,
    pub cond_i: bool,
    /// Always true: squared sides are integers by construction.
    pub cond_ii: bool,
    pub cond_iii: bool,
    pub witness_side: Option<Side>,
    /// Primes `p = 2 (mod 3)` with odd exponent in some squared side.
    pub offending_primes: Vec<u64>,
    /// Empty when realizable.
    pub failure_reason: String,
}

pub fn validate(spec: &TriangleSpec) -> RealizabilityReport {
    let mut reasons = Vec::new();
    let (n, degenerate) = match heron_n(spec) {
        Ok((n, _)) => (Some(n), false),
        Err(e @ EmbedError::Degenerate) => {
            reasons.push(e.to_string());
            (None, true)
        }
        Err(e) => {
            reasons.push(e.to_string());
            (None, false)
        }
    };
    let mut witness_side = None;
    let mut offending_primes = Vec::new();
    for side in Side::ALL {
        match condition_iii(spec.side(side)) {
            Ok(r) if r.holds => {
                witness_side.get_or_insert(side);
            }
            Ok(r) => offending_primes.extend(r.offending_primes),
            Err(e) => reasons.push(e.to_string()),
        }
    }
    offending_primes.sort_unstable();
    offending_primes.dedup();
    let cond_iii = witness_side.is_some();
    if !cond_iii {
        reasons.push(format!(
            "condition (iii) fails: every squared side has odd exponent at a prime p = 2 (mod 3) (offending primes: {})",
            offending_primes
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    let cond_i = n.is_some();
    RealizabilityReport {
        spec: *spec,
        realizable: cond_i && cond_iii && !degenerate,
        n,
        degenerate,
        cond_i,
        cond_ii: true,
        cond_iii,
        witness_side: if cond_iii { witness_side } else { None },
        offending_primes,
        failure_reason: reasons.join("; "),
    }
}

/// A realized triangle together with the intermediate values that produced it.
///
/// `pipeline_spec`, `heron`, `z`, `f`, `g` refer to the relabeled problem
/// in which `witness_side` plays the role of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub spec: TriangleSpec,
    pub triangle: LatticeTriangle,
    pub witness_side: Side,
    pub pipeline_spec: TriangleSpec,
    pub heron: HeronData,
    pub z: EisensteinInt,
    pub f: EisensteinInt,
    pub g: EisensteinInt,
}

pub fn embed(spec: &TriangleSpec) -> Result<LatticeTriangle> {
    embed_traced(spec).map(|e| e.triangle)
}

pub fn embed_traced(spec: &TriangleSpec) -> Result<Embedding> {
    let report = validate(spec);
    if !report.realizable {
        return Err(EmbedError::NotRealizable(Box::new(report)));
    }
    let witness_side = report.witness_side.expect("realizable implies a witness");
    embed_with_witness(spec, witness_side)
}

/// Runs the construction with `witness_side` in the role of `a`.
///
/// `spec` must satisfy conditions (i) and (ii), and `witness_side` must pass
/// condition (iii).
pub fn embed_with_witness(spec: &TriangleSpec, witness_side: Side) -> Result<Embedding> {
    let pipeline_spec = spec.relabel(witness_side);
    let heron = HeronData::from_spec(&pipeline_spec)?;
    let z = build_z(heron.u, heron.v)?;
    let a2b2 = i128::from(pipeline_spec.a2) * i128::from(pipeline_spec.b2);
    if z.checked_norm()? != a2b2 {
        return Err(EmbedError::InternalVerificationFailed(format!(
            "N(z) = {} but a2 b2 = {a2b2}",
            z.norm()
        )));
    }
    let f = select_f(z, pipeline_spec.a2)?;
    let g = z
        .checked_neg()?
        .div_exact(f)?
        .ok_or(EmbedError::NotDivisible)?;
    let c2 = recombined_c2(f, g)?;
    if c2 != i128::from(pipeline_spec.c2) {
        return Err(EmbedError::InternalVerificationFailed(format!(
            "recombined c2 = {c2}, expected {}",
            pipeline_spec.c2
        )));
    }
    let t = assemble_triangle(f, g);
    // swapping sides a and s swaps the opposite vertices A and S
    let triangle = match witness_side {
        Side::A => t,
        Side::B => LatticeTriangle::new(t.b, t.a, t.c),
        Side::C => LatticeTriangle::new(t.c, t.b, t.a),
    }
    .translated_to_origin()?;
    if !verify_embedding(&triangle, spec) {
        return Err(EmbedError::InternalVerificationFailed(format!(
            "{triangle:?} does not realize {spec}"
        )));
    }
    Ok(Embedding {
        spec: *spec,
        triangle,
        witness_side,
        pipeline_spec,
        heron,
        z,
        f,
        g,
    })
}

/// Embeds every spec, preserving input order.
pub fn embed_all(specs: &[TriangleSpec], exec: Execution) -> Vec<Result<Embedding>> {
    exec.map(specs, embed_traced)
}

/// Pure metric check of `tri` against `spec`, including `|det| = n`.
pub fn verify_embedding(tri: &LatticeTriangle, spec: &TriangleSpec) -> bool {
    let Ok((n, _)) = heron_n(spec) else {
        return false;
    };
    let Ok(props) = triangle_properties(tri.a, tri.b, tri.c) else {
        return false;
    };
    props.spec == *spec && props.n == n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleProperties {
    pub spec: TriangleSpec,
    pub n: u64,
}

/// Squared sides and area integer `n` of a lattice triangle.
pub fn triangle_properties(
    a: EisensteinInt,
    b: EisensteinInt,
    c: EisensteinInt,
) -> Result<TriangleProperties> {
    let tri = LatticeTriangle::new(a, b, c);
    let det = tri.determinant()?;
    if det == 0 {
        return Err(EmbedError::DegenerateTriangle);
    }
    let norm = |z: EisensteinInt| -> Result<u64> {
        u64::try_from(z.checked_norm()?).map_err(|_| EmbedError::Ring(RingError::Overflow))
    };
    let spec = TriangleSpec {
        a2: norm(b.checked_sub(c)?)?,
        b2: norm(a.checked_sub(c)?)?,
        c2: norm(a.checked_sub(b)?)?,
    };
    let n = u64::try_from(det.unsigned_abs()).map_err(|_| EmbedError::Ring(RingError::Overflow))?;
    Ok(TriangleProperties { spec, n })
}
