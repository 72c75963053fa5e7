// SPDX-License-Identifier: Apache-2.0

//! Factorization in `Z[w]` and the quadratic-form facts built on it.
//!
//! A rational prime `p` is inert in `Z[w]` when `p = 2 (mod 3)`, ramifies
//! as `3 = -w^2 (1 - w)^2`, and splits as `p = pi * pi*` when
//! `p = 1 (mod 3)`.

use std::fmt;

use thiserror::Error;

use crate::arith::{self, ArithError};
use crate::eisenstein::{EisensteinInt, RingError, UnitValue};

/// Canonical associate of `1 - w`.
pub const RAMIFIED_PRIME: EisensteinInt = EisensteinInt::new(2, 1);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{p} is not 1 mod 3 (residue {residue})")]
    WrongResidue { p: u64, residue: u64 },
    #[error("norm {0} exceeds the supported factorization range")]
    NormTooLarge(i128),
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl From<ArithError> for FactorError {
    fn from(e: ArithError) -> Self {
        match e {
            ArithError::ZeroInput => FactorError::ZeroInput,
            ArithError::NotPrime(p) => FactorError::NotPrime(p),
            ArithError::NonResidue(_, p) => FactorError::NotPrime(p),
        }
    }
}

pub type Result<T> = std::result::Result<T, FactorError>;

pub use crate::arith::factor_integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimeClass {
    Inert,
    Ramified,
    Split,
}

impl PrimeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PrimeClass::Inert => "inert",
            PrimeClass::Ramified => "ramified",
            PrimeClass::Split => "split",
        }
    }
}

impl fmt::Display for PrimeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify_prime(p: u64) -> Result<PrimeClass> {
    if !arith::is_prime(p) {
        return Err(FactorError::NotPrime(p));
    }
    Ok(match p % 3 {
        0 => PrimeClass::Ramified,
        1 => PrimeClass::Split,
        _ => PrimeClass::Inert,
    })
}

/// The canonical `pi` with `N(pi) = p` for a prime `p = 1 (mod 3)`.
///
/// Of the two canonical primes above `p` (`pi` and the canonical associate
/// of `pi*`) the lexicographically smaller `(x, y)` is returned.
///
/// Takes `s^2 = -3 (mod p)`, sets `r = (s - 1) / 2` so that
/// `r^2 + r + 1 = 0 (mod p)`, and returns `gcd(p, r - w)`.
pub fn lift_split_prime(p: u64) -> Result<EisensteinInt> {
    if !arith::is_prime(p) {
        return Err(FactorError::NotPrime(p));
    }
    if p % 3 != 1 {
        return Err(FactorError::WrongResidue { p, residue: p % 3 });
    }
    let s = arith::sqrt_mod(p - 3, p)?;
    // p is odd, so halving is multiplication by (p + 1) / 2
    let r = arith::mul_mod((s + p - 1) % p, p.div_ceil(2), p);
    let pi = EisensteinInt::rational(p as i128)
        .gcd(EisensteinInt::new(r as i128, -1))?;
    debug_assert_eq!(pi.norm(), p as i128);
    // pi and its conjugate both have a canonical associate; return the smaller
    Ok(pi.min(pi.conj().canonical()?))
}

/// `unit * prod(prime^exponent)`, primes canonical and sorted by `(norm, x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinFactorization {
    pub unit: UnitValue,
    pub factors: Vec<(EisensteinInt, u32)>,
}

impl EisensteinFactorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> std::result::Result<EisensteinInt, RingError> {
        self.factors
            .iter()
            .try_fold(self.unit.value(), |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
    }

    /// Multiplicity of the canonical prime `p` (zero when absent).
    pub fn multiplicity(&self, p: EisensteinInt) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| *q == p)
            .map_or(0, |&(_, e)| e)
    }
}

fn norm_u64(z: EisensteinInt) -> Result<u64> {
    let n = z.checked_norm()?;
    u64::try_from(n).map_err(|_| FactorError::NormTooLarge(n))
}

/// Divides `rest` by `p` as many times as it goes, at most `limit` times.
fn strip(rest: &mut EisensteinInt, p: EisensteinInt, limit: u32) -> Result<u32> {
    let mut count = 0;
    while count < limit {
        match rest.div_exact(p)? {
            Some(q) => {
                *rest = q;
                count += 1;
            }
            None => break,
        }
    }
    Ok(count)
}

pub fn factor_eisenstein(z: EisensteinInt) -> Result<EisensteinFactorization> {
    if z.is_zero() {
        return Err(FactorError::ZeroInput);
    }
    let mut rest = z;
    let mut factors = Vec::new();
    for (p, e) in factor_integer(norm_u64(z)?)? {
        match classify_prime(p)? {
            PrimeClass::Inert => {
                let prime = EisensteinInt::rational(p as i128);
                let k = strip(&mut rest, prime, e / 2)?;
                debug_assert_eq!(2 * k, e);
                factors.push((prime, k));
            }
            PrimeClass::Ramified => {
                let k = strip(&mut rest, RAMIFIED_PRIME, e)?;
                debug_assert_eq!(k, e);
                factors.push((RAMIFIED_PRIME, k));
            }
            PrimeClass::Split => {
                let pi = lift_split_prime(p)?;
                let pi_bar = pi.conj().canonical()?;
                let alpha = strip(&mut rest, pi, e)?;
                let beta = strip(&mut rest, pi_bar, e - alpha)?;
                debug_assert_eq!(alpha + beta, e);
                factors.extend([(pi, alpha), (pi_bar, beta)].into_iter().filter(|&(_, k)| k > 0));
            }
        }
    }
    factors.sort_by_key(|&(q, _)| (q.norm(), q.x, q.y));
    let unit = UnitValue::new(rest).expect("fully divided quotient is a unit");
    Ok(EisensteinFactorization { unit, factors })
}

pub fn is_eisenstein_prime(z: EisensteinInt) -> Result<bool> {
    if z.is_zero() {
        return Err(FactorError::ZeroInput);
    }
    let n = norm_u64(z)?;
    if arith::is_prime(n) {
        return Ok(true);
    }
    Ok(match arith::exact_sqrt(n as u128) {
        Some(p) => {
            let p = p as u64;
            arith::is_prime(p) && p % 3 == 2 && z.canonical()? == EisensteinInt::rational(p as i128)
        }
        None => false,
    })
}

/// Outcome of checking whether `N = r^2 t` (t squarefree) has no prime
/// `p = 2 (mod 3)` dividing `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionIIIReport {
    pub holds: bool,
    pub r: u64,
    pub t: u64,
    pub offending_primes: Vec<u64>,
}

pub fn condition_iii(n: u64) -> Result<ConditionIIIReport> {
    let (mut r, mut t) = (1u64, 1u64);
    let mut offending_primes = Vec::new();
    for (p, e) in factor_integer(n)? {
        r *= p.pow(e / 2);
        if e % 2 == 1 {
            t *= p;
            if p % 3 == 2 {
                offending_primes.push(p);
            }
        }
    }
    Ok(ConditionIIIReport {
        holds: offending_primes.is_empty(),
        r,
        t,
        offending_primes,
    })
}

/// `(m, n)` with `3m^2 + n^2 = x^2 - xy + y^2`.
///
/// Branches, first applicable wins: `x` even gives `(x/2, x/2 - y)`, `y`
/// even gives `(y/2, y/2 - x)`, otherwise `((x - y)/2, (x + y)/2)`.
pub fn form_to_3m2n2(x: i128, y: i128) -> (i128, i128) {
    if x % 2 == 0 {
        (x / 2, x / 2 - y)
    } else if y % 2 == 0 {
        (y / 2, y / 2 - x)
    } else {
        ((x - y) / 2, (x + y) / 2)
    }
}

/// `(2m, m - n)`, a point of norm `3m^2 + n^2`.
pub fn form_from_3m2n2(m: i128, n: i128) -> (i128, i128) {
    (2 * m, m - n)
}
