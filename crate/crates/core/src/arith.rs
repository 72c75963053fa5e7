// SPDX-License-Identifier: Apache-2.0

//! Rational-integer plumbing: deterministic primality, factorization,
//! modular square roots and integer square roots.
//!
//! Factorization trial-divides by the primes below [`TRIAL_BOUND`] and hands
//! any composite cofactor to Pollard rho (Brent variant). Primality uses
//! Miller-Rabin with the first twelve prime bases, which is deterministic
//! for every `u64`.

use once_cell::sync::Lazy;
use thiserror::Error;

pub const TRIAL_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("factorization of zero requested")]
    ZeroInput,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a quadratic residue modulo {1}")]
    NonResidue(u64, u64),
}

static SMALL_PRIMES: Lazy<Vec<u64>> = Lazy::new(|| sieve(TRIAL_BOUND));

fn sieve(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One Brent cycle-finding run with polynomial `x^2 + c`; `None` on failure.
fn brent(n: u64, c: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |x: u64| (mul_mod(x, x, n) + c) % n;
    let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
    let (mut x, mut ys);
    let mut g;
    loop {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        loop {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
            if k >= r || g != 1 {
                break;
            }
        }
        r *= 2;
        if g != 1 {
            break;
        }
        if r > 1 << 26 {
            return None;
        }
    }
    if g == n {
        // batch overshot; replay one step at a time
        loop {
            ys = f(ys);
            g = gcd(x.abs_diff(ys), n);
            if g != 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// A nontrivial factor of the odd composite `n`.
fn find_factor(n: u64) -> u64 {
    debug_assert!(n > 3 && !is_prime(n));
    if n % 2 == 0 {
        return 2;
    }
    let r = isqrt(n as u128) as u64;
    if r * r == n {
        return r;
    }
    (1..)
        .find_map(|c| brent(n, c))
        .expect("Pollard rho exhausts only for primes")
}

fn push_rho_factors(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = find_factor(n);
    push_rho_factors(d, out);
    push_rho_factors(n / d, out);
}

/// Prime factorization `[(p, e)]` with `p` ascending.
pub fn factor_integer(n: u64) -> Result<Vec<(u64, u32)>, ArithError> {
    if n == 0 {
        return Err(ArithError::ZeroInput);
    }
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut rest = n;
    let mut settled = rest == 1 || is_prime(rest);
    for &p in SMALL_PRIMES.iter() {
        if settled || p * p > rest {
            break;
        }
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            out.push((p, e));
            settled = rest == 1 || is_prime(rest);
        }
    }
    let mut big = Vec::new();
    push_rho_factors(rest, &mut big);
    big.sort_unstable();
    for p in big {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    Ok(out)
}

/// Floor of the square root.
pub fn isqrt(n: u128) -> u128 {
    n.isqrt()
}

pub fn exact_sqrt(n: u128) -> Option<u128> {
    let r = isqrt(n);
    (r * r == n).then_some(r)
}

/// Square root of `a` modulo the odd prime `p` (Tonelli-Shanks).
pub fn sqrt_mod(a: u64, p: u64) -> Result<u64, ArithError> {
    if !is_prime(p) {
        return Err(ArithError::NotPrime(p));
    }
    let a = a % p;
    if p == 2 || a == 0 {
        return Ok(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return Err(ArithError::NonResidue(a, p));
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    if s == 1 {
        return Ok(pow_mod(a, (p + 1) / 4, p));
    }
    let z = (2..p)
        .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
        .expect("a non-residue exists for odd p");
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Ok(r)
}
