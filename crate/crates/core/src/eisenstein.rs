// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic in the Eisenstein integers `Z[w]`, `w = e^(2*pi*i/3)`.
//!
//! Elements are stored in the `(1, w)` basis. Multiplication reduces with
//! `w^2 = -1 - w`, so
//!
//! ```text
//! (x1 + y1 w)(x2 + y2 w) = (x1 x2 - y1 y2) + (x1 y2 + x2 y1 - y1 y2) w
//! ```
//!
//! Coordinates are `i128`. Every `checked_*` method reports overflow as
//! [`RingError::Overflow`]; the operator impls panic on overflow instead of
//! wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("arithmetic overflow in Z[w]")]
    Overflow,
    #[error("division by zero in Z[w]")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,
    #[error("operation requires a nonzero Eisenstein integer")]
    ZeroInput,
}

pub type Result<T> = std::result::Result<T, RingError>;

fn ck(v: Option<i128>) -> Result<i128> {
    v.ok_or(RingError::Overflow)
}

/// An Eisenstein integer `x + y w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EisensteinInt {
    /// Coefficient of 1.
    pub x: i128,
    /// Coefficient of w.
    pub y: i128,
}

impl EisensteinInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const OMEGA: Self = Self::new(0, 1);

    pub const fn new(x: i128, y: i128) -> Self {
        Self { x, y }
    }

    /// Embeds a rational integer.
    pub const fn rational(x: i128) -> Self {
        Self { x, y: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Ok(Self::new(ck(self.x.checked_add(rhs.x))?, ck(self.y.checked_add(rhs.y))?))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Ok(Self::new(ck(self.x.checked_sub(rhs.x))?, ck(self.y.checked_sub(rhs.y))?))
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(Self::new(ck(self.x.checked_neg())?, ck(self.y.checked_neg())?))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let xx = ck(self.x.checked_mul(rhs.x))?;
        let yy = ck(self.y.checked_mul(rhs.y))?;
        let xy = ck(self.x.checked_mul(rhs.y))?;
        let yx = ck(self.y.checked_mul(rhs.x))?;
        let re = ck(xx.checked_sub(yy))?;
        let im = ck(ck(xy.checked_add(yx))?.checked_sub(yy))?;
        Ok(Self::new(re, im))
    }

    pub fn checked_pow(self, mut exp: u32) -> Result<Self> {
        let mut base = self;
        let mut acc = Self::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplies by a rational integer.
    pub fn checked_scale(self, k: i128) -> Result<Self> {
        Ok(Self::new(ck(self.x.checked_mul(k))?, ck(self.y.checked_mul(k))?))
    }

    /// Complex conjugate: `(x + y w)* = (x - y) - y w`.
    pub fn conj(self) -> Self {
        self.checked_conj().expect("overflow in Eisenstein conjugate")
    }

    pub fn checked_conj(self) -> Result<Self> {
        Ok(Self::new(ck(self.x.checked_sub(self.y))?, ck(self.y.checked_neg())?))
    }

    /// `N(x + y w) = x^2 - xy + y^2`.
    pub fn checked_norm(self) -> Result<i128> {
        let xx = ck(self.x.checked_mul(self.x))?;
        let yy = ck(self.y.checked_mul(self.y))?;
        let xy = ck(self.x.checked_mul(self.y))?;
        ck(ck(xx.checked_sub(xy))?.checked_add(yy))
    }

    /// Panics on overflow; see [`checked_norm`](Self::checked_norm).
    pub fn norm(self) -> i128 {
        self.checked_norm().expect("overflow in Eisenstein norm")
    }

    pub fn is_unit(self) -> bool {
        matches!(self.checked_norm(), Ok(1))
    }

    /// Euclidean division `self = q * rhs + r` with `N(r) < N(rhs)`.
    ///
    /// `q` rounds both coordinates of `self * rhs* / N(rhs)` to the nearest
    /// integer, ties toward zero.
    pub fn divmod(self, rhs: Self) -> Result<(Self, Self)> {
        if rhs.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let d = rhs.checked_norm()?;
        let num = self.checked_mul(rhs.checked_conj()?)?;
        let q = Self::new(div_round_nearest(num.x, d), div_round_nearest(num.y, d));
        let r = self.checked_sub(q.checked_mul(rhs)?)?;
        debug_assert!(r.norm() < d);
        Ok((q, r))
    }

    /// Exact quotient `self / rhs` when `rhs` divides `self`.
    pub fn div_exact(self, rhs: Self) -> Result<Option<Self>> {
        let (q, r) = self.divmod(rhs)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(self, z: Self) -> Result<bool> {
        Ok(z.div_exact(self)?.is_some())
    }

    /// The six associates `u * self`, in [`UnitValue::ALL`] order.
    pub fn associates(self) -> Result<[Self; 6]> {
        let mut out = [Self::ZERO; 6];
        for (slot, u) in out.iter_mut().zip(UnitValue::ALL) {
            *slot = u.value().checked_mul(self)?;
        }
        Ok(out)
    }

    /// True iff the point lies in the sector `x > y >= 0`.
    pub fn in_canonical_sector(self) -> bool {
        self.x > self.y && self.y >= 0
    }

    /// Returns `(u, u * self)` with `u * self` in the canonical sector.
    pub fn canonical_associate(self) -> Result<(UnitValue, Self)> {
        if self.is_zero() {
            return Err(RingError::ZeroInput);
        }
        for u in UnitValue::ALL {
            let c = u.value().checked_mul(self)?;
            if c.in_canonical_sector() {
                return Ok((u, c));
            }
        }
        unreachable!("every nonzero element has exactly one canonical associate")
    }

    pub fn canonical(self) -> Result<Self> {
        Ok(self.canonical_associate()?.1)
    }

    /// Greatest common divisor, normalized into the canonical sector.
    pub fn gcd(self, other: Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(RingError::UndefinedGcd);
        }
        let (mut a, mut b) = (self, other);
        while !b.is_zero() {
            let (_, r) = a.divmod(b)?;
            a = b;
            b = r;
        }
        a.canonical()
    }
}

/// Nearest-integer quotient `a / d` for `d > 0`, ties toward zero.
fn div_round_nearest(a: i128, d: i128) -> i128 {
    debug_assert!(d > 0);
    let q = a.div_euclid(d);
    let r = a.rem_euclid(d);
    // 0 <= r < d, compare 2r with d without overflowing
    match r.cmp(&(d - r)) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q >= 0 {
                q
            } else {
                q + 1
            }
        }
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<i128> for EisensteinInt {
    fn from(x: i128) -> Self {
        Self::rational(x)
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("overflow in Eisenstein addition")
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("overflow in Eisenstein subtraction")
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        self.checked_neg().expect("overflow in Eisenstein negation")
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("overflow in Eisenstein multiplication")
    }
}

/// One of the six units `+-1, +-w, +-(1 + w)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitValue(EisensteinInt);

impl UnitValue {
    /// Successive powers of `1 + w` (rotation by 60 degrees).
    pub const ALL: [UnitValue; 6] = [
        UnitValue(EisensteinInt::new(1, 0)),
        UnitValue(EisensteinInt::new(1, 1)),
        UnitValue(EisensteinInt::new(0, 1)),
        UnitValue(EisensteinInt::new(-1, 0)),
        UnitValue(EisensteinInt::new(-1, -1)),
        UnitValue(EisensteinInt::new(0, -1)),
    ];

    pub const ONE: UnitValue = Self::ALL[0];

    /// Returns `None` unless `z` has norm one.
    pub fn new(z: EisensteinInt) -> Option<Self> {
        z.is_unit().then_some(UnitValue(z))
    }

    pub fn value(self) -> EisensteinInt {
        self.0
    }

    pub fn inverse(self) -> Self {
        UnitValue(self.0.conj())
    }

    pub fn mul(self, other: Self) -> Self {
        UnitValue(self.0 * other.0)
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
