//! Arithmetic in the prime field GF(p) = Z/pZ.
//!
//! Elements are plain canonical residues; the modulus lives in a
//! [`FieldContext`] that every operation takes explicitly. Both types are
//! `Copy` and immutable.

use std::fmt;

use crate::error::{Error, Result};

/// Largest accepted modulus. Keeps `a + b` inside `u32` and `a * b` inside `u64`.
pub const MAX_MODULUS: u32 = (1 << 31) - 1;

/// A residue in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FpElement(u32);

impl FpElement {
    pub const ZERO: FpElement = FpElement(0);
    pub const ONE: FpElement = FpElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field GF(p).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FieldContext {
    p: u32,
}

impl FieldContext {
    /// Fails with [`Error::NotPrime`] unless `2 <= p <= MAX_MODULUS` and `p` is prime.
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_MODULUS as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldContext { p: p as u32 })
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Canonical representative of `z mod p`.
    #[inline]
    pub fn normalize(&self, z: i64) -> FpElement {
        FpElement(z.rem_euclid(self.p as i64) as u32)
    }

    /// Reduces an unsigned integer.
    #[inline]
    pub fn element(&self, z: u64) -> FpElement {
        FpElement((z % self.p as u64) as u32)
    }

    /// Wraps a value already known to be in range.
    ///
    /// Returns `None` if `v >= p`.
    #[inline]
    pub fn checked(&self, v: u32) -> Option<FpElement> {
        (v < self.p).then_some(FpElement(v))
    }

    #[inline]
    pub fn add(&self, a: FpElement, b: FpElement) -> FpElement {
        let s = a.0 + b.0;
        FpElement(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(&self, a: FpElement, b: FpElement) -> FpElement {
        FpElement(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.p - b.0
        })
    }

    #[inline]
    pub fn neg(&self, a: FpElement) -> FpElement {
        FpElement(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    #[inline]
    pub fn mul(&self, a: FpElement, b: FpElement) -> FpElement {
        FpElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32)
    }

    /// `a - f * b`, the elimination step.
    #[inline]
    pub fn sub_mul(&self, a: FpElement, f: FpElement, b: FpElement) -> FpElement {
        self.sub(a, self.mul(f, b))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: FpElement) -> Result<FpElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.normalize(t0))
    }

    /// `a / b`.
    pub fn div(&self, a: FpElement, b: FpElement) -> Result<FpElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply. `0^0 = 1`, so the monomial 1 evaluates to 1 everywhere.
    pub fn pow(&self, a: FpElement, mut e: u64) -> FpElement {
        let mut base = a;
        let mut acc = FpElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

/// Deterministic trial division; moduli are at most 31 bits.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
