//! Prime-field scalars F_p.
//!
//! Moduli at desk scale only: primality is checked by trial division up to
//! sqrt(p) at construction time. Raw `u64` helpers are provided for inner
//! loops that keep the modulus alongside the data.

use crate::{Error, Result};

/// Trial-division primality check.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes below `bound`, ascending.
pub fn primes_below(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&p| is_prime(p)).collect()
}

pub fn add(p: u64, a: u64, b: u64) -> u64 {
    debug_assert!(a < p && b < p);
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn sub(p: u64, a: u64, b: u64) -> u64 {
    debug_assert!(a < p && b < p);
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn neg(p: u64, a: u64) -> u64 {
    debug_assert!(a < p);
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn mul(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(p: u64, mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(p, acc, base);
        }
        base = mul(p, base, base);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse by Fermat's little theorem. Panics on 0.
pub fn inv(p: u64, a: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero in F_{p}");
    pow(p, a, p - 2)
}

/// A scalar in F_p: the modulus and a canonical residue in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpScalar {
    p: u64,
    v: u64,
}

impl FpScalar {
    /// Construct from any residue; checks primality and reduces.
    pub fn new(p: u64, v: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FpScalar { p, v: v % p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn is_zero(&self) -> bool {
        self.v == 0
    }

    pub fn add(&self, other: &FpScalar) -> FpScalar {
        assert_eq!(self.p, other.p);
        FpScalar { p: self.p, v: add(self.p, self.v, other.v) }
    }

    pub fn mul(&self, other: &FpScalar) -> FpScalar {
        assert_eq!(self.p, other.p);
        FpScalar { p: self.p, v: mul(self.p, self.v, other.v) }
    }

    pub fn inv(&self) -> FpScalar {
        FpScalar { p: self.p, v: inv(self.p, self.v) }
    }
}
