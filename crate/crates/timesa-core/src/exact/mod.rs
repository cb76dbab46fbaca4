//! Exact scalars and dense matrices.
//!
//! `Int` and `Rat` are arbitrary-precision integers and reduced rationals
//! (denominator always positive); integer matrices are the denominator-1
//! special case of [`RatMatrix`]. Prime-field scalars live in [`fp`].
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

mod charpoly;
pub mod fp;
pub mod matrix;

pub use fp::{is_prime, FpScalar};
pub use matrix::{FpMatrix, RatMatrix};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Parse an exact rational from a decimal string, `"a"` or `"a/b"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let make = |num: &str, den: &str| -> Result<Rat> {
        let n: Int = num
            .parse()
            .map_err(|_| Error::BadInput(format!("bad integer {num:?}")))?;
        let d: Int = den
            .parse()
            .map_err(|_| Error::BadInput(format!("bad integer {den:?}")))?;
        if d.is_zero() {
            return Err(Error::BadInput(format!("zero denominator in {s:?}")));
        }
        Ok(Rat::new(n, d))
    };
    match s.split_once('/') {
        Some((num, den)) => make(num, den),
        None => make(s, "1"),
    }
}

/// Parse an exact integer from a decimal string.
pub fn parse_int(s: &str) -> Result<Int> {
    s.trim()
        .parse()
        .map_err(|_| Error::BadInput(format!("bad integer {s:?}")))
}

/// Render a rational as `"a"` (denominator 1) or `"a/b"`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fractional part in `[0, 1)`, exact.
pub fn fract(r: &Rat) -> Rat {
    r - r.floor()
}

/// True when the rational is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Canonical residue of an integer mod p, in `[0, p)`.
pub fn int_mod_p(v: &Int, p: u64) -> u64 {
    use num_integer::Integer;
    let m = v.mod_floor(&Int::from(p));
    let (_, digits) = m.to_u64_digits();
    match digits.as_slice() {
        [] => 0,
        [d] => *d,
        _ => unreachable!("residue mod u64 fits one digit"),
    }
}

/// |numerator| and |denominator| magnitudes are not needed often; this gives
/// the absolute value of an integer rational as `Int`.
pub fn rat_abs_int(r: &Rat) -> Result<Int> {
    if !is_integer(r) {
        return Err(Error::NonIntegerEntries);
    }
    Ok(r.numer().abs())
}
