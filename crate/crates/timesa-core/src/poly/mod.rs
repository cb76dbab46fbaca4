//! Univariate polynomials with exact rational coefficients.
//!
//! `IntPoly` stores coefficients lowest degree first; the representation is
//! canonical (no stored trailing zeros, the zero polynomial is the empty
//! vector). Most deciding operations require monic integer input, which is
//! all the characteristic polynomials this crate ever produces.
//!
//! JSON form, lowest-first decimal strings:
//! `{"coeffs": ["1","0","1"]}` is 1 + t².

pub mod fp;
pub mod irreducible;

pub use fp::{FpFactorization, FpPoly};
pub use irreducible::{
    eisenstein_check, is_irreducible_q, is_irreducible_q_with, kronecker_factor,
    kronecker_factor_with, rational_roots, IrredConfig, IrredVerdict, Method, Verdict,
};

use crate::exact::{is_integer, parse_rat, rat_to_string, Int, Rat, RatMatrix};
use crate::{Error, Result};
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<Rat>,
}

impl IntPoly {
    /// Construct from coefficients, lowest degree first; trailing zeros are
    /// stripped to keep the representation canonical.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![Rat::one()] }
    }

    /// The indeterminate t.
    pub fn x() -> Self {
        IntPoly { coeffs: vec![Rat::zero(), Rat::one()] }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    pub fn from_int_coeffs(coeffs: Vec<Int>) -> Self {
        Self::new(coeffs.into_iter().map(Rat::from_integer).collect())
    }

    /// t^n + c, the family used to generate strongly independent matrices.
    pub fn xn_plus(n: usize, c: i64) -> Self {
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[0] = Rat::from_integer(Int::from(c));
        coeffs[n] = Rat::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of t^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, One::is_one)
    }

    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(is_integer)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division over Q: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = d.leading().expect("nonzero divisor").clone();
        let mut r = self.clone();
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let factor = r.leading().expect("nonzero remainder") / &lead;
            let shift = rd - dd;
            q[shift] = factor.clone();
            let sub = d.mul(&IntPoly::monomial(factor, shift));
            r = r.sub(&sub);
        }
        Ok((Self::new(q), r))
    }

    /// Exact quotient, or None when the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    /// Matrix substitution f(B) by Horner, exact.
    pub fn eval_matrix(&self, b: &RatMatrix) -> RatMatrix {
        let n = b.n();
        let mut acc = RatMatrix::zeros(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(b).expect("same dimension");
            acc = acc.add(&RatMatrix::identity(n).scale(c)).expect("same dimension");
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", rat_to_string(&mag))?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyDto {
    coeffs: Vec<String>,
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyDto { coeffs: self.coeffs.iter().map(rat_to_string).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = PolyDto::deserialize(d)?;
        let coeffs = dto
            .coeffs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rat {
        parse_rat(s).unwrap()
    }

    #[test]
    fn canonical_representation() {
        let p = IntPoly::new(vec![rat("1"), rat("0"), rat("0")]);
        assert_eq!(p.degree(), Some(0));
        assert!(IntPoly::new(vec![rat("0")]).is_zero());
        assert_eq!(IntPoly::zero().degree(), None);
    }

    #[test]
    fn eval_examples() {
        // (t^2 + 1)(2) = 5
        let f = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(f.eval(&rat("2")), rat("5"));
        // f(0) is the constant coefficient
        let g = IntPoly::from_i64(&[-7, 3, 2]);
        assert_eq!(g.eval(&rat("0")), rat("-7"));
        // (t^n + p)(0) = p
        for (n, p) in [(2usize, 2i64), (3, 5), (5, 3)] {
            assert_eq!(IntPoly::xn_plus(n, p).eval(&rat("0")), rat(&p.to_string()));
        }
    }

    #[test]
    fn division_and_exact_quotients() {
        let f = IntPoly::from_i64(&[-1, 0, 1]); // t^2 - 1
        let g = IntPoly::from_i64(&[-1, 1]); // t - 1
        let (q, r) = f.div_rem(&g).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, IntPoly::from_i64(&[1, 1]));
        assert_eq!(f.exact_div(&g).unwrap(), q);
        // t^2 + 1 is not divisible by t - 1
        assert!(IntPoly::from_i64(&[1, 0, 1]).exact_div(&g).is_none());
        assert!(f.div_rem(&IntPoly::zero()).is_err());
    }

    #[test]
    fn mul_add_consistency() {
        let f = IntPoly::from_i64(&[1, 2, 3]);
        let g = IntPoly::from_i64(&[-4, 0, 0, 5]);
        let h = f.mul(&g);
        let (q, r) = h.div_rem(&g).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, f);
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(IntPoly::from_i64(&[1, -3, 1]).to_string(), "t^2 - 3t + 1");
        assert_eq!(IntPoly::from_i64(&[2, 0, 0, 1]).to_string(), "t^3 + 2");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn poly_json_round_trip() {
        let f = IntPoly::new(vec![rat("1"), rat("0"), rat("1")]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"coeffs":["1","0","1"]}"#);
        let back: IntPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(f, back);
    }
}
