//! Polynomials over F_p and complete factorization by trial division.
//!
//! Factorization enumerates monic trial divisors in increasing degree and,
//! within a degree, increasing numeric index (constant coefficient varying
//! fastest). That order makes the returned factor multiset deterministic.
//! Feasible because every modulus and degree in this crate is desk-scale.

use super::IntPoly;
use crate::exact::{fp, int_mod_p};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        if !fp::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut f = FpPoly { p, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        f.normalize();
        Ok(f)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    fn raw(p: u64, coeffs: Vec<u64>) -> Self {
        let mut f = FpPoly { p, coeffs };
        f.normalize();
        f
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(p, vec![])
    }

    /// Reduce an integer polynomial mod p.
    pub fn from_int_poly(f: &IntPoly, p: u64) -> Result<Self> {
        if !f.is_integer() {
            return Err(Error::NonIntegerCoefficients);
        }
        let coeffs = f.coeffs().iter().map(|c| int_mod_p(c.numer(), p)).collect();
        Self::new(p, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient, 0 for the zero polynomial.
    pub fn lc(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::raw(
            self.p,
            (0..len).map(|i| fp::add(self.p, self.coeff(i), other.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::raw(
            self.p,
            (0..len).map(|i| fp::sub(self.p, self.coeff(i), other.coeff(i))).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return FpPoly { p: self.p, coeffs: vec![] };
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = fp::add(self.p, coeffs[i + j], fp::mul(self.p, a, b));
            }
        }
        Self::raw(self.p, coeffs)
    }

    pub fn mul_scalar(&self, c: u64) -> Self {
        let c = c % self.p;
        Self::raw(self.p, self.coeffs.iter().map(|&a| fp::mul(self.p, a, c)).collect())
    }

    /// Split into (leading unit, monic polynomial).
    pub fn make_monic(&self) -> (u64, Self) {
        let lc = self.lc();
        if lc == 0 || lc == 1 {
            return (lc.max(1), self.clone());
        }
        (lc, self.mul_scalar(fp::inv(self.p, lc)))
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        assert_eq!(self.p, d.p);
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = fp::inv(self.p, d.lc());
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let rd = r.len() - 1;
            let factor = fp::mul(self.p, *r.last().expect("nonempty"), lead_inv);
            if factor != 0 {
                let shift = rd - dd;
                q[shift] = factor;
                for (i, &dc) in d.coeffs.iter().enumerate() {
                    r[shift + i] = fp::sub(self.p, r[shift + i], fp::mul(self.p, factor, dc));
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        Ok((Self::raw(self.p, q), Self::raw(self.p, r)))
    }

    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = fp::add(self.p, fp::mul(self.p, acc, x), c);
        }
        acc
    }

    /// Monic polynomials of degree d over F_p in deterministic order: the
    /// index runs 0..p^d and digits are the lower coefficients, constant
    /// coefficient varying fastest.
    pub fn monic_of_degree(p: u64, d: usize) -> impl Iterator<Item = FpPoly> {
        let count = (p as u128).pow(d as u32);
        (0..count).map(move |idx| {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                coeffs.push((rest % p as u128) as u64);
                rest /= p as u128;
            }
            coeffs.push(1);
            FpPoly { p, coeffs }
        })
    }

    /// Number of trial divisions a full irreducibility scan would need.
    pub fn trial_division_cost(p: u64, degree: usize) -> u128 {
        (1..=degree / 2).map(|d| (p as u128).saturating_pow(d as u32)).sum()
    }

    /// Complete factorization into monic irreducible factors times a unit.
    ///
    /// The product of the returned factors, scaled by `unit`, equals the
    /// input exactly. Factors are sorted by (degree, coefficients).
    pub fn factor(&self) -> Result<FpFactorization> {
        if self.degree().is_none() {
            return Err(Error::ZeroPolynomial);
        }
        let (unit, mut g) = self.make_monic();
        let mut factors = Vec::new();
        'outer: while g.degree().map_or(false, |d| d >= 1) {
            let dg = g.degree().expect("nonzero");
            for d in 1..=dg / 2 {
                for q in Self::monic_of_degree(self.p, d) {
                    if let Some(quot) = g.exact_div(&q) {
                        factors.push(q);
                        g = quot;
                        continue 'outer;
                    }
                }
            }
            // no divisor of degree <= dg/2: g itself is irreducible
            factors.push(g);
            break;
        }
        factors.sort_by(|a, b| {
            a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| a.coeffs.cmp(&b.coeffs))
        });
        Ok(FpFactorization { unit, factors })
    }

    /// True when the polynomial is irreducible in F_p[t].
    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.factor()?.factors.len() == 1 && self.degree() >= Some(1))
    }
}

impl std::fmt::Display for FpPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 || c != 1 {
                write!(f, "{c}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        write!(f, " (mod {})", self.p)
    }
}

/// Result of [`FpPoly::factor`]: `input = unit * Π factors` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpFactorization {
    pub unit: u64,
    pub factors: Vec<FpPoly>,
}

impl FpFactorization {
    /// Recompute the product, for round-trip checks.
    pub fn product(&self, p: u64) -> Result<FpPoly> {
        let mut acc = FpPoly::new(p, vec![self.unit])?;
        for f in &self.factors {
            acc = acc.mul(f);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(p: u64, coeffs: &[u64]) -> FpPoly {
        FpPoly::new(p, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn division_round_trip() {
        let f = poly(5, &[1, 2, 3, 4]);
        let d = poly(5, &[2, 1]);
        let (q, r) = f.div_rem(&d).unwrap();
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn factor_spec_examples() {
        // t^2 + t + 1 irreducible over F_2
        let f = poly(2, &[1, 1, 1]);
        let fac = f.factor().unwrap();
        assert_eq!(fac.factors, vec![f.clone()]);
        assert!(f.is_irreducible().unwrap());

        // t^2 + 1 = (t + 1)^2 over F_2
        let g = poly(2, &[1, 0, 1]);
        let fac = g.factor().unwrap();
        assert_eq!(fac.factors, vec![poly(2, &[1, 1]), poly(2, &[1, 1])]);

        // t^2 + 1 irreducible over F_3
        let h = poly(3, &[1, 0, 1]);
        assert!(h.is_irreducible().unwrap());
    }

    #[test]
    fn factor_product_round_trip() {
        for p in [2u64, 3, 5] {
            for idx in 0..(p.pow(3)) {
                let coeffs =
                    vec![idx % p, (idx / p) % p, (idx / (p * p)) % p, 1];
                let f = poly(p, &coeffs);
                let fac = f.factor().unwrap();
                assert_eq!(fac.product(p).unwrap(), f, "p={p} idx={idx}");
                for factor in &fac.factors {
                    assert!(factor.is_monic());
                }
            }
        }
    }

    #[test]
    fn degree_two_verdict_matches_root_existence() {
        // A monic quadratic over F_p is reducible iff it has a root.
        for p in [2u64, 3] {
            for b in 0..p {
                for c in 0..p {
                    let f = poly(p, &[c, b, 1]);
                    let has_root = (0..p).any(|x| f.eval(x) == 0);
                    assert_eq!(
                        f.is_irreducible().unwrap(),
                        !has_root,
                        "p={p} f={f}"
                    );
                }
            }
        }
    }

    #[test]
    fn non_monic_factorization_keeps_unit() {
        let f = poly(5, &[2, 0, 3]); // 3t^2 + 2
        let fac = f.factor().unwrap();
        assert_eq!(fac.unit, 3);
        assert_eq!(fac.product(5).unwrap(), f);
    }
}
