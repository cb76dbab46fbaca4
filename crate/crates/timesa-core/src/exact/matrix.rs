//! Exact dense square matrices over Q and over F_p.
//!
//! Row-major storage. Determinants over Q use fraction-free Bareiss
//! elimination (every division is exact by the Sylvester identity), and over
//! F_p plain Gaussian elimination. Inverses are Gauss-Jordan, exact.
//!
//! JSON form, entries as decimal strings (`"a/b"` permitted over Q):
//! `{"n": 2, "field": "Q", "entries": [["0","-1"],["1","0"]]}` and
//! `{"n": 2, "field": "Fp", "p": 3, "entries": [["1","2"],["0","1"]]}`.

use super::{fp, int_mod_p, is_integer, parse_rat, rat_to_string, Int, Rat};
use crate::{Error, Result};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An n×n matrix of exact rationals. Integer matrices are the special case
/// where every denominator is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(n: usize, entries: Vec<Rat>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadInput("matrix dimension must be >= 1".into()));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: entries.len() });
        }
        Ok(RatMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from row-major i64 entries.
    pub fn from_i64(n: usize, entries: &[i64]) -> Self {
        let entries = entries.iter().map(|&v| Rat::from_integer(Int::from(v))).collect();
        Self::new(n, entries).expect("entry count matches dimension")
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RatMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| Rat::zero())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn is_integer(&self) -> bool {
        self.entries.iter().all(is_integer)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> Rat {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::from_fn(self.n, |i, j| self.get(i, j) + other.get(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::from_fn(self.n, |i, j| self.get(i, j) - other.get(i, j)))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.n, |i, j| -self.get(i, j))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) * c)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self::from_fn(self.n, |i, j| {
            (0..self.n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        }))
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same dimension");
            }
            base = base.mul(&base).expect("same dimension");
            e >>= 1;
        }
        acc
    }

    /// Row vector times matrix: `x  ↦  xA`.
    pub fn row_mul(&self, x: &[Rat]) -> Result<Vec<Rat>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
        }
        Ok((0..self.n)
            .map(|j| (0..self.n).map(|i| &x[i] * self.get(i, j)).sum())
            .collect())
    }

    /// Matrix times integer column vector: `k ↦ Ak`. Requires integer entries.
    pub fn mul_col_int(&self, k: &[Int]) -> Result<Vec<Int>> {
        if k.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: k.len() });
        }
        if !self.is_integer() {
            return Err(Error::NonIntegerEntries);
        }
        Ok((0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).numer() * &k[j]).sum())
            .collect())
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Rat {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut negate = false;
        let mut prev = Rat::one();
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            a.swap(k * n + j, r * n + j);
                        }
                        negate = !negate;
                    }
                    None => return Rat::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j])
                        / &prev;
                    a[i * n + j] = t;
                }
                a[i * n + k] = Rat::zero();
            }
            prev = a[k * n + k].clone();
        }
        let d = a[(n - 1) * n + (n - 1)].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero());
            let pivot = pivot.ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                    inv.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a[col * n + col].clone();
            for j in 0..n {
                a[col * n + j] = &a[col * n + j] / &p;
                inv[col * n + j] = &inv[col * n + j] / &p;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for j in 0..n {
                    let t = &a[r * n + j] - &factor * &a[col * n + j];
                    a[r * n + j] = t;
                    let t = &inv[r * n + j] - &factor * &inv[col * n + j];
                    inv[r * n + j] = t;
                }
            }
        }
        Self::new(n, inv)
    }

    /// A nonzero kernel vector (column) if the matrix is singular, found by
    /// exact reduced row echelon elimination. Deterministic: the first free
    /// column in left-to-right order yields the vector.
    pub fn kernel_vector(&self) -> Option<Vec<Rat>> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let pivot = (row..n).find(|&r| !a[r * n + col].is_zero());
            let Some(pivot) = pivot else { continue };
            if pivot != row {
                for j in 0..n {
                    a.swap(row * n + j, pivot * n + j);
                }
            }
            let p = a[row * n + col].clone();
            for j in 0..n {
                a[row * n + j] = &a[row * n + j] / &p;
            }
            for r in 0..n {
                if r == row || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for j in 0..n {
                    let t = &a[r * n + j] - &factor * &a[row * n + j];
                    a[r * n + j] = t;
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let free_col = (0..n).find(|c| !pivot_cols.contains(c))?;
        let mut x = vec![Rat::zero(); n];
        x[free_col] = Rat::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = -a[r * n + free_col].clone();
        }
        Some(x)
    }

    /// Reduce an integer matrix mod p.
    pub fn reduce_mod(&self, p: u64) -> Result<FpMatrix> {
        if !self.is_integer() {
            return Err(Error::NonIntegerEntries);
        }
        let entries = self.entries.iter().map(|r| int_mod_p(r.numer(), p)).collect();
        FpMatrix::new(self.n, p, entries)
    }

    /// Operator infinity norm (max absolute row sum) as f64, for scaling
    /// numeric residuals.
    pub fn inf_norm_f64(&self) -> f64 {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j).abs().to_f64().unwrap_or(f64::MAX))
                    .sum::<f64>()
            })
            .fold(0.0, f64::max)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }
}

/// Exact linear combination Σ uⱼ Bⱼ.
pub fn lin_comb(mats: &[RatMatrix], u: &[Rat]) -> Result<RatMatrix> {
    if mats.is_empty() || mats.len() != u.len() {
        return Err(Error::DimensionMismatch { expected: mats.len(), found: u.len() });
    }
    let n = mats[0].n();
    let mut acc = RatMatrix::zeros(n);
    for (m, c) in mats.iter().zip(u) {
        acc = acc.add(&m.scale(c))?;
    }
    Ok(acc)
}

/// An n×n matrix over F_p with a uniform modulus, entries canonical in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    n: usize,
    p: u64,
    entries: Vec<u64>,
}

impl FpMatrix {
    pub fn new(n: usize, p: u64, entries: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadInput("matrix dimension must be >= 1".into()));
        }
        if !fp::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: entries.len() });
        }
        let entries = entries.into_iter().map(|v| v % p).collect();
        Ok(FpMatrix { n, p, entries })
    }

    pub fn identity(n: usize, p: u64) -> Result<Self> {
        let mut m = Self::new(n, p, vec![0; n * n])?;
        for i in 0..n {
            m.entries[i * n + i] = 1 % p;
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let entries =
            self.entries.iter().zip(&other.entries).map(|(&a, &b)| fp::add(self.p, a, b)).collect();
        Ok(FpMatrix { n: self.n, p: self.p, entries })
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = c % self.p;
        let entries = self.entries.iter().map(|&a| fp::mul(self.p, a, c)).collect();
        FpMatrix { n: self.n, p: self.p, entries }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compat(other)?;
        let n = self.n;
        let p = self.p;
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u128;
                for k in 0..n {
                    acc += self.get(i, k) as u128 * other.get(k, j) as u128;
                }
                entries[i * n + j] = (acc % p as u128) as u64;
            }
        }
        Ok(FpMatrix { n, p, entries })
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(self.n, self.p).expect("modulus already validated");
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            base = base.mul(&base).expect("same shape");
            e >>= 1;
        }
        acc
    }

    /// Determinant by Gaussian elimination over F_p.
    pub fn det(&self) -> u64 {
        let n = self.n;
        let p = self.p;
        let mut a = self.entries.clone();
        let mut det = 1 % p;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col] != 0);
            let Some(pivot) = pivot else { return 0 };
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                }
                det = fp::neg(p, det);
            }
            let pv = a[col * n + col];
            det = fp::mul(p, det, pv);
            let pv_inv = fp::inv(p, pv);
            for r in col + 1..n {
                if a[r * n + col] == 0 {
                    continue;
                }
                let factor = fp::mul(p, a[r * n + col], pv_inv);
                for j in col..n {
                    let t = fp::sub(p, a[r * n + j], fp::mul(p, factor, a[col * n + j]));
                    a[r * n + j] = t;
                }
            }
        }
        det
    }

    /// A nonzero kernel vector mod p, if singular.
    pub fn kernel_vector(&self) -> Option<Vec<u64>> {
        let n = self.n;
        let p = self.p;
        let mut a = self.entries.clone();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let pivot = (row..n).find(|&r| a[r * n + col] != 0);
            let Some(pivot) = pivot else { continue };
            if pivot != row {
                for j in 0..n {
                    a.swap(row * n + j, pivot * n + j);
                }
            }
            let inv = fp::inv(p, a[row * n + col]);
            for j in 0..n {
                a[row * n + j] = fp::mul(p, a[row * n + j], inv);
            }
            for r in 0..n {
                if r == row || a[r * n + col] == 0 {
                    continue;
                }
                let factor = a[r * n + col];
                for j in 0..n {
                    let t = fp::sub(p, a[r * n + j], fp::mul(p, factor, a[row * n + j]));
                    a[r * n + j] = t;
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        let free_col = (0..n).find(|c| !pivot_cols.contains(c))?;
        let mut x = vec![0u64; n];
        x[free_col] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = fp::neg(p, a[r * n + free_col]);
        }
        Some(x)
    }

    fn check_compat(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        if self.p != other.p {
            return Err(Error::BadInput(format!(
                "mixed moduli {} and {}",
                self.p, other.p
            )));
        }
        Ok(())
    }
}

/// Exact linear combination Σ uⱼ Bⱼ over F_p.
pub fn lin_comb_fp(mats: &[FpMatrix], u: &[u64]) -> Result<FpMatrix> {
    if mats.is_empty() || mats.len() != u.len() {
        return Err(Error::DimensionMismatch { expected: mats.len(), found: u.len() });
    }
    let mut acc = FpMatrix::new(mats[0].n(), mats[0].modulus(), vec![0; mats[0].n().pow(2)])?;
    for (m, &c) in mats.iter().zip(u) {
        acc = acc.add(&m.scale(c))?;
    }
    Ok(acc)
}

/// A matrix over either supported field, as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMatrix {
    Q(RatMatrix),
    Fp(FpMatrix),
}

#[derive(Serialize, Deserialize)]
struct MatrixDto {
    n: usize,
    field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
    entries: Vec<Vec<String>>,
}

impl MatrixDto {
    fn from_rat(m: &RatMatrix) -> Self {
        MatrixDto {
            n: m.n(),
            field: "Q".into(),
            p: None,
            entries: (0..m.n())
                .map(|i| (0..m.n()).map(|j| rat_to_string(m.get(i, j))).collect())
                .collect(),
        }
    }

    fn from_fp(m: &FpMatrix) -> Self {
        MatrixDto {
            n: m.n(),
            field: "Fp".into(),
            p: Some(m.modulus()),
            entries: (0..m.n())
                .map(|i| (0..m.n()).map(|j| m.get(i, j).to_string()).collect())
                .collect(),
        }
    }

    fn into_rat(self) -> Result<RatMatrix> {
        let mut rows = Vec::with_capacity(self.entries.len());
        for row in &self.entries {
            rows.push(row.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?);
        }
        let m = RatMatrix::from_rows(rows)?;
        if m.n() != self.n {
            return Err(Error::BadInput(format!(
                "declared n = {} but entries are {}x{}",
                self.n,
                m.n(),
                m.n()
            )));
        }
        Ok(m)
    }

    fn into_fp(self) -> Result<FpMatrix> {
        let p = self.p.ok_or_else(|| Error::BadInput("field Fp requires \"p\"".into()))?;
        let n = self.entries.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in &self.entries {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for s in row {
                let v = super::parse_int(s)?;
                entries.push(int_mod_p(&v, p));
            }
        }
        let m = FpMatrix::new(n, p, entries)?;
        if m.n() != self.n {
            return Err(Error::BadInput(format!(
                "declared n = {} but entries are {n}x{n}",
                self.n
            )));
        }
        Ok(m)
    }

    fn into_any(self) -> Result<AnyMatrix> {
        match self.field.as_str() {
            "Q" => Ok(AnyMatrix::Q(self.into_rat()?)),
            "Fp" => Ok(AnyMatrix::Fp(self.into_fp()?)),
            other => Err(Error::BadInput(format!("unknown field {other:?}"))),
        }
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDto::from_rat(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = MatrixDto::deserialize(d)?;
        if dto.field != "Q" {
            return Err(D::Error::custom(format!("expected field Q, got {:?}", dto.field)));
        }
        dto.into_rat().map_err(D::Error::custom)
    }
}

impl Serialize for FpMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDto::from_fp(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FpMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = MatrixDto::deserialize(d)?;
        if dto.field != "Fp" {
            return Err(D::Error::custom(format!("expected field Fp, got {:?}", dto.field)));
        }
        dto.into_fp().map_err(D::Error::custom)
    }
}

impl Serialize for AnyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AnyMatrix::Q(m) => m.serialize(s),
            AnyMatrix::Fp(m) => m.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for AnyMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = MatrixDto::deserialize(d)?;
        dto.into_any().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rat {
        parse_rat(s).unwrap()
    }

    /// Independent determinant oracle: cofactor expansion along the first row.
    fn det_cofactor(m: &RatMatrix) -> Rat {
        let n = m.n();
        if n == 1 {
            return m.get(0, 0).clone();
        }
        let mut acc = Rat::zero();
        for j in 0..n {
            let minor = RatMatrix::from_fn(n - 1, |r, c| {
                m.get(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = m.get(0, j) * &det_cofactor(&minor);
            if j % 2 == 0 {
                acc = acc + term;
            } else {
                acc = acc - term;
            }
        }
        acc
    }

    #[test]
    fn det_examples() {
        assert_eq!(RatMatrix::identity(2).det(), Rat::one());
        assert_eq!(RatMatrix::from_i64(2, &[2, 1, 1, 1]).det(), Rat::one());
        assert_eq!(RatMatrix::from_i64(2, &[0, -1, 1, 0]).det(), Rat::one());
    }

    #[test]
    fn det_bareiss_matches_cofactor_small() {
        // Deterministic sweep over a structured family up to n = 4.
        for n in 1..=4usize {
            for seed in 0..20i64 {
                let m = RatMatrix::from_fn(n, |i, j| {
                    let v = ((seed + 3) * (i as i64 + 2) * (j as i64 + 5) + seed * 7) % 10 - 4;
                    rat(&v.to_string())
                });
                assert_eq!(m.det(), det_cofactor(&m), "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn det_with_zero_pivot_needs_row_swap() {
        let m = RatMatrix::from_i64(3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(m.det(), rat("-1"));
        assert_eq!(det_cofactor(&m), rat("-1"));
    }

    #[test]
    fn inverse_examples() {
        let i2 = RatMatrix::identity(2);
        assert_eq!(i2.inverse().unwrap(), i2);

        let d = RatMatrix::from_i64(2, &[2, 0, 0, 2]);
        let inv = d.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &rat("1/2"));
        assert_eq!(inv.get(1, 1), &rat("1/2"));
        assert_eq!(d.mul(&inv).unwrap(), i2);

        let singular = RatMatrix::from_i64(2, &[1, 1, 0, 0]);
        assert_eq!(singular.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let m = RatMatrix::from_rows(vec![
            vec![rat("2"), rat("1/3"), rat("0")],
            vec![rat("-1"), rat("1"), rat("5/7")],
            vec![rat("0"), rat("4"), rat("1")],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(inv.mul(&m).unwrap(), RatMatrix::identity(3));
        assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(3));
    }

    #[test]
    fn kernel_vector_of_singular_matrix() {
        let m = RatMatrix::from_i64(2, &[1, 2, 2, 4]);
        let v = m.kernel_vector().unwrap();
        assert!(v.iter().any(|c| !c.is_zero()));
        let image: Vec<Rat> =
            (0..2).map(|i| (0..2).map(|j| m.get(i, j) * &v[j]).sum()).collect();
        assert!(image.iter().all(Rat::is_zero));
        assert!(RatMatrix::identity(2).kernel_vector().is_none());
    }

    #[test]
    fn fp_det_and_kernel() {
        let m = FpMatrix::new(2, 5, vec![1, 2, 3, 4]).unwrap();
        // det = 4 - 6 = -2 = 3 mod 5
        assert_eq!(m.det(), 3);
        let s = FpMatrix::new(2, 2, vec![1, 1, 1, 1]).unwrap();
        assert_eq!(s.det(), 0);
        let v = s.kernel_vector().unwrap();
        assert!(v.iter().any(|&c| c != 0));
    }

    #[test]
    fn fp_matrix_reduction() {
        let m = RatMatrix::from_i64(2, &[-1, 7, 3, -8]);
        let r = m.reduce_mod(5).unwrap();
        assert_eq!(r.get(0, 0), 4);
        assert_eq!(r.get(0, 1), 2);
        assert_eq!(r.get(1, 0), 3);
        assert_eq!(r.get(1, 1), 2);
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = RatMatrix::from_rows(vec![
            vec![rat("0"), rat("-1")],
            vec![rat("1/2"), rat("0")],
        ])
        .unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"field\":\"Q\""));
        assert!(json.contains("\"1/2\""));
        let back: RatMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(m, back);

        let f = FpMatrix::new(2, 3, vec![1, 2, 0, 1]).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains("\"p\":3"));
        let back: FpMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(f, back);

        let any: AnyMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(any, AnyMatrix::Fp(f));
    }

    #[test]
    fn spec_matrix_json_example_parses() {
        let json = r#"{"n": 2, "field": "Q", "entries": [["0","-1"],["1","0"]]}"#;
        let m: RatMatrix = serde_json::from_str(json).unwrap();
        assert_eq!(m, RatMatrix::from_i64(2, &[0, -1, 1, 0]));
    }
}
