//! Characteristic polynomials det(tI − M), exact.
//!
//! Over Q the Faddeev–LeVerrier recurrence is used. Over F_p that recurrence
//! divides by integers up to n, which can vanish when p <= n, so the
//! determinant is instead expanded by fraction-free Bareiss elimination on a
//! matrix with entries in F_p[t]; every division there is an exact
//! polynomial division.

use super::matrix::{FpMatrix, RatMatrix};
use super::Rat;
use crate::poly::{FpPoly, IntPoly};
use num_traits::One;

impl RatMatrix {
    /// Monic characteristic polynomial of the matrix, degree n.
    pub fn char_poly(&self) -> IntPoly {
        let n = self.n();
        // Faddeev–LeVerrier: M_k = A (M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.
        let mut coeffs_desc: Vec<Rat> = Vec::with_capacity(n + 1);
        coeffs_desc.push(Rat::one());
        let mut m = self.clone();
        let mut c = -m.trace();
        coeffs_desc.push(c.clone());
        for k in 2..=n {
            let shifted = m.add(&RatMatrix::identity(n).scale(&c)).expect("same dim");
            m = self.mul(&shifted).expect("same dim");
            c = -m.trace() / Rat::from_integer(k.into());
            coeffs_desc.push(c.clone());
        }
        coeffs_desc.reverse();
        IntPoly::new(coeffs_desc)
    }
}

impl FpMatrix {
    /// Monic characteristic polynomial over F_p, degree n.
    pub fn char_poly(&self) -> FpPoly {
        let n = self.n();
        let p = self.modulus();
        let zero = FpPoly::new(p, vec![]).expect("valid modulus");
        let one = FpPoly::new(p, vec![1]).expect("valid modulus");
        // entries of tI - M
        let mut a: Vec<FpPoly> = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let neg = (p - self.get(i, j)) % p;
                let coeffs = if i == j { vec![neg, 1] } else { vec![neg] };
                a.push(FpPoly::new(p, coeffs).expect("valid modulus"));
            }
        }
        let mut negate = false;
        let mut prev = one;
        for k in 0..n.saturating_sub(1) {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for j in 0..n {
                            a.swap(k * n + j, r * n + j);
                        }
                        negate = !negate;
                    }
                    None => return zero,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = a[i * n + j]
                        .mul(&a[k * n + k])
                        .sub(&a[i * n + k].mul(&a[k * n + j]));
                    a[i * n + j] = t
                        .exact_div(&prev)
                        .expect("Bareiss division is exact by the Sylvester identity");
                }
                a[i * n + k] = zero.clone();
            }
            prev = a[k * n + k].clone();
        }
        let det = a[(n - 1) * n + (n - 1)].clone();
        if negate {
            det.mul_scalar(p - 1)
        } else {
            det
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_rat;

    #[test]
    fn char_poly_2x2_rotation() {
        let m = RatMatrix::from_i64(2, &[0, -1, 1, 0]);
        assert_eq!(m.char_poly(), IntPoly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn char_poly_zero_matrix() {
        for n in 1..=4 {
            let m = RatMatrix::zeros(n);
            assert_eq!(m.char_poly(), IntPoly::monomial(Rat::one(), n));
        }
    }

    #[test]
    fn char_poly_diagonal() {
        let m = RatMatrix::from_i64(2, &[1, 0, 0, 2]);
        // (t-1)(t-2) = t^2 - 3t + 2
        assert_eq!(m.char_poly(), IntPoly::from_i64(&[2, -3, 1]));
    }

    #[test]
    fn char_poly_rational_entries() {
        let m = RatMatrix::from_rows(vec![
            vec![parse_rat("1/2").unwrap(), parse_rat("1").unwrap()],
            vec![parse_rat("0").unwrap(), parse_rat("1/3").unwrap()],
        ])
        .unwrap();
        // (t - 1/2)(t - 1/3) = t^2 - 5/6 t + 1/6
        let expected = IntPoly::new(vec![
            parse_rat("1/6").unwrap(),
            parse_rat("-5/6").unwrap(),
            parse_rat("1").unwrap(),
        ]);
        assert_eq!(m.char_poly(), expected);
    }

    #[test]
    fn cayley_hamilton_exact() {
        for entries in [
            vec![2i64, 1, 1, 1],
            vec![0, -1, 1, 0],
            vec![3, -2, 5, 7],
        ] {
            let m = RatMatrix::from_i64(2, &entries);
            let p = m.char_poly();
            assert!(p.eval_matrix(&m).is_zero(), "entries={entries:?}");
        }
        let m = RatMatrix::from_i64(3, &[1, 2, 0, -1, 0, 3, 2, 2, 2]);
        assert!(m.char_poly().eval_matrix(&m).is_zero());
    }

    #[test]
    fn fp_char_poly_agrees_with_rational_reduction() {
        // char poly of (M mod p) equals (char poly of M) mod p
        for p in [2u64, 3, 5] {
            for entries in [
                vec![0i64, -1, 1, 0],
                vec![2, 1, 1, 1],
                vec![1, 2, 3, 4],
            ] {
                let m = RatMatrix::from_i64(2, &entries);
                let exact = FpPoly::from_int_poly(&m.char_poly(), p).unwrap();
                let modular = m.reduce_mod(p).unwrap().char_poly();
                assert_eq!(exact, modular, "p={p} entries={entries:?}");
            }
        }
    }

    #[test]
    fn fp_char_poly_small_field_small_n() {
        // p <= n exercises the reason for the polynomial-entry route.
        let m = FpMatrix::new(3, 2, vec![0, 1, 0, 0, 0, 1, 1, 1, 0]).unwrap();
        let cp = m.char_poly();
        assert_eq!(cp.degree(), Some(3));
        assert!(cp.is_monic());
        // det(tI - M) at t = 0 is det(-M) = -det(M) = det(M) mod 2
        assert_eq!(cp.eval(0), m.det());
    }
}
