//! Irreducibility over Q for monic integer polynomials.
//!
//! The decision pipeline layers fast sufficient tests over a complete
//! fallback: Eisenstein scan, rational-root shortcut (which fully decides
//! degrees <= 3), mod-p irreducibility scan, and finally Kronecker
//! factorization, which is complete and sound at desk scale. The Eisenstein
//! scan runs first so that the t^n + p family certifies instantly at every
//! degree.
//!
//! Kronecker: evaluate f at integer points 0, ±1, ±2, …; for a candidate
//! factor degree d, every divisor tuple of the values at d+1 points is
//! interpolated and trial-divided exactly. Points where the value has too
//! many divisors are skipped in favor of later points, which bounds the
//! enumeration without giving up completeness.

use super::{FpPoly, IntPoly};
use crate::exact::{fp::is_prime, fp::primes_below, Int, Rat};
use crate::{Error, Result};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeSet;

/// Which pipeline stage decided the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    Eisenstein(u64),
    RationalRoot,
    ModP(u64),
    Kronecker,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Eisenstein(p) => write!(f, "Eisenstein({p})"),
            Method::RationalRoot => write!(f, "RationalRoot"),
            Method::ModP(p) => write!(f, "ModP({p})"),
            Method::Kronecker => write!(f, "Kronecker"),
        }
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Irreducible,
    Reducible,
}

/// Outcome of an irreducibility decision. A `Reducible` verdict always
/// carries an exact factor pair `f = g · h` with `1 <= deg g <= deg h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrredVerdict {
    pub verdict: Verdict,
    pub witness: Option<(IntPoly, IntPoly)>,
    pub method: Method,
}

impl IrredVerdict {
    fn irreducible(method: Method) -> Self {
        IrredVerdict { verdict: Verdict::Irreducible, witness: None, method }
    }

    fn reducible(g: IntPoly, h: IntPoly, method: Method) -> Self {
        let (g, h) = order_pair(g, h);
        IrredVerdict { verdict: Verdict::Reducible, witness: Some((g, h)), method }
    }

    pub fn is_irreducible(&self) -> bool {
        self.verdict == Verdict::Irreducible
    }
}

impl Serialize for IrredVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("IrredVerdict", 3)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("method", &self.method)?;
        match &self.witness {
            Some((g, h)) => {
                #[derive(Serialize)]
                struct W<'a> {
                    g: &'a IntPoly,
                    h: &'a IntPoly,
                }
                st.serialize_field("witness", &W { g, h })?;
            }
            None => st.serialize_field("witness", &Option::<()>::None)?,
        }
        st.end()
    }
}

fn order_pair(g: IntPoly, h: IntPoly) -> (IntPoly, IntPoly) {
    let key = |p: &IntPoly| (p.degree().unwrap_or(0), p.coeffs().to_vec());
    if key(&g) <= key(&h) {
        (g, h)
    } else {
        (h, g)
    }
}

/// Tunables for the pipeline. The degree cap guards the exponential
/// Kronecker fallback; the mod-p cost budget skips primes whose exhaustive
/// trial-division scan would be too expensive to be worth it before the
/// fallback.
#[derive(Clone, Debug)]
pub struct IrredConfig {
    pub eisenstein_bound: u64,
    pub modp_bound: u64,
    pub modp_cost_budget: u128,
    pub kronecker_degree_cap: usize,
    pub divisor_budget: usize,
    pub max_eval_points: usize,
}

impl Default for IrredConfig {
    fn default() -> Self {
        IrredConfig {
            eisenstein_bound: 100,
            modp_bound: 50,
            modp_cost_budget: 500_000,
            kronecker_degree_cap: 8,
            divisor_budget: 32,
            max_eval_points: 64,
        }
    }
}

fn require_monic_integer(f: &IntPoly) -> Result<usize> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    if deg < 1 {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_integer() {
        return Err(Error::NonIntegerCoefficients);
    }
    if !f.is_monic() {
        return Err(Error::NonMonic);
    }
    Ok(deg)
}

/// Eisenstein's criterion at the prime p: true implies f is irreducible
/// over Q. Requires a monic integer polynomial.
pub fn eisenstein_check(f: &IntPoly, p: u64) -> Result<bool> {
    let deg = require_monic_integer(f)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = Int::from(p);
    let p2 = &p * &p;
    for i in 0..deg {
        if !(f.coeff(i).numer() % &p).is_zero() {
            return Ok(false);
        }
    }
    Ok(!(f.coeff(0).numer() % &p2).is_zero())
}

/// Positive divisors of |v|, ascending, or None when |v| is too large for
/// trial division at desk scale.
fn divisors_int(v: &Int) -> Option<Vec<Int>> {
    const CAP: u128 = 1_000_000_000_000;
    let mag = v.abs().to_u128()?;
    if mag == 0 || mag > CAP {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= mag {
        if mag % d == 0 {
            small.push(d);
            if d * d != mag {
                large.push(mag / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small.into_iter().map(Int::from).collect())
}

/// All rational roots of a nonzero integer polynomial, found by the
/// rational-root theorem and verified by exact evaluation. Sorted ascending.
pub fn rational_roots(f: &IntPoly) -> Result<Vec<Rat>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_integer() {
        return Err(Error::NonIntegerCoefficients);
    }
    let mut roots: BTreeSet<Rat> = BTreeSet::new();
    // strip the power of t so the constant term is nonzero
    let shift = f.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero poly");
    if shift > 0 {
        roots.insert(Rat::zero());
    }
    let g = IntPoly::new(f.coeffs()[shift..].to_vec());
    if g.degree() == Some(0) {
        return Ok(roots.into_iter().collect());
    }
    let constant = g.coeff(0);
    let leading = g.leading().expect("nonzero poly").clone();
    let nums = divisors_int(constant.numer())
        .ok_or_else(|| Error::BadInput("constant term too large for root scan".into()))?;
    let dens = divisors_int(leading.numer())
        .ok_or_else(|| Error::BadInput("leading term too large for root scan".into()))?;
    for a in &nums {
        for b in &dens {
            for cand in [
                Rat::new(a.clone(), b.clone()),
                Rat::new(-a.clone(), b.clone()),
            ] {
                if g.eval(&cand).is_zero() {
                    roots.insert(cand);
                }
            }
        }
    }
    Ok(roots.into_iter().collect())
}

/// Complete Kronecker factorization decision with default configuration.
pub fn kronecker_factor(f: &IntPoly) -> Result<IrredVerdict> {
    kronecker_factor_with(f, &IrredConfig::default())
}

pub fn kronecker_factor_with(f: &IntPoly, cfg: &IrredConfig) -> Result<IrredVerdict> {
    let deg = require_monic_integer(f)?;
    if deg > cfg.kronecker_degree_cap {
        return Err(Error::DegreeTooLarge { degree: deg, cap: cfg.kronecker_degree_cap });
    }
    if deg == 1 {
        return Ok(IrredVerdict::irreducible(Method::Kronecker));
    }

    // Evaluation stream 0, 1, -1, 2, -2, …
    let stream = (0..cfg.max_eval_points as i64).map(|i| {
        if i % 2 == 0 {
            -(i / 2)
        } else {
            i / 2 + 1
        }
    });

    struct Point {
        x: Rat,
        divisors: Vec<Int>,
        order: usize,
    }
    let mut usable: Vec<Point> = Vec::new();
    let mut rich: Vec<Point> = Vec::new();
    for (order, x) in stream.enumerate() {
        let xr = Rat::from_integer(Int::from(x));
        let value = f.eval(&xr);
        if value.is_zero() {
            // x is an integer root: a linear factor falls out directly
            let g = IntPoly::new(vec![-xr, Rat::one()]);
            let h = f.exact_div(&g).expect("root divides");
            return Ok(IrredVerdict::reducible(g, h, Method::Kronecker));
        }
        match divisors_int(value.numer()) {
            Some(divs) if divs.len() <= cfg.divisor_budget => {
                usable.push(Point { x: xr, divisors: divs, order })
            }
            Some(divs) => rich.push(Point { x: xr, divisors: divs, order }),
            None => {}
        }
    }
    // Points skipped for divisor richness return, cheapest first, if the
    // stream did not supply enough lean ones.
    rich.sort_by_key(|pt| (pt.divisors.len(), pt.order));
    usable.extend(rich);

    for d in 1..=deg / 2 {
        let needed = d + 1;
        if usable.len() < needed {
            return Err(Error::BadInput(
                "not enough usable evaluation points for Kronecker factorization".into(),
            ));
        }
        let pts = &usable[..needed];
        // Odometer over signed divisor choices at each point.
        let radix: Vec<usize> = pts.iter().map(|pt| 2 * pt.divisors.len()).collect();
        let mut idx = vec![0usize; needed];
        'tuples: loop {
            let sample: Vec<(Rat, Rat)> = pts
                .iter()
                .zip(&idx)
                .map(|(pt, &i)| {
                    let div = &pt.divisors[i / 2];
                    let y = if i % 2 == 0 { div.clone() } else { -div };
                    (pt.x.clone(), Rat::from_integer(y))
                })
                .collect();
            if let Some(cand) = interpolate(&sample) {
                if let Some(g) = normalize_candidate(cand, d) {
                    if let Some(h) = f.exact_div(&g) {
                        return Ok(IrredVerdict::reducible(g, h, Method::Kronecker));
                    }
                }
            }
            // advance odometer
            for slot in 0..needed {
                idx[slot] += 1;
                if idx[slot] < radix[slot] {
                    continue 'tuples;
                }
                idx[slot] = 0;
            }
            break;
        }
    }
    Ok(IrredVerdict::irreducible(Method::Kronecker))
}

/// Exact Lagrange interpolation through distinct sample points.
fn interpolate(points: &[(Rat, Rat)]) -> Option<IntPoly> {
    let mut acc = IntPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = IntPoly::one();
        let mut denom = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&IntPoly::new(vec![-xj.clone(), Rat::one()]));
            denom = denom * (xi - xj);
        }
        if denom.is_zero() {
            return None;
        }
        acc = acc.add(&basis.scale(&(yi / &denom)));
    }
    Some(acc)
}

/// Keep interpolants that can possibly divide a monic integer polynomial:
/// integer coefficients, degree in [1, d], leading coefficient ±1
/// (normalized to monic).
fn normalize_candidate(cand: IntPoly, d: usize) -> Option<IntPoly> {
    let deg = cand.degree()?;
    if deg < 1 || deg > d || !cand.is_integer() {
        return None;
    }
    let lead = cand.leading().expect("nonzero");
    if lead.is_one() {
        Some(cand)
    } else if (-lead).is_one() {
        Some(cand.neg())
    } else {
        None
    }
}

/// Full irreducibility decision over Q with default configuration.
pub fn is_irreducible_q(f: &IntPoly) -> Result<IrredVerdict> {
    is_irreducible_q_with(f, &IrredConfig::default())
}

pub fn is_irreducible_q_with(f: &IntPoly, cfg: &IrredConfig) -> Result<IrredVerdict> {
    let deg = require_monic_integer(f)?;
    if deg == 1 {
        return Ok(IrredVerdict::irreducible(Method::RationalRoot));
    }

    for p in primes_below(cfg.eisenstein_bound + 1) {
        if eisenstein_check(f, p)? {
            return Ok(IrredVerdict::irreducible(Method::Eisenstein(p)));
        }
    }

    let roots = rational_roots(f)?;
    if let Some(r) = roots.first() {
        // A rational root of a monic integer polynomial is an integer.
        let g = IntPoly::new(vec![-r.clone(), Rat::one()]);
        let h = f.exact_div(&g).expect("verified root divides");
        return Ok(IrredVerdict::reducible(g, h, Method::RationalRoot));
    }
    if deg <= 3 {
        // Any factorization of degree 2 or 3 would contain a linear factor.
        return Ok(IrredVerdict::irreducible(Method::RationalRoot));
    }

    for p in primes_below(cfg.modp_bound + 1) {
        if FpPoly::trial_division_cost(p, deg) > cfg.modp_cost_budget {
            continue;
        }
        // f is monic, so reduction mod p preserves the degree and the
        // leading coefficient is never divisible by p.
        let fp = FpPoly::from_int_poly(f, p)?;
        if fp.is_irreducible()? {
            return Ok(IrredVerdict::irreducible(Method::ModP(p)));
        }
    }

    kronecker_factor_with(f, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_rat;

    #[test]
    fn eisenstein_spec_examples() {
        assert!(eisenstein_check(&IntPoly::from_i64(&[2, 0, 0, 1]), 2).unwrap());
        assert!(!eisenstein_check(&IntPoly::from_i64(&[4, 0, 1]), 2).unwrap());
        assert!(!eisenstein_check(&IntPoly::from_i64(&[-1, 0, 1]), 2).unwrap());
        assert!(eisenstein_check(&IntPoly::from_i64(&[2, 0, 1]), 4).is_err());
        assert!(eisenstein_check(&IntPoly::from_i64(&[2, 0, 2]), 2).is_err());
    }

    #[test]
    fn rational_roots_spec_examples() {
        let roots = rational_roots(&IntPoly::from_i64(&[-1, 0, 1])).unwrap();
        assert_eq!(roots, vec![parse_rat("-1").unwrap(), parse_rat("1").unwrap()]);
        assert!(rational_roots(&IntPoly::from_i64(&[1, 0, 1])).unwrap().is_empty());
        let roots = rational_roots(&IntPoly::from_i64(&[-3, 2])).unwrap();
        assert_eq!(roots, vec![parse_rat("3/2").unwrap()]);
        // roots at zero come from the stripped power of t
        let roots = rational_roots(&IntPoly::from_i64(&[0, -1, 0, 1])).unwrap();
        assert_eq!(
            roots,
            vec![parse_rat("-1").unwrap(), parse_rat("0").unwrap(), parse_rat("1").unwrap()]
        );
    }

    #[test]
    fn kronecker_spec_examples() {
        let v = kronecker_factor(&IntPoly::from_i64(&[-1, 0, 1])).unwrap();
        assert_eq!(v.verdict, Verdict::Reducible);
        let (g, h) = v.witness.unwrap();
        assert_eq!(g.mul(&h), IntPoly::from_i64(&[-1, 0, 1]));

        let v = kronecker_factor(&IntPoly::from_i64(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(v.verdict, Verdict::Irreducible);

        let v = kronecker_factor(&IntPoly::from_i64(&[1, -3, 1])).unwrap();
        assert_eq!(v.verdict, Verdict::Irreducible);
    }

    #[test]
    fn kronecker_rejects_oversized_degree() {
        let mut coeffs = vec![0i64; 10];
        coeffs[0] = 3;
        coeffs[9] = 1;
        assert!(matches!(
            kronecker_factor(&IntPoly::from_i64(&coeffs)),
            Err(Error::DegreeTooLarge { degree: 9, cap: 8 })
        ));
    }

    #[test]
    fn pipeline_spec_examples() {
        let v = is_irreducible_q(&IntPoly::from_i64(&[3, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(v.method, Method::Eisenstein(3));
        assert!(v.is_irreducible());

        let v = is_irreducible_q(&IntPoly::from_i64(&[1, 0, 1])).unwrap();
        assert!(v.is_irreducible());
        assert_eq!(v.method, Method::RationalRoot);

        // t^4 + 1 is reducible mod every prime: only Kronecker decides.
        let v = is_irreducible_q(&IntPoly::from_i64(&[1, 0, 0, 0, 1])).unwrap();
        assert!(v.is_irreducible());
        assert_eq!(v.method, Method::Kronecker);
    }

    #[test]
    fn pipeline_factors_products() {
        let g = IntPoly::from_i64(&[1, 2, 1, 1]);
        let h = IntPoly::from_i64(&[-3, 0, 1]);
        let f = g.mul(&h);
        let v = is_irreducible_q(&f).unwrap();
        assert_eq!(v.verdict, Verdict::Reducible);
        let (a, b) = v.witness.unwrap();
        assert_eq!(a.mul(&b), f);
    }

    #[test]
    fn pipeline_rejects_bad_inputs() {
        assert!(matches!(is_irreducible_q(&IntPoly::zero()), Err(Error::ZeroPolynomial)));
        assert!(matches!(
            is_irreducible_q(&IntPoly::from_i64(&[1, 2])),
            Err(Error::NonMonic)
        ));
        let half = IntPoly::new(vec![parse_rat("1/2").unwrap(), parse_rat("1").unwrap()]);
        assert!(matches!(is_irreducible_q(&half), Err(Error::NonIntegerCoefficients)));
    }

    #[test]
    fn eisenstein_implies_pipeline_irreducible() {
        for (coeffs, p) in [
            (vec![2i64, 0, 1], 2u64),
            (vec![5, 0, 0, 1], 5),
            (vec![6, 2, 4, 1], 2),
            (vec![3, 6, 3, 0, 1], 3),
        ] {
            let f = IntPoly::from_i64(&coeffs);
            if eisenstein_check(&f, p).unwrap() {
                assert!(is_irreducible_q(&f).unwrap().is_irreducible(), "f={f}");
            }
        }
    }

    #[test]
    fn modp_and_kronecker_agree() {
        // Polynomials where a mod-p certificate exists: force both paths and
        // compare verdicts.
        for coeffs in [
            vec![1i64, 1, 0, 0, 1], // t^4 + t + 1, irreducible
            vec![1, 0, 1, 0, 1],    // t^4 + t^2 + 1 = (t^2+t+1)(t^2-t+1)
            vec![-2, 0, 0, 0, 1],   // t^4 - 2
            vec![2, 3, 1, 2, 1],
        ] {
            let f = IntPoly::from_i64(&coeffs);
            let kron = kronecker_factor(&f).unwrap();
            let pipe = is_irreducible_q(&f).unwrap();
            assert_eq!(pipe.verdict, kron.verdict, "f={f}");
        }
    }
}
