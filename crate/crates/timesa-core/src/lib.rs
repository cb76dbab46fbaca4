//! Exact-arithmetic toolkit for strong independence of matrix tuples and for
//! the dynamics of ×A endomorphisms on the n-torus.
//!
//! The crate is organized around three layers:
//!
//! * [`exact`] and [`poly`] — arbitrary-precision rational and prime-field
//!   scalars, exact dense matrices, characteristic polynomials, and a complete
//!   irreducibility decision over Q for monic integer polynomials.
//! * [`si`] — certification of strongly independent matrices and n-tuples
//!   (a tuple (B₁,…,Bₙ) is strongly independent when B₁v,…,Bₙv are linearly
//!   independent for every nonzero v, equivalently when every nontrivial
//!   combination Σ uⱼBⱼ is invertible), plus a numeric dependency-witness
//!   finder over C where no strongly independent tuple can exist.
//! * [`torus`], [`ergodic`], [`rigidity`] — exact simulation of x ↦ xA on
//!   rational torus points, Fourier coefficients of atomic and Lebesgue
//!   measures, Følner-averaged ergodicity/mixing testers, and the
//!   finite-support enumeration that powers the measure-rigidity audit.
//!
//! Conventions: torus points are **row** vectors acted on by x ↦ xA; frequency
//! vectors are **columns** transformed by k ↦ Ak. All arithmetic that decides
//! anything is exact; floats appear only in Fourier values and in the complex
//! witness finder, and phases are reduced mod 1 exactly before any float
//! conversion.

pub mod ergodic;
pub mod exact;
pub mod poly;
pub mod rigidity;
pub mod si;
pub mod torus;

use std::fmt;

/// Crate-wide error type. Every variant maps to a stable machine code used by
/// the CLI's JSON error objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Inverse of a matrix with determinant zero was requested.
    SingularMatrix,
    /// Operands have incompatible dimensions.
    DimensionMismatch { expected: usize, found: usize },
    /// An operation requiring integer entries saw a proper fraction.
    NonIntegerEntries,
    /// An operation requiring integer coefficients saw a proper fraction.
    NonIntegerCoefficients,
    /// Polynomial is not monic where a monic one is required.
    NonMonic,
    /// The zero polynomial or an empty input where degree >= 1 is required.
    ZeroPolynomial,
    /// Degree exceeds the configured cap of the complete factorization.
    DegreeTooLarge { degree: usize, cap: usize },
    /// Modulus failed the primality check.
    NotPrime(u64),
    /// The zero matrix cannot be tested for strong independence.
    ZeroMatrix,
    /// Zero frequency vector where a nonzero one is required.
    ZeroFrequency,
    /// Orbit state space d^n exceeds the configured cap.
    OrbitBudgetExceeded { states: u128, cap: u128 },
    /// Pushforward of Lebesgue measure under a singular matrix.
    LebesgueSingularPush,
    /// An entry of A^j k grew past the configured bit cap.
    BitBudgetExceeded { bits: u64, cap: u64 },
    /// Lattice enumeration (2M+1)^n exceeds the configured cap.
    EnumerationBudget { needed: u128, cap: u128 },
    /// The column matrix L = [B₁k … Bₙk] is singular at this frequency.
    SingularL,
    /// The numeric witness search did not converge within its restarts.
    WitnessNotFound { restarts: u32 },
    /// Semigroup generation requires a certified strongly independent matrix.
    NotStronglyIndependent,
    /// Malformed input: bad JSON, bad number string, inconsistent fields.
    BadInput(String),
    /// A measure violating the atomic-measure invariants.
    InvalidMeasure(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI error object.
    pub fn code(&self) -> &'static str {
        match self {
            Error::SingularMatrix => "singular_matrix",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::NonIntegerEntries => "non_integer_entries",
            Error::NonIntegerCoefficients => "non_integer_coefficients",
            Error::NonMonic => "non_monic",
            Error::ZeroPolynomial => "zero_polynomial",
            Error::DegreeTooLarge { .. } => "degree_too_large",
            Error::NotPrime(_) => "not_prime",
            Error::ZeroMatrix => "zero_matrix",
            Error::ZeroFrequency => "zero_frequency",
            Error::OrbitBudgetExceeded { .. } => "orbit_budget_exceeded",
            Error::LebesgueSingularPush => "lebesgue_singular_push",
            Error::BitBudgetExceeded { .. } => "bit_budget_exceeded",
            Error::EnumerationBudget { .. } => "enumeration_budget",
            Error::SingularL => "singular_l",
            Error::WitnessNotFound { .. } => "witness_not_found",
            Error::NotStronglyIndependent => "not_strongly_independent",
            Error::BadInput(_) => "bad_input",
            Error::InvalidMeasure(_) => "invalid_measure",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NonIntegerEntries => write!(f, "matrix entries must be integers"),
            Error::NonIntegerCoefficients => {
                write!(f, "polynomial coefficients must be integers")
            }
            Error::NonMonic => write!(f, "polynomial must be monic"),
            Error::ZeroPolynomial => write!(f, "polynomial must have degree >= 1"),
            Error::DegreeTooLarge { degree, cap } => {
                write!(f, "degree {degree} exceeds factorization cap {cap}")
            }
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroMatrix => write!(f, "matrix must be nonzero"),
            Error::ZeroFrequency => write!(f, "frequency vector must be nonzero"),
            Error::OrbitBudgetExceeded { states, cap } => {
                write!(f, "orbit state space {states} exceeds cap {cap}")
            }
            Error::LebesgueSingularPush => {
                write!(f, "pushforward of Lebesgue measure under a singular matrix is a proper subtorus")
            }
            Error::BitBudgetExceeded { bits, cap } => {
                write!(f, "frequency entry of {bits} bits exceeds bit cap {cap}")
            }
            Error::EnumerationBudget { needed, cap } => {
                write!(f, "enumeration of {needed} lattice points exceeds cap {cap}")
            }
            Error::SingularL => {
                write!(f, "the column matrix [B1 k ... Bn k] is singular at this frequency")
            }
            Error::WitnessNotFound { restarts } => {
                write!(f, "no witness found after {restarts} restarts")
            }
            Error::NotStronglyIndependent => {
                write!(f, "matrix is not certified strongly independent")
            }
            Error::BadInput(msg) => write!(f, "bad input: {msg}"),
            Error::InvalidMeasure(msg) => write!(f, "invalid measure: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
