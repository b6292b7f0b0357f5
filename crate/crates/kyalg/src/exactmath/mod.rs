//! Exact rational arithmetic, univariate polynomials over ℚ, rational
//! functions and polynomial matrices.
//!
//! Nothing in this module uses floating point.  Determinants come in several
//! independent flavours (evaluation/interpolation over ℚ, multi-modular,
//! fraction-free elimination, cofactor expansion) so that they can be checked
//! against each other.

mod det;
mod field;
mod matrix;
mod modular;
mod parse;
mod poly;
mod ratfunc;
mod smith;

pub use det::{
    det_auto, det_bareiss_poly, det_cofactor, det_poly, det_rational, interpolate, DET_AUTO_EXACT_LIMIT,
};
pub use field::{AlgebraicField, Field, FieldElem, RationalField};
pub use matrix::{rank_over, nullspace_over, PolyMatrix};
pub use modular::{det_modular, hadamard_bound_sq};
pub use parse::parse_poly;
pub use poly::{poly_gcd, poly_nth_root, Poly};
pub use ratfunc::RatFunc;
pub use smith::smith_invariants;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

/// Exact rational number (always in lowest terms, positive denominator).
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MathError {
    #[error("gcd undefined: both inputs are zero")]
    GcdUndefined,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division (nonzero remainder)")]
    Inexact,
    #[error("not an exact {d}-th power: mismatch at coefficient index {index}")]
    NotAPower { d: u32, index: usize },
    #[error("cofactor oracle limited to {limit}x{limit}, got {size}x{size}")]
    TooLarge { size: usize, limit: usize },
    #[error("element is not invertible modulo the defining polynomial")]
    NotInvertible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, MathError>;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational (panics on `d == 0`).
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Format as `"num/den"`, or `"num"` for integers.
pub fn rat_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parse `"num"` or `"num/den"`.
pub fn rat_from_str(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || MathError::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(MathError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Least common multiple of the denominators of `qs` (1 for an empty list).
pub fn denominator_lcm<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num::Integer;
    let mut l = BigInt::one();
    for q in qs {
        if !q.denom().is_one() {
            l = l.lcm(q.denom());
        }
    }
    l
}

/// Sign of a rational as -1, 0, 1.
pub fn rat_sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
