//! Exact arithmetic: big rationals, the quadratic field `Q(sqrt(d))`,
//! rational intervals, dense polynomials and isolated real algebraic numbers.
//!
//! Nothing in this module touches floating point except the `to_f64`
//! helpers used for display.

mod algebraic;
mod interval;
mod poly;
mod quadratic;
mod sqrt;
mod squarefree;

pub use algebraic::IsolatedAlgebraic;
pub use interval::RationalInterval;
pub use poly::{Poly, Scalar};
pub use quadratic::QuadraticNumber;
pub use sqrt::{
    difference_of_squares_identity, folk_decompose, integer_sqrt, is_square, notsquare_check,
    rational_square_root, FolkDecomposition, SquareCheck,
};
pub use squarefree::{is_probable_prime, squarefree_decompose};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational as Rational;

use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as a reduced rational. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `base^exp` for a possibly negative exponent.
pub fn rpow(base: &Rational, exp: i32) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

/// Converts an integral rational to `i64`, if it fits.
pub fn to_i64(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.numer()).ok()
}

/// Floor of a rational.
pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// Ceiling of a rational.
pub fn ceil(r: &Rational) -> BigInt {
    -((-r.numer()).div_floor(r.denom()))
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = r.to_f64() {
        return v;
    }
    // Very large numerators and denominators: scale both down.
    let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
    let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
