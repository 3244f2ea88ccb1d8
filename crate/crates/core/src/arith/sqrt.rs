//! Perfect-square and rational-square decisions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Returns `(floor(sqrt(n)), root^2 == n)`.
pub fn integer_sqrt(n: &BigInt) -> Result<(BigInt, bool)> {
    if n.is_negative() {
        return Err(Error::NegativeInput(n.to_string()));
    }
    let root = n.sqrt();
    let exact = &root * &root == *n;
    Ok((root, exact))
}

/// The decomposition `m = d a^2`, `n = d b^2` with `d = gcd(m, n)` and
/// `gcd(a, b) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FolkDecomposition {
    pub d: BigInt,
    pub a: BigInt,
    pub b: BigInt,
}

/// Splits `m` and `n` through their gcd. Succeeds exactly when `sqrt(m/n)`
/// is rational: after removing `d = gcd(m, n)` the cofactors are coprime,
/// so their ratio is a rational square only if each is an integer square.
pub fn folk_decompose(m: &BigInt, n: &BigInt) -> Result<FolkDecomposition> {
    if !m.is_positive() || !n.is_positive() {
        return Err(Error::Precondition(format!(
            "folk_decompose needs positive integers, got ({m}, {n})"
        )));
    }
    let d = m.gcd(n);
    let (a, a_exact) = integer_sqrt(&(m / &d))?;
    let (b, b_exact) = integer_sqrt(&(n / &d))?;
    if !(a_exact && b_exact) {
        return Err(Error::NotRationalSquare(format!("{m}/{n}")));
    }
    debug_assert!(a.gcd(&b) == BigInt::from(1));
    Ok(FolkDecomposition { d, a, b })
}

/// `Some(s)` with `s >= 0` and `s^2 = r`, or `None` when no rational root exists.
pub fn rational_square_root(r: &Rational) -> Result<Option<Rational>> {
    if r.is_negative() {
        return Err(Error::NegativeInput(r.to_string()));
    }
    if r.is_zero() {
        return Ok(Some(Rational::zero()));
    }
    match folk_decompose(r.numer(), r.denom()) {
        Ok(FolkDecomposition { a, b, .. }) => Ok(Some(Rational::new(a, b))),
        Err(Error::NotRationalSquare(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Outcome of testing whether `4u^2 + 9u + 4` is a perfect square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareCheck {
    pub value: BigInt,
    pub floor_root: BigInt,
    pub is_square: bool,
    pub witness_root: Option<BigInt>,
}

/// Evaluates `4u^2 + 9u + 4` and tests it for squareness. The answer is
/// computed, never assumed.
pub fn notsquare_check(u: u64) -> SquareCheck {
    if u < (1 << 60) {
        let u = u as u128;
        let value = 4 * u * u + 9 * u + 4;
        let root = value.isqrt();
        let is_square = root * root == value;
        return SquareCheck {
            value: BigInt::from(value),
            floor_root: BigInt::from(root),
            is_square,
            witness_root: is_square.then(|| BigInt::from(root)),
        };
    }
    let u = BigInt::from(u);
    let value: BigInt = BigInt::from(4) * &u * &u + BigInt::from(9) * &u + 4;
    let (root, is_square) = integer_sqrt(&value).expect("value is positive");
    SquareCheck {
        witness_root: is_square.then(|| root.clone()),
        value,
        floor_root: root,
        is_square,
    }
}

/// `(8u + 9)^2 - (4 alpha)^2 == 17`, the rewriting of `4u^2 + 9u + 4 = alpha^2`.
pub fn difference_of_squares_identity(u: &BigInt, alpha: &BigInt) -> bool {
    let lhs: BigInt = BigInt::from(8) * u + 9;
    let rhs: BigInt = BigInt::from(4) * alpha;
    &lhs * &lhs - &rhs * &rhs == BigInt::from(17)
}

/// True when `n` is a perfect square (negative numbers never are).
pub fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && integer_sqrt(n).map(|(_, e)| e).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn integer_sqrt_examples() {
        assert_eq!(integer_sqrt(&b(4)).unwrap(), (b(2), true));
        assert_eq!(integer_sqrt(&b(17)).unwrap(), (b(4), false));
        // 79 * 79 by repeated addition.
        let square: i64 = (0..79).map(|_| 79).sum();
        assert_eq!(square, 6241);
        assert_eq!(integer_sqrt(&b(6241)).unwrap(), (b(79), true));
        assert!(matches!(integer_sqrt(&b(-1)), Err(Error::NegativeInput(_))));
        assert_eq!(integer_sqrt(&b(0)).unwrap(), (b(0), true));
    }

    #[test]
    fn rational_square_root_examples() {
        assert_eq!(rational_square_root(&rat(4, 1)).unwrap(), Some(rat(2, 1)));
        assert_eq!(rational_square_root(&rat(17, 1)).unwrap(), None);
        // (4*9 + 27 + 4) / 3
        assert_eq!(rational_square_root(&rat(67, 3)).unwrap(), None);
        assert_eq!(rational_square_root(&rat(9, 49)).unwrap(), Some(rat(3, 7)));
        assert!(rational_square_root(&rat(-1, 4)).is_err());
    }

    #[test]
    fn folk_decompose_examples() {
        let f = folk_decompose(&b(12), &b(3)).unwrap();
        assert_eq!((f.d, f.a, f.b), (b(3), b(2), b(1)));
        let f = folk_decompose(&b(4), &b(1)).unwrap();
        assert_eq!((f.d, f.a, f.b), (b(1), b(2), b(1)));
        let f = folk_decompose(&b(8), &b(2)).unwrap();
        assert_eq!((f.d, f.a, f.b), (b(2), b(2), b(1)));
        assert!(matches!(
            folk_decompose(&b(38), &b(2)),
            Err(Error::NotRationalSquare(_))
        ));
        assert!(folk_decompose(&b(0), &b(2)).is_err());
    }

    #[test]
    fn notsquare_examples() {
        let c = notsquare_check(0);
        assert!(c.is_square);
        assert_eq!(c.witness_root, Some(b(2)));
        assert!(difference_of_squares_identity(&b(0), &b(2)));
        let c = notsquare_check(1);
        assert_eq!(c.value, b(17));
        assert!(!c.is_square && c.witness_root.is_none());
        let c = notsquare_check(100);
        assert_eq!(c.value, b(40904));
        assert_eq!(c.floor_root, b(202));
        assert!(!c.is_square);
        // Large inputs take the big-integer path.
        let c = notsquare_check(1 << 62);
        assert!(!c.is_square);
        assert!(&c.floor_root * &c.floor_root <= c.value);
    }
}
