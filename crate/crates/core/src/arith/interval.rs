use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ceil, floor, Rational};

/// A closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        RationalInterval { lo, hi }
    }

    pub fn point(r: Rational) -> Self {
        RationalInterval { lo: r.clone(), hi: r }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn contains(&self, r: &Rational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Certified sign: `Some(1)` / `Some(-1)` when zero is excluded,
    /// `Some(0)` for the degenerate interval `[0, 0]`, `None` otherwise.
    pub fn signum(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(RationalInterval {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    /// The integers inside the interval, as an inclusive range `(first, last)`;
    /// `None` when there are none.
    pub fn integer_span(&self) -> Option<(BigInt, BigInt)> {
        let first = ceil(&self.lo);
        let last = floor(&self.hi);
        (first <= last).then_some((first, last))
    }

    /// Widens the endpoints outward to multiples of `2^-bits`, bounding the
    /// size of the endpoint denominators.
    pub fn round_out(&self, bits: u32) -> Self {
        let scale = Rational::from_integer(BigInt::one() << bits);
        let lo = Rational::new(floor(&(&self.lo * &scale)), scale.numer().clone());
        let hi = Rational::new(ceil(&(&self.hi * &scale)), scale.numer().clone());
        RationalInterval { lo, hi }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:.6e}, {:.6e}]",
            super::rational_to_f64(&self.lo),
            super::rational_to_f64(&self.hi)
        )
    }
}

impl Add for &RationalInterval {
    type Output = RationalInterval;
    fn add(self, rhs: &RationalInterval) -> RationalInterval {
        RationalInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &RationalInterval {
    type Output = RationalInterval;
    fn sub(self, rhs: &RationalInterval) -> RationalInterval {
        RationalInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &RationalInterval {
    type Output = RationalInterval;
    fn mul(self, rhs: &RationalInterval) -> RationalInterval {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().cloned().unwrap();
        let hi = products.iter().max().cloned().unwrap();
        RationalInterval { lo, hi }
    }
}

impl Neg for &RationalInterval {
    type Output = RationalInterval;
    fn neg(self) -> RationalInterval {
        RationalInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalInterval {
            type Output = RationalInterval;
            fn $m(self, rhs: RationalInterval) -> RationalInterval {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalInterval {
    type Output = RationalInterval;
    fn neg(self) -> RationalInterval {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn iv(a: i64, b: i64, c: i64, d: i64) -> RationalInterval {
        RationalInterval::new(rat(a, b), rat(c, d))
    }

    #[test]
    fn arithmetic_encloses() {
        let x = iv(-1, 2, 3, 1);
        let y = iv(2, 1, 5, 2);
        assert_eq!(&x * &y, iv(-5, 4, 15, 2));
        assert_eq!(&x - &y, iv(-3, 1, 1, 1));
        assert_eq!(x.signum(), None);
        assert_eq!(y.signum(), Some(1));
        assert_eq!(y.recip().unwrap(), iv(2, 5, 1, 2));
        assert!(x.recip().is_none());
    }

    #[test]
    fn rounding_is_outward() {
        let x = iv(1, 3, 2, 3);
        let r = x.round_out(4);
        assert!(r.lo() <= x.lo() && r.hi() >= x.hi());
        assert_eq!(r, iv(5, 16, 11, 16));
        assert_eq!(
            iv(1, 3, 7, 3).integer_span(),
            Some((BigInt::from(1), BigInt::from(2)))
        );
        assert_eq!(iv(1, 3, 2, 3).integer_span(), None);
    }
}
