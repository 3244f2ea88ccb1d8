use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rational_to_f64, squarefree_decompose, Rational, RationalInterval};
use crate::error::{Error, Result};

/// `a + b*sqrt(d)` with rational `a`, `b` and squarefree `d >= 2`, or a plain
/// rational (stored with `b = 0`, `d = 0`).
///
/// Arithmetic between two irrational numbers with different radicands has no
/// representation here and panics; use [`QuadraticNumber::common_radicand`]
/// to test compatibility first. Comparison works across radicands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    d: BigInt,
}

impl QuadraticNumber {
    /// Builds `a + b*sqrt(radicand)`, pulling square factors out of the
    /// radicand.
    pub fn new(a: Rational, b: Rational, radicand: BigInt) -> Result<Self> {
        if radicand.is_negative() {
            return Err(Error::NegativeInput(format!("radicand {radicand}")));
        }
        if b.is_zero() || radicand.is_zero() {
            return Ok(Self::from_rational(a));
        }
        let (square, free) = squarefree_decompose(radicand.magnitude());
        let b = b * Rational::from_integer(BigInt::from(square));
        if free.is_one() {
            Ok(Self::from_rational(a + b))
        } else {
            Ok(QuadraticNumber {
                a,
                b,
                d: BigInt::from(free),
            })
        }
    }

    /// `sqrt(r)` for a non-negative rational.
    pub fn sqrt(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::NegativeInput(r.to_string()));
        }
        // sqrt(p/q) = sqrt(p q) / q
        let coeff = Rational::new(BigInt::one(), r.denom().clone());
        Self::new(Rational::zero(), coeff, r.numer() * r.denom())
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadraticNumber {
            a,
            b: Rational::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_coefficient(&self) -> &Rational {
        &self.b
    }

    /// The squarefree radicand, `0` for rationals.
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.a.is_integer()
    }

    /// The radicand shared by `self` and `other` (`0` when both are
    /// rational), or `None` when they live in different quadratic fields.
    pub fn common_radicand(&self, other: &Self) -> Option<BigInt> {
        if self.d.is_zero() {
            Some(other.d.clone())
        } else if other.d.is_zero() || self.d == other.d {
            Some(self.d.clone())
        } else {
            None
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadraticNumber {
            a: self.a.clone(),
            b: -&self.b,
            d: self.d.clone(),
        }
    }

    /// Field norm `a^2 - b^2 d`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.clone())
    }

    /// Exact sign, decided from the signs of the two parts and, when they
    /// disagree, by comparing `a^2` with `b^2 d`.
    pub fn signum(&self) -> i8 {
        let sa = super::sign(&self.a);
        let sb = super::sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        match (&self.a * &self.a).cmp(&(&self.b * &self.b * Rational::from_integer(self.d.clone())))
        {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Self::canonical(&self.a / &n, -&self.b / &n, self.d.clone()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Encloses the value in an interval of width at most `2^-bits * (|b| + 1)`.
    pub fn enclose(&self, bits: u32) -> RationalInterval {
        if self.is_rational() {
            return RationalInterval::point(self.a.clone());
        }
        let scale = BigInt::one() << bits;
        let s = (&self.d * &scale * &scale).sqrt();
        let lo = Rational::new(s.clone(), scale.clone());
        let hi = Rational::new(s + 1, scale);
        let root = RationalInterval::new(lo, hi);
        let b = RationalInterval::point(self.b.clone());
        let a = RationalInterval::point(self.a.clone());
        &a + &(&b * &root)
    }

    pub fn to_f64(&self) -> f64 {
        let d = rational_to_f64(&Rational::from_integer(self.d.clone()));
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * d.sqrt()
    }

    fn canonical(a: Rational, b: Rational, d: BigInt) -> Self {
        if b.is_zero() || d.is_zero() {
            Self::from_rational(a)
        } else {
            QuadraticNumber { a, b, d }
        }
    }

    fn field_with(&self, other: &Self) -> BigInt {
        self.common_radicand(other).unwrap_or_else(|| {
            panic!(
                "arithmetic across quadratic fields: sqrt({}) and sqrt({})",
                self.d, other.d
            )
        })
    }
}

impl Zero for QuadraticNumber {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadraticNumber {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl From<Rational> for QuadraticNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.field_with(rhs);
        QuadraticNumber::canonical(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.field_with(rhs);
        QuadraticNumber::canonical(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        if rhs.is_rational() {
            return QuadraticNumber::canonical(&self.a * &rhs.a, &self.b * &rhs.a, self.d.clone());
        }
        if self.is_rational() {
            return QuadraticNumber::canonical(&self.a * &rhs.a, &self.a * &rhs.b, rhs.d.clone());
        }
        let d = self.field_with(rhs);
        let dr = Rational::from_integer(d.clone());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dr;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadraticNumber::canonical(a, b, d)
    }
}

impl Div for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn div(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        if let Some(r) = rhs.to_rational() {
            assert!(!r.is_zero(), "division by zero");
            return QuadraticNumber::canonical(&self.a / &r, &self.b / &r, self.d.clone());
        }
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber {
            a: -&self.a,
            b: -&self.b,
            d: self.d.clone(),
        }
    }
}

impl Neg for QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $m(self, rhs: QuadraticNumber) -> QuadraticNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QuadraticNumber> for QuadraticNumber {
            type Output = QuadraticNumber;
            fn $m(self, rhs: &QuadraticNumber) -> QuadraticNumber {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.common_radicand(other).is_some() {
            return (self - other).signum().cmp(&0);
        }
        // Irrationals from different fields never coincide, so refining
        // enclosures separates them.
        let mut bits = 32;
        loop {
            let x = self.enclose(bits);
            let y = other.enclose(bits);
            if x.hi() < y.lo() {
                return Ordering::Less;
            }
            if y.hi() < x.lo() {
                return Ordering::Greater;
            }
            bits *= 2;
        }
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let den = self.a.denom().lcm(self.b.denom());
        let num_a = self.a.numer() * (&den / self.a.denom());
        let num_b = self.b.numer() * (&den / self.b.denom());
        let surd = |coef: &BigInt| -> String {
            if coef.magnitude().is_one() {
                format!("sqrt({})", self.d)
            } else {
                format!("{}*sqrt({})", coef.magnitude(), self.d)
            }
        };
        let body = if num_a.is_zero() {
            let sign = if num_b.sign() == Sign::Minus { "-" } else { "" };
            format!("{sign}{}", surd(&num_b))
        } else {
            let op = if num_b.sign() == Sign::Minus { "-" } else { "+" };
            format!("{num_a}{op}{}", surd(&num_b))
        };
        if den.is_one() {
            write!(f, "{body}")
        } else if num_a.is_zero() {
            write!(f, "{body}/{den}")
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn q(a: Rational, b: Rational, d: i64) -> QuadraticNumber {
        QuadraticNumber::new(a, b, BigInt::from(d)).unwrap()
    }

    #[test]
    fn canonical_forms() {
        let x = q(int(1), int(1), 8);
        assert_eq!(x.radicand(), &BigInt::from(2));
        assert_eq!(x.surd_coefficient(), &int(2));
        assert_eq!(q(int(1), int(3), 4), QuadraticNumber::from_integer(7));
        assert!(QuadraticNumber::new(int(0), int(1), BigInt::from(-2)).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(QuadraticNumber::from_integer(14).to_string(), "14");
        assert_eq!(q(int(0), int(1), 2).to_string(), "sqrt(2)");
        assert_eq!(q(int(0), int(-1), 2).to_string(), "-sqrt(2)");
        assert_eq!(q(rat(79, 512), rat(-1, 512), 5985).to_string(), "(79-3*sqrt(665))/512");
        assert_eq!(q(int(0), rat(1, 2), 3).to_string(), "sqrt(3)/2");
        assert_eq!(q(int(1), int(-2), 3).to_string(), "1-2*sqrt(3)");
    }

    #[test]
    fn signs_and_order() {
        assert_eq!(q(int(3), int(-2), 2).signum(), 1); // 3 - 2.83
        assert_eq!(q(int(3), int(-3), 2).signum(), -1);
        assert_eq!(q(int(-3), int(3), 2).signum(), 1);
        let s2 = q(int(0), int(1), 2);
        let s3 = q(int(0), int(1), 3);
        assert!(s2 < s3);
        assert!(QuadraticNumber::from_integer(2) > s3);
        assert!(-s2.clone() < QuadraticNumber::from_integer(-1));
    }

    #[test]
    fn inverse() {
        let x = q(int(1), int(1), 2);
        assert_eq!(&x * &x.inv().unwrap(), QuadraticNumber::one());
        assert_eq!(&x / &x, QuadraticNumber::one());
        assert!(QuadraticNumber::zero().inv().is_none());
    }

    #[test]
    fn enclosure_contains_value() {
        let x = q(rat(79, 512), rat(-1, 512), 5985);
        let e = x.enclose(64);
        let v = x.to_f64();
        assert!(crate::arith::rational_to_f64(e.lo()) <= v + 1e-15);
        assert!(crate::arith::rational_to_f64(e.hi()) >= v - 1e-15);
        assert!(e.width() < rat(1, 1 << 50));
    }

    proptest! {
        #[test]
        fn conjugate_product_is_norm(
            an in -1000i64..1000, ad in 1i64..50,
            bn in -1000i64..1000, bd in 1i64..50,
            d in 2i64..500,
        ) {
            let x = q(rat(an, ad), rat(bn, bd), d);
            let y = q(rat(an, ad), rat(-bn, bd), d);
            let product = &x * &y;
            let a = rat(an, ad);
            let b = rat(bn, bd);
            let expected = &a * &a - &b * &b * int(d);
            prop_assert_eq!(product, QuadraticNumber::from_rational(expected));
        }

        #[test]
        fn sign_matches_float(
            an in -1000i64..1000, bn in -1000i64..1000, d in 2i64..500,
        ) {
            let x = q(int(an), int(bn), d);
            let f = an as f64 + bn as f64 * (d as f64).sqrt();
            if f.abs() > 1e-6 {
                prop_assert_eq!(x.signum() as f64, f.signum());
            }
        }
    }
}
