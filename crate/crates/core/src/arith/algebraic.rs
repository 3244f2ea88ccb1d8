use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{sign, Poly, Rational, RationalInterval};
use crate::error::{Error, Result};

/// A real algebraic number given by its minimal polynomial and an interval
/// holding exactly one root of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedAlgebraic {
    min_poly: Vec<BigInt>,
    interval: RationalInterval,
}

impl IsolatedAlgebraic {
    /// `min_poly` is given in ascending order. The interval must contain
    /// exactly one root, checked with a Sturm sequence.
    pub fn new(min_poly: Vec<BigInt>, interval: RationalInterval) -> Result<Self> {
        let p = Poly::from_bigints(&min_poly);
        if p.degree().unwrap_or(0) == 0 {
            return Err(Error::Precondition("constant minimal polynomial".into()));
        }
        let roots = sturm_count(&p, interval.lo(), interval.hi())
            + usize::from(p.eval(interval.lo()).is_zero());
        if roots != 1 {
            return Err(Error::Precondition(format!(
                "interval {interval} holds {roots} roots of {p}"
            )));
        }
        Ok(IsolatedAlgebraic { min_poly, interval })
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn enclosure(&self) -> &RationalInterval {
        &self.interval
    }

    /// Bisects until the isolating interval is no wider than `width`.
    pub fn refine(&mut self, width: &Rational) {
        let p = Poly::from_bigints(&self.min_poly);
        let mut lo = self.interval.lo().clone();
        let mut hi = self.interval.hi().clone();
        let mut s_lo = sign(&p.eval(&lo));
        if s_lo == 0 {
            self.interval = RationalInterval::point(lo);
            return;
        }
        if sign(&p.eval(&hi)) == 0 {
            self.interval = RationalInterval::point(hi);
            return;
        }
        while &(&hi - &lo) > width {
            let mid = (&lo + &hi) / BigInt::from(2);
            let s = sign(&p.eval(&mid));
            if s == 0 {
                lo = mid.clone();
                hi = mid;
                break;
            }
            if s == s_lo {
                lo = mid;
                s_lo = s;
            } else {
                hi = mid;
            }
        }
        self.interval = RationalInterval::new(lo, hi);
    }

    pub fn refined(mut self, width: &Rational) -> Self {
        self.refine(width);
        self
    }

    pub fn to_f64(&self) -> f64 {
        super::rational_to_f64(&self.interval.midpoint())
    }
}

impl fmt::Display for IsolatedAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "root({}; {:.12})",
            Poly::from_bigints(&self.min_poly),
            self.to_f64()
        )
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`, from a Sturm chain.
pub fn sturm_count(p: &Poly, lo: &Rational, hi: &Rational) -> usize {
    let mut chain = vec![p.clone(), derivative(p)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    let changes = |x: &Rational| -> usize {
        let signs: Vec<i8> = chain
            .iter()
            .map(|q| sign(&q.eval(x)))
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    changes(lo).saturating_sub(changes(hi))
}

pub(crate) fn derivative(p: &Poly) -> Poly {
    Poly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect(),
    )
}
