//! Root isolation for the intersection matrix.
//!
//! The leading principal minors of `xI - L` form a Sturm sequence for the
//! tridiagonal matrix `L` (its off-diagonal products `b_{m-1} c_m` are
//! positive), so the number of sign changes at `x` counts the eigenvalues
//! above `x`. Evaluation happens at dyadic points `N / 2^s` scaled by
//! `2^{s m}`, which keeps everything in integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{Rational, RationalInterval};
use crate::array::IntersectionArray;

/// The tridiagonal recurrence data of an intersection array.
#[derive(Debug, Clone)]
pub(crate) struct Jacobi {
    /// `a_0 .. a_D`.
    diag: Vec<i64>,
    /// `b_{m-1} c_m` for `m = 1..D`.
    off: Vec<i64>,
}

/// Where one eigenvalue lives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum RootEnclosure {
    Integer(i64),
    /// Open interval with dyadic endpoints holding exactly one irrational
    /// eigenvalue.
    Isolated(RationalInterval),
}

impl Jacobi {
    pub(crate) fn new(array: &IntersectionArray) -> Self {
        let d = array.diameter();
        Jacobi {
            diag: (0..=d).map(|i| array.a(i)).collect(),
            off: (1..=d)
                .map(|m| (array.b(m - 1) * array.c(m)) as i64)
                .collect(),
        }
    }

    pub(crate) fn size(&self) -> usize {
        self.diag.len()
    }

    /// Sign of `det(xI - L)` at an integer, in `i128` with a big-integer
    /// fallback on overflow. Zero exactly at integer eigenvalues.
    pub(crate) fn sign_at_int(&self, x: i64) -> i8 {
        match self.eval_int(x) {
            Some(v) => v.signum() as i8,
            None => self.sign_at(&BigInt::from(x), 0),
        }
    }

    /// `det(xI - L)` at an integer, `None` on `i128` overflow.
    pub(crate) fn eval_int(&self, x: i64) -> Option<i128> {
        let mut prev: i128 = 1;
        let mut cur: i128 = (x as i128).checked_sub(self.diag[0] as i128)?;
        for m in 1..self.diag.len() {
            let lin = (x as i128) - self.diag[m] as i128;
            let next = lin
                .checked_mul(cur)?
                .checked_sub((self.off[m - 1] as i128).checked_mul(prev)?)?;
            prev = cur;
            cur = next;
        }
        Some(cur)
    }

    /// The integer eigenvalues, in decreasing order. All eigenvalues lie in
    /// `[-k, k]` and rational ones are integers (monic integer polynomial).
    pub(crate) fn integer_roots(&self, k: i64) -> Vec<i64> {
        (-k..=k).rev().filter(|&x| self.sign_at_int(x) == 0).collect()
    }

    /// Sign changes of the scaled minor chain at `n / 2^s`, or `None` when
    /// the point is an eigenvalue.
    fn changes_above(&self, n: &BigInt, s: u32) -> Option<usize> {
        let one = BigInt::from(1) << s;
        let sq = BigInt::from(1) << (2 * s);
        let mut prev = BigInt::from(1);
        let mut cur = n - &one * self.diag[0];
        let mut changes = 0;
        let mut last_sign = 1i8;
        let note = |v: &BigInt, last: &mut i8, ch: &mut usize| {
            let sg = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if sg != 0 {
                if sg != *last {
                    *ch += 1;
                }
                *last = sg;
            }
        };
        note(&cur, &mut last_sign, &mut changes);
        for m in 1..self.diag.len() {
            let next = (n - &one * self.diag[m]) * &cur - &sq * self.off[m - 1] * &prev;
            prev = std::mem::replace(&mut cur, next);
            note(&cur, &mut last_sign, &mut changes);
        }
        if cur.is_zero() {
            None
        } else {
            Some(changes)
        }
    }

    /// Sign of `det(xI - L)` at `n / 2^s`.
    fn sign_at(&self, n: &BigInt, s: u32) -> i8 {
        let one = BigInt::from(1) << s;
        let sq = BigInt::from(1) << (2 * s);
        let mut prev = BigInt::from(1);
        let mut cur = n - &one * self.diag[0];
        for m in 1..self.diag.len() {
            let next = (n - &one * self.diag[m]) * &cur - &sq * self.off[m - 1] * &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        if cur.is_positive() {
            1
        } else if cur.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Isolates every eigenvalue. Irrational ones get intervals of width at
    /// most `2^-bits`. The result is in decreasing order.
    pub(crate) fn isolate(&self, k: i64, bits: u32) -> Vec<RootEnclosure> {
        let ints = self.integer_roots(k);
        let total = self.size();
        let mut out: Vec<RootEnclosure> = ints.iter().map(|&r| RootEnclosure::Integer(r)).collect();
        if ints.len() < total {
            // Endpoints +-(k + 1/2) at scale 1 are never eigenvalues.
            let mut stack = vec![Segment {
                lo: BigInt::from(-2 * k - 1),
                hi: BigInt::from(2 * k + 1),
                s: 1,
                above_lo: total,
                above_hi: 0,
            }];
            while let Some(seg) = stack.pop() {
                let inside = seg.above_lo - seg.above_hi;
                let ints_inside = ints
                    .iter()
                    .filter(|&&r| seg.contains_int(r))
                    .count();
                let irrational = inside - ints_inside;
                if irrational == 0 {
                    continue;
                }
                if irrational == 1 && ints_inside == 0 {
                    out.push(RootEnclosure::Isolated(self.refine(&seg, bits)));
                    continue;
                }
                let (mut mid, mut s) = (&seg.lo + &seg.hi, seg.s + 1);
                let count = match self.changes_above(&mid, s) {
                    Some(c) => c,
                    None => {
                        // Hit an integer eigenvalue: step a quarter-cell right.
                        mid = (mid << 1) + 1;
                        s += 1;
                        self.changes_above(&mid, s)
                            .expect("dyadic non-integer point cannot be an eigenvalue")
                    }
                };
                let lo = &seg.lo << (s - seg.s);
                let hi = &seg.hi << (s - seg.s);
                stack.push(Segment {
                    lo,
                    hi: mid.clone(),
                    s,
                    above_lo: seg.above_lo,
                    above_hi: count,
                });
                stack.push(Segment {
                    lo: mid,
                    hi,
                    s,
                    above_lo: count,
                    above_hi: seg.above_hi,
                });
            }
        }
        out.sort_by(|x, y| {
            y.lower_bound()
                .partial_cmp(&x.lower_bound())
                .expect("rationals are totally ordered")
        });
        out
    }

    /// Bisects a segment holding one simple irrational root down to width
    /// `2^-bits`.
    fn refine(&self, seg: &Segment, bits: u32) -> RationalInterval {
        let (mut lo, mut hi, mut s) = (seg.lo.clone(), seg.hi.clone(), seg.s);
        let lo_sign = self.sign_at(&lo, s);
        while s < bits + 1 || (&hi - &lo) > BigInt::from(1) << (s - bits) {
            let mid = &lo + &hi;
            s += 1;
            lo <<= 1;
            hi <<= 1;
            if self.sign_at(&mid, s) == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let den = BigInt::from(1) << s;
        RationalInterval::new(Rational::new(lo, den.clone()), Rational::new(hi, den))
    }
}

struct Segment {
    lo: BigInt,
    hi: BigInt,
    s: u32,
    above_lo: usize,
    above_hi: usize,
}

impl Segment {
    fn contains_int(&self, r: i64) -> bool {
        let scaled = BigInt::from(r) << self.s;
        self.lo < scaled && scaled < self.hi
    }
}

impl RootEnclosure {
    fn lower_bound(&self) -> Rational {
        match self {
            RootEnclosure::Integer(r) => Rational::from_integer(BigInt::from(*r)),
            RootEnclosure::Isolated(iv) => iv.lo().clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    #[test]
    fn heawood_roots() {
        let j = Jacobi::new(&arr("{3,2,2;1,1,3}"));
        assert_eq!(j.eval_int(3), Some(0));
        assert_eq!(j.eval_int(0), Some(18));
        assert_eq!(j.sign_at_int(1), 1);
        let roots = j.isolate(3, 30);
        assert_eq!(roots.len(), 4);
        assert_eq!(roots[0], RootEnclosure::Integer(3));
        assert_eq!(roots[3], RootEnclosure::Integer(-3));
        let RootEnclosure::Isolated(iv) = &roots[1] else {
            panic!("sqrt(2) is irrational")
        };
        let two = Rational::from_integer(BigInt::from(2));
        assert!(iv.lo() * iv.lo() < two && two < iv.hi() * iv.hi());
        assert!(iv.width() <= Rational::new(BigInt::from(1), BigInt::from(1u64 << 30)));
    }

    #[test]
    fn integral_spectrum_needs_no_bisection() {
        let j = Jacobi::new(&IntersectionArray::hypercube(5));
        assert_eq!(j.integer_roots(5), vec![5, 3, 1, -1, -3, -5]);
    }

    #[test]
    fn mixed_integer_and_irrational() {
        // Generalized octagon GO(1,2) incidence graph: +-3, +-2, 0.
        let j = Jacobi::new(&arr("{3,2,2,2;1,1,1,3}"));
        let roots = j.isolate(3, 20);
        assert_eq!(roots.len(), 5);
        assert_eq!(roots[2], RootEnclosure::Integer(0));
    }
}
