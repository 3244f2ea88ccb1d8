//! A fast, rigorous multiplicity filter.
//!
//! Eigenvalues are bracketed with outward-rounded `f64` interval arithmetic
//! on the Sturm chain, and `n / S(theta)` is enclosed over each bracket the
//! same way. A bracket whose multiplicity enclosure misses every integer
//! yields a witness that [`MultiplicityWitness::verify`] re-checks with
//! exact rational intervals, evaluating the same expression. Because exact
//! interval operations are never wider than the rounded ones, a valid
//! screen result always re-verifies.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::isolate::Jacobi;
use super::{characteristic_polynomial, vertex_count};
use crate::arith::{sign, Rational, RationalInterval};
use crate::array::IntersectionArray;

/// Where the offending eigenvalue sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenBracket {
    Integer(i64),
    /// The characteristic polynomial changes sign on `[lo, hi]`.
    Bracket { lo: Rational, hi: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultiplicityValue {
    Exact(Rational),
    Enclosure(RationalInterval),
}

/// Evidence that some eigenvalue has a multiplicity that is not a positive
/// integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityWitness {
    /// Position in the decreasing spectrum.
    pub index: usize,
    pub eigenvalue: EigenBracket,
    pub multiplicity: MultiplicityValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScreenOutcome {
    NonIntegral(MultiplicityWitness),
    /// Every multiplicity enclosure contains an integer.
    Plausible,
    /// Floating-point brackets could not be certified; use the exact path.
    Inconclusive,
}

impl fmt::Display for EigenBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenBracket::Integer(r) => write!(f, "{r}"),
            EigenBracket::Bracket { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

impl fmt::Display for MultiplicityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiplicityValue::Exact(r) => write!(f, "{r}"),
            MultiplicityValue::Enclosure(iv) => {
                write!(f, "[{}, {}]", iv.lo(), iv.hi())
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Fi {
    lo: f64,
    hi: f64,
}

impl Fi {
    fn point(x: f64) -> Fi {
        Fi { lo: x, hi: x }
    }

    fn add(self, o: Fi) -> Fi {
        Fi {
            lo: (self.lo + o.lo).next_down(),
            hi: (self.hi + o.hi).next_up(),
        }
    }

    fn sub(self, o: Fi) -> Fi {
        Fi {
            lo: (self.lo - o.hi).next_down(),
            hi: (self.hi - o.lo).next_up(),
        }
    }

    fn mul(self, o: Fi) -> Fi {
        let p = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let lo = p.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Fi {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }

    /// Division by a positive exact constant.
    fn div_pos(self, c: f64) -> Fi {
        Fi {
            lo: (self.lo / c).next_down(),
            hi: (self.hi / c).next_up(),
        }
    }

    /// `c / self` for positive `self` and `c`.
    fn recip_scaled(self, c: f64) -> Option<Fi> {
        if self.lo <= 0.0 {
            return None;
        }
        Some(Fi {
            lo: (c / self.hi).next_down(),
            hi: (c / self.lo).next_up(),
        })
    }

    fn sign(self) -> Option<i8> {
        if !(self.lo.is_finite() && self.hi.is_finite()) {
            None
        } else if self.lo > 0.0 {
            Some(1)
        } else if self.hi < 0.0 {
            Some(-1)
        } else {
            None
        }
    }
}

struct FloatChain {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl FloatChain {
    fn new(array: &IntersectionArray) -> Option<Self> {
        let d = array.diameter();
        let off: Vec<f64> = (1..=d)
            .map(|m| (array.b(m - 1) * array.c(m)) as f64)
            .collect();
        if off.iter().any(|&v| v >= 9.0e15) {
            return None;
        }
        Some(FloatChain {
            diag: (0..=d).map(|i| array.a(i) as f64).collect(),
            off,
        })
    }

    /// Eigenvalues above `x`, if every minor has a certified sign.
    fn above(&self, x: f64) -> Option<usize> {
        let xp = Fi::point(x);
        let mut prev = Fi::point(1.0);
        let mut cur = xp.sub(Fi::point(self.diag[0]));
        let mut last = cur.sign()?;
        let mut changes = usize::from(last < 0);
        for m in 1..self.diag.len() {
            let next = xp
                .sub(Fi::point(self.diag[m]))
                .mul(cur)
                .sub(Fi::point(self.off[m - 1]).mul(prev));
            prev = cur;
            cur = next;
            let s = cur.sign()?;
            if s != last {
                changes += 1;
            }
            last = s;
        }
        Some(changes)
    }

    fn top_sign(&self, x: f64) -> Option<i8> {
        let xp = Fi::point(x);
        let mut prev = Fi::point(1.0);
        let mut cur = xp.sub(Fi::point(self.diag[0]));
        for m in 1..self.diag.len() {
            let next = xp
                .sub(Fi::point(self.diag[m]))
                .mul(cur)
                .sub(Fi::point(self.off[m - 1]).mul(prev));
            prev = cur;
            cur = next;
        }
        cur.sign()
    }
}

/// Screens the multiplicities of `array`. Only arrays with integral shell
/// sizes are screened; others come back inconclusive.
pub fn multiplicity_screen(array: &IntersectionArray) -> ScreenOutcome {
    let Some(ctx) = ScreenContext::new(array) else {
        return ScreenOutcome::Inconclusive;
    };
    let k = array.valency() as i64;
    let total = array.diameter() + 1;
    let ints = Jacobi::new(array).integer_roots(k);

    let mut brackets: Vec<(f64, f64)> = Vec::new();
    if ints.len() < total {
        let Some(chain) = FloatChain::new(array) else {
            return ScreenOutcome::Inconclusive;
        };
        let lo0 = -(k as f64) - 0.5;
        let hi0 = k as f64 + 0.5;
        let mut stack = vec![(lo0, hi0, total, 0usize)];
        while let Some((lo, hi, above_lo, above_hi)) = stack.pop() {
            let ints_inside = ints
                .iter()
                .filter(|&&r| lo < r as f64 && (r as f64) < hi)
                .count();
            let Some(irrational) = above_lo
                .checked_sub(above_hi)
                .and_then(|inside| inside.checked_sub(ints_inside))
            else {
                return ScreenOutcome::Inconclusive;
            };
            if irrational == 0 {
                continue;
            }
            if irrational == 1 && ints_inside == 0 {
                match refine(&chain, lo, hi) {
                    Some(b) => brackets.push(b),
                    None => return ScreenOutcome::Inconclusive,
                }
                continue;
            }
            if hi - lo < 1e-9 {
                return ScreenOutcome::Inconclusive;
            }
            let Some((mid, count)) = split_point(&chain, lo, hi) else {
                return ScreenOutcome::Inconclusive;
            };
            stack.push((lo, mid, above_lo, count));
            stack.push((mid, hi, count, above_hi));
        }
        if brackets.len() + ints.len() != total {
            return ScreenOutcome::Inconclusive;
        }
    }

    // Decreasing order over integer roots and brackets together.
    let mut all: Vec<(f64, EigenBracketF)> = ints
        .iter()
        .map(|&r| (r as f64, EigenBracketF::Integer(r)))
        .chain(brackets.iter().map(|&(lo, hi)| (lo, EigenBracketF::Bracket(lo, hi))))
        .collect();
    all.sort_by(|a, b| b.0.total_cmp(&a.0));

    for (index, (_, e)) in all.iter().enumerate() {
        let theta = match *e {
            EigenBracketF::Integer(r) => Fi::point(r as f64),
            EigenBracketF::Bracket(lo, hi) => Fi { lo, hi },
        };
        let Some(m) = ctx.multiplicity_f64(theta) else {
            return ScreenOutcome::Inconclusive;
        };
        if has_integer(m) {
            continue;
        }
        let witness = match *e {
            EigenBracketF::Integer(r) => MultiplicityWitness {
                index,
                eigenvalue: EigenBracket::Integer(r),
                multiplicity: MultiplicityValue::Exact(ctx.multiplicity_exact_at_int(r)),
            },
            EigenBracketF::Bracket(lo, hi) => {
                let lo = Rational::from_float(lo).expect("finite");
                let hi = Rational::from_float(hi).expect("finite");
                let iv = ctx.multiplicity_interval(&RationalInterval::new(lo.clone(), hi.clone()));
                MultiplicityWitness {
                    index,
                    eigenvalue: EigenBracket::Bracket { lo, hi },
                    multiplicity: MultiplicityValue::Enclosure(iv),
                }
            }
        };
        return ScreenOutcome::NonIntegral(witness);
    }
    ScreenOutcome::Plausible
}

enum EigenBracketF {
    Integer(i64),
    Bracket(f64, f64),
}

fn has_integer(m: Fi) -> bool {
    !(m.lo.is_finite() && m.hi.is_finite()) || m.lo.ceil() <= m.hi.floor() && m.hi >= 1.0
}

fn split_point(chain: &FloatChain, lo: f64, hi: f64) -> Option<(f64, usize)> {
    for nudge in [0.0, 0.0137, -0.0291, 0.0433, -0.0519] {
        let mid = lo + (hi - lo) * (0.5 + nudge);
        if mid <= lo || mid >= hi || mid.fract() == 0.0 {
            continue;
        }
        if let Some(c) = chain.above(mid) {
            return Some((mid, c));
        }
    }
    None
}

fn refine(chain: &FloatChain, mut lo: f64, mut hi: f64) -> Option<(f64, f64)> {
    let s_lo = chain.top_sign(lo)?;
    let s_hi = chain.top_sign(hi)?;
    if s_lo == s_hi {
        return None;
    }
    for _ in 0..64 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 1e-12 * (1.0 + lo.abs()) {
            break;
        }
        match chain.top_sign(mid) {
            Some(s) if s == s_lo => lo = mid,
            Some(_) => hi = mid,
            None => break,
        }
    }
    Some((lo, hi))
}

/// Shared evaluation of `n / S(theta)` with `S = sum_l v_l^2 / k_l`.
struct ScreenContext {
    a: Vec<i64>,
    b: Vec<u64>,
    c: Vec<u64>,
    shells: Vec<Rational>,
    n: Rational,
    shells_f: Vec<f64>,
    n_f: f64,
}

impl ScreenContext {
    fn new(array: &IntersectionArray) -> Option<Self> {
        let d = array.diameter();
        let shells = array.shell_sizes();
        if shells.iter().any(|k| !k.is_integer() || k.numer() >= &BigInt::from(1u64 << 52)) {
            return None;
        }
        let n = vertex_count(array);
        if n.numer() >= &BigInt::from(1u64 << 52) {
            return None;
        }
        let shells_f = shells.iter().map(|k| k.to_integer().to_f64().unwrap()).collect();
        let n_f = n.to_integer().to_f64().unwrap();
        Some(ScreenContext {
            a: (0..=d).map(|i| array.a(i)).collect(),
            b: (0..=d).map(|i| array.b(i)).collect(),
            c: (0..=d).map(|i| array.c(i)).collect(),
            shells,
            n,
            shells_f,
            n_f,
        })
    }

    fn multiplicity_f64(&self, theta: Fi) -> Option<Fi> {
        let d = self.a.len() - 1;
        let mut v = vec![Fi::point(1.0), theta];
        for j in 1..d {
            let t = theta
                .sub(Fi::point(self.a[j] as f64))
                .mul(v[j])
                .sub(Fi::point(self.b[j - 1] as f64).mul(v[j - 1]));
            v.push(t.div_pos(self.c[j + 1] as f64));
        }
        let mut s = Fi::point(0.0);
        for (vl, kl) in v.iter().take(d + 1).zip(&self.shells_f) {
            s = s.add(vl.mul(*vl).div_pos(*kl));
        }
        s.recip_scaled(self.n_f)
    }

    /// The same expression in exact interval arithmetic.
    fn multiplicity_interval(&self, theta: &RationalInterval) -> RationalInterval {
        let d = self.a.len() - 1;
        let pt = |r: Rational| RationalInterval::point(r);
        let q = |n: i64| Rational::from_integer(BigInt::from(n));
        let mut v = vec![pt(Rational::one()), theta.clone()];
        for j in 1..d {
            let t = &(&(theta - &pt(q(self.a[j]))) * &v[j]) - &(&pt(q(self.b[j - 1] as i64)) * &v[j - 1]);
            v.push(&t * &pt(q(self.c[j + 1] as i64).recip()));
        }
        let mut s = pt(Rational::zero());
        for (vl, kl) in v.iter().take(d + 1).zip(&self.shells) {
            s = &s + &(&(vl * vl) * &pt(kl.recip()));
        }
        let inv = s.recip().expect("S >= 1 on any real input");
        &pt(self.n.clone()) * &inv
    }

    fn multiplicity_exact_at_int(&self, r: i64) -> Rational {
        let iv = self.multiplicity_interval(&RationalInterval::point(Rational::from_integer(BigInt::from(r))));
        iv.lo().clone()
    }
}

/// Builds a witness for the eigenvalue at `index` from an exact bracket,
/// provided it re-verifies.
pub(crate) fn witness_from_bracket(
    array: &IntersectionArray,
    index: usize,
    bracket: EigenBracket,
) -> Option<MultiplicityWitness> {
    let ctx = ScreenContext::new(array)?;
    let multiplicity = match &bracket {
        EigenBracket::Integer(r) => MultiplicityValue::Exact(ctx.multiplicity_exact_at_int(*r)),
        EigenBracket::Bracket { lo, hi } => MultiplicityValue::Enclosure(
            ctx.multiplicity_interval(&RationalInterval::new(lo.clone(), hi.clone())),
        ),
    };
    let w = MultiplicityWitness {
        index,
        eigenvalue: bracket,
        multiplicity,
    };
    w.verify(array).then_some(w)
}

impl MultiplicityWitness {
    /// Re-derives the claim from scratch with exact arithmetic.
    pub fn verify(&self, array: &IntersectionArray) -> bool {
        let Some(ctx) = ScreenContext::new(array) else {
            return false;
        };
        let jacobi = Jacobi::new(array);
        match (&self.eigenvalue, &self.multiplicity) {
            (EigenBracket::Integer(r), MultiplicityValue::Exact(m)) => {
                let k = array.valency() as i64;
                r.abs() <= k
                    && jacobi.sign_at_int(*r) == 0
                    && &ctx.multiplicity_exact_at_int(*r) == m
                    && !(m.is_integer() && m.is_positive())
            }
            (EigenBracket::Bracket { lo, hi }, MultiplicityValue::Enclosure(_)) => {
                if lo > hi {
                    return false;
                }
                let p = characteristic_polynomial(array);
                let (s_lo, s_hi) = (sign(&p.eval(lo)), sign(&p.eval(hi)));
                if s_lo * s_hi != -1 {
                    return false;
                }
                let m = ctx.multiplicity_interval(&RationalInterval::new(lo.clone(), hi.clone()));
                m.integer_span().is_none()
            }
            _ => false,
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
    fn feasible_families_pass() {
        for a in [
            arr("{3,2,2;1,1,3}"),
            IntersectionArray::odd_graph(3),
            IntersectionArray::hypercube(6),
            IntersectionArray::folded_cube(7),
            arr("{3,2,2,2;1,1,1,3}"),
        ] {
            assert_eq!(multiplicity_screen(&a), ScreenOutcome::Plausible, "{a}");
        }
    }

    #[test]
    fn moore_graph_diameter_three_fails_and_reverifies() {
        let a = arr("{3,2,2;1,1,1}");
        let ScreenOutcome::NonIntegral(w) = multiplicity_screen(&a) else {
            panic!("expected a refutation");
        };
        assert!(w.verify(&a));
        // A doctored bracket must not verify.
        let mut bad = w.clone();
        if let EigenBracket::Bracket { lo, .. } = &mut bad.eigenvalue {
            *lo = Rational::from_integer(BigInt::from(3)) + Rational::one();
        }
        assert!(!bad.verify(&a));
    }

    #[test]
    fn integer_eigenvalue_with_fractional_multiplicity() {
        // {4,3,3;1,1,3}: a_3 = 1, spectrum contains integers whose
        // multiplicities are fractional.
        let a = arr("{4,3,3;1,1,3}");
        match multiplicity_screen(&a) {
            ScreenOutcome::NonIntegral(w) => assert!(w.verify(&a)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
