use num_traits::{One, Signed};

use super::params::{c_formula, h_value, sq_pow};
use crate::arith::{int, QuadraticNumber, Rational};
use crate::certificate::{Evidence, RefutationCertificate, Stage};
use crate::error::{Error, Result};

/// The two values of `s*` for which the parameterized `c_2` equals 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C2Criterion {
    pub q: Rational,
    pub d: usize,
    /// `1 + q - q^2 - q^{D-1} + q^D + q^{D+1}`
    pub alpha: Rational,
    /// `alpha^2 - 4 q^{D+1}`
    pub discriminant: Rational,
    /// `(alpha -+ sqrt(disc)) / (2 q^{D+3})`, smaller first.
    pub s_star_roots: (QuadraticNumber, QuadraticNumber),
}

pub(crate) fn alpha_of(q: &QuadraticNumber, d: usize) -> QuadraticNumber {
    let one = QuadraticNumber::one();
    let up = &(&(&one + q) - &q.pow(2)) - &q.pow(d as u32 - 1);
    &(&up + &q.pow(d as u32)) + &q.pow(d as u32 + 1)
}

/// `c_2 = 1` holds exactly when `q^{D+5} s*^2 - alpha q^2 s* + 1 = 0`.
/// Both roots are returned and substituted back into the `c_2` formula.
pub fn c2_equals_one_sstar(q: &Rational, d: usize) -> Result<C2Criterion> {
    if q.abs() <= Rational::one() {
        return Err(Error::Precondition(format!("|q| = |{q}| must exceed 1")));
    }
    if d < 5 {
        return Err(Error::Precondition(format!("diameter {d} < 5")));
    }
    let alpha = alpha_of(&QuadraticNumber::from_rational(q.clone()), d)
        .to_rational()
        .expect("rational q gives rational alpha");
    let discriminant = &alpha * &alpha - int(4) * q.pow(d as i32 + 1);
    if discriminant.is_negative() {
        return Err(Error::NegativeDiscriminant(discriminant.to_string()));
    }
    let root = QuadraticNumber::sqrt(&discriminant)?;
    let den = QuadraticNumber::from_rational(int(2) * q.pow(d as i32 + 3));
    let a = QuadraticNumber::from_rational(alpha.clone());
    let r1 = &(&a - &root) / &den;
    let r2 = &(&a + &root) / &den;
    let s_star_roots = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
    for s in [&s_star_roots.0, &s_star_roots.1] {
        if sq_pow(s, q, 5) == QuadraticNumber::one() {
            return Err(Error::ExcludedScalar(5));
        }
        let h = h_value(q, s, d)?;
        let c2 = c_formula(q, s, d, &h, 2);
        if c2 != QuadraticNumber::one() {
            return Err(Error::IdentityViolated(format!(
                "c_2 at s* = {s} is {c2}, not 1"
            )));
        }
    }
    Ok(C2Criterion {
        q: q.clone(),
        d,
        alpha,
        discriminant,
        s_star_roots,
    })
}

/// Everything needed to re-check that `c_2 = 1` is impossible for a given
/// `q > 1`. `q` may be irrational (in a quadratic field); the explicit
/// roots are then omitted and the comparison rests on the identity alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QBoundWitness {
    pub q: QuadraticNumber,
    pub d: usize,
    pub alpha: QuadraticNumber,
    pub discriminant: QuadraticNumber,
    /// `alpha q^{D-2} - 2`
    pub gap: QuadraticNumber,
    /// `gap^2 - q^{2D-4} (alpha^2 - 4 q^{D+1})`
    pub identity_lhs: QuadraticNumber,
    /// `4 (q^D + 1)(q^{D-1} - 1)(q^{D-2} - 1)`
    pub identity_rhs: QuadraticNumber,
    /// `q^{-2D-1}`, the strict upper bound on `s*` when `q > 1`.
    pub bound: QuadraticNumber,
    pub roots: Option<(QuadraticNumber, QuadraticNumber)>,
}

impl QBoundWitness {
    pub fn compute(q: &QuadraticNumber, d: usize) -> Result<Self> {
        if *q <= QuadraticNumber::one() {
            return Err(Error::Precondition(format!("q = {q} must exceed 1")));
        }
        if d < 5 {
            return Err(Error::Precondition(format!("diameter {d} < 5")));
        }
        let one = QuadraticNumber::one();
        let four = QuadraticNumber::from_integer(4);
        let two = QuadraticNumber::from_integer(2);
        let alpha = alpha_of(q, d);
        let discriminant = &(&alpha * &alpha) - &(&four * &q.pow(d as u32 + 1));
        let gap = &(&alpha * &q.pow(d as u32 - 2)) - &two;
        let identity_lhs = &(&gap * &gap) - &(&q.pow(2 * d as u32 - 4) * &discriminant);
        let identity_rhs = &(&(&four * &(&q.pow(d as u32) + &one)) * &(&q.pow(d as u32 - 1) - &one))
            * &(&q.pow(d as u32 - 2) - &one);
        let bound = q.inv().expect("q > 1").pow(2 * d as u32 + 1);
        let roots = match q.to_rational() {
            Some(qr) if discriminant.signum() >= 0 => Some(c2_equals_one_sstar(&qr, d)?.s_star_roots),
            _ => None,
        };
        Ok(QBoundWitness {
            q: q.clone(),
            d,
            alpha,
            discriminant,
            gap,
            identity_lhs,
            identity_rhs,
            bound,
            roots,
        })
    }

    /// True when the data rules out `c_2 = 1`: either no real `s*` exists,
    /// or the smaller root exceeds the bound. The latter is the chain
    /// `gap > 0` and `gap^2 - q^{2D-4} disc = rhs > 0`, which squares
    /// `alpha - sqrt(disc) > 2 q^{2-D}`.
    pub fn refutes(&self) -> bool {
        if self.discriminant.signum() < 0 {
            return true;
        }
        self.identity_lhs == self.identity_rhs
            && self.gap.signum() > 0
            && self.identity_rhs.signum() > 0
            && self
                .roots
                .as_ref()
                .is_none_or(|(lo, hi)| *lo > self.bound && *hi > self.bound)
    }
}

/// Certifies that no `s*` compatible with `q > 1` gives `c_2 = 1`.
pub fn q_gt1_exclusion(q: &QuadraticNumber, d: usize) -> Result<RefutationCertificate> {
    let w = QBoundWitness::compute(q, d)?;
    if w.identity_lhs != w.identity_rhs {
        return Err(Error::IdentityViolated(format!(
            "bound identity at q = {q}, D = {d}: {} != {}",
            w.identity_lhs, w.identity_rhs
        )));
    }
    if !w.refutes() {
        return Err(Error::IdentityViolated(format!(
            "q = {q}, D = {d}: the c_2 = 1 root does not exceed q^(-2D-1)"
        )));
    }
    Ok(RefutationCertificate::new(Stage::QGt1Bound, None, Evidence::QBound(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn q2_d5() {
        let c = c2_equals_one_sstar(&int(2), 5).unwrap();
        assert_eq!(c.alpha, int(79));
        assert_eq!(c.discriminant, int(5985));
        assert_eq!(c.s_star_roots.0.to_string(), "(79-3*sqrt(665))/512");
        assert_eq!(c.s_star_roots.1.to_string(), "(79+3*sqrt(665))/512");
    }

    #[test]
    fn q2_d6() {
        let c = c2_equals_one_sstar(&int(2), 6).unwrap();
        assert_eq!(c.alpha, int(159));
        assert_eq!(c.discriminant, int(24769));
        assert!(!c.s_star_roots.0.is_rational());
    }

    #[test]
    fn preconditions() {
        assert!(c2_equals_one_sstar(&rat(1, 2), 5).is_err());
        assert!(c2_equals_one_sstar(&int(2), 4).is_err());
        assert!(q_gt1_exclusion(&QuadraticNumber::from_integer(-2), 5).is_err());
    }

    #[test]
    fn bound_at_2_5() {
        let w = QBoundWitness::compute(&QuadraticNumber::from_integer(2), 5).unwrap();
        assert_eq!(w.identity_lhs, QuadraticNumber::from_integer(13860));
        assert_eq!(w.identity_rhs, QuadraticNumber::from_integer(13860));
        assert_eq!(w.gap, QuadraticNumber::from_integer(630));
        assert_eq!(w.bound, QuadraticNumber::from_rational(rat(1, 2048)));
        assert!(w.refutes());
    }

    #[test]
    fn irrational_q() {
        // beta = 3: q = (3 + sqrt 5)/2.
        let q = crate::bipartite::q_from_beta(&int(3)).unwrap();
        let cert = q_gt1_exclusion(&q, 6).unwrap();
        assert_eq!(cert.stage, Stage::QGt1Bound);
        assert!(cert.verify());
    }
}
