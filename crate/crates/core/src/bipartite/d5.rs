use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::params::BetaParams;
use crate::arith::{folk_decompose, int, is_square, notsquare_check, QuadraticNumber, Rational};
use crate::certificate::{Evidence, RefutationCertificate, Stage};
use crate::error::{Error, Result};

/// The two admissible values of `theta_2` for diameter 5 with `c_2 = 1`,
/// computed from `q` directly and from `t = beta^2 + beta - 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta2Candidates {
    pub beta: BetaParams,
    /// `2 theta_2` from the closed form in `q`, `+` branch first.
    pub q_form: [QuadraticNumber; 2],
    /// `2 theta_2 = t +- sqrt(t^2 - 4)`.
    pub t_form: [QuadraticNumber; 2],
    pub theta2: [QuadraticNumber; 2],
}

pub fn theta2_candidates_d5(q: &Rational) -> Result<Theta2Candidates> {
    if q.abs() <= Rational::one() {
        return Err(Error::Precondition(format!("|q| = |{q}| must exceed 1")));
    }
    let p = |e: i32| q.pow(e);
    let lead = p(4) + p(3) + q + int(1);
    let radicand = (p(2) + int(1)) * (p(2) + q + int(1)) * (p(4) + p(3) - int(2) * p(2) + q + int(1));
    let root = QuadraticNumber::sqrt(&radicand)?;
    let q2 = QuadraticNumber::from_rational(p(2));
    let lead = QuadraticNumber::from_rational(lead);
    let q_form = [&(&lead + &root) / &q2, &(&lead - &root) / &q2];

    let beta = BetaParams::from_q(q)?;
    let t = QuadraticNumber::from_rational(beta.t.clone());
    let troot = QuadraticNumber::sqrt(&(&beta.t * &beta.t - int(4)))?;
    let t_form = [&t + &troot, &t - &troot];
    if q_form != t_form {
        return Err(Error::IdentityViolated(format!(
            "2 theta_2 at q = {q}: [{}, {}] vs [{}, {}]",
            q_form[0], q_form[1], t_form[0], t_form[1]
        )));
    }
    let half = QuadraticNumber::from_rational(Rational::new(BigInt::one(), BigInt::from(2)));
    let theta2 = [&t_form[0] * &half, &t_form[1] * &half];
    for th in &theta2 {
        let inv = th.inv().ok_or(Error::Invariant("theta_2 = 0".into()))?;
        if &(th + &inv) != &t {
            return Err(Error::IdentityViolated(format!("theta_2 + 1/theta_2 != t at q = {q}")));
        }
    }
    Ok(Theta2Candidates {
        beta,
        q_form,
        t_form,
        theta2,
    })
}

/// How a value of `theta_2` was ruled out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum D5Route {
    /// `theta_2 <= 0`.
    Positivity,
    /// `gcd in {1, 4}`: `4 theta_2^2 + 9 theta_2 + 4` would have to be a
    /// perfect square, and it is not.
    PerfectSquare { value: BigInt, floor_root: BigInt },
    /// `gcd = 2`: the cofactors are not both squares. When `theta_2 / 2`
    /// is a square (so its root is odd) the other cofactor is 3 mod 4.
    Rationality {
        cofactor_m: BigInt,
        cofactor_n: BigInt,
        cofactor_n_square: bool,
        residue_mod4: u8,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D5Witness {
    pub theta2: i64,
    /// `(theta_2^2 + 1) / theta_2`, absent when `theta_2 = 0`.
    pub t: Option<Rational>,
    /// `4 theta_2^2 + 9 theta_2 + 4`
    pub m: BigInt,
    /// `gcd(m, theta_2)`
    pub gcd: BigInt,
    pub route: D5Route,
}

impl D5Witness {
    pub fn stage(&self) -> Stage {
        match self.route {
            D5Route::Positivity => Stage::D5Theta2Positivity,
            D5Route::PerfectSquare { .. } => Stage::D5PerfectSquare,
            D5Route::Rationality { .. } => Stage::D5Rationality,
        }
    }

    /// `4t + 9 = m / theta_2`.
    pub fn four_t_plus_nine(&self) -> Option<Rational> {
        (self.theta2 != 0).then(|| Rational::new(self.m.clone(), BigInt::from(self.theta2)))
    }
}

/// Refutes `c_2 = 1` at diameter 5 for one integral `theta_2`. Every step
/// is computed: the gcd is checked to lie in `{1, 2, 4}` and the squareness
/// tests are run, so a sweep over `theta_2` doubles as a check of the
/// number theory.
pub fn d5_refute_c2_1(theta2: i64) -> Result<RefutationCertificate> {
    let w = d5_witness(theta2)?;
    Ok(RefutationCertificate::new(w.stage(), None, Evidence::D5(w)))
}

pub(crate) fn d5_witness(theta2: i64) -> Result<D5Witness> {
    let th = BigInt::from(theta2);
    let m: BigInt = BigInt::from(4) * &th * &th + BigInt::from(9) * &th + 4;
    let gcd = m.gcd(&th);
    if theta2 <= 0 {
        let t = (theta2 != 0).then(|| Rational::new(&th * &th + 1, th.clone()));
        return Ok(D5Witness {
            theta2,
            t,
            m,
            gcd,
            route: D5Route::Positivity,
        });
    }
    let t = Some(Rational::new(&th * &th + 1, th.clone()));
    if folk_decompose(&m, &th).is_ok() {
        return Err(Error::IdentityViolated(format!(
            "4t + 9 = {m}/{theta2} is a rational square"
        )));
    }
    let route = match gcd.to_u8() {
        Some(1) | Some(4) => {
            let check = notsquare_check(theta2 as u64);
            if check.is_square {
                return Err(Error::IdentityViolated(format!(
                    "4u^2 + 9u + 4 is a square at u = {theta2}"
                )));
            }
            D5Route::PerfectSquare {
                value: check.value,
                floor_root: check.floor_root,
            }
        }
        Some(2) => {
            let cofactor_m: BigInt = &m / 2;
            let cofactor_n: BigInt = &th / 2;
            let cofactor_n_square = is_square(&cofactor_n);
            let residue_mod4 = cofactor_m.mod_floor(&BigInt::from(4)).to_u8().expect("residue");
            if cofactor_n_square && residue_mod4 != 3 {
                return Err(Error::IdentityViolated(format!(
                    "theta_2 = {theta2}: m/2 = {cofactor_m} is {residue_mod4} mod 4"
                )));
            }
            D5Route::Rationality {
                cofactor_m,
                cofactor_n,
                cofactor_n_square,
                residue_mod4,
            }
        }
        _ => {
            return Err(Error::IdentityViolated(format!(
                "gcd(4 theta_2^2 + 9 theta_2 + 4, theta_2) = {gcd} outside {{1, 2, 4}}"
            )))
        }
    };
    Ok(D5Witness {
        theta2,
        t,
        m,
        gcd,
        route,
    })
}

impl D5Witness {
    /// Recomputes the witness and compares.
    pub fn verify(&self) -> bool {
        match d5_witness(self.theta2) {
            Ok(w) => &w == self && self.consistent(),
            Err(_) => false,
        }
    }

    fn consistent(&self) -> bool {
        match &self.route {
            D5Route::Positivity => self.theta2 <= 0,
            D5Route::PerfectSquare { value, floor_root } => {
                value == &self.m
                    && floor_root * floor_root < *value
                    && (floor_root + 1u32) * (floor_root + 1u32) > *value
            }
            D5Route::Rationality {
                cofactor_m,
                cofactor_n,
                cofactor_n_square,
                residue_mod4,
            } => {
                !(is_square(cofactor_m) && *cofactor_n_square)
                    && (!*cofactor_n_square || *residue_mod4 == 3)
                    && !cofactor_m.is_zero()
                    && cofactor_n.is_positive()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn q2_forms() {
        let c = theta2_candidates_d5(&int(2)).unwrap();
        assert_eq!(c.beta.t, rat(27, 4));
        assert_eq!(c.q_form[0].to_string(), "(27+sqrt(665))/4");
        assert_eq!(c.q_form[1].to_string(), "(27-sqrt(665))/4");
        let inv = theta2_candidates_d5(&rat(1, 2));
        assert!(inv.is_err());
        let neg = theta2_candidates_d5(&int(-3)).unwrap();
        assert_eq!(neg.beta.beta, rat(-10, 3));
        // q = -3/2 has t < 2: no real theta_2.
        assert!(theta2_candidates_d5(&rat(-3, 2)).is_err());
    }

    #[test]
    fn small_theta2() {
        let w = d5_witness(1).unwrap();
        assert_eq!(w.m, BigInt::from(17));
        assert_eq!(w.stage(), Stage::D5PerfectSquare);
        let w = d5_witness(2).unwrap();
        assert_eq!(w.four_t_plus_nine(), Some(int(19)));
        assert_eq!(w.stage(), Stage::D5Rationality);
        assert_eq!(d5_witness(0).unwrap().stage(), Stage::D5Theta2Positivity);
        assert_eq!(d5_witness(-3).unwrap().stage(), Stage::D5Theta2Positivity);
        assert!(w.verify());
    }

    #[test]
    fn square_cofactor_branch() {
        // theta_2 = 2 * 3^2: n/d = 9 is a square, so m/2 must be 3 mod 4.
        let w = d5_witness(18).unwrap();
        let D5Route::Rationality { cofactor_n_square, residue_mod4, .. } = w.route else {
            panic!("gcd is 2");
        };
        assert!(cofactor_n_square);
        assert_eq!(residue_mod4, 3);
    }

    #[test]
    fn doctored_witness_fails() {
        let mut w = d5_witness(5).unwrap();
        w.m += 1;
        assert!(!w.verify());
    }
}
