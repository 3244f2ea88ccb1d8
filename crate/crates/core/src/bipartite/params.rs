use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{int, Rational, QuadraticNumber};
use crate::array::IntersectionArray;
use crate::error::{Error, Result};

/// The scalars `(q, s*)` that parameterize a bipartite Q-polynomial array
/// of diameter `D >= 4` other than the cube and the folded cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaughmanParams {
    q: Rational,
    s_star: QuadraticNumber,
    d: usize,
    h: QuadraticNumber,
}

impl CaughmanParams {
    pub fn new(q: Rational, s_star: QuadraticNumber, d: usize) -> Result<Self> {
        if d < 4 {
            return Err(Error::Precondition(format!("diameter {d} < 4")));
        }
        if q.abs() <= Rational::one() {
            return Err(Error::Precondition(format!("|q| = |{q}| must exceed 1")));
        }
        for i in 2..=(2 * d + 1) as u32 {
            if sq_pow(&s_star, &q, i) == QuadraticNumber::one() {
                return Err(Error::ExcludedScalar(i));
            }
        }
        let h = h_value(&q, &s_star, d)?;
        Ok(CaughmanParams { q, s_star, d, h })
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn s_star(&self) -> &QuadraticNumber {
        &self.s_star
    }

    pub fn diameter(&self) -> usize {
        self.d
    }

    /// `h = (1 - s* q^3) / ((q - 1)(1 - s* q^{D+2}))`.
    pub fn h(&self) -> &QuadraticNumber {
        &self.h
    }

    /// `c_i` for `1 <= i <= D`.
    pub fn c(&self, i: usize) -> QuadraticNumber {
        c_formula(&self.q, &self.s_star, self.d, &self.h, i)
    }

    /// `b_i` for `0 <= i <= D - 1`.
    pub fn b(&self, i: usize) -> QuadraticNumber {
        let q = &self.q;
        let one = QuadraticNumber::one();
        let num = &(&self.h * &qn(&(q.pow(self.d as i32) - q.pow(i as i32))))
            * &(&one - &sq_pow(&self.s_star, q, i as u32 + 1));
        let den = &one - &sq_pow(&self.s_star, q, 2 * i as u32 + 1);
        &num / &den
    }

    /// `theta_i = h (q^{D-i} - q^i)`, in the Q-polynomial order.
    pub fn theta(&self, i: usize) -> QuadraticNumber {
        let q = &self.q;
        &self.h * &qn(&(q.pow((self.d - i) as i32) - q.pow(i as i32)))
    }
}

fn qn(r: &Rational) -> QuadraticNumber {
    QuadraticNumber::from_rational(r.clone())
}

/// `s* q^i`.
pub(crate) fn sq_pow(s: &QuadraticNumber, q: &Rational, i: u32) -> QuadraticNumber {
    s * &qn(&q.pow(i as i32))
}

pub(crate) fn h_value(q: &Rational, s: &QuadraticNumber, d: usize) -> Result<QuadraticNumber> {
    let one = QuadraticNumber::one();
    let num = &one - &sq_pow(s, q, 3);
    let den = &qn(&(q - Rational::one())) * &(&one - &sq_pow(s, q, d as u32 + 2));
    den.inv()
        .map(|inv| &num * &inv)
        .ok_or(Error::ExcludedScalar(d as u32 + 2))
}

/// `c_i = h (q^i - 1)(1 - s* q^{D+i+1}) / (1 - s* q^{2i+1})`.
pub(crate) fn c_formula(
    q: &Rational,
    s: &QuadraticNumber,
    d: usize,
    h: &QuadraticNumber,
    i: usize,
) -> QuadraticNumber {
    let one = QuadraticNumber::one();
    let num = &(h * &qn(&(q.pow(i as i32) - Rational::one())))
        * &(&one - &sq_pow(s, q, (d + i + 1) as u32));
    let den = &one - &sq_pow(s, q, 2 * i as u32 + 1);
    &num / &den
}

fn positive_integer(name: String, v: &QuadraticNumber) -> Result<u64> {
    let r = v.to_rational().ok_or_else(|| Error::NonIntegral {
        name: name.clone(),
        value: v.to_string(),
    })?;
    if !r.is_integer() {
        return Err(Error::NonIntegral {
            name,
            value: r.to_string(),
        });
    }
    if !r.is_positive() {
        return Err(Error::Nonpositive {
            name,
            value: r.to_string(),
        });
    }
    r.to_integer().to_u64().ok_or_else(|| Error::NonIntegral {
        name,
        value: r.to_string(),
    })
}

/// Builds the intersection array and eigenvalues `theta_0 .. theta_D`
/// (Q-polynomial order) from the parameters, insisting on positive integer
/// intersection numbers.
pub fn caughman_array(params: &CaughmanParams) -> Result<(IntersectionArray, Vec<QuadraticNumber>)> {
    let d = params.diameter();
    let k = &params.h * &qn(&(params.q.pow(d as i32) - Rational::one()));
    let k_int = positive_integer("k".into(), &k)?;
    let mut b = vec![k_int];
    for i in 1..d {
        b.push(positive_integer(format!("b_{i}"), &params.b(i))?);
    }
    let mut c = Vec::with_capacity(d);
    for i in 1..d {
        c.push(positive_integer(format!("c_{i}"), &params.c(i))?);
    }
    c.push(k_int);
    let array = IntersectionArray::new(b, c)?;
    let thetas = (0..=d).map(|i| params.theta(i)).collect();
    Ok((array, thetas))
}

/// `beta = q + 1/q` and `t = beta^2 + beta - 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaParams {
    pub beta: Rational,
    pub t: Rational,
}

impl BetaParams {
    pub fn from_q(q: &Rational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::Precondition("q = 0".into()));
        }
        Ok(Self::from_beta(q + q.recip()))
    }

    pub fn from_beta(beta: Rational) -> Self {
        let t = &beta * &beta + &beta - int(2);
        BetaParams { beta, t }
    }
}

/// `beta = (theta_1^2 + c_2 theta_1 + b_2 (k - 2)) / (b_2 (theta_1 + 1))`.
pub fn beta_from_spectrum(
    theta1: &QuadraticNumber,
    c2: &Rational,
    b2: &Rational,
    k: &Rational,
) -> Result<QuadraticNumber> {
    let one = QuadraticNumber::one();
    let den = &qn(b2) * &(theta1 + &one);
    let inv = den.inv().ok_or_else(|| {
        Error::Precondition(format!("theta_1 = {theta1} and b_2 = {b2}: theta_1 = -1 or b_2 = 0"))
    })?;
    let num = &(&(theta1 * theta1) + &(&qn(c2) * theta1)) + &qn(&(b2 * (k - int(2))));
    Ok(&num * &inv)
}

/// The root of `x^2 - beta x + 1` with `|x| > 1`, in `Q(sqrt(beta^2 - 4))`.
pub fn q_from_beta(beta: &Rational) -> Result<QuadraticNumber> {
    let disc = beta * beta - int(4);
    if !disc.is_positive() {
        return Err(Error::NegativeDiscriminant(format!(
            "beta = {beta}: |q| = 1 or q not real"
        )));
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let root = QuadraticNumber::sqrt(&disc)?;
    let sign = if beta.is_positive() { 1 } else { -1 };
    Ok(&qn(&(beta * &half)) + &(&root * &qn(&(half * int(sign)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn q2_s0_d5() {
        let p = CaughmanParams::new(int(2), QuadraticNumber::zero(), 5).unwrap();
        assert_eq!(p.h(), &QuadraticNumber::one());
        let (a, th) = caughman_array(&p).unwrap();
        assert_eq!(a.to_string(), "{31,30,28,24,16;1,3,7,15,31}");
        let th: Vec<String> = th.iter().map(|t| t.to_string()).collect();
        assert_eq!(th, ["31", "14", "4", "-4", "-14", "-31"]);
    }

    #[test]
    fn q2_s0_d4() {
        let p = CaughmanParams::new(int(2), QuadraticNumber::zero(), 4).unwrap();
        let (a, _) = caughman_array(&p).unwrap();
        assert_eq!(a.to_string(), "{15,14,12,8;1,3,7,15}");
        for i in 0..=4 {
            assert_eq!(a.b(i) + a.c(i), a.valency());
        }
    }

    #[test]
    fn excluded_scalar_rejected() {
        // s* q^3 = 1 at q = 2, s* = 1/8.
        let s = QuadraticNumber::from_rational(rat(1, 8));
        assert_eq!(CaughmanParams::new(int(2), s, 5), Err(Error::ExcludedScalar(3)));
    }

    #[test]
    fn beta_examples() {
        let b = beta_from_spectrum(&QuadraticNumber::from_integer(14), &int(3), &int(28), &int(31)).unwrap();
        assert_eq!(b, QuadraticNumber::from_rational(rat(5, 2)));
        assert!(beta_from_spectrum(&QuadraticNumber::from_integer(-1), &int(3), &int(28), &int(31)).is_err());
        assert_eq!(BetaParams::from_q(&int(2)).unwrap().t, rat(27, 4));
        assert_eq!(q_from_beta(&rat(5, 2)).unwrap(), QuadraticNumber::from_integer(2));
        assert_eq!(q_from_beta(&rat(-5, 2)).unwrap(), QuadraticNumber::from_integer(-2));
        assert!(q_from_beta(&int(2)).is_err());
    }

    #[test]
    fn non_integral_output_reported() {
        let p = CaughmanParams::new(rat(3, 2), QuadraticNumber::zero(), 4).unwrap();
        assert!(matches!(caughman_array(&p), Err(Error::NonIntegral { .. })));
    }
}
