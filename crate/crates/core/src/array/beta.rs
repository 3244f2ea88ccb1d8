//! The one-parameter family of almost-bipartite diameter-3 arrays indexed by
//! an integer `beta < -2`, and the shell-size test that rules it out when
//! `c_2 = 1`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::IntersectionArray;
use crate::arith::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaFamilyCandidate {
    pub beta: i64,
    pub c2: u64,
    /// `k = 1 + (beta^2 - 1)(beta(beta + 2) - (beta + 1) c_2)`
    pub valency_k: BigInt,
    /// `c_3 = -(beta + 1)(beta^2 + beta - 1 - (beta + 1) c_2)`
    pub c3: BigInt,
    /// `k_3 = k (k - 1)(k - c_2) / (c_2 c_3)`
    pub k3: Rational,
    /// `(3 beta + 4) / (beta^2 - 2)`
    pub divisibility_witness: Rational,
}

impl BetaFamilyCandidate {
    /// The array `{k, k-1, k-c_2; 1, c_2, c_3}` (requires `a_1 = a_2 = 0`).
    pub fn array(&self) -> Option<IntersectionArray> {
        let k = self.valency_k.to_u64()?;
        let c3 = self.c3.to_u64()?;
        IntersectionArray::new(vec![k, k - 1, k - self.c2], vec![1, self.c2, c3]).ok()
    }
}

pub fn beta_family(beta: i64, c2: u64) -> Result<BetaFamilyCandidate> {
    if beta >= -2 {
        return Err(Error::BetaOutOfRange(beta));
    }
    if c2 == 0 {
        return Err(Error::Precondition("c_2 must be positive".into()));
    }
    let b = BigInt::from(beta);
    let c = BigInt::from(c2);
    let one = BigInt::from(1);
    let k: BigInt = &one + (&b * &b - 1) * (&b * (&b + 2) - (&b + 1) * &c);
    let c3: BigInt = (-&b - &one) * (&b * &b + &b - &one - (&b + &one) * &c);
    let k3 = Rational::new(&k * (&k - 1) * (&k - &c), &c * &c3);
    let divisibility_witness = Rational::new(BigInt::from(3) * &b + 4, &b * &b - 2);
    Ok(BetaFamilyCandidate {
        beta,
        c2,
        valency_k: k,
        c3,
        k3,
        divisibility_witness,
    })
}

/// The member of the family matching `array`, if any. Only diameter-3
/// arrays with `a_1 = a_2 = 0` can match.
pub fn find_beta(array: &IntersectionArray) -> Option<BetaFamilyCandidate> {
    if array.diameter() != 3 || array.a(1) != 0 || array.a(2) != 0 {
        return None;
    }
    let k = BigInt::from(array.valency());
    let c2 = array.c(2);
    let c3 = BigInt::from(array.c(3));
    for beta in (i64::MIN / 2..=-3).rev() {
        let cand = beta_family(beta, c2).ok()?;
        if cand.valency_k > k {
            return None;
        }
        if cand.valency_k == k && cand.c3 == c3 {
            return Some(cand);
        }
    }
    None
}

/// Both evaluations of `k_3` for `c_2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K3Identity {
    /// `-1 - 5b + 7b^3 - 6b^4 - 7b^5 + 5b^6 + 3b^7 - 2b^8 - b^9`
    pub polynomial_part: BigInt,
    /// `-(3b + 4)/(b^2 - 2)`
    pub correction: Rational,
    /// `b_0 (b_0 - 1)^2 / c_3`
    pub k3: Rational,
}

const K3_POLY: [i64; 10] = [-1, -5, 0, 7, -6, -7, 5, 3, -2, -1];

pub fn beta_family_k3_identity_check(beta: i64) -> Result<K3Identity> {
    if beta > -3 {
        return Err(Error::BetaOutOfRange(beta));
    }
    let cand = beta_family(beta, 1)?;
    let b = BigInt::from(beta);
    let polynomial_part = K3_POLY
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, &c| acc * &b + c);
    let correction = -cand.divisibility_witness.clone();
    let k = &cand.valency_k;
    let direct = Rational::new(k * (k - 1) * (k - 1), cand.c3.clone());
    let via_poly = Rational::from_integer(polynomial_part.clone()) + &correction;
    if direct != via_poly {
        return Err(Error::IdentityViolated(format!(
            "k_3 at beta = {beta}: direct {direct} vs polynomial {via_poly}"
        )));
    }
    Ok(K3Identity {
        polynomial_part,
        correction,
        k3: direct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn family_members() {
        let m = beta_family(-3, 1).unwrap();
        assert_eq!(m.valency_k, BigInt::from(41));
        assert_eq!(m.c3, BigInt::from(14));
        assert_eq!(m.k3, rat(32800, 7));
        assert_eq!(m.divisibility_witness, rat(-5, 7));
        assert_eq!(m.array().unwrap().to_string(), "{41,40,40;1,1,14}");

        let m = beta_family(-4, 1).unwrap();
        assert_eq!(m.valency_k, BigInt::from(166));
        assert_eq!(m.c3, BigInt::from(42));
        assert_eq!(m.divisibility_witness, rat(-4, 7));

        let m = beta_family(-3, 2).unwrap();
        assert_eq!(m.valency_k, BigInt::from(57));
        assert_eq!(m.c3, BigInt::from(18));

        assert!(matches!(beta_family(-2, 1), Err(Error::BetaOutOfRange(-2))));
    }

    #[test]
    fn k3_identity() {
        let r = beta_family_k3_identity_check(-3).unwrap();
        assert_eq!(r.polynomial_part, BigInt::from(4685));
        assert_eq!(r.correction, rat(5, 7));
        assert_eq!(r.k3, rat(32800, 7));
        // Independent evaluation at beta = -4: 166 * 165^2 / 42.
        let r = beta_family_k3_identity_check(-4).unwrap();
        assert_eq!(r.k3, Rational::new(BigInt::from(166 * 165 * 165), BigInt::from(42)));
        assert!(beta_family_k3_identity_check(-10).is_ok());
        assert!(beta_family_k3_identity_check(-2).is_err());
    }

    #[test]
    fn matching() {
        let a: IntersectionArray = "{41,40,40;1,1,14}".parse().unwrap();
        assert_eq!(find_beta(&a).unwrap().beta, -3);
        let a: IntersectionArray = "{57,56,55;1,2,18}".parse().unwrap();
        assert_eq!(find_beta(&a).unwrap().beta, -3);
        let a: IntersectionArray = "{4,3,3;1,1,2}".parse().unwrap();
        assert!(find_beta(&a).is_none());
    }
}
