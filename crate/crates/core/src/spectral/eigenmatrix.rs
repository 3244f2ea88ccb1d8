use num_traits::{One, Zero};

use super::{standard_sequence, Spectrum};
use crate::arith::{QuadraticNumber, Rational};
use crate::error::{Error, Result};

/// The first and second eigenmatrices of the scheme, exact over the
/// spectrum's quadratic field. `P[i][j] = v_j(theta_i)` and `Q = n P^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenmatrixPair {
    n: Rational,
    p: Vec<Vec<QuadraticNumber>>,
    q: Vec<Vec<QuadraticNumber>>,
}

impl EigenmatrixPair {
    pub fn vertex_count(&self) -> &Rational {
        &self.n
    }

    pub fn p(&self) -> &[Vec<QuadraticNumber>] {
        &self.p
    }

    pub fn q(&self) -> &[Vec<QuadraticNumber>] {
        &self.q
    }

    /// `Q[0][i]`, the multiplicity of `theta_i`.
    pub fn multiplicities(&self) -> &[QuadraticNumber] {
        &self.q[0]
    }
}

pub fn eigenmatrices(spectrum: &Spectrum) -> Result<EigenmatrixPair> {
    let thetas = spectrum.exact_values().ok_or_else(|| {
        Error::Precondition("eigenvalues do not share a single quadratic field".into())
    })?;
    let array = spectrum.array();
    let seq = standard_sequence(array);
    let p: Vec<Vec<QuadraticNumber>> = thetas
        .iter()
        .map(|t| seq.iter().map(|v| v.eval(t)).collect())
        .collect();
    let n = array
        .shell_sizes()
        .iter()
        .fold(Rational::zero(), |acc, k| acc + k);
    let inv = invert(&p)?;
    let scale = QuadraticNumber::from_rational(n.clone());
    let q = inv
        .into_iter()
        .map(|row| row.into_iter().map(|x| &x * &scale).collect())
        .collect();
    Ok(EigenmatrixPair { n, p, q })
}

/// Gauss-Jordan inversion over a quadratic field.
pub(crate) fn invert(m: &[Vec<QuadraticNumber>]) -> Result<Vec<Vec<QuadraticNumber>>> {
    let size = m.len();
    let mut a: Vec<Vec<QuadraticNumber>> = m.to_vec();
    let mut inv: Vec<Vec<QuadraticNumber>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        QuadraticNumber::one()
                    } else {
                        QuadraticNumber::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pinv = a[col][col].inv().ok_or(Error::Singular)?;
        for j in 0..size {
            a[col][j] = &a[col][j] * &pinv;
            inv[col][j] = &inv[col][j] * &pinv;
        }
        for r in 0..size {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..size {
                let t = &f * &a[col][j];
                a[r][j] = &a[r][j] - &t;
                let t = &f * &inv[col][j];
                inv[r][j] = &inv[r][j] - &t;
            }
        }
    }
    Ok(inv)
}
