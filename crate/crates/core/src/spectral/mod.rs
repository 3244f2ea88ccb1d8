//! Spectrum, eigenmatrices, Krein parameters and Q-polynomial orderings of
//! the association scheme attached to an intersection array.
//!
//! Everything runs exactly over `Q(sqrt d)` when the spectrum fits in one
//! quadratic field; otherwise Krein parameters fall back to rational
//! interval enclosures that never report an uncertified zero.

mod eigen;
mod eigenmatrix;
mod isolate;
mod krein;
mod qpoly;
mod screen;

pub use eigen::{
    characteristic_polynomial, eigenvalues, standard_values, Eigenvalue, Factor, Multiplicity,
    Spectrum,
};
pub use eigenmatrix::{eigenmatrices, EigenmatrixPair};
pub use krein::{
    defining_relation_holds, krein, krein_from_eigenmatrices, krein_with, KreinOptions,
    KreinTensor, KreinValue, ZeroStatus,
};
pub use qpoly::{q_polynomial_orderings, QPolynomialOrderings};
pub use screen::{
    multiplicity_screen, EigenBracket, MultiplicityValue, MultiplicityWitness, ScreenOutcome,
};

pub(crate) use screen::witness_from_bracket;
use isolate::Jacobi;

use num_traits::{One, Zero};

use crate::arith::{int, Poly, Rational};
use crate::array::IntersectionArray;

/// The tridiagonal intersection matrix `L` with `L[i][i] = a_i`,
/// `L[i-1][i] = b_{i-1}` and `L[i][i-1] = c_i`... stored transposed so
/// that row `i` reads `(c_i, a_i, b_i)`.
pub fn intersection_matrix(array: &IntersectionArray) -> Vec<Vec<i64>> {
    let d = array.diameter();
    let mut m = vec![vec![0i64; d + 1]; d + 1];
    for i in 0..=d {
        m[i][i] = array.a(i);
        if i > 0 {
            m[i][i - 1] = array.c(i) as i64;
        }
        if i < d {
            m[i][i + 1] = array.b(i) as i64;
        }
    }
    m
}

/// `v_0 .. v_D` with `v_0 = 1`, `v_1 = x` and
/// `c_{j+1} v_{j+1} = (x - a_j) v_j - b_{j-1} v_{j-1}`, so that
/// `v_j(theta) = P[theta][j]`.
pub fn standard_sequence(array: &IntersectionArray) -> Vec<Poly> {
    let d = array.diameter();
    let mut out = vec![Poly::constant(Rational::one())];
    if d >= 1 {
        out.push(Poly::x());
    }
    for j in 1..d {
        let t = &(&Poly::linear(&int(array.a(j))) * &out[j])
            - &out[j - 1].scale(&int(array.b(j - 1) as i64));
        out.push(t.scale(&int(array.c(j + 1) as i64).recip()));
    }
    out
}

/// `S(x) = sum_l v_l(x)^2 / k_l`; the multiplicity of an eigenvalue
/// `theta` is `n / S(theta)`.
pub fn multiplicity_sum(array: &IntersectionArray) -> Poly {
    let shells = array.shell_sizes();
    standard_sequence(array)
        .iter()
        .zip(&shells)
        .fold(Poly::zero(), |acc, (v, k)| &acc + &(v * v).scale(&k.recip()))
}

/// The integer eigenvalues of `array` in decreasing order, found by
/// evaluating the characteristic polynomial at every integer in `[-k, k]`.
/// Cheap enough to run before any exact spectral work.
pub fn integer_eigenvalues(array: &IntersectionArray) -> Vec<i64> {
    Jacobi::new(array).integer_roots(array.valency() as i64)
}

pub(crate) fn vertex_count(array: &IntersectionArray) -> Rational {
    array
        .shell_sizes()
        .iter()
        .fold(Rational::zero(), |acc, k| acc + k)
}
