use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::isolate::{Jacobi, RootEnclosure};
use super::{eigenmatrices, multiplicity_sum, standard_sequence};
use crate::arith::{
    int, IsolatedAlgebraic, Poly, QuadraticNumber, Rational, RationalInterval,
};
use crate::array::IntersectionArray;
use crate::error::{Error, Result};

/// Initial isolation precision in bits.
const START_BITS: u32 = 48;
/// Give up on resolving factor coefficients past this precision.
const MAX_BITS: u32 = 4096;

/// One eigenvalue, exact when it is rational or quadratic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Eigenvalue {
    Exact(QuadraticNumber),
    Algebraic(IsolatedAlgebraic),
}

impl Eigenvalue {
    pub fn as_exact(&self) -> Option<&QuadraticNumber> {
        match self {
            Eigenvalue::Exact(q) => Some(q),
            Eigenvalue::Algebraic(_) => None,
        }
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.as_exact()
            .and_then(|q| q.to_rational())
            .and_then(|r| crate::arith::to_i64(&r))
    }

    /// An enclosing interval of width roughly `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> RationalInterval {
        match self {
            Eigenvalue::Exact(q) => q.enclose(bits),
            Eigenvalue::Algebraic(a) => {
                let width = Rational::new(BigInt::one(), BigInt::one() << bits);
                if a.enclosure().width() <= width {
                    a.enclosure().clone()
                } else {
                    a.clone().refined(&width).enclosure().clone()
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Eigenvalue::Exact(q) => q.to_f64(),
            Eigenvalue::Algebraic(a) => a.to_f64(),
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Exact(q) => write!(f, "{q}"),
            Eigenvalue::Algebraic(a) => write!(f, "{a}"),
        }
    }
}

/// A multiplicity `n / S(theta)`. It is rational exactly when `S` reduces to
/// a constant modulo the minimal polynomial of `theta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multiplicity {
    Rational(Rational),
    Irrational(RationalInterval),
}

impl Multiplicity {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Multiplicity::Rational(r) => Some(r),
            Multiplicity::Irrational(_) => None,
        }
    }

    pub fn is_positive_integer(&self) -> bool {
        self.as_rational()
            .is_some_and(|r| r.is_integer() && r.is_positive())
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Rational(r) => write!(f, "{r}"),
            Multiplicity::Irrational(iv) => write!(f, "irrational {iv}"),
        }
    }
}

/// An irreducible factor of the characteristic polynomial together with
/// the indices of its roots in the spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub poly: Poly,
    pub roots: Vec<usize>,
}

/// The eigenvalues `theta_0 = k > theta_1 > ... > theta_D` of an
/// intersection array with their multiplicities.
#[derive(Debug, Clone)]
pub struct Spectrum {
    array: IntersectionArray,
    char_poly: Poly,
    eigenvalues: Vec<Eigenvalue>,
    multiplicities: Vec<Multiplicity>,
    factors: Vec<Factor>,
    field: Option<BigInt>,
}

impl Spectrum {
    pub fn array(&self) -> &IntersectionArray {
        &self.array
    }

    pub fn char_poly(&self) -> &Poly {
        &self.char_poly
    }

    /// Eigenvalues in decreasing order.
    pub fn eigenvalues(&self) -> &[Eigenvalue] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[Multiplicity] {
        &self.multiplicities
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// The squarefree radicand `d` when every eigenvalue lies in `Q(sqrt d)`
    /// (`Some(0)` for an integral spectrum), `None` otherwise.
    pub fn field(&self) -> Option<&BigInt> {
        self.field.as_ref()
    }

    pub fn is_integral(&self) -> bool {
        self.eigenvalues.iter().all(|e| e.as_integer().is_some())
    }

    /// All eigenvalues as exact quadratic numbers, when the spectrum has a
    /// single quadratic field.
    pub fn exact_values(&self) -> Option<Vec<QuadraticNumber>> {
        self.field.as_ref()?;
        self.eigenvalues
            .iter()
            .map(|e| e.as_exact().cloned())
            .collect()
    }

    pub fn multiplicities_integral(&self) -> bool {
        self.multiplicities.iter().all(Multiplicity::is_positive_integer)
    }

    pub fn position(&self, theta: &QuadraticNumber) -> Option<usize> {
        self.eigenvalues
            .iter()
            .position(|e| e.as_exact() == Some(theta))
    }
}

/// `det(xI - L)` of the tridiagonal intersection matrix, by the continuant
/// recurrence.
pub fn characteristic_polynomial(array: &IntersectionArray) -> Poly {
    let d = array.diameter();
    let mut prev = Poly::constant(Rational::one());
    let mut cur = Poly::linear(&int(array.a(0)));
    for m in 1..=d {
        let off = int((array.b(m - 1) * array.c(m)) as i64);
        let next = &(&Poly::linear(&int(array.a(m))) * &cur) - &prev.scale(&off);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Computes the spectrum exactly: integer roots directly, the residual
/// split into irreducible factors over `Q`, quadratic factors written in
/// radicals and higher ones kept as isolated algebraic numbers.
pub fn eigenvalues(array: &IntersectionArray) -> Result<Spectrum> {
    array.derive_parameters()?;
    let k = array.valency() as i64;
    let jacobi = Jacobi::new(array);
    let char_poly = characteristic_polynomial(array);
    let mut bits = START_BITS;
    let mut roots = jacobi.isolate(k, bits);
    if roots.len() != jacobi.size() {
        return Err(Error::NonRealEigenvalue {
            found: roots.len(),
            expected: jacobi.size(),
        });
    }

    let mut residual = char_poly.clone();
    let mut factors = Vec::new();
    let mut pending: Vec<usize> = Vec::new();
    for (i, r) in roots.iter().enumerate() {
        match r {
            RootEnclosure::Integer(v) => {
                let lin = Poly::linear(&int(*v));
                residual = residual.divrem(&lin).0;
                factors.push(Factor {
                    poly: lin,
                    roots: vec![i],
                });
            }
            RootEnclosure::Isolated(_) => pending.push(i),
        }
    }

    while !pending.is_empty() {
        match find_factor(&residual, &pending, &roots)? {
            FactorSearch::Found(poly, members) => {
                residual = residual.divrem(&poly).0;
                pending.retain(|i| !members.contains(i));
                factors.push(Factor {
                    poly,
                    roots: members,
                });
            }
            FactorSearch::Irreducible => {
                factors.push(Factor {
                    poly: residual.clone(),
                    roots: std::mem::take(&mut pending),
                });
            }
            FactorSearch::NeedPrecision => {
                bits *= 2;
                if bits > MAX_BITS {
                    return Err(Error::AmbiguousPrecision(format!(
                        "factor coefficients of {residual} unresolved at {MAX_BITS} bits"
                    )));
                }
                roots = jacobi.isolate(k, bits);
            }
        }
    }
    factors.sort_by_key(|f| f.roots[0]);

    let mut eigen: Vec<Option<Eigenvalue>> = vec![None; roots.len()];
    for f in &factors {
        match f.poly.degree() {
            Some(1) => {
                let r = -f.poly.coeff(0);
                eigen[f.roots[0]] = Some(Eigenvalue::Exact(QuadraticNumber::from_rational(r)));
            }
            Some(2) => {
                // x^2 + p x + q: roots (-p +- sqrt(p^2 - 4q)) / 2, larger first.
                let (p, q) = (f.poly.coeff(1), f.poly.coeff(0));
                let disc = (&p * &p - q * int(4)).to_integer();
                let half = Rational::new(BigInt::one(), BigInt::from(2));
                let base = -&p * &half;
                let (hi_i, lo_i) = (f.roots[0].min(f.roots[1]), f.roots[0].max(f.roots[1]));
                eigen[hi_i] = Some(Eigenvalue::Exact(QuadraticNumber::new(
                    base.clone(),
                    half.clone(),
                    disc.clone(),
                )?));
                eigen[lo_i] = Some(Eigenvalue::Exact(QuadraticNumber::new(base, -half, disc)?));
            }
            _ => {
                let min_poly = f.poly.primitive();
                for &i in &f.roots {
                    let RootEnclosure::Isolated(iv) = &roots[i] else {
                        return Err(Error::Invariant("integer root in a nonlinear factor".into()));
                    };
                    eigen[i] = Some(Eigenvalue::Algebraic(IsolatedAlgebraic::new(
                        min_poly.clone(),
                        iv.clone(),
                    )?));
                }
            }
        }
    }
    let eigenvalues: Vec<Eigenvalue> = eigen
        .into_iter()
        .map(|e| e.ok_or_else(|| Error::Invariant("eigenvalue left unassigned".into())))
        .collect::<Result<_>>()?;

    let field = single_field(&eigenvalues);
    let mut spectrum = Spectrum {
        array: array.clone(),
        char_poly,
        eigenvalues,
        multiplicities: Vec::new(),
        factors,
        field,
    };
    spectrum.multiplicities = multiplicities_from_factors(&spectrum)?;
    if spectrum.field.is_some() {
        // Read the multiplicities off the dual eigenmatrix and insist both
        // routes agree.
        let pair = eigenmatrices(&spectrum)?;
        for (i, m) in pair.multiplicities().iter().enumerate() {
            let from_q = m
                .to_rational()
                .ok_or_else(|| Error::Invariant(format!("Q[0][{i}] = {m} is irrational")))?;
            if spectrum.multiplicities[i].as_rational() != Some(&from_q) {
                return Err(Error::Invariant(format!(
                    "multiplicity of theta_{i}: Q[0][i] = {from_q}, n/S = {}",
                    spectrum.multiplicities[i]
                )));
            }
        }
    }
    Ok(spectrum)
}

fn single_field(eigen: &[Eigenvalue]) -> Option<BigInt> {
    let mut d = BigInt::zero();
    for e in eigen {
        let q = e.as_exact()?;
        if !q.is_rational() {
            if d.is_zero() {
                d = q.radicand().clone();
            } else if &d != q.radicand() {
                return None;
            }
        }
    }
    Some(d)
}

/// `n / S(theta)` per factor: exact when `S mod g` is constant, otherwise an
/// enclosure of an irrational value.
fn multiplicities_from_factors(spectrum: &Spectrum) -> Result<Vec<Multiplicity>> {
    let array = &spectrum.array;
    let n = array
        .shell_sizes()
        .iter()
        .fold(Rational::zero(), |acc, k| acc + k);
    let s_poly = multiplicity_sum(array);
    let mut out = vec![Multiplicity::Rational(Rational::zero()); spectrum.eigenvalues.len()];
    for f in &spectrum.factors {
        let r = s_poly.rem(&f.poly);
        if r.is_constant() {
            let c = r.coeff(0);
            if c.is_zero() {
                return Err(Error::Invariant("S vanishes at an eigenvalue".into()));
            }
            let m = &n / &c;
            for &i in &f.roots {
                out[i] = Multiplicity::Rational(m.clone());
            }
        } else {
            for &i in &f.roots {
                let iv = spectrum.eigenvalues[i].enclosure(64);
                let s = s_poly.eval(&iv);
                let m = s
                    .recip()
                    .map(|inv| &RationalInterval::point(n.clone()) * &inv)
                    .ok_or_else(|| Error::AmbiguousPrecision("S enclosure meets zero".into()))?;
                out[i] = Multiplicity::Irrational(m);
            }
        }
    }
    Ok(out)
}

enum FactorSearch {
    Found(Poly, Vec<usize>),
    Irreducible,
    NeedPrecision,
}

/// Looks for a proper monic integer factor of `residual` whose roots include
/// the first pending root, trying root subsets by increasing size. The
/// elementary symmetric functions of a subset are enclosed by interval
/// arithmetic; a candidate survives only if every coefficient enclosure
/// holds exactly one integer, and is then confirmed by exact division.
fn find_factor(
    residual: &Poly,
    pending: &[usize],
    roots: &[RootEnclosure],
) -> Result<FactorSearch> {
    let len = pending.len();
    if len <= 2 {
        return Ok(FactorSearch::Irreducible);
    }
    let encl: Vec<&RationalInterval> = pending
        .iter()
        .map(|&i| match &roots[i] {
            RootEnclosure::Isolated(iv) => Ok(iv),
            RootEnclosure::Integer(_) => Err(Error::Invariant("integer root pending".into())),
        })
        .collect::<Result<_>>()?;
    let mut ambiguous = false;
    for size in 2..len {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            match subset_poly(&combo, &encl) {
                Candidate::Integral(poly) => {
                    if residual.rem(&poly).is_zero() {
                        let members = combo.iter().map(|&c| pending[c]).collect();
                        return Ok(FactorSearch::Found(poly, members));
                    }
                }
                Candidate::Ambiguous => ambiguous = true,
                Candidate::Rejected => {}
            }
            if !next_combination_with_first(&mut combo, len) {
                break;
            }
        }
    }
    Ok(if ambiguous {
        FactorSearch::NeedPrecision
    } else {
        FactorSearch::Irreducible
    })
}

enum Candidate {
    Integral(Poly),
    Ambiguous,
    Rejected,
}

fn subset_poly(combo: &[usize], encl: &[&RationalInterval]) -> Candidate {
    // Coefficients of prod (x - r_i), ascending.
    let mut coeffs = vec![RationalInterval::point(Rational::one())];
    for &c in combo {
        let neg_r = -encl[c];
        let mut next = vec![RationalInterval::point(Rational::zero()); coeffs.len() + 1];
        for (j, cj) in coeffs.iter().enumerate() {
            next[j + 1] = &next[j + 1] + cj;
            next[j] = &next[j] + &(cj * &neg_r);
        }
        coeffs = next;
    }
    let mut ints = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        match c.integer_span() {
            None => return Candidate::Rejected,
            Some((a, b)) if a == b => ints.push(a),
            Some(_) => return Candidate::Ambiguous,
        }
    }
    Candidate::Integral(Poly::from_bigints(&ints))
}

/// Advances `combo` (strictly increasing, `combo[0] == 0` held fixed) to the
/// next combination of `0..n`; false when exhausted.
fn next_combination_with_first(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 1 {
        i -= 1;
        if combo[i] < n - (k - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The standard sequence values `v_0(theta) .. v_D(theta)`.
pub fn standard_values(array: &IntersectionArray, theta: &QuadraticNumber) -> Vec<QuadraticNumber> {
    standard_sequence(array).iter().map(|v| v.eval(theta)).collect()
}
