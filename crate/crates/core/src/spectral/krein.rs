use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{eigenmatrices, standard_sequence, EigenmatrixPair, Multiplicity, Spectrum};
use crate::arith::{Poly, QuadraticNumber, Rational, RationalInterval};
use crate::error::{Error, Result};

/// A Krein parameter, exact when its three eigenvalues allow it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KreinValue {
    Exact(QuadraticNumber),
    Enclosure(RationalInterval),
}

/// Tri-state answer to "is this Krein parameter zero?".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroStatus {
    Zero,
    NonZero,
    /// The enclosure still holds zero at the width threshold: zero cannot be
    /// certified, nor excluded.
    Unknown,
}

impl KreinValue {
    pub fn zero_status(&self) -> ZeroStatus {
        match self {
            KreinValue::Exact(q) if q.is_zero() => ZeroStatus::Zero,
            KreinValue::Exact(_) => ZeroStatus::NonZero,
            KreinValue::Enclosure(iv) => match iv.signum() {
                Some(0) => ZeroStatus::Zero,
                Some(_) => ZeroStatus::NonZero,
                None => ZeroStatus::Unknown,
            },
        }
    }

    /// Certified sign, `None` when undecided.
    pub fn signum(&self) -> Option<i8> {
        match self {
            KreinValue::Exact(q) => Some(q.signum()),
            KreinValue::Enclosure(iv) => iv.signum(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, KreinValue::Exact(_))
    }
}

impl fmt::Display for KreinValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KreinValue::Exact(q) => write!(f, "{q}"),
            KreinValue::Enclosure(iv) => write!(f, "{iv}"),
        }
    }
}

/// Settings for the interval path.
#[derive(Debug, Clone)]
pub struct KreinOptions {
    /// An enclosure narrower than this that still contains zero is reported
    /// as [`ZeroStatus::Unknown`].
    pub threshold: Rational,
    pub max_bits: u32,
}

impl Default for KreinOptions {
    fn default() -> Self {
        KreinOptions {
            threshold: Rational::new(BigInt::one(), BigInt::from(10u32).pow(30)),
            max_bits: 2048,
        }
    }
}

/// All `q_{ij}^h` for `0 <= h, i, j <= D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KreinTensor {
    size: usize,
    values: Vec<KreinValue>,
}

impl KreinTensor {
    pub fn size(&self) -> usize {
        self.size
    }

    /// `q_{ij}^h`.
    pub fn get(&self, h: usize, i: usize, j: usize) -> &KreinValue {
        &self.values[(h * self.size + i) * self.size + j]
    }

    pub fn zero_status(&self, h: usize, i: usize, j: usize) -> ZeroStatus {
        self.get(h, i, j).zero_status()
    }

    pub fn is_exact(&self) -> bool {
        self.values.iter().all(KreinValue::is_exact)
    }

    /// Index triples `(h, i, j)` with `i <= j` whose value is certified
    /// negative.
    pub fn negative_entries(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for h in 0..self.size {
            for i in 0..self.size {
                for j in i..self.size {
                    if self.get(h, i, j).signum() == Some(-1) {
                        out.push((h, i, j));
                    }
                }
            }
        }
        out
    }

    fn from_fn(size: usize, mut f: impl FnMut(usize, usize, usize) -> Result<KreinValue>) -> Result<Self> {
        let mut values = vec![KreinValue::Exact(QuadraticNumber::zero()); size * size * size];
        for h in 0..size {
            for i in 0..size {
                for j in i..size {
                    let v = f(h, i, j)?;
                    values[(h * size + j) * size + i] = v.clone();
                    values[(h * size + i) * size + j] = v;
                }
            }
        }
        Ok(KreinTensor { size, values })
    }
}

/// Krein parameters with default options.
pub fn krein(spectrum: &Spectrum) -> Result<KreinTensor> {
    krein_with(spectrum, &KreinOptions::default())
}

/// Exact over the spectrum's field when there is one (through the
/// eigenmatrices); otherwise entry by entry, exact where the three
/// eigenvalues involved share a field and by refined enclosures elsewhere.
pub fn krein_with(spectrum: &Spectrum, options: &KreinOptions) -> Result<KreinTensor> {
    if spectrum.field().is_some() {
        let pair = eigenmatrices(spectrum)?;
        return Ok(krein_from_eigenmatrices(&pair));
    }
    mixed(spectrum, options)
}

/// `q_{ij}^h = (1/n) sum_l P[h][l] Q[l][i] Q[l][j]`, which solves the
/// defining relation using `P / n` as the inverse of `Q`.
pub fn krein_from_eigenmatrices(pair: &EigenmatrixPair) -> KreinTensor {
    let size = pair.p().len();
    let inv_n = QuadraticNumber::from_rational(pair.vertex_count().recip());
    let (p, q) = (pair.p(), pair.q());
    KreinTensor::from_fn(size, |h, i, j| {
        let mut acc = QuadraticNumber::zero();
        for l in 0..size {
            acc = &acc + &(&(&p[h][l] * &q[l][i]) * &q[l][j]);
        }
        Ok(KreinValue::Exact(&acc * &inv_n))
    })
    .expect("exact path is infallible")
}

/// True when `Q[l][i] Q[l][j] = sum_h q_{ij}^h Q[l][h]` holds with zero
/// residual for every `l, i, j`.
pub fn defining_relation_holds(pair: &EigenmatrixPair, tensor: &KreinTensor) -> bool {
    let q = pair.q();
    let size = q.len();
    for l in 0..size {
        for i in 0..size {
            for j in 0..size {
                let lhs = &q[l][i] * &q[l][j];
                let mut rhs = QuadraticNumber::zero();
                for h in 0..size {
                    let KreinValue::Exact(v) = tensor.get(h, i, j) else {
                        return false;
                    };
                    rhs = &rhs + &(v * &q[l][h]);
                }
                if !(&lhs - &rhs).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

fn mixed(spectrum: &Spectrum, options: &KreinOptions) -> Result<KreinTensor> {
    let array = spectrum.array();
    let size = array.diameter() + 1;
    let seq = standard_sequence(array);
    let shells = array.shell_sizes();
    let inv_k2: Vec<Rational> = shells.iter().map(|k| (k * k).recip()).collect();
    let n = shells.iter().fold(Rational::zero(), |acc, k| acc + k);
    let eig = spectrum.eigenvalues();
    let mults = spectrum.multiplicities();

    // Exact standard-sequence values for eigenvalues that have them.
    let exact_v: Vec<Option<Vec<QuadraticNumber>>> = eig
        .iter()
        .map(|e| e.as_exact().map(|t| seq.iter().map(|v| v.eval(t)).collect()))
        .collect();

    let mut cache: Vec<(u32, Vec<Vec<RationalInterval>>, Vec<RationalInterval>)> = Vec::new();
    let mut at_bits = |bits: u32| -> (Vec<Vec<RationalInterval>>, Vec<RationalInterval>) {
        if let Some((_, v, m)) = cache.iter().find(|(b, _, _)| *b == bits) {
            return (v.clone(), m.clone());
        }
        let v: Vec<Vec<RationalInterval>> = eig
            .iter()
            .map(|e| {
                let t = e.enclosure(bits);
                seq.iter()
                    .map(|p| eval_interval(p, &t).round_out(bits + 32))
                    .collect()
            })
            .collect();
        let m: Vec<RationalInterval> = mults
            .iter()
            .map(|m| match m {
                Multiplicity::Rational(r) => RationalInterval::point(r.clone()),
                Multiplicity::Irrational(iv) => iv.clone(),
            })
            .collect();
        cache.push((bits, v.clone(), m.clone()));
        (v, m)
    };

    KreinTensor::from_fn(size, |h, i, j| {
        if let (Some(vh), Some(vi), Some(vj), Some(mi), Some(mj)) = (
            &exact_v[h],
            &exact_v[i],
            &exact_v[j],
            mults[i].as_rational(),
            mults[j].as_rational(),
        ) {
            let fields_agree = compatible(&[&vh[1], &vi[1], &vj[1]]);
            if fields_agree {
                let mut acc = QuadraticNumber::zero();
                for l in 0..size {
                    let term = &(&(&vh[l] * &vi[l]) * &vj[l])
                        * &QuadraticNumber::from_rational(inv_k2[l].clone());
                    acc = &acc + &term;
                }
                let scale = QuadraticNumber::from_rational(mi * mj / &n);
                return Ok(KreinValue::Exact(&acc * &scale));
            }
        }
        let mut bits = 64;
        loop {
            let (v, m) = at_bits(bits);
            let mut acc = RationalInterval::point(Rational::zero());
            for l in 0..size {
                let term = &(&(&v[h][l] * &v[i][l]) * &v[j][l])
                    * &RationalInterval::point(inv_k2[l].clone());
                acc = &acc + &term;
            }
            let scale = &(&m[i] * &m[j]) * &RationalInterval::point(n.recip());
            let value = &acc * &scale;
            if !value.contains_zero() || value.width() <= options.threshold {
                return Ok(KreinValue::Enclosure(value));
            }
            if bits >= options.max_bits {
                return Ok(KreinValue::Enclosure(value));
            }
            bits *= 2;
        }
    })
}

/// Whether a set of exact values lies in one quadratic field.
fn compatible(values: &[&QuadraticNumber]) -> bool {
    let mut d: Option<BigInt> = None;
    for v in values {
        if v.is_rational() {
            continue;
        }
        match &d {
            None => d = Some(v.radicand().clone()),
            Some(r) if r == v.radicand() => {}
            Some(_) => return false,
        }
    }
    true
}

fn eval_interval(p: &Poly, x: &RationalInterval) -> RationalInterval {
    p.eval(x)
}

impl KreinTensor {
    /// Builds a tensor straight from values, for tests and certificates.
    pub fn from_values(size: usize, values: Vec<KreinValue>) -> Result<Self> {
        if values.len() != size * size * size {
            return Err(Error::Precondition(format!(
                "{} values for a tensor of side {size}",
                values.len()
            )));
        }
        Ok(KreinTensor { size, values })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::spectral::eigenvalues;

    #[test]
    fn heawood_krein_exact_and_nonnegative() {
        let s = eigenvalues(&"{3,2,2;1,1,3}".parse().unwrap()).unwrap();
        let t = krein(&s).unwrap();
        assert!(t.is_exact());
        assert!(t.negative_entries().is_empty());
        // q_{0j}^h = delta_{hj}
        for h in 0..4 {
            for j in 0..4 {
                let expect = if h == j { int(1) } else { int(0) };
                assert_eq!(t.get(h, 0, j), &KreinValue::Exact(QuadraticNumber::from_rational(expect)));
            }
        }
        let pair = eigenmatrices(&s).unwrap();
        assert!(defining_relation_holds(&pair, &t));
    }

    #[test]
    fn interval_path_on_cubic_spectrum() {
        let s = eigenvalues(&"{2,1,1;1,1,1}".parse().unwrap()).unwrap();
        let t = krein(&s).unwrap();
        assert!(!t.is_exact());
        // q_{00}^0 = 1 exactly (integer eigenvalue k on every index).
        assert_eq!(t.get(0, 0, 0).zero_status(), ZeroStatus::NonZero);
        assert!(t.negative_entries().is_empty());
    }
}
