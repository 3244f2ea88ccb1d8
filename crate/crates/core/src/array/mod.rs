//! Intersection arrays `{b_0, ..., b_{D-1}; c_1, ..., c_D}` and the
//! parameters that follow from them alone.

mod beta;

pub use beta::{
    beta_family, beta_family_k3_identity_check, find_beta, BetaFamilyCandidate, K3Identity,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// The sequences `b_0..b_{D-1}` and `c_1..c_D` of a distance-regular graph.
/// `a_i`, `k_i` and the vertex count are always derived, never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<Self> {
        if b.is_empty() || b.len() != c.len() {
            return Err(Error::MalformedArray(format!(
                "need D >= 1 entries in both halves, got {} and {}",
                b.len(),
                c.len()
            )));
        }
        if b.contains(&0) || c.contains(&0) {
            return Err(Error::MalformedArray("entries must be positive".into()));
        }
        if c[0] != 1 {
            return Err(Error::MalformedArray(format!("c_1 must be 1, got {}", c[0])));
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// The valency `k = b_0`.
    pub fn valency(&self) -> u64 {
        self.b[0]
    }

    /// `b_i` for `0 <= i <= D`, with `b_D = 0`.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `0 <= i <= D`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = k - b_i - c_i`, possibly negative for malformed input.
    pub fn a(&self, i: usize) -> i64 {
        self.valency() as i64 - self.b(i) as i64 - self.c(i) as i64
    }

    pub fn b_seq(&self) -> &[u64] {
        &self.b
    }

    pub fn c_seq(&self) -> &[u64] {
        &self.c
    }

    /// `k_i = b_0 ... b_{i-1} / (c_1 ... c_i)` for `0 <= i <= D`.
    pub fn shell_sizes(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.diameter() + 1);
        let mut k = Rational::one();
        out.push(k.clone());
        for i in 1..=self.diameter() {
            k = k * Rational::new(BigInt::from(self.b(i - 1)), BigInt::from(self.c(i)));
            out.push(k.clone());
        }
        out
    }

    pub fn derive_parameters(&self) -> Result<DerivedParameters> {
        let a: Vec<i64> = (0..=self.diameter()).map(|i| self.a(i)).collect();
        if let Some((index, &value)) = a.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::NegativeA { index, value });
        }
        let k_shell = self.shell_sizes();
        let vertex_count = k_shell.iter().fold(Rational::zero(), |acc, k| acc + k);
        Ok(DerivedParameters {
            a,
            k_shell,
            vertex_count,
        })
    }

    /// Girth from the first `c_i > 1` and the first `a_i != 0`:
    /// `min(2 j_c, 2 j_a + 1)`.
    pub fn girth(&self) -> Result<u64> {
        let d = self.diameter();
        let j_c = (1..=d).find(|&i| self.c(i) > 1);
        let j_a = (1..=d).find(|&i| self.a(i) != 0);
        match (j_c, j_a) {
            (None, None) => Err(Error::AcyclicParameters),
            (Some(c), None) => Ok(2 * c as u64),
            (None, Some(a)) => Ok(2 * a as u64 + 1),
            (Some(c), Some(a)) => Ok((2 * c as u64).min(2 * a as u64 + 1)),
        }
    }

    pub fn parity(&self) -> ParityClass {
        let d = self.diameter();
        if (0..d).any(|i| self.a(i) != 0) {
            ParityClass::Neither
        } else if self.a(d) == 0 {
            ParityClass::Bipartite
        } else {
            ParityClass::AlmostBipartite
        }
    }

    /// Elementary necessary conditions for existence. An empty result only
    /// means none of these checks failed.
    pub fn feasibility_basic(&self) -> Vec<Violation> {
        let d = self.diameter();
        let mut out = Vec::new();
        for i in 0..=d {
            if self.a(i) < 0 {
                out.push(Violation::NegativeA { i, value: self.a(i) });
            }
        }
        for i in 0..d.saturating_sub(1) {
            if self.b(i) < self.b(i + 1) {
                out.push(Violation::BIncreasing { i });
            }
        }
        for i in 1..d {
            if self.c(i) > self.c(i + 1) {
                out.push(Violation::CDecreasing { i });
            }
        }
        for i in 1..=d {
            for j in 1..=d - i {
                if self.c(i) > self.b(j) {
                    out.push(Violation::CExceedsB { i, j });
                }
            }
        }
        let shells = self.shell_sizes();
        let mut integral = true;
        for (i, k) in shells.iter().enumerate() {
            if !k.is_integer() {
                integral = false;
                out.push(Violation::ShellNotIntegral {
                    i,
                    value: k.clone(),
                });
            }
        }
        if integral && out.iter().all(|v| !matches!(v, Violation::NegativeA { .. })) {
            let n: BigInt = shells.iter().map(|k| k.to_integer()).sum();
            if (&n * BigInt::from(self.valency())) % 2 != BigInt::zero() {
                out.push(Violation::OddEdgeCount);
            }
            for (i, k) in shells.iter().enumerate() {
                if (k.to_integer() * BigInt::from(self.a(i))) % 2 != BigInt::zero() {
                    out.push(Violation::OddShellEdges { i });
                }
            }
        }
        out
    }

    /// The `D`-cube.
    pub fn hypercube(d: usize) -> Self {
        let d64 = d as u64;
        Self::new(
            (0..d64).map(|i| d64 - i).collect(),
            (1..=d64).collect(),
        )
        .expect("valid hypercube parameters")
    }

    /// The folded `m`-cube, `m >= 4`; diameter `floor(m / 2)`.
    pub fn folded_cube(m: usize) -> Self {
        let d = m / 2;
        let m64 = m as u64;
        let b = (0..d as u64).map(|i| m64 - i).collect();
        let mut c: Vec<u64> = (1..=d as u64).collect();
        if m % 2 == 0 {
            c[d - 1] = m64;
        }
        Self::new(b, c).expect("valid folded cube parameters")
    }

    /// The Odd graph on the `D`-subsets of a `(2D + 1)`-set.
    pub fn odd_graph(d: usize) -> Self {
        let k = d as u64 + 1;
        let half = |i: usize| ((i + 1) / 2) as u64;
        Self::new(
            (0..d).map(|i| k - half(i)).collect(),
            (1..=d).map(half).collect(),
        )
        .expect("valid Odd graph parameters")
    }

    /// The generalized hexagon of order `(1, k - 1)`, i.e. the incidence
    /// graph of a projective plane of order `k - 1`.
    pub fn generalized_hexagon(k: u64) -> Self {
        Self::new(vec![k, k - 1, k - 1], vec![1, 1, k]).expect("valid hexagon parameters")
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = Error;

    /// Parses `{b0,b1,...;c1,c2,...}`; whitespace is ignored and the braces
    /// are optional.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(&compact);
        let (bs, cs) = inner
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected ';' in {s:?}")))?;
        let nums = |part: &str| -> Result<Vec<u64>> {
            part.split(',')
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))
                })
                .collect()
        };
        IntersectionArray::new(nums(bs)?, nums(cs)?)
    }
}

impl Serialize for IntersectionArray {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntersectionArray {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `a_i`, the shell sizes `k_i` and the vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedParameters {
    pub a: Vec<i64>,
    pub k_shell: Vec<Rational>,
    pub vertex_count: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ParityClass {
    Bipartite,
    AlmostBipartite,
    Neither,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityClass::Bipartite => "bipartite",
            ParityClass::AlmostBipartite => "almost bipartite",
            ParityClass::Neither => "neither bipartite nor almost bipartite",
        })
    }
}

/// A failed elementary feasibility condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NegativeA { i: usize, value: i64 },
    BIncreasing { i: usize },
    CDecreasing { i: usize },
    CExceedsB { i: usize, j: usize },
    ShellNotIntegral { i: usize, value: Rational },
    OddEdgeCount,
    OddShellEdges { i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NegativeA { i, value } => write!(f, "a_{i} = {value} is negative"),
            Violation::BIncreasing { i } => write!(f, "b_{i} < b_{}", i + 1),
            Violation::CDecreasing { i } => write!(f, "c_{i} > c_{}", i + 1),
            Violation::CExceedsB { i, j } => write!(f, "c_{i} > b_{j} with {i} + {j} <= D"),
            Violation::ShellNotIntegral { i, value } => {
                write!(f, "k_{i} not integral ({value})")
            }
            Violation::OddEdgeCount => write!(f, "n k is odd"),
            Violation::OddShellEdges { i } => write!(f, "k_{i} a_{i} is odd"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    fn shells(s: &str) -> Vec<Rational> {
        arr(s).derive_parameters().unwrap().k_shell
    }

    #[test]
    fn parse_and_display() {
        let a = arr(" { 3, 2,2 ; 1,1, 3 } ");
        assert_eq!(a.to_string(), "{3,2,2;1,1,3}");
        assert_eq!(arr("3,2,2;1,1,3"), a);
        assert!("{3,2,2;2,1,3}".parse::<IntersectionArray>().is_err());
        assert!("{3,2;1,1,3}".parse::<IntersectionArray>().is_err());
        assert!("{3,x;1,1}".parse::<IntersectionArray>().is_err());
        assert!("{3,2}".parse::<IntersectionArray>().is_err());
    }

    #[test]
    fn derived_parameters() {
        let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
        assert_eq!(shells("{3,2,2;1,1,3}"), ints(&[1, 3, 6, 4]));
        assert_eq!(
            arr("{3,2,2;1,1,3}").derive_parameters().unwrap().vertex_count,
            int(14)
        );
        assert_eq!(shells("{4,3,2,1;1,2,3,4}"), ints(&[1, 4, 6, 4, 1]));
        let p = arr("{31,30,28,24,16;1,3,7,15,31}").derive_parameters().unwrap();
        assert_eq!(p.k_shell, ints(&[1, 31, 310, 1240, 1984, 1024]));
        assert_eq!(p.vertex_count, int(4590));
        assert!(matches!(
            arr("{3,3;1,1}").derive_parameters(),
            Err(Error::NegativeA { index: 1, value: -1 })
        ));
    }

    #[test]
    fn girth_rule() {
        assert_eq!(arr("{3,2,2;1,1,3}").girth().unwrap(), 6);
        assert_eq!(arr("{4,3,2,1;1,2,3,4}").girth().unwrap(), 4);
        assert_eq!(arr("{4,3,3;1,1,2}").girth().unwrap(), 6);
        assert_eq!(arr("{3,2;1,1}").girth().unwrap(), 5);
        assert_eq!(arr("{2,1,1;1,1,1}").girth().unwrap(), 7);
        assert!(matches!(arr("{1;1}").girth(), Err(Error::AcyclicParameters)));
    }

    #[test]
    fn parity_classes() {
        assert_eq!(arr("{3,2,2;1,1,3}").parity(), ParityClass::Bipartite);
        assert_eq!(arr("{4,3,3;1,1,2}").parity(), ParityClass::AlmostBipartite);
        assert_eq!(arr("{4,2,1;1,1,2}").parity(), ParityClass::Neither);
    }

    #[test]
    fn feasibility() {
        assert!(arr("{3,2,2;1,1,3}").feasibility_basic().is_empty());
        assert!(arr("{4,3,3;1,1,2}").feasibility_basic().is_empty());
        let v = arr("{41,40,40;1,1,14}").feasibility_basic();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].to_string(), "k_3 not integral (32800/7)");
        assert!(arr("{3,3;1,1}")
            .feasibility_basic()
            .iter()
            .any(|v| matches!(v, Violation::NegativeA { .. })));
    }

    #[test]
    fn family_arrays() {
        assert_eq!(IntersectionArray::hypercube(4), arr("{4,3,2,1;1,2,3,4}"));
        assert_eq!(IntersectionArray::odd_graph(3), arr("{4,3,3;1,1,2}"));
        assert_eq!(IntersectionArray::odd_graph(2), arr("{3,2;1,1}"));
        assert_eq!(IntersectionArray::folded_cube(7), arr("{7,6,5;1,2,3}"));
        assert_eq!(IntersectionArray::folded_cube(10), arr("{10,9,8,7,6;1,2,3,4,10}"));
        assert_eq!(IntersectionArray::generalized_hexagon(3), arr("{3,2,2;1,1,3}"));
        for d in 2..9 {
            let o = IntersectionArray::odd_graph(d);
            assert!(o.feasibility_basic().is_empty(), "{o}");
            assert_eq!(o.parity(), ParityClass::AlmostBipartite);
        }
    }
}
