//! One-shot summaries behind the `analyze` and `caughman` commands.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::arith::{QuadraticNumber, Rational};
use crate::bipartite::{beta_from_spectrum, caughman_array, BetaParams, CaughmanParams};
use crate::error::Result;
use crate::spectral::{eigenvalues, krein, q_polynomial_orderings};
use crate::IntersectionArray;

#[derive(Debug, Clone)]
pub struct SpectralSummary {
    pub char_poly: String,
    pub eigenvalues: Vec<String>,
    pub multiplicities: Vec<String>,
    pub multiplicities_integral: bool,
    pub krein_negative: usize,
    pub certified_orderings: Vec<Vec<usize>>,
    pub uncertain_orderings: Vec<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub array: IntersectionArray,
    pub a: Vec<i64>,
    pub k_shell: Vec<Rational>,
    pub vertex_count: Rational,
    pub girth: Option<u64>,
    pub parity: crate::ParityClass,
    pub violations: Vec<String>,
    /// `Err` carries the reason the spectrum could not be computed.
    pub spectral: std::result::Result<SpectralSummary, String>,
}

pub fn analyze(array: &IntersectionArray) -> Analysis {
    let k_shell = array.shell_sizes();
    let vertex_count = k_shell.iter().sum();
    Analysis {
        array: array.clone(),
        a: (0..=array.diameter()).map(|i| array.a(i)).collect(),
        k_shell,
        vertex_count,
        girth: array.girth().ok(),
        parity: array.parity(),
        violations: array.feasibility_basic().iter().map(|v| v.to_string()).collect(),
        spectral: spectral_summary(array).map_err(|e| e.to_string()),
    }
}

fn spectral_summary(array: &IntersectionArray) -> Result<SpectralSummary> {
    let spectrum = eigenvalues(array)?;
    let mut out = SpectralSummary {
        char_poly: spectrum.char_poly().to_string(),
        eigenvalues: spectrum.eigenvalues().iter().map(|e| e.to_string()).collect(),
        multiplicities: spectrum.multiplicities().iter().map(|m| m.to_string()).collect(),
        multiplicities_integral: spectrum.multiplicities_integral(),
        krein_negative: 0,
        certified_orderings: Vec::new(),
        uncertain_orderings: Vec::new(),
    };
    if out.multiplicities_integral {
        let tensor = krein(&spectrum)?;
        out.krein_negative = tensor.negative_entries().len();
        let orderings = q_polynomial_orderings(&tensor);
        out.certified_orderings = orderings.certified;
        out.uncertain_orderings = orderings.uncertain;
    }
    Ok(out)
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

impl Analysis {
    pub fn to_json(&self) -> Value {
        let spectral = match &self.spectral {
            Ok(s) => json!({
                "characteristicPolynomial": s.char_poly,
                "eigenvalues": s.eigenvalues,
                "multiplicities": s.multiplicities,
                "multiplicitiesIntegral": s.multiplicities_integral,
                "kreinNegativeEntries": s.krein_negative,
                "qPolynomialOrderings": s.certified_orderings,
                "uncertainOrderings": s.uncertain_orderings,
            }),
            Err(e) => json!({"error": e}),
        };
        json!({
            "schemaVersion": crate::classify::SCHEMA_VERSION,
            "kind": "analysis",
            "array": self.array.to_string(),
            "diameter": self.array.diameter(),
            "valency": self.array.valency(),
            "a": strings(&self.a),
            "kShell": strings(&self.k_shell),
            "vertexCount": self.vertex_count.to_string(),
            "girth": self.girth,
            "parity": self.parity,
            "violations": self.violations,
            "spectral": spectral,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "array {}  (D = {}, k = {})", self.array, self.array.diameter(), self.array.valency());
        let _ = writeln!(s, "a_i      {}", strings(&self.a).join(", "));
        let _ = writeln!(s, "k_i      {}", strings(&self.k_shell).join(", "));
        let _ = writeln!(s, "n        {}", self.vertex_count);
        let _ = writeln!(s, "girth    {}", self.girth.map_or("undefined".into(), |g| g.to_string()));
        let _ = writeln!(s, "parity   {}", self.parity);
        if self.violations.is_empty() {
            let _ = writeln!(s, "feasibility: no elementary violation");
        } else {
            let _ = writeln!(s, "feasibility: {}", self.violations.join("; "));
        }
        match &self.spectral {
            Ok(sp) => {
                let _ = writeln!(s, "char poly  {}", sp.char_poly);
                for (e, m) in sp.eigenvalues.iter().zip(&sp.multiplicities) {
                    let _ = writeln!(s, "  theta = {e}  multiplicity {m}");
                }
                if sp.multiplicities_integral {
                    let _ = writeln!(s, "negative Krein parameters: {}", sp.krein_negative);
                    let _ = writeln!(s, "Q-polynomial orderings: {:?}", sp.certified_orderings);
                    if !sp.uncertain_orderings.is_empty() {
                        let _ = writeln!(s, "undecided orderings: {:?}", sp.uncertain_orderings);
                    }
                } else {
                    let _ = writeln!(s, "multiplicities not all positive integers: no graph");
                }
            }
            Err(e) => {
                let _ = writeln!(s, "spectrum unavailable: {e}");
            }
        }
        s
    }
}

/// The array produced by a `(q, s*, D)` triple, its eigenvalues, and `beta`
/// recovered from `theta_1` compared against `q + 1/q`.
#[derive(Debug, Clone)]
pub struct CaughmanReport {
    pub params: CaughmanParams,
    pub array: IntersectionArray,
    pub eigenvalues: Vec<QuadraticNumber>,
    pub beta_from_theta1: QuadraticNumber,
    pub beta_from_q: Rational,
}

impl CaughmanReport {
    pub fn compute(q: Rational, s_star: QuadraticNumber, d: usize) -> Result<Self> {
        let params = CaughmanParams::new(q.clone(), s_star, d)?;
        let (array, eigenvalues) = caughman_array(&params)?;
        let r = |x: u64| Rational::from_integer(x.into());
        let beta_from_theta1 = beta_from_spectrum(&eigenvalues[1], &r(array.c(2)), &r(array.b(2)), &r(array.valency()))?;
        let beta_from_q = BetaParams::from_q(&q)?.beta;
        Ok(CaughmanReport {
            params,
            array,
            eigenvalues,
            beta_from_theta1,
            beta_from_q,
        })
    }

    pub fn round_trip_holds(&self) -> bool {
        self.beta_from_theta1 == QuadraticNumber::from_rational(self.beta_from_q.clone())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schemaVersion": crate::classify::SCHEMA_VERSION,
            "kind": "caughman",
            "q": self.params.q().to_string(),
            "sStar": self.params.s_star().to_string(),
            "diameter": self.params.diameter(),
            "h": self.params.h().to_string(),
            "array": self.array.to_string(),
            "eigenvalues": strings(&self.eigenvalues),
            "betaFromTheta1": self.beta_from_theta1.to_string(),
            "betaFromQ": self.beta_from_q.to_string(),
            "roundTrip": self.round_trip_holds(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "q = {}, s* = {}, D = {}, h = {}",
            self.params.q(),
            self.params.s_star(),
            self.params.diameter(),
            self.params.h()
        );
        let _ = writeln!(s, "array {}", self.array);
        let _ = writeln!(s, "eigenvalues {}", strings(&self.eigenvalues).join(", "));
        let _ = writeln!(
            s,
            "beta from theta_1 = {}, q + 1/q = {} ({})",
            self.beta_from_theta1,
            self.beta_from_q,
            if self.round_trip_holds() { "agree" } else { "DISAGREE" }
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn heawood_analysis() {
        let a = analyze(&"{3,2,2;1,1,3}".parse().unwrap());
        assert_eq!(a.vertex_count, int(14));
        let sp = a.spectral.unwrap();
        assert_eq!(sp.multiplicities, vec!["1", "6", "6", "1"]);
        assert!(!sp.certified_orderings.is_empty());
    }

    #[test]
    fn caughman_2_0_5() {
        let r = CaughmanReport::compute(int(2), QuadraticNumber::from_integer(0), 5).unwrap();
        assert_eq!(r.array.to_string(), "{31,30,28,24,16;1,3,7,15,31}");
        assert!(r.round_trip_holds());
        assert_eq!(r.beta_from_q, crate::arith::rat(5, 2));
    }
}
