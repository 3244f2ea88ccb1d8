//! Refutation certificates: a stage name, a descriptive citation and the
//! exact values that back it. Every certificate can be re-checked from its
//! own contents with [`RefutationCertificate::verify`].

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::arith::{int, QuadraticNumber};
use crate::array::{beta_family, find_beta, BetaFamilyCandidate, Violation};
use crate::bipartite::{beta_from_spectrum, q_from_beta, D5Route, D5Witness, QBoundWitness};
use crate::pipeline::{spectral_filters, SpectralOutcome};
use crate::spectral::{
    eigenvalues, integer_eigenvalues, krein, q_polynomial_orderings, KreinValue, MultiplicityWitness,
};
use crate::{IntersectionArray, ParityClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Stage {
    ElementaryFeasibility,
    TrichotomyExcluded,
    GirthIs4,
    GirthNot6,
    GirthAboveSix,
    EigenvalueNotIntegral,
    MultiplicityNotIntegral,
    KreinNegative,
    NotQPolynomial,
    BetaFamilyK3,
    AlmostBipartiteExcluded,
    ExternallyExcludedD4,
    QGt1Bound,
    QSignExcluded,
    D5Rationality,
    D5PerfectSquare,
    D5Theta2Positivity,
}

impl Stage {
    pub const ALL: [Stage; 17] = [
        Stage::ElementaryFeasibility,
        Stage::TrichotomyExcluded,
        Stage::GirthIs4,
        Stage::GirthNot6,
        Stage::GirthAboveSix,
        Stage::EigenvalueNotIntegral,
        Stage::MultiplicityNotIntegral,
        Stage::KreinNegative,
        Stage::NotQPolynomial,
        Stage::BetaFamilyK3,
        Stage::AlmostBipartiteExcluded,
        Stage::ExternallyExcludedD4,
        Stage::QGt1Bound,
        Stage::QSignExcluded,
        Stage::D5Rationality,
        Stage::D5PerfectSquare,
        Stage::D5Theta2Positivity,
    ];

    /// The camelCase name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Stage::ElementaryFeasibility => "elementaryFeasibility",
            Stage::TrichotomyExcluded => "trichotomyExcluded",
            Stage::GirthIs4 => "girthIs4",
            Stage::GirthNot6 => "girthNot6",
            Stage::GirthAboveSix => "girthAboveSix",
            Stage::EigenvalueNotIntegral => "eigenvalueNotIntegral",
            Stage::MultiplicityNotIntegral => "multiplicityNotIntegral",
            Stage::KreinNegative => "kreinNegative",
            Stage::NotQPolynomial => "notQPolynomial",
            Stage::BetaFamilyK3 => "betaFamilyK3",
            Stage::AlmostBipartiteExcluded => "almostBipartiteExcluded",
            Stage::ExternallyExcludedD4 => "externallyExcludedD4",
            Stage::QGt1Bound => "qGt1Bound",
            Stage::QSignExcluded => "qSignExcluded",
            Stage::D5Rationality => "d5Rationality",
            Stage::D5PerfectSquare => "d5PerfectSquare",
            Stage::D5Theta2Positivity => "d5Theta2Positivity",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Stage::ElementaryFeasibility => {
                "elementary feasibility: integral k_i, monotone b_i and c_i, c_i <= b_j for i + j <= D, even edge counts"
            }
            Stage::TrichotomyExcluded => {
                "trichotomy for Q-polynomial graphs with a_1 = 0: bipartite, almost bipartite, or a_i != 0 for all 2 <= i <= D (cited result)"
            }
            Stage::GirthIs4 => "girth >= 6 iff a_1 = a_2 = 0 and c_2 = 1; a_1 = 0 with c_2 >= 2 gives girth 4",
            Stage::GirthNot6 => "girth from the first c_i > 1 and the first a_i != 0 is not 6",
            Stage::GirthAboveSix => {
                "girth bound: a Q-polynomial distance-regular graph with D >= 3 and k >= 3 has girth at most 6 (cited result)"
            }
            Stage::EigenvalueNotIntegral => {
                "a bipartite Q-polynomial graph with D >= 5 and c_2 = 1 has only integral eigenvalues"
            }
            Stage::MultiplicityNotIntegral => "multiplicity m = n / sum_l v_l(theta)^2 / k_l must be a positive integer",
            Stage::KreinNegative => "Krein condition q^h_ij >= 0",
            Stage::NotQPolynomial => "no ordering with q^1_ij != 0 exactly when |i - j| = 1",
            Stage::BetaFamilyK3 => {
                "beta family at D = 3: k_3 = b_0 (b_0 - 1)^2 / c_3 is integral only if (3 beta + 4)/(beta^2 - 2) is, impossible for beta <= -3"
            }
            Stage::AlmostBipartiteExcluded => {
                "almost bipartite Q-polynomial classification: folded (2D+1)-cube, Odd graph, or the D = 3 beta family (cited result)"
            }
            Stage::ExternallyExcludedD4 => {
                "no bipartite Q-polynomial distance-regular graph with D = 4 has girth 6 (cited result)"
            }
            Stage::QGt1Bound => {
                "s* bound for q > 1: both c_2 = 1 roots for s* exceed q^(-2D-1), but s* < q^(-2D-1)"
            }
            Stage::QSignExcluded => "q > 1 for bipartite Q-polynomial graphs with D >= 6 (cited result)",
            Stage::D5Rationality => {
                "D = 5, c_2 = 1: 4t + 9 = (4 theta_2^2 + 9 theta_2 + 4)/theta_2 must be a rational square; fails with gcd 2"
            }
            Stage::D5PerfectSquare => {
                "D = 5, c_2 = 1: with gcd 1 or 4, 4 theta_2^2 + 9 theta_2 + 4 must be a perfect square, which holds only at theta_2 = 0"
            }
            Stage::D5Theta2Positivity => "D = 5, c_2 = 1: t > 0 forces theta_2 >= 1",
        }
    }

    /// Stages that rest on a published result applied as a filter rather than
    /// on a computation done here. Disabled by the `--no-external` switch.
    pub fn is_external(self) -> bool {
        matches!(
            self,
            Stage::TrichotomyExcluded
                | Stage::GirthAboveSix
                | Stage::AlmostBipartiteExcluded
                | Stage::ExternallyExcludedD4
        )
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The exact data behind a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    Feasibility(Vec<Violation>),
    /// `a_nonzero != 0` with `nonzero < D` rules out both parity classes;
    /// `a_zero = 0` with `zero >= 2` rules out the third alternative.
    Trichotomy { nonzero: usize, zero: usize },
    Girth { girth: u64 },
    IntegerEigenvalues { found: Vec<i64> },
    Multiplicity(MultiplicityWitness),
    Krein { h: usize, i: usize, j: usize, value: KreinValue },
    NoOrdering,
    BetaFamily(BetaFamilyCandidate),
    /// The preconditions of a published result, re-checked from the subject.
    External { statement: String },
    QBound(QBoundWitness),
    QSign {
        ordering: Vec<usize>,
        theta1: QuadraticNumber,
        beta: QuadraticNumber,
        /// `None` when `|beta| <= 2`, i.e. no real `q` with `|q| > 1`.
        q: Option<QuadraticNumber>,
    },
    D5(D5Witness),
    /// One certificate per candidate Q-polynomial ordering of the subject.
    PerOrdering(Vec<(Vec<usize>, RefutationCertificate)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefutationCertificate {
    pub stage: Stage,
    pub subject: Option<IntersectionArray>,
    pub evidence: Evidence,
}

fn ordering_label(o: &[usize]) -> String {
    let parts: Vec<String> = o.iter().map(|i| i.to_string()).collect();
    format!("ordering({})", parts.join(","))
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl RefutationCertificate {
    pub fn new(stage: Stage, subject: Option<IntersectionArray>, evidence: Evidence) -> Self {
        RefutationCertificate {
            stage,
            subject,
            evidence,
        }
    }

    pub fn citation(&self) -> &'static str {
        self.stage.citation()
    }

    /// True when this certificate, or any nested one, relies on a cited
    /// result.
    pub fn is_external(&self) -> bool {
        self.stage.is_external()
            || matches!(&self.evidence, Evidence::PerOrdering(v) if v.iter().any(|(_, c)| c.is_external()))
    }

    /// Named exact values, serialized as strings.
    pub fn witnesses(&self) -> BTreeMap<String, String> {
        let mut w = BTreeMap::new();
        let mut put = |k: &str, v: String| {
            w.insert(k.to_string(), v);
        };
        match &self.evidence {
            Evidence::Feasibility(v) => put(
                "violations",
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; "),
            ),
            Evidence::Trichotomy { nonzero, zero } => {
                put("nonzeroIndex", nonzero.to_string());
                if let Some(s) = &self.subject {
                    put("nonzeroA", s.a(*nonzero).to_string());
                }
                put("zeroIndex", zero.to_string());
            }
            Evidence::Girth { girth } => put("girth", girth.to_string()),
            Evidence::IntegerEigenvalues { found } => {
                put("integerEigenvalues", join(found));
                put("integerCount", found.len().to_string());
                if let Some(s) = &self.subject {
                    put("eigenvalueCount", (s.diameter() + 1).to_string());
                }
            }
            Evidence::Multiplicity(m) => {
                put("index", m.index.to_string());
                put("eigenvalue", m.eigenvalue.to_string());
                put("multiplicity", m.multiplicity.to_string());
            }
            Evidence::Krein { h, i, j, value } => {
                put("h", h.to_string());
                put("i", i.to_string());
                put("j", j.to_string());
                put("value", value.to_string());
            }
            Evidence::NoOrdering => put("orderings", "none".into()),
            Evidence::BetaFamily(c) => {
                put("k3", c.k3.to_string());
                put("divisibilityWitness", c.divisibility_witness.to_string());
            }
            Evidence::External { statement } => put("statement", statement.clone()),
            Evidence::QBound(q) => {
                put("q", q.q.to_string());
                put("diameter", q.d.to_string());
                put("alpha", q.alpha.to_string());
                put("discriminant", q.discriminant.to_string());
                put("gap", q.gap.to_string());
                put("identityLhs", q.identity_lhs.to_string());
                put("identityRhs", q.identity_rhs.to_string());
                put("bound", q.bound.to_string());
                if let Some((lo, hi)) = &q.roots {
                    put("smallerRoot", lo.to_string());
                    put("largerRoot", hi.to_string());
                }
            }
            Evidence::QSign {
                ordering,
                theta1,
                beta,
                q,
            } => {
                put("ordering", join(ordering));
                put("theta1", theta1.to_string());
                put("beta", beta.to_string());
                put("q", q.as_ref().map_or("none".into(), |x| x.to_string()));
            }
            Evidence::D5(d) => {
                put("theta2", d.theta2.to_string());
                if let Some(t) = &d.t {
                    put("t", t.to_string());
                }
                if let Some(f) = d.four_t_plus_nine() {
                    put("fourTPlusNine", f.to_string());
                }
                put("gcd", d.gcd.to_string());
                match &d.route {
                    D5Route::Positivity => {}
                    D5Route::PerfectSquare { value, floor_root } => {
                        put("value", value.to_string());
                        put("floorRoot", floor_root.to_string());
                    }
                    D5Route::Rationality {
                        cofactor_m,
                        cofactor_n,
                        cofactor_n_square,
                        residue_mod4,
                    } => {
                        put("cofactorM", cofactor_m.to_string());
                        put("cofactorN", cofactor_n.to_string());
                        put("cofactorNSquare", cofactor_n_square.to_string());
                        put("residueMod4", residue_mod4.to_string());
                    }
                }
            }
            Evidence::PerOrdering(items) => {
                for (o, c) in items {
                    let label = ordering_label(o);
                    put(&format!("{label}.stage"), c.stage.name().into());
                    for (k, v) in c.witnesses() {
                        put(&format!("{label}.{k}"), v);
                    }
                }
            }
        }
        w
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "stage": self.stage.name(),
            "citation": self.citation(),
            "external": self.is_external(),
            "subject": self.subject.as_ref().map(|s| s.to_string()),
            "witnesses": self.witnesses(),
        })
    }

    /// Recomputes the evidence from scratch. `false` means the certificate
    /// does not establish its claim.
    pub fn verify(&self) -> bool {
        let s = self.subject.as_ref();
        match (&self.evidence, self.stage) {
            (Evidence::Feasibility(v), Stage::ElementaryFeasibility) => {
                s.is_some_and(|s| !v.is_empty() && &s.feasibility_basic() == v)
            }
            (Evidence::Trichotomy { nonzero, zero }, Stage::TrichotomyExcluded) => s.is_some_and(|s| {
                let d = s.diameter();
                d >= 3
                    && s.valency() >= 3
                    && s.a(1) == 0
                    && (1..d).contains(nonzero)
                    && s.a(*nonzero) != 0
                    && (2..=d).contains(zero)
                    && s.a(*zero) == 0
            }),
            (Evidence::Girth { girth }, stage) => s.is_some_and(|s| {
                s.girth().ok() == Some(*girth)
                    && match stage {
                        Stage::GirthIs4 => *girth == 4,
                        Stage::GirthNot6 => *girth != 6,
                        Stage::GirthAboveSix => *girth > 6 && s.diameter() >= 3 && s.valency() >= 3,
                        _ => false,
                    }
            }),
            (Evidence::IntegerEigenvalues { found }, Stage::EigenvalueNotIntegral) => s.is_some_and(|s| {
                s.parity() == ParityClass::Bipartite
                    && s.diameter() >= 5
                    && &integer_eigenvalues(s) == found
                    && found.len() < s.diameter() + 1
            }),
            (Evidence::Multiplicity(w), Stage::MultiplicityNotIntegral) => s.is_some_and(|s| w.verify(s)),
            (Evidence::Krein { h, i, j, .. }, Stage::KreinNegative) => s.is_some_and(|s| {
                let Ok(spec) = eigenvalues(s) else { return false };
                let Ok(t) = krein(&spec) else { return false };
                *h < t.size() && *i < t.size() && *j < t.size() && t.get(*h, *i, *j).signum() == Some(-1)
            }),
            (Evidence::NoOrdering, Stage::NotQPolynomial) => s.is_some_and(|s| {
                let Ok(spec) = eigenvalues(s) else { return false };
                let Ok(t) = krein(&spec) else { return false };
                q_polynomial_orderings(&t).is_q_polynomial() == Some(false)
            }),
            (Evidence::BetaFamily(c), Stage::BetaFamilyK3) => {
                let Ok(fresh) = beta_family(c.beta, c.c2) else {
                    return false;
                };
                &fresh == c
                    && c.c2 == 1
                    && !c.k3.is_integer()
                    && !c.divisibility_witness.is_integer()
                    && s.is_none_or(|s| c.array().as_ref() == Some(s))
            }
            (Evidence::External { .. }, Stage::AlmostBipartiteExcluded) => s.is_some_and(|s| {
                let d = s.diameter();
                s.parity() == ParityClass::AlmostBipartite
                    && s.girth().ok() == Some(6)
                    && *s != IntersectionArray::odd_graph(d)
                    && (d >= 4 || find_beta(s).is_none())
            }),
            (Evidence::External { .. }, Stage::ExternallyExcludedD4) => s.is_some_and(|s| {
                s.parity() == ParityClass::Bipartite && s.diameter() == 4 && s.girth().ok() == Some(6)
            }),
            (Evidence::QBound(w), Stage::QGt1Bound) => {
                QBoundWitness::compute(&w.q, w.d).is_ok_and(|fresh| &fresh == w && w.refutes())
            }
            (
                Evidence::QSign {
                    ordering,
                    theta1,
                    beta,
                    q,
                },
                Stage::QSignExcluded,
            ) => s.is_some_and(|s| {
                let Some(t1) = theta_at(s, ordering, 1) else {
                    return false;
                };
                let Some(b) = beta_of(s, &t1) else { return false };
                if &t1 != theta1 || &b != beta || s.diameter() < 6 {
                    return false;
                }
                let Some(br) = b.to_rational() else { return false };
                match q {
                    None => br.abs() <= int(2),
                    Some(q) => q_from_beta(&br).is_ok_and(|fresh| &fresh == q) && *q < QuadraticNumber::from_integer(-1),
                }
            }),
            (Evidence::D5(w), stage) => w.stage() == stage && w.verify(),
            (Evidence::PerOrdering(items), _) => s.is_some_and(|s| verify_per_ordering(self.stage, s, items)),
            _ => false,
        }
    }
}

fn theta_at(s: &IntersectionArray, ordering: &[usize], pos: usize) -> Option<QuadraticNumber> {
    let spec = eigenvalues(s).ok()?;
    spec.eigenvalues().get(*ordering.get(pos)?)?.as_exact().cloned()
}

fn beta_of(s: &IntersectionArray, theta1: &QuadraticNumber) -> Option<QuadraticNumber> {
    let k = int(s.valency() as i64);
    beta_from_spectrum(theta1, &int(s.c(2) as i64), &int(s.b(2) as i64), &k).ok()
}

/// The listed orderings must be exactly those the filters leave open, and
/// each sub-certificate must verify and refer to the right eigenvalue.
fn verify_per_ordering(
    stage: Stage,
    s: &IntersectionArray,
    items: &[(Vec<usize>, RefutationCertificate)],
) -> bool {
    let d = s.diameter();
    if items.is_empty() || items[0].1.stage != stage {
        return false;
    }
    if s.parity() != ParityClass::Bipartite || s.c(2) != 1 || d < 5 {
        return false;
    }
    let Ok(SpectralOutcome::QPolynomial { orderings, .. }) = spectral_filters(s, true) else {
        return false;
    };
    let listed: Vec<&Vec<usize>> = items.iter().map(|(o, _)| o).collect();
    if listed != orderings.iter().collect::<Vec<_>>() {
        return false;
    }
    items.iter().all(|(o, c)| {
        if !c.verify() {
            return false;
        }
        match &c.evidence {
            Evidence::D5(w) => {
                d == 5 && theta_at(s, o, 2).and_then(|t| t.to_rational()).and_then(|r| r.to_integer().to_i64())
                    == Some(w.theta2)
            }
            Evidence::QBound(w) => {
                d >= 6 && w.d == d && {
                    let q = theta_at(s, o, 1)
                        .and_then(|t| beta_of(s, &t))
                        .and_then(|b| b.to_rational())
                        .and_then(|b| q_from_beta(&b).ok());
                    q.as_ref() == Some(&w.q)
                }
            }
            Evidence::QSign { ordering, .. } => c.subject.as_ref() == Some(s) && ordering == o,
            _ => false,
        }
    })
}

impl fmt::Display for RefutationCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.stage, self.citation())?;
        for (k, v) in self.witnesses() {
            write!(f, "\n    {k} = {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stage_names_are_camel_case_and_unique() {
        let names: std::collections::BTreeSet<&str> = Stage::ALL.iter().map(|s| s.name()).collect();
        assert_eq!(names.len(), Stage::ALL.len());
        for s in Stage::ALL {
            assert_eq!(serde_json::to_value(s).unwrap(), json!(s.name()));
            assert!(s.name().chars().next().unwrap().is_ascii_lowercase());
        }
    }

    #[test]
    fn beta_family_witnesses() {
        let c = beta_family(-3, 1).unwrap();
        let subject = c.array();
        let cert = RefutationCertificate::new(Stage::BetaFamilyK3, subject, Evidence::BetaFamily(c));
        let w = cert.witnesses();
        assert_eq!(w["k3"], "32800/7");
        assert_eq!(w["divisibilityWitness"], "-5/7");
        assert!(cert.verify());
    }

    #[test]
    fn mismatched_stage_fails() {
        let a: IntersectionArray = "{4,3,2,1;1,2,3,4}".parse().unwrap();
        let good = RefutationCertificate::new(Stage::GirthIs4, Some(a.clone()), Evidence::Girth { girth: 4 });
        assert!(good.verify());
        let bad = RefutationCertificate::new(Stage::GirthNot6, Some(a.clone()), Evidence::Girth { girth: 5 });
        assert!(!bad.verify());
        let wrong = RefutationCertificate::new(Stage::KreinNegative, Some(a), Evidence::Girth { girth: 4 });
        assert!(!wrong.verify());
    }
}
