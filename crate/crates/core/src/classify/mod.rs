//! The girth-6 decision procedure, the bounded search over intersection
//! arrays, and report rendering.
//!
//! The classifier follows the unrestricted form of the classification:
//! a Q-polynomial distance-regular graph of girth 6 (not necessarily
//! bipartite) has the parameters of an Odd graph or of a generalized
//! hexagon of order `(1, k - 1)`. The Odd graphs are almost bipartite, so
//! they are covered even though the bipartite case analysis alone would
//! not produce them.

mod enumerate;
mod render;
mod search;

pub use enumerate::{count_domain, DomainCounts};
pub use render::{report_render, Document, Format, SCHEMA_VERSION};
pub use search::{search, BulkRefutation, RecheckSummary, SearchParams, SearchReport, StageGroup, Survivor};

use crate::bipartite::{bipartite_verdict, BipartiteVerdict};
use crate::certificate::{Evidence, RefutationCertificate, Stage};
use crate::error::{Error, Result};
use crate::graphs::{verify_distance_regular, Graph};
use crate::pipeline::{spectral_filters, SpectralOutcome};
use crate::{IntersectionArray, ParityClass};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Skip stages that apply a published result as a filter.
    pub no_external: bool,
}

/// A family named by the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// The Odd graph on an `m`-set, `m = 2D + 1`.
    OddGraph { m: u64 },
    /// A generalized hexagon of order `(s, t) = (1, k - 1)`.
    GeneralizedHexagon { s: u64, t: u64 },
}

impl Family {
    /// The intersection array the family member must have.
    pub fn array(&self) -> IntersectionArray {
        match *self {
            Family::OddGraph { m } => IntersectionArray::odd_graph(((m - 1) / 2) as usize),
            Family::GeneralizedHexagon { t, .. } => IntersectionArray::generalized_hexagon(t + 1),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Family::OddGraph { m } => format!("Odd graph, m = {m}"),
            Family::GeneralizedHexagon { s, t } => format!("generalized hexagon of order ({s}, {t})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Family(Family),
    NotGirth6(RefutationCertificate),
    NotQPolynomialCandidate(RefutationCertificate),
    Unresolved(String),
}

impl Classification {
    fn from_certificate(cert: RefutationCertificate) -> Self {
        match cert.stage {
            Stage::GirthIs4 | Stage::GirthNot6 | Stage::GirthAboveSix => Classification::NotGirth6(cert),
            _ => Classification::NotQPolynomialCandidate(cert),
        }
    }

    pub fn certificate(&self) -> Option<&RefutationCertificate> {
        match self {
            Classification::NotGirth6(c) | Classification::NotQPolynomialCandidate(c) => Some(c),
            _ => None,
        }
    }

    pub fn family(&self) -> Option<Family> {
        match self {
            Classification::Family(f) => Some(*f),
            _ => None,
        }
    }
}

/// What BFS found when the input was a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSummary {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub girth: u64,
    pub bipartite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub array: IntersectionArray,
    /// Girth computed from the array (the first `c_i > 1` and `a_i != 0`).
    pub girth: u64,
    pub parity: ParityClass,
    pub classification: Classification,
    pub graph: Option<GraphSummary>,
}

#[derive(Debug, Clone)]
pub enum ClassifyInput {
    Array(IntersectionArray),
    Graph(Graph),
}

pub fn classify(input: &ClassifyInput, opts: ClassifyOptions) -> Result<Verdict> {
    match input {
        ClassifyInput::Array(a) => classify_array(a, opts),
        ClassifyInput::Graph(g) => classify_graph(g, opts),
    }
}

/// Runs BFS verification first; a graph that is not distance-regular is an
/// input error.
pub fn classify_graph(g: &Graph, opts: ClassifyOptions) -> Result<Verdict> {
    let profile = verify_distance_regular(g);
    let Some(array) = profile.array.clone() else {
        return Err(Error::NotDistanceRegular(
            profile.failure.unwrap_or_else(|| "no intersection array".into()),
        ));
    };
    let mut verdict = classify_array(&array, opts)?;
    let girth = profile
        .girth
        .ok_or_else(|| Error::Invariant("distance-regular graph without a cycle".into()))?;
    if girth != verdict.girth {
        return Err(Error::Invariant(format!(
            "BFS girth {girth} differs from array girth {}",
            verdict.girth
        )));
    }
    if profile.bipartite != (verdict.parity == ParityClass::Bipartite) {
        return Err(Error::Invariant("BFS 2-colouring disagrees with the array".into()));
    }
    verdict.graph = Some(GraphSummary {
        vertex_count: profile.vertex_count,
        edge_count: profile.edge_count,
        girth,
        bipartite: profile.bipartite,
    });
    Ok(verdict)
}

/// The dispatch: girth first, then the parity dichotomy, then the
/// case-specific exclusions.
pub fn classify_array(array: &IntersectionArray, opts: ClassifyOptions) -> Result<Verdict> {
    let girth = array.girth()?;
    let parity = array.parity();
    let classification = dispatch(array, girth, parity, opts)?;
    Ok(Verdict {
        array: array.clone(),
        girth,
        parity,
        classification,
        graph: None,
    })
}

fn refuted(stage: Stage, array: &IntersectionArray, evidence: Evidence) -> Classification {
    Classification::from_certificate(RefutationCertificate::new(stage, Some(array.clone()), evidence))
}

/// Internal filters only, for when a cited exclusion is switched off.
fn internal_only(array: &IntersectionArray, require_integral: bool, what: &str) -> Result<Classification> {
    Ok(match spectral_filters(array, require_integral)? {
        SpectralOutcome::Refuted(c) => Classification::from_certificate(c),
        SpectralOutcome::QPolynomial { .. } => {
            Classification::Unresolved(format!("passes every internal filter; {what} is disabled"))
        }
        SpectralOutcome::Undecided(note) => Classification::Unresolved(note),
    })
}

fn dispatch(
    array: &IntersectionArray,
    girth: u64,
    parity: ParityClass,
    opts: ClassifyOptions,
) -> Result<Classification> {
    let d = array.diameter();
    if girth != 6 || d <= 2 {
        let stage = if array.a(1) == 0 && array.c(2) >= 2 {
            Stage::GirthIs4
        } else {
            Stage::GirthNot6
        };
        return Ok(refuted(stage, array, Evidence::Girth { girth }));
    }
    if array.valency() < 3 {
        return Err(Error::Precondition(format!("{array} has k < 3")));
    }
    match parity {
        ParityClass::Neither => {
            // girth 6 forces a_1 = a_2 = 0; some a_i with 3 <= i < D is nonzero
            let nonzero = (1..d).find(|&i| array.a(i) != 0).expect("not (almost) bipartite");
            if opts.no_external {
                return internal_only(array, false, "the parity trichotomy");
            }
            Ok(refuted(Stage::TrichotomyExcluded, array, Evidence::Trichotomy { nonzero, zero: 2 }))
        }
        ParityClass::AlmostBipartite => {
            if *array == IntersectionArray::odd_graph(d) {
                return Ok(Classification::Family(Family::OddGraph { m: 2 * d as u64 + 1 }));
            }
            if d == 3 {
                if let Some(cand) = crate::array::find_beta(array) {
                    return Ok(refuted(Stage::BetaFamilyK3, array, Evidence::BetaFamily(cand)));
                }
            }
            let violations = array.feasibility_basic();
            if !violations.is_empty() {
                return Ok(refuted(Stage::ElementaryFeasibility, array, Evidence::Feasibility(violations)));
            }
            if opts.no_external {
                return internal_only(array, false, "the almost-bipartite classification");
            }
            Ok(refuted(
                Stage::AlmostBipartiteExcluded,
                array,
                Evidence::External {
                    statement: format!("almost bipartite, D = {d}, girth 6, not the Odd graph parameters"),
                },
            ))
        }
        ParityClass::Bipartite => {
            let violations = array.feasibility_basic();
            if !violations.is_empty() {
                return Ok(refuted(Stage::ElementaryFeasibility, array, Evidence::Feasibility(violations)));
            }
            if d == 4 && opts.no_external {
                return internal_only(array, false, "the diameter-4 bipartite exclusion");
            }
            Ok(match bipartite_verdict(array)? {
                BipartiteVerdict::GeneralizedHexagon { s, t } => {
                    Classification::Family(Family::GeneralizedHexagon { s, t })
                }
                BipartiteVerdict::Refuted(c) => Classification::from_certificate(c),
                BipartiteVerdict::Unresolved(note) => Classification::Unresolved(note),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn verdict(s: &str) -> Verdict {
        classify_array(&s.parse().unwrap(), ClassifyOptions::default()).unwrap()
    }

    #[test]
    fn families() {
        assert_eq!(
            verdict("{4,3,3;1,1,2}").classification,
            Classification::Family(Family::OddGraph { m: 7 })
        );
        assert_eq!(
            verdict("{3,2,2;1,1,3}").classification,
            Classification::Family(Family::GeneralizedHexagon { s: 1, t: 2 })
        );
        assert_eq!(
            verdict("{5,4,4,3;1,1,2,2}").classification.family(),
            Some(Family::OddGraph { m: 9 })
        );
    }

    #[test]
    fn beta_family_member() {
        let v = verdict("{41,40,40;1,1,14}");
        let Classification::NotQPolynomialCandidate(c) = &v.classification else {
            panic!("{:?}", v.classification)
        };
        assert_eq!(c.stage, Stage::BetaFamilyK3);
        assert_eq!(c.witnesses()["k3"], "32800/7");
        assert_eq!(c.witnesses()["divisibilityWitness"], "-5/7");
        assert!(c.verify());
    }

    #[test]
    fn small_girth() {
        let v = verdict("{4,3,2,1;1,2,3,4}");
        assert!(matches!(&v.classification, Classification::NotGirth6(c) if c.stage == Stage::GirthIs4));
        let v = verdict("{3,2;1,1}");
        assert!(matches!(&v.classification, Classification::NotGirth6(c) if c.stage == Stage::GirthNot6));
        assert!(v.classification.certificate().unwrap().verify());
    }

    #[test]
    fn graph_input() {
        let g = crate::graphs::build_odd_graph(7).unwrap();
        let v = classify_graph(&g, ClassifyOptions::default()).unwrap();
        assert_eq!(v.classification.family(), Some(Family::OddGraph { m: 7 }));
        assert_eq!(v.graph.unwrap().vertex_count, 35);
        let bad = crate::graphs::build_hypercube(3).unwrap().without_edge(0, 1).unwrap();
        assert!(matches!(
            classify_graph(&bad, ClassifyOptions::default()),
            Err(Error::NotDistanceRegular(_))
        ));
    }
}
