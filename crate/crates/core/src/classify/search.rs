use std::collections::BTreeMap;

use super::enumerate::{walk, Region, MAX_DIAMETER};
use super::{dispatch, Classification, ClassifyOptions, Family};
use crate::certificate::{Evidence, RefutationCertificate, Stage};
use crate::error::{Error, Result};
use crate::pipeline::{spectral_filters, SpectralOutcome};
use crate::{IntersectionArray, ParityClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchParams {
    pub d_min: usize,
    pub d_max: usize,
    pub k_max: u64,
    pub no_external: bool,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            d_min: 3,
            d_max: 8,
            k_max: 20,
            no_external: false,
        }
    }
}

/// Why diameters beyond the search range need no search.
pub const LARGE_DIAMETER_NOTE: &str = "D >= 9 is outside the search range: large-diameter bipartite and almost bipartite Q-polynomial graphs with girth 6 are settled by cited classification results, not by enumeration";

impl SearchParams {
    pub fn validate(&self) -> Result<()> {
        if self.d_max > MAX_DIAMETER {
            return Err(Error::Precondition(format!("Dmax = {}: {LARGE_DIAMETER_NOTE}", self.d_max)));
        }
        if !(3 <= self.d_min && self.d_min <= self.d_max) {
            return Err(Error::Precondition(format!(
                "need 3 <= Dmin <= Dmax <= 8, got Dmin = {}, Dmax = {}",
                self.d_min, self.d_max
            )));
        }
        if !(3..=64).contains(&self.k_max) {
            return Err(Error::Precondition(format!("need 3 <= kMax <= 64, got {}", self.k_max)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Survivor {
    pub array: IntersectionArray,
    pub family: Family,
}

/// All arrays of one diameter and valency whose first nonzero `a_i`
/// (`i < D`) sits at `nonzero`. Such an array is neither bipartite nor
/// almost bipartite while `a_2 = 0`, so the parity trichotomy excludes it
/// once elementary feasibility has passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BulkRefutation {
    pub diameter: usize,
    pub valency: u64,
    pub nonzero: usize,
    pub leaves: u64,
    /// Refuted by elementary feasibility.
    pub infeasible: u64,
    /// Refuted by the trichotomy.
    pub excluded: u64,
    /// Left open because the trichotomy is switched off.
    pub unresolved: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StageGroup {
    /// Individual and bulk refutations together.
    pub count: u64,
    pub certificates: Vec<RefutationCertificate>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RecheckSummary {
    pub certificates: u64,
    pub bulk_buckets: u64,
    /// Bulk leaves rebuilt and checked with a full certificate.
    pub sampled_leaves: u64,
    pub survivors: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub params: SearchParams,
    pub candidates: u64,
    pub candidates_by_diameter: BTreeMap<usize, u64>,
    pub survivors: Vec<Survivor>,
    pub refutations: BTreeMap<Stage, StageGroup>,
    pub bulk: Vec<BulkRefutation>,
    pub unresolved: Vec<(IntersectionArray, String)>,
    /// Bulk leaves left open (only with external stages off).
    pub unresolved_bulk: u64,
    pub recheck: RecheckSummary,
}

impl SearchReport {
    pub fn refuted(&self) -> u64 {
        self.refutations.values().map(|g| g.count).sum()
    }

    pub fn unresolved_count(&self) -> u64 {
        self.unresolved.len() as u64 + self.unresolved_bulk
    }

    /// Survivors, refutations and unresolved leaves add up to the candidates.
    pub fn partition_holds(&self) -> bool {
        self.survivors.len() as u64 + self.refuted() + self.unresolved_count() == self.candidates
    }

    /// Survivors outside the two named families (always empty when the
    /// recheck passed).
    pub fn unexpected_survivors(&self) -> Vec<&Survivor> {
        self.survivors.iter().filter(|s| s.family.array() != s.array).collect()
    }
}

enum Outcome {
    Survivor(Family),
    Refuted(RefutationCertificate),
    Unresolved(String),
}

/// One deep leaf: bipartite or almost bipartite with `c_2 = 1`.
fn evaluate(array: &IntersectionArray, opts: ClassifyOptions) -> Result<Outcome> {
    let violations = array.feasibility_basic();
    if !violations.is_empty() {
        return Ok(Outcome::Refuted(RefutationCertificate::new(
            Stage::ElementaryFeasibility,
            Some(array.clone()),
            Evidence::Feasibility(violations),
        )));
    }
    let girth = array.girth()?;
    if girth > 6 {
        let integral = array.parity() == ParityClass::Bipartite && array.diameter() >= 5;
        return Ok(match spectral_filters(array, integral)? {
            SpectralOutcome::Refuted(c) => Outcome::Refuted(c),
            _ if opts.no_external => Outcome::Unresolved(format!(
                "girth {girth} passes every internal filter; the girth bound is disabled"
            )),
            _ => Outcome::Refuted(RefutationCertificate::new(
                Stage::GirthAboveSix,
                Some(array.clone()),
                Evidence::Girth { girth },
            )),
        });
    }
    Ok(match dispatch(array, girth, array.parity(), opts)? {
        Classification::Family(f) => Outcome::Survivor(f),
        Classification::NotGirth6(c) | Classification::NotQPolynomialCandidate(c) => Outcome::Refuted(c),
        Classification::Unresolved(n) => Outcome::Unresolved(n),
    })
}

/// Enumerates the domain, decides every leaf, and re-verifies every
/// certificate before returning.
pub fn search(params: SearchParams) -> Result<SearchReport> {
    params.validate()?;
    let opts = ClassifyOptions {
        no_external: params.no_external,
    };
    let mut report = SearchReport {
        params,
        candidates: 0,
        candidates_by_diameter: BTreeMap::new(),
        survivors: Vec::new(),
        refutations: BTreeMap::new(),
        bulk: Vec::new(),
        unresolved: Vec::new(),
        unresolved_bulk: 0,
        recheck: RecheckSummary::default(),
    };
    for d in params.d_min..=params.d_max {
        let mut deep = Vec::new();
        let mut per_d = 0u64;
        for k in 3..=params.k_max {
            let mut buckets: Vec<BulkRefutation> = (0..d)
                .map(|j| BulkRefutation {
                    diameter: d,
                    valency: k,
                    nonzero: j,
                    leaves: 0,
                    infeasible: 0,
                    excluded: 0,
                    unresolved: 0,
                })
                .collect();
            walk(d, k, Region::All, |leaf| {
                per_d += 1;
                if leaf.first_nonzero == 0 {
                    deep.push(leaf.array());
                    return;
                }
                let b = &mut buckets[leaf.first_nonzero];
                b.leaves += 1;
                if !leaf.feasible() {
                    b.infeasible += 1;
                } else if params.no_external {
                    b.unresolved += 1;
                } else {
                    b.excluded += 1;
                }
            });
            report.bulk.extend(buckets.into_iter().filter(|b| b.leaves > 0));
        }
        report.candidates += per_d;
        report.candidates_by_diameter.insert(d, per_d);
        for array in deep {
            match evaluate(&array, opts)? {
                Outcome::Survivor(family) => report.survivors.push(Survivor { array, family }),
                Outcome::Refuted(c) => {
                    let g = report.refutations.entry(c.stage).or_default();
                    g.count += 1;
                    g.certificates.push(c);
                }
                Outcome::Unresolved(note) => report.unresolved.push((array, note)),
            }
        }
    }
    for b in &report.bulk {
        if b.infeasible > 0 {
            report.refutations.entry(Stage::ElementaryFeasibility).or_default().count += b.infeasible;
        }
        if b.excluded > 0 {
            report.refutations.entry(Stage::TrichotomyExcluded).or_default().count += b.excluded;
        }
        report.unresolved_bulk += b.unresolved;
    }
    recheck(&mut report, opts)?;
    Ok(report)
}

/// Bulk leaves checked with a full certificate per bucket, at most.
const SAMPLES_PER_BUCKET: u64 = 64;

fn recheck(report: &mut SearchReport, opts: ClassifyOptions) -> Result<()> {
    let fail = |msg: String| Err(Error::Invariant(format!("recheck: {msg}")));
    let mut summary = RecheckSummary::default();
    for group in report.refutations.values() {
        for c in &group.certificates {
            if c.subject.is_none() || !c.verify() {
                return fail(format!("certificate does not verify: {c}"));
            }
            summary.certificates += 1;
        }
    }
    for s in &report.survivors {
        let again = super::classify_array(&s.array, opts)?;
        if again.classification.family() != Some(s.family) || s.family.array() != s.array {
            return fail(format!("survivor {} is not {}", s.array, s.family.label()));
        }
        summary.survivors += 1;
    }
    for b in &report.bulk {
        let stride = (b.leaves / SAMPLES_PER_BUCKET).max(1);
        let mut again = BulkRefutation {
            leaves: 0,
            infeasible: 0,
            excluded: 0,
            unresolved: 0,
            ..*b
        };
        let mut bad: Option<String> = None;
        walk(b.diameter, b.valency, Region::Bucket(b.nonzero), |leaf| {
            let feasible = leaf.feasible();
            if feasible {
                if opts.no_external {
                    again.unresolved += 1;
                } else {
                    again.excluded += 1;
                }
            } else {
                again.infeasible += 1;
            }
            if again.leaves % stride == 0 && bad.is_none() {
                let array = leaf.array();
                let violations = array.feasibility_basic();
                let cert = if violations.is_empty() {
                    RefutationCertificate::new(
                        Stage::TrichotomyExcluded,
                        Some(array.clone()),
                        Evidence::Trichotomy {
                            nonzero: b.nonzero,
                            zero: 2,
                        },
                    )
                } else {
                    RefutationCertificate::new(
                        Stage::ElementaryFeasibility,
                        Some(array.clone()),
                        Evidence::Feasibility(violations.clone()),
                    )
                };
                if violations.is_empty() != feasible || !cert.verify() {
                    bad = Some(format!("bulk leaf {array} fails its certificate"));
                }
                summary.sampled_leaves += 1;
            }
            again.leaves += 1;
        });
        if let Some(msg) = bad {
            return fail(msg);
        }
        if again != *b {
            return fail(format!("bulk counts differ on re-enumeration: {b:?} vs {again:?}"));
        }
        summary.bulk_buckets += 1;
    }
    if !report.partition_holds() {
        return fail("survivors + refutations + unresolved != candidates".into());
    }
    report.recheck = summary;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        let bad = |d_min, d_max, k_max| {
            SearchParams {
                d_min,
                d_max,
                k_max,
                no_external: false,
            }
            .validate()
            .is_err()
        };
        assert!(bad(2, 3, 10));
        assert!(bad(4, 3, 10));
        assert!(bad(3, 9, 10));
        assert!(bad(3, 3, 2));
        assert!(bad(3, 3, 65));
        assert!(!bad(3, 8, 64));
    }

    #[test]
    fn diameter_three() {
        let r = search(SearchParams {
            d_min: 3,
            d_max: 3,
            k_max: 10,
            no_external: false,
        })
        .unwrap();
        assert!(r.partition_holds());
        let fams: Vec<Family> = r.survivors.iter().map(|s| s.family).collect();
        assert!(fams.contains(&Family::OddGraph { m: 7 }));
        assert!(fams.contains(&Family::GeneralizedHexagon { s: 1, t: 2 }));
        assert!(fams.contains(&Family::GeneralizedHexagon { s: 1, t: 3 }));
        assert!(r.unexpected_survivors().is_empty());
        assert!(r.unresolved.is_empty());
    }
}
