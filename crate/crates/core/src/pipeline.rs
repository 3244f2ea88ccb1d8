//! The filter chain shared by the classifier and the search: elementary
//! feasibility, eigenvalue integrality (optional), multiplicities, Krein conditions and
//! Q-polynomial orderings, each failing stage producing a certificate.

use crate::certificate::{Evidence, RefutationCertificate, Stage};
use crate::error::Result;
use crate::spectral::{
    eigenvalues, integer_eigenvalues, krein, multiplicity_screen, q_polynomial_orderings,
    witness_from_bracket, EigenBracket, ScreenOutcome, Spectrum,
};
use crate::IntersectionArray;

#[derive(Debug, Clone)]
pub enum SpectralOutcome {
    Refuted(RefutationCertificate),
    /// Passed every filter. `orderings` lists every ordering that may be
    /// Q-polynomial; `uncertain` is how many of them rest on undecided
    /// Krein zeros.
    QPolynomial {
        spectrum: Spectrum,
        orderings: Vec<Vec<usize>>,
        uncertain: usize,
    },
    /// No filter refutes, but Q-polynomiality could not be certified either.
    Undecided(String),
}

pub fn spectral_filters(array: &IntersectionArray, require_integral: bool) -> Result<SpectralOutcome> {
    let subject = Some(array.clone());
    let d = array.diameter();
    let violations = array.feasibility_basic();
    if !violations.is_empty() {
        return Ok(SpectralOutcome::Refuted(RefutationCertificate::new(
            Stage::ElementaryFeasibility,
            subject,
            Evidence::Feasibility(violations),
        )));
    }
    if require_integral {
        let found = integer_eigenvalues(array);
        if found.len() < d + 1 {
            return Ok(SpectralOutcome::Refuted(RefutationCertificate::new(
                Stage::EigenvalueNotIntegral,
                subject,
                Evidence::IntegerEigenvalues { found },
            )));
        }
    }
    if let ScreenOutcome::NonIntegral(w) = multiplicity_screen(array) {
        return Ok(SpectralOutcome::Refuted(RefutationCertificate::new(
            Stage::MultiplicityNotIntegral,
            subject,
            Evidence::Multiplicity(w),
        )));
    }
    let spectrum = eigenvalues(array)?;
    if !spectrum.multiplicities_integral() {
        if let Some(w) = exact_multiplicity_witness(array, &spectrum) {
            return Ok(SpectralOutcome::Refuted(RefutationCertificate::new(
                Stage::MultiplicityNotIntegral,
                subject,
                Evidence::Multiplicity(w),
            )));
        }
        return Ok(SpectralOutcome::Undecided(
            "non-integral multiplicity found but no re-verifiable witness".into(),
        ));
    }
    let tensor = krein(&spectrum)?;
    if let Some(&(h, i, j)) = tensor.negative_entries().first() {
        return Ok(SpectralOutcome::Refuted(RefutationCertificate::new(
            Stage::KreinNegative,
            subject,
            Evidence::Krein {
                h,
                i,
                j,
                value: tensor.get(h, i, j).clone(),
            },
        )));
    }
    let orderings = q_polynomial_orderings(&tensor);
    match orderings.is_q_polynomial() {
        Some(false) => Ok(SpectralOutcome::Refuted(RefutationCertificate::new(
            Stage::NotQPolynomial,
            subject,
            Evidence::NoOrdering,
        ))),
        _ => {
            let uncertain = orderings.uncertain.len();
            let mut all = orderings.certified;
            all.extend(orderings.uncertain);
            all.sort();
            Ok(SpectralOutcome::QPolynomial {
                spectrum,
                orderings: all,
                uncertain,
            })
        }
    }
}

/// A screen-style witness for the first non-integral exact multiplicity.
fn exact_multiplicity_witness(
    array: &IntersectionArray,
    spectrum: &Spectrum,
) -> Option<crate::spectral::MultiplicityWitness> {
    let (index, theta) = spectrum
        .multiplicities()
        .iter()
        .zip(spectrum.eigenvalues())
        .enumerate()
        .find(|(_, (m, _))| !m.is_positive_integer())
        .map(|(i, (_, e))| (i, e))?;
    if let Some(r) = theta.as_integer() {
        return witness_from_bracket(array, index, EigenBracket::Integer(r));
    }
    let mut bits = 64;
    while bits <= 4096 {
        let iv = theta.enclosure(bits);
        let bracket = EigenBracket::Bracket {
            lo: iv.lo().clone(),
            hi: iv.hi().clone(),
        };
        if let Some(w) = witness_from_bracket(array, index, bracket) {
            return Some(w);
        }
        bits *= 2;
    }
    None
}
