use serde::Serialize;

use super::{
    dicyclic_presentation, dihedral_presentation, parse_presentation, todd_coxeter, Enumeration,
    Presentation, Word,
};
use crate::error::{Error, Result};
use crate::groups::{ElementId, FiniteGroup, Kind};

/// Value of `word` in `group` with generator `i` sent to `images[i]`.
pub fn evaluate_word(group: &FiniteGroup, word: &Word, images: &[ElementId]) -> ElementId {
    word.pairs().iter().fold(group.identity(), |acc, &(g, e)| {
        group.mul(acc, group.pow(images[g], e))
    })
}

/// True iff every relator of `pres` maps to the identity of `group`.
pub fn check_homomorphism(pres: &Presentation, group: &FiniteGroup, images: &[ElementId]) -> bool {
    images.len() == pres.generator_names.len()
        && pres
            .relators
            .iter()
            .all(|r| evaluate_word(group, r, images) == group.identity())
}

/// Outcome of checking a pair of generator assignments `φ: G → ⟨P⟩`, `ψ: ⟨P⟩ → G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutualInverseReport {
    pub source_order: usize,
    pub target_order: usize,
    pub phi_is_homomorphism: bool,
    pub psi_is_homomorphism: bool,
    pub psi_after_phi_is_identity: bool,
    pub phi_after_psi_is_identity: bool,
}

impl MutualInverseReport {
    pub fn passed(&self) -> bool {
        self.phi_is_homomorphism
            && self.psi_is_homomorphism
            && self.psi_after_phi_is_identity
            && self.phi_after_psi_is_identity
            && self.source_order == self.target_order
    }
}

/// The defining presentation a built-in group family was constructed from.
pub(crate) fn standard_presentation(group: &FiniteGroup) -> Result<Presentation> {
    match group.kind() {
        Kind::Dicyclic { n } => dicyclic_presentation(*n),
        Kind::Dihedral { n } => dihedral_presentation(*n),
        Kind::Cyclic => parse_presentation(&format!("<g | g^{}>", group.order())),
        Kind::Presented => match group.descriptor().strip_prefix("fp:") {
            Some(text) => parse_presentation(text),
            None => Err(Error::ContractViolation(format!(
                "{} carries no presentation",
                group.descriptor()
            ))),
        },
        _ => Err(Error::ContractViolation(format!(
            "{} carries no presentation",
            group.descriptor()
        ))),
    }
}

fn lookup<'a>(map: &'a [(&str, &str)], name: &str, which: &str) -> Result<&'a str> {
    map.iter()
        .find(|(k, _)| *k == name)
        .map(|&(_, v)| v)
        .ok_or_else(|| Error::InvalidParameter(format!("{which} has no image for `{name}`")))
}

/// Realize `target` by coset enumeration and check that `φ` (generators of
/// `source` → words in `target`'s generators) and `ψ` (generators of `target`
/// → words in `source`'s generators) are mutually inverse homomorphisms.
pub fn verify_mutual_inverse(
    source: &FiniteGroup,
    target: &Presentation,
    phi: &[(&str, &str)],
    psi: &[(&str, &str)],
    max_cosets: usize,
) -> Result<MutualInverseReport> {
    let source_pres = standard_presentation(source)?;
    let realized = match todd_coxeter(target, max_cosets)? {
        Enumeration::Complete(g) => g,
        Enumeration::Exceeded { cosets } => return Err(Error::EnumerationExceeded(cosets)),
    };

    let source_gens: Vec<ElementId> = source_pres
        .generator_names
        .iter()
        .map(|n| {
            source
                .generator(n)
                .ok_or_else(|| Error::UnknownGenerator(n.clone()))
        })
        .collect::<Result<_>>()?;
    let target_gens: Vec<ElementId> = target
        .generator_names
        .iter()
        .map(|n| realized.generator(n).expect("enumeration registers generators"))
        .collect();

    let phi_words: Vec<Word> = source_pres
        .generator_names
        .iter()
        .map(|n| target.parse_word(lookup(phi, n, "phi")?))
        .collect::<Result<_>>()?;
    let psi_words: Vec<Word> = target
        .generator_names
        .iter()
        .map(|n| source_pres.parse_word(lookup(psi, n, "psi")?))
        .collect::<Result<_>>()?;

    let phi_images: Vec<ElementId> = phi_words
        .iter()
        .map(|w| evaluate_word(&realized, w, &target_gens))
        .collect();
    let psi_images: Vec<ElementId> = psi_words
        .iter()
        .map(|w| evaluate_word(source, w, &source_gens))
        .collect();

    let psi_after_phi_is_identity = phi_words
        .iter()
        .zip(&source_gens)
        .all(|(w, &g)| evaluate_word(source, w, &psi_images) == g);
    let phi_after_psi_is_identity = psi_words
        .iter()
        .zip(&target_gens)
        .all(|(w, &p)| evaluate_word(&realized, w, &phi_images) == p);

    Ok(MutualInverseReport {
        source_order: source.order(),
        target_order: realized.order(),
        phi_is_homomorphism: check_homomorphism(&source_pres, &realized, &phi_images),
        psi_is_homomorphism: check_homomorphism(target, source, &psi_images),
        psi_after_phi_is_identity,
        phi_after_psi_is_identity,
    })
}
