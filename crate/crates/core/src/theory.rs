//! Closed-form predictions for two-generator presentations of dicyclic groups,
//! the explicit isomorphisms with the presentations `Π_{4n,i}`, and a verifier
//! that confronts the predictions with exhaustive classification.

use serde::Serialize;

use crate::classify::{classify, classify_summary_equal, gcd, ClassifyOptions, Mode};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, OrderMultiset};
use crate::presentation::{pi_presentation, verify_mutual_inverse, MutualInverseReport, PiVariant};

/// Largest `n` accepted by [`verify_theorem`] by default.
pub const DEFAULT_MAX_N: usize = 8;

fn gcd_signed(n: usize, d: i64) -> usize {
    gcd(n, d.unsigned_abs() as usize)
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidParameter(format!("n must be at least 2, got {n}")))
    } else {
        Ok(())
    }
}

/// `⟨a^k x, a^m x⟩ = DC_4n` iff `gcd(n, k - m) = 1`.
pub fn generates_pair_xx(n: usize, k: i64, m: i64) -> bool {
    gcd_signed(n, k - m) == 1
}

/// `⟨a^k, a^m x⟩ = DC_4n` iff `gcd(n, k) = 1`.
pub fn generates_pair_ax(n: usize, k: i64, _m: i64) -> bool {
    gcd_signed(n, k) == 1
}

/// Whether `(a^k1 x, a^m1 x)` and `(a^k2 x, a^m2 x)` give equivalent Cayley
/// graphs: always for even `n`, by parity of `k - m` for odd `n`.
pub fn same_class_xx(n: usize, k1: i64, m1: i64, k2: i64, m2: i64) -> Result<bool> {
    if !generates_pair_xx(n, k1, m1) || !generates_pair_xx(n, k2, m2) {
        return Err(Error::ContractViolation(
            "same_class_xx needs two generating pairs".into(),
        ));
    }
    Ok(n % 2 == 0 || (k1 - m1).rem_euclid(2) == (k2 - m2).rem_euclid(2))
}

/// Order of `a^k` when `(a^k, a^m x)` generates: `2n` if `gcd(2n, k) = 1`,
/// `n` if `gcd(2n, k) = 2` and `n` is odd, otherwise `None` (no generation).
pub fn order_constraint_ax(n: usize, k: i64) -> Option<usize> {
    match gcd_signed(2 * n, k) {
        1 => Some(2 * n),
        2 if n % 2 == 1 => Some(n),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremPrediction {
    pub n: usize,
    pub expected_class_count: usize,
    /// One entry per class, sorted.
    pub expected_multisets: Vec<OrderMultiset>,
    /// Element expressions, one sequence per class.
    pub representatives: Vec<String>,
}

/// Two classes `{{2n,4}}, {{4,4}}` for even `n`; four classes
/// `{{2n,4}}, {{4,4}}, {{4,4}}, {{n,4}}` for odd `n`.
pub fn predicted_classification(n: usize) -> Result<TheoremPrediction> {
    check_n(n)?;
    let mut multisets = vec![OrderMultiset::new(vec![2 * n, 4]), OrderMultiset::new(vec![4, 4])];
    let mut reps = vec!["a,x".to_string(), "a*x,x".to_string()];
    if n % 2 == 1 {
        multisets.push(OrderMultiset::new(vec![4, 4]));
        multisets.push(OrderMultiset::new(vec![n, 4]));
        reps.push("a^2*x,x".to_string());
        reps.push("a^2,x".to_string());
    }
    multisets.sort();
    Ok(TheoremPrediction {
        n,
        expected_class_count: multisets.len(),
        expected_multisets: multisets,
        representatives: reps,
    })
}

/// Generator assignments `φ: DC_4n → Π_{4n,i}` and `ψ: Π_{4n,i} → DC_4n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismPair {
    pub n: usize,
    pub variant: PiVariant,
    pub phi: Vec<(String, String)>,
    pub psi: Vec<(String, String)>,
}

impl MorphismPair {
    fn pairs(v: &[(String, String)]) -> Vec<(&str, &str)> {
        v.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
    }

    pub fn phi_pairs(&self) -> Vec<(&str, &str)> {
        Self::pairs(&self.phi)
    }

    pub fn psi_pairs(&self) -> Vec<(&str, &str)> {
        Self::pairs(&self.psi)
    }
}

pub fn morphism_pair(n: usize, variant: PiVariant) -> Result<MorphismPair> {
    check_n(n)?;
    if variant.requires_odd() && n % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "variant {variant} needs odd n, got n={n}"
        )));
    }
    Ok(morphism_pair_unchecked(n, variant))
}

fn morphism_pair_unchecked(n: usize, variant: PiVariant) -> MorphismPair {
    let own = |v: &[(&str, String)]| -> Vec<(String, String)> {
        v.iter().map(|(a, b)| (a.to_string(), b.clone())).collect()
    };
    let (phi, psi) = match variant {
        PiVariant::One => (
            own(&[("a", "u^3*v".into()), ("x", "v".into())]),
            own(&[("u", "a*x".into()), ("v", "x".into())]),
        ),
        PiVariant::Zero => (
            own(&[("a", "v*u".into()), ("x", "v".into())]),
            own(&[("u", format!("a^{}*x", n - 1)), ("v", "x".into())]),
        ),
        PiVariant::N => (
            own(&[("a", format!("b^{}*y^2", (n + 1) / 2)), ("x", "y".into())]),
            own(&[("b", "a^2".into()), ("y", "x".into())]),
        ),
    };
    MorphismPair {
        n,
        variant,
        phi,
        psi,
    }
}

/// Check one morphism pair against the coset-enumerated `Π_{4n,variant}`.
pub fn check_morphisms(n: usize, variant: PiVariant) -> Result<MutualInverseReport> {
    let pair = morphism_pair(n, variant)?;
    let pres = pi_presentation(n, variant)?;
    let group = FiniteGroup::dicyclic(n)?;
    verify_mutual_inverse(&group, &pres, &pair.phi_pairs(), &pair.psi_pairs(), 16 * 4 * n)
}

#[derive(Clone, Debug, Serialize)]
pub struct ObservedClasses {
    pub class_count: usize,
    pub multisets: Vec<OrderMultiset>,
    pub representatives: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MorphismCheck {
    pub variant: PiVariant,
    pub passed: bool,
    pub report: MutualInverseReport,
}

/// Result of [`verify_theorem`]; serializes to the CLI's JSON.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremVerification {
    pub n: usize,
    pub predicted: TheoremPrediction,
    pub observed: ObservedClasses,
    pub representatives_distinct: bool,
    pub morphisms_checked: Vec<MorphismCheck>,
    pub pass: bool,
    #[serde(skip)]
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct TheoremOptions {
    pub max_n: usize,
    pub jobs: usize,
}

impl Default for TheoremOptions {
    fn default() -> Self {
        TheoremOptions {
            max_n: DEFAULT_MAX_N,
            jobs: 1,
        }
    }
}

/// Classify the minimal two-element generating sequences of `DC_4n`, compare
/// with [`predicted_classification`], check that the predicted
/// representatives fall in distinct classes, and check every applicable
/// morphism pair.
pub fn verify_theorem(n: usize, options: &TheoremOptions) -> Result<TheoremVerification> {
    check_n(n)?;
    if n > options.max_n {
        return Err(Error::ScaleGuard(format!(
            "n={n} exceeds the configured maximum {}",
            options.max_n
        )));
    }
    let group = FiniteGroup::dicyclic(n)?;
    let predicted = predicted_classification(n)?;
    let report = classify(
        &group,
        2,
        &ClassifyOptions {
            mode: Mode::Directed,
            minimal_only: true,
            jobs: options.jobs,
            ..Default::default()
        },
    )?;
    let mut diagnostics = Vec::new();

    let profile_ok = classify_summary_equal(&report, &predicted.expected_multisets);
    if !profile_ok {
        diagnostics.push(format!(
            "expected {} classes {:?}, observed {} classes {:?}",
            predicted.expected_class_count,
            predicted.expected_multisets.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            report.class_count(),
            report.multiset_profile().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        ));
    }

    let mut seen_classes = Vec::new();
    for rep in &predicted.representatives {
        let seq = group.parse_sequence(rep)?;
        match report.class_of(&seq.elements) {
            Some(c) if seen_classes.contains(&c) => {
                diagnostics.push(format!("representative ({rep}) shares class {}", c + 1))
            }
            Some(c) => seen_classes.push(c),
            None => diagnostics.push(format!("representative ({rep}) is not minimal generating")),
        }
    }
    let representatives_distinct = seen_classes.len() == predicted.representatives.len();

    let mut variants = vec![PiVariant::One];
    if n % 2 == 1 {
        variants.extend([PiVariant::Zero, PiVariant::N]);
    }
    let mut morphisms_checked = Vec::new();
    for variant in variants {
        let report = check_morphisms(n, variant)?;
        if !report.passed() {
            diagnostics.push(format!("morphism pair for variant {variant} failed: {report:?}"));
        }
        morphisms_checked.push(MorphismCheck {
            variant,
            passed: report.passed(),
            report,
        });
    }

    let pass = profile_ok
        && representatives_distinct
        && morphisms_checked.iter().all(|m| m.passed);
    Ok(TheoremVerification {
        n,
        observed: ObservedClasses {
            class_count: report.class_count(),
            multisets: report.multiset_profile(),
            representatives: report.classes.iter().map(|c| c.representative.clone()).collect(),
        },
        predicted,
        representatives_distinct,
        morphisms_checked,
        pass,
        diagnostics,
    })
}
