//! Brill-Noether locus verdicts and the bridge from the small-alpha
//! moduli space `G_0(n,d,k)` to the locus `B(n,d,k)` of stable bundles
//! with at least `k` independent sections: the full-moduli criterion,
//! non-emptiness tables, irreducibility / dimension / birational
//! structure, desingularization conditions, and the Picard-group
//! statement for a single section.
//!
//! Everything here lives at genus >= 2; Brill-Noether theory is trivial
//! below that.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::DomainError;
use crate::invariants::brill_noether_number;
use crate::moduli::{
    classify_all_chambers, FibrationRelation, ModuliStructure, Provenance, SpaceKind, TriState,
};
use crate::types::{CurveContext, SystemType};

/// `B(n,d,k) = M(n,d)` exactly when `d - n(g-1) >= k`; for `k = 0` the
/// locus is the whole moduli space by definition.
pub fn bn_equals_full(genus: u32, t: SystemType) -> Result<bool, DomainError> {
    if genus < 2 {
        return Err(DomainError::NeedsGenusAtLeastTwo { genus });
    }
    if t.k == 0 {
        return Ok(true);
    }
    Ok(t.d - i64::from(t.n) * (i64::from(genus) - 1) >= i64::from(t.k))
}

fn bundle_dim(genus: u32, n: u32) -> i64 {
    let g = i128::from(genus);
    let n = i128::from(n);
    i64::try_from(n * n * (g - 1) + 1).expect("dimension overflows i64")
}

/// Non-emptiness of `B(n,d,k)`, exact where a theorem decides it.
///
/// For `k = 2, 3` this reproduces the six-case table; the Petri
/// hypothesis is needed only for the rank-2, three-section case. For
/// `k = 1` the locus is non-empty exactly when `d >= 1`.
pub fn bn_nonempty(ctx: CurveContext, t: SystemType) -> TriState {
    if ctx.genus < 2 {
        return TriState::Unknown;
    }
    let g = i64::from(ctx.genus);
    let (n, d, k) = (i64::from(t.n), t.d, i64::from(t.k));
    if k == 0 {
        return TriState::Yes;
    }
    if n == 1 {
        let beta = brill_noether_number(ctx.genus, t);
        return if beta >= 0 {
            TriState::Yes
        } else {
            TriState::given_petri(ctx, false)
        };
    }
    match k {
        1 => TriState::from_bool(d >= 1),
        2 => {
            let holds = if n == 2 { d >= 3 } else { d >= 1 };
            TriState::from_bool(holds)
        }
        3 => match n {
            2 => TriState::given_petri(ctx, 3 * d >= 2 * g + 6),
            3 => TriState::from_bool(d >= 4),
            4 => TriState::from_bool((g == 2 && d >= 2) || (g >= 3 && d >= 1)),
            _ => TriState::from_bool(d >= 1),
        },
        _ => {
            if bn_equals_full(ctx.genus, t) == Ok(true) {
                TriState::Yes
            } else {
                TriState::Unknown
            }
        }
    }
}

/// The Picard statement for the smooth part of `B(n,d,1)`:
/// `Pic(B(n,d,1) - B(n,d,2)) = Pic(M(n-1,d)) x Z`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardStatement {
    pub base_rank: u32,
    pub base_degree: i64,
}

impl fmt::Display for PicardStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Pic of the smooth locus B(n,d,1) - B(n,d,2) is Pic(M({},{})) x Z",
            self.base_rank, self.base_degree
        )
    }
}

/// Present exactly for `k = 1`, `0 < d <= n(g-1)`, `n >= 3`,
/// `gcd(n-1,d) = gcd(n,d) = 1` on a Petri curve.
pub fn picard_statement(ctx: CurveContext, t: SystemType) -> Option<PicardStatement> {
    let g = i64::from(ctx.genus);
    let (n, d) = (i64::from(t.n), t.d);
    let applies = ctx.genus >= 2
        && ctx.petri
        && t.k == 1
        && n >= 3
        && d > 0
        && d <= n * (g - 1)
        && (n - 1).gcd(&d) == 1
        && n.gcd(&d) == 1;
    applies.then(|| PicardStatement {
        base_rank: t.n - 1,
        base_degree: t.d,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DesingConclusion {
    /// The locus is the whole moduli space; nothing to desingularise.
    EqualsFullModuli,
    /// `d = 0` with `0 < k < n`: the coherent-systems space is empty while
    /// the semistable locus is not, so the bridge breaks down.
    ZeroDegreePathology,
    /// `G_0` is a desingularisation of `B(n,d,k)` itself (`gcd(n,d) = 1`).
    DesingularisationOfLocus,
    /// `G_0` is a desingularisation of the closure of the locus in the
    /// semistable moduli space (`gcd(n,d,k) = 1`).
    DesingularisationOfClosure,
    Inconclusive,
    NotCoveredLowGenus,
}

/// Which pieces of the desingularization ladder hold for this type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesingularizationReport {
    pub equals_full: bool,
    /// `beta <= n^2(g-1)`, the complement of the full-moduli range.
    pub beta_within_bundle_dim: bool,
    pub g0_irreducible: TriState,
    pub g0_smooth: TriState,
    pub locus_nonempty: TriState,
    pub coprime_rank_degree: bool,
    pub coprime_type: bool,
    pub conclusion: DesingConclusion,
}

pub fn desingularization_check(ctx: CurveContext, t: SystemType) -> DesingularizationReport {
    let (n, d, k) = (i64::from(t.n), t.d, i64::from(t.k));
    let coprime_rank_degree = n.gcd(&d) == 1;
    let coprime_type = n.gcd(&d).gcd(&k) == 1;
    let mut report = DesingularizationReport {
        equals_full: false,
        beta_within_bundle_dim: false,
        g0_irreducible: TriState::Unknown,
        g0_smooth: TriState::Unknown,
        locus_nonempty: TriState::Unknown,
        coprime_rank_degree,
        coprime_type,
        conclusion: DesingConclusion::Inconclusive,
    };
    if ctx.genus < 2 {
        report.conclusion = DesingConclusion::NotCoveredLowGenus;
        return report;
    }
    let equals_full = bn_equals_full(ctx.genus, t).expect("genus checked");
    report.equals_full = equals_full;
    let beta = brill_noether_number(ctx.genus, t);
    report.beta_within_bundle_dim = beta < bundle_dim(ctx.genus, t.n);
    if equals_full {
        report.conclusion = DesingConclusion::EqualsFullModuli;
        return report;
    }
    if d == 0 && k > 0 && k < n {
        report.conclusion = DesingConclusion::ZeroDegreePathology;
        return report;
    }
    let chambers = classify_all_chambers(ctx, t);
    if let Some((_, g0)) = chambers.first() {
        report.g0_irreducible = g0.irreducible;
        report.g0_smooth = g0.smooth;
    }
    report.locus_nonempty = bn_nonempty(ctx, t);
    let conditions_hold = report.beta_within_bundle_dim
        && report.g0_irreducible.is_yes()
        && report.g0_smooth.is_yes()
        && report.locus_nonempty.is_yes();
    if conditions_hold {
        report.conclusion = if coprime_rank_degree {
            DesingConclusion::DesingularisationOfLocus
        } else if coprime_type {
            DesingConclusion::DesingularisationOfClosure
        } else {
            DesingConclusion::Inconclusive
        };
    }
    report
}

/// Full verdict record for one Brill-Noether locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BNVerdict {
    pub nonempty: TriState,
    pub equals_full_moduli: bool,
    pub irreducible: TriState,
    pub dimension: Option<i64>,
    pub smooth_locus_note: Option<String>,
    pub structure: Option<ModuliStructure>,
    pub picard: Option<PicardStatement>,
    pub desingularization: Option<DesingularizationReport>,
    pub provenance: Provenance,
    pub notes: Vec<String>,
}

impl BNVerdict {
    fn blank(provenance: Provenance) -> Self {
        BNVerdict {
            nonempty: TriState::Unknown,
            equals_full_moduli: false,
            irreducible: TriState::Unknown,
            dimension: None,
            smooth_locus_note: None,
            structure: None,
            picard: None,
            desingularization: None,
            provenance,
            notes: Vec::new(),
        }
    }
}

/// Irreducibility, dimension and birational structure of `B(n,d,k)`,
/// where the single-section or low-section theorems apply; otherwise
/// whatever partial facts are decidable.
pub fn bn_structure(ctx: CurveContext, t: SystemType) -> BNVerdict {
    let g = i64::from(ctx.genus);
    let (n, d, k) = (i64::from(t.n), t.d, i64::from(t.k));
    if ctx.genus < 2 {
        let mut v = BNVerdict::blank(Provenance::NoApplicableTheorem);
        v.notes
            .push("Brill-Noether theory is trivial at genus 0 and 1".into());
        return v;
    }
    let beta = brill_noether_number(ctx.genus, t);
    let equals_full = bn_equals_full(ctx.genus, t).expect("genus checked");
    let nonempty = bn_nonempty(ctx, t);

    let mut v = if equals_full {
        let mut v = BNVerdict::blank(Provenance::EqualsFullModuli);
        v.equals_full_moduli = true;
        v.nonempty = TriState::Yes;
        v.irreducible = TriState::Yes;
        v.dimension = Some(bundle_dim(ctx.genus, t.n));
        v.smooth_locus_note = Some("the locus is the whole of M(n,d), which is smooth".into());
        v
    } else if t.n == 1 {
        let mut v = BNVerdict::blank(Provenance::Rank1BrillNoether);
        v.nonempty = nonempty;
        if nonempty.assuming_petri() == Some(true) {
            if ctx.petri {
                v.dimension = Some(beta);
            }
            if beta > 0 {
                v.irreducible = TriState::given_petri(ctx, true);
            }
            v.smooth_locus_note = Some(format!(
                "on a Petri curve, smooth outside B(1,{d},{})",
                k + 1
            ));
        }
        v
    } else if t.k == 1 && d > 0 {
        // below the full-moduli cutoff, no genericity needed
        let mut v = BNVerdict::blank(Provenance::BnSingleSection);
        v.nonempty = TriState::Yes;
        v.irreducible = TriState::Yes;
        v.dimension = Some(beta);
        v.smooth_locus_note = Some(format!("smooth outside B({n},{d},2)"));
        let fibre_dim = d + (n - 1) * (g - 1) - 1;
        let relation = if (n - 1).gcd(&d) == 1 {
            FibrationRelation::BirationalToProduct
        } else {
            FibrationRelation::Birational
        };
        v.structure = Some(ModuliStructure::Fibration {
            base_rank: t.n - 1,
            base_degree: d,
            fibre: SpaceKind::Projective { dim: fibre_dim },
            relation,
        });
        v
    } else if (t.k == 2 || t.k == 3) && nonempty.assuming_petri() == Some(true) {
        // here d < n(g-1) + k, since equals_full failed
        let mut v = BNVerdict::blank(Provenance::BnLowSections);
        v.nonempty = nonempty;
        v.irreducible = TriState::given_petri(ctx, true);
        if ctx.petri {
            v.dimension = Some(beta);
        }
        if k < n {
            let fibre = SpaceKind::Grassmannian {
                k,
                n: d + (n - k) * (g - 1),
            };
            let relation = if (n - k).gcd(&d) == 1 {
                FibrationRelation::BirationalToProduct
            } else {
                FibrationRelation::Birational
            };
            v.structure = Some(ModuliStructure::Fibration {
                base_rank: t.n - t.k,
                base_degree: d,
                fibre,
                relation,
            });
        }
        v
    } else {
        let mut v = BNVerdict::blank(if t.k == 2 || t.k == 3 {
            Provenance::BnNonemptyTable
        } else {
            Provenance::NoApplicableTheorem
        });
        v.nonempty = nonempty;
        v
    };

    v.picard = picard_statement(ctx, t);
    if t.k >= 1 {
        let ds = desingularization_check(ctx, t);
        if matches!(
            ds.conclusion,
            DesingConclusion::DesingularisationOfLocus
                | DesingConclusion::DesingularisationOfClosure
        ) {
            // set-theoretic fact riding along with the desingularisation
            v.notes.push(format!(
                "the comparison map from the small-alpha moduli space is one-to-one over B({n},{d},{k}) - B({n},{d},{})",
                k + 1
            ));
        }
        v.desingularization = Some(ds);
    }
    if v.nonempty.is_no() {
        v.dimension = None;
    }
    v
}
