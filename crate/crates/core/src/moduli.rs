//! Theorem-level classification of the moduli spaces `G(alpha; n, d, k)`:
//! the terminal space (largest alpha) by cases `k < n`, `k = n`,
//! `k = n+1`, `k > n+1`; whole-family chamber verdicts where a
//! classification theorem covers every chamber; and the rank-1 spaces,
//! where stability is vacuous.
//!
//! Verdicts never silently assume the curve is generic: statements that
//! need the Petri hypothesis come back as `ConditionalOnPetri` unless the
//! context asserts it.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::invariants::brill_noether_number;
use crate::types::{CurveContext, SystemType};
use crate::walls::{enumerate_walls, Chamber};

/// A verdict that may be hypothesis-dependent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TriState {
    Yes,
    No,
    Unknown,
    /// The verdict that holds if the curve is Petri.
    ConditionalOnPetri(bool),
}

impl TriState {
    /// Resolves a Petri-dependent statement against the context.
    pub fn given_petri(ctx: CurveContext, holds: bool) -> TriState {
        if ctx.petri {
            TriState::from_bool(holds)
        } else {
            TriState::ConditionalOnPetri(holds)
        }
    }

    pub fn from_bool(b: bool) -> TriState {
        if b {
            TriState::Yes
        } else {
            TriState::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == TriState::Yes
    }

    pub fn is_no(self) -> bool {
        self == TriState::No
    }

    /// The answer modulo the Petri hypothesis, if there is one.
    pub fn assuming_petri(self) -> Option<bool> {
        match self {
            TriState::Yes | TriState::ConditionalOnPetri(true) => Some(true),
            TriState::No | TriState::ConditionalOnPetri(false) => Some(false),
            TriState::Unknown => None,
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriState::Yes => write!(f, "yes"),
            TriState::No => write!(f, "no"),
            TriState::Unknown => write!(f, "unknown"),
            TriState::ConditionalOnPetri(true) => write!(f, "yes (requires Petri)"),
            TriState::ConditionalOnPetri(false) => write!(f, "no (requires Petri)"),
        }
    }
}

/// Model spaces appearing in structure statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpaceKind {
    /// Gr(k, n)
    Grassmannian {
        k: i64,
        n: i64,
    },
    /// P^dim
    Projective {
        dim: i64,
    },
    /// n-th symmetric power of the curve
    SymmetricPowerOfCurve {
        n: i64,
    },
    SinglePoint,
    /// the curve itself
    Curve,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::Grassmannian { k, n } => write!(f, "Gr({k},{n})"),
            SpaceKind::Projective { dim } => write!(f, "P^{dim}"),
            SpaceKind::SymmetricPowerOfCurve { n } => write!(f, "Sym^{n}(X)"),
            SpaceKind::SinglePoint => write!(f, "a single point"),
            SpaceKind::Curve => write!(f, "the curve X"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FibrationRelation {
    Isomorphism,
    Birational,
    BirationalToProduct,
}

/// Coarse geometric description attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModuliStructure {
    /// Isomorphic to the given model space.
    Space(SpaceKind),
    /// Related to a fibration over the bundle moduli `M(base_rank, base_degree)`.
    Fibration {
        base_rank: u32,
        base_degree: i64,
        fibre: SpaceKind,
        relation: FibrationRelation,
    },
}

impl fmt::Display for ModuliStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuliStructure::Space(s) => write!(f, "isomorphic to {s}"),
            ModuliStructure::Fibration {
                base_rank,
                base_degree,
                fibre,
                relation,
            } => {
                let rel = match relation {
                    FibrationRelation::Isomorphism => "isomorphic to",
                    FibrationRelation::Birational => "birationally equivalent to",
                    FibrationRelation::BirationalToProduct => "birational to the product with",
                };
                match relation {
                    FibrationRelation::BirationalToProduct => {
                        write!(f, "birational to M({base_rank},{base_degree}) x {fibre}")
                    }
                    _ => write!(
                        f,
                        "{rel} a fibration over M({base_rank},{base_degree}) with fibre {fibre}"
                    ),
                }
            }
        }
    }
}

/// Which result produced a verdict, so reports are auditable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    StableBundleModuli,
    Jacobian,
    Rank1BrillNoether,
    DegreeObstruction,
    TerminalFibration,
    TerminalGenusZero,
    TerminalGenusOne,
    TerminalSectionsEqualRank,
    TerminalDualSpan,
    DualSpanHint,
    ChambersSingleSection,
    ChambersTwoSections,
    ChambersThreeSections,
    RankTwoBirationalChambers,
    RankTwoPartialFlips,
    EqualsFullModuli,
    BnNonemptyTable,
    BnSingleSection,
    BnLowSections,
    PicardSingleSection,
    NoApplicableTheorem,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::StableBundleModuli => "classical facts on the moduli of stable bundles M(n,d)",
            Provenance::Jacobian => "the Jacobian of the curve",
            Provenance::Rank1BrillNoether => "classical rank-1 Brill-Noether theory (Petri curve)",
            Provenance::DegreeObstruction => "degree constraints for (semi)stable coherent systems",
            Provenance::TerminalFibration => {
                "terminal moduli for k<n: Grassmannian fibration over M(n-k,d), genus >= 2"
            }
            Provenance::TerminalGenusZero => "terminal moduli for k<n at genus 0",
            Provenance::TerminalGenusOne => "terminal moduli for k<n at genus 1",
            Provenance::TerminalSectionsEqualRank => "terminal moduli for k=n via torsion quotients",
            Provenance::TerminalDualSpan => "terminal moduli for k=n+1 via the dual span (Petri curve)",
            Provenance::DualSpanHint => {
                "no classification for k>n+1; dual span relates it birationally to type (k-n,d,k) for large alpha"
            }
            Provenance::ChambersSingleSection => "full classification of all chambers for k=1, genus >= 2",
            Provenance::ChambersTwoSections => "full classification of all chambers for k=2 (Petri curve)",
            Provenance::ChambersThreeSections => "full classification of all chambers for k=3 (Petri curve)",
            Provenance::RankTwoBirationalChambers => {
                "rank 2 with k=4: all chambers are birational to each other (Petri curve)"
            }
            Provenance::RankTwoPartialFlips => {
                "rank 2 with k>4: flips at walls with a rank-1, 2-section subsystem are good on the minus side (Petri curve)"
            }
            Provenance::EqualsFullModuli => "the Brill-Noether locus fills the whole moduli space when d - n(g-1) >= k",
            Provenance::BnNonemptyTable => "non-emptiness table for Brill-Noether loci with k=2,3",
            Provenance::BnSingleSection => "structure of the Brill-Noether locus with a single section",
            Provenance::BnLowSections => "structure of the Brill-Noether locus for k=2,3 below the full-moduli cutoff",
            Provenance::PicardSingleSection => "Picard group of the smooth locus of B(n,d,1)",
            Provenance::NoApplicableTheorem => "no applicable classification",
        };
        write!(f, "{s}")
    }
}

/// Non-emptiness / irreducibility / smoothness / dimension report for one
/// moduli space, with the provenance of whichever theorem decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliVerdict {
    pub nonempty: TriState,
    pub irreducible: TriState,
    pub smooth: TriState,
    /// Actual dimension, when a theorem pins it down.
    pub dimension: Option<i64>,
    /// The Brill-Noether number of the type.
    pub expected_dimension: i64,
    pub structure: Option<ModuliStructure>,
    pub provenance: Provenance,
    pub notes: Vec<String>,
    /// Verdict for the S-equivalence moduli of semistable systems, where
    /// it differs from the stable one.
    pub semistable_variant: Option<Box<ModuliVerdict>>,
}

impl ModuliVerdict {
    fn blank(beta: i64, provenance: Provenance) -> Self {
        ModuliVerdict {
            nonempty: TriState::Unknown,
            irreducible: TriState::Unknown,
            smooth: TriState::Unknown,
            dimension: None,
            expected_dimension: beta,
            structure: None,
            provenance,
            notes: Vec::new(),
            semistable_variant: None,
        }
    }

    fn empty(beta: i64, provenance: Provenance) -> Self {
        ModuliVerdict {
            nonempty: TriState::No,
            ..Self::blank(beta, provenance)
        }
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }
}

fn betai(genus: u32, t: SystemType) -> i64 {
    brill_noether_number(genus, t)
}

/// The moduli of rank-1 coherent systems `(L, V)`. Stability is vacuous,
/// so the space is independent of alpha.
pub fn rank1_moduli(ctx: CurveContext, degree: i64, sections: u32) -> ModuliVerdict {
    let t = SystemType::new(1, degree, sections);
    let beta = betai(ctx.genus, t);
    if sections == 0 {
        let mut v = ModuliVerdict::blank(beta, Provenance::Jacobian);
        v.nonempty = TriState::Yes;
        v.irreducible = TriState::Yes;
        v.smooth = TriState::Yes;
        v.dimension = Some(i64::from(ctx.genus));
        return v;
    }
    let mut v = ModuliVerdict::blank(beta, Provenance::Rank1BrillNoether)
        .note("stability is vacuous in rank 1: the space does not depend on alpha");
    if beta >= 0 {
        // non-emptiness needs no genericity; smoothness and the dimension do
        v.nonempty = TriState::Yes;
        v.smooth = TriState::given_petri(ctx, true);
        if ctx.petri {
            v.dimension = Some(beta);
        }
        if beta > 0 {
            v.irreducible = TriState::given_petri(ctx, true);
        }
    } else {
        v.nonempty = TriState::given_petri(ctx, false);
    }
    v
}

/// Verdict for `M(n, d)` itself, i.e. coherent systems with no sections.
fn bundle_moduli_verdict(ctx: CurveContext, t: SystemType) -> ModuliVerdict {
    debug_assert!(t.k == 0 && t.n >= 2);
    let beta = betai(ctx.genus, t);
    let mut v = ModuliVerdict::blank(beta, Provenance::StableBundleModuli);
    match ctx.genus {
        0 => {
            v.nonempty = TriState::No;
            v.notes
                .push("no stable bundles of rank >= 2 on a rational curve".into());
        }
        1 => {
            if i64::from(t.n).gcd(&t.d) == 1 {
                v.nonempty = TriState::Yes;
                v.irreducible = TriState::Yes;
                v.smooth = TriState::Yes;
                v.dimension = Some(1);
                v.structure = Some(ModuliStructure::Space(SpaceKind::Curve));
            } else {
                v.nonempty = TriState::No;
                v.notes.push(
                    "at genus 1 stable bundles exist only for coprime rank and degree".into(),
                );
            }
        }
        _ => {
            v.nonempty = TriState::Yes;
            v.irreducible = TriState::Yes;
            v.smooth = TriState::Yes;
            v.dimension = Some(beta);
        }
    }
    v
}

fn terminal_few_sections(ctx: CurveContext, t: SystemType) -> ModuliVerdict {
    debug_assert!(t.k >= 1 && t.k < t.n);
    let beta = betai(ctx.genus, t);
    let g = i64::from(ctx.genus);
    let (n, d, k) = (i64::from(t.n), t.d, i64::from(t.k));
    match ctx.genus {
        0 => {
            let mut v = ModuliVerdict::blank(beta, Provenance::TerminalGenusZero);
            if k == n - 1 {
                if d >= n {
                    v.nonempty = TriState::Yes;
                    v.irreducible = TriState::Yes;
                    v.smooth = TriState::Yes;
                    v.dimension = Some(beta);
                    v.structure = Some(ModuliStructure::Space(SpaceKind::Grassmannian {
                        k: n - 1,
                        n: d - 1,
                    }));
                } else {
                    v.nonempty = TriState::No;
                }
            } else if d.rem_euclid(n - k) != 0 {
                v.nonempty = TriState::No;
                v.notes
                    .push("the quotient type forces n-k to divide d at genus 0".into());
            } else if d < n {
                v.nonempty = TriState::No;
            } else {
                v.notes.push(
                    "divisible degree with d >= n: a more detailed analysis is required".into(),
                );
            }
            v
        }
        1 => {
            let mut v = ModuliVerdict::blank(beta, Provenance::TerminalGenusOne);
            if (n - k).gcd(&d) == 1 {
                if d >= k {
                    v.nonempty = TriState::Yes;
                    v.irreducible = TriState::Yes;
                    v.dimension = Some(beta);
                    v.structure = Some(ModuliStructure::Fibration {
                        base_rank: t.n - t.k,
                        base_degree: d,
                        fibre: SpaceKind::Grassmannian { k, n: d },
                        relation: FibrationRelation::Isomorphism,
                    });
                    v.notes
                        .push("the base M(n-k,d) is isomorphic to the curve here".into());
                } else {
                    v.nonempty = TriState::No;
                }
            } else {
                v.notes.push("rank and degree of the quotient not coprime: a more detailed analysis is required".into());
            }
            v
        }
        _ => {
            let mut v = ModuliVerdict::blank(beta, Provenance::TerminalFibration);
            let grass_n = d + (n - k) * (g - 1);
            if d > 0 && k <= grass_n {
                v.nonempty = TriState::Yes;
                v.irreducible = TriState::Yes;
                v.smooth = TriState::Yes;
                v.dimension = Some(beta);
                let relation = if (n - k).gcd(&d) == 1 {
                    FibrationRelation::Isomorphism
                } else {
                    FibrationRelation::Birational
                };
                v.structure = Some(ModuliStructure::Fibration {
                    base_rank: t.n - t.k,
                    base_degree: d,
                    fibre: SpaceKind::Grassmannian { k, n: grass_n },
                    relation,
                });
            } else {
                v.nonempty = TriState::No;
            }
            v
        }
    }
}

fn terminal_equal_sections(ctx: CurveContext, t: SystemType) -> ModuliVerdict {
    debug_assert!(t.k == t.n && t.n >= 2);
    let beta = betai(ctx.genus, t);
    let (n, d) = (i64::from(t.n), t.d);
    let prov = Provenance::TerminalSectionsEqualRank;
    if d < 0 {
        return ModuliVerdict::empty(beta, prov).note("semistable systems need d >= 0");
    }
    if d == 0 {
        let mut semi = ModuliVerdict::blank(beta, prov);
        semi.nonempty = TriState::Yes;
        semi.irreducible = TriState::Yes;
        semi.dimension = Some(0);
        semi.structure = Some(ModuliStructure::Space(SpaceKind::SinglePoint));
        let mut v = ModuliVerdict::empty(beta, prov);
        v.semistable_variant = Some(Box::new(semi));
        return v;
    }
    if d < n {
        return ModuliVerdict::empty(beta, prov);
    }
    if d == n {
        let mut semi = ModuliVerdict::blank(beta, prov);
        semi.nonempty = TriState::Yes;
        semi.irreducible = TriState::Yes;
        semi.dimension = Some(n);
        semi.structure = Some(ModuliStructure::Space(SpaceKind::SymmetricPowerOfCurve {
            n,
        }));
        semi.notes.push("not of the expected dimension".into());
        semi.notes.push("independent of alpha".into());
        let mut v = ModuliVerdict::empty(beta, prov);
        v.semistable_variant = Some(Box::new(semi));
        return v;
    }
    // d > n
    let mut semi = ModuliVerdict::blank(beta, prov);
    semi.nonempty = TriState::Yes;
    semi.irreducible = TriState::Yes;
    let mut v = ModuliVerdict::blank(beta, prov);
    v.nonempty = TriState::Yes;
    v.irreducible = TriState::Yes;
    v.smooth = TriState::Yes;
    v.dimension = Some(beta); // dn - n^2 + 1
    v.semistable_variant = Some(Box::new(semi));
    v
}

fn terminal_dual_span(ctx: CurveContext, t: SystemType) -> ModuliVerdict {
    debug_assert!(t.k == t.n + 1);
    let beta = betai(ctx.genus, t);
    let mut v = ModuliVerdict::blank(beta, Provenance::TerminalDualSpan);
    let dual = SystemType::new(1, t.d, t.k);
    v.notes
        .push(format!("dual span of rank-1 systems of type {dual}"));
    v.nonempty = TriState::given_petri(ctx, beta >= 0);
    if beta >= 0 {
        if ctx.petri {
            v.dimension = Some(beta);
        }
        if beta > 0 {
            v.irreducible = TriState::given_petri(ctx, true);
        }
    }
    v
}

/// The terminal (largest-alpha) moduli space `G_L(n, d, k)`.
pub fn classify_terminal(ctx: CurveContext, t: SystemType) -> ModuliVerdict {
    if t.n == 1 {
        return rank1_moduli(ctx, t.d, t.k);
    }
    if t.k == 0 {
        return bundle_moduli_verdict(ctx, t);
    }
    if t.k < t.n {
        terminal_few_sections(ctx, t)
    } else if t.k == t.n {
        terminal_equal_sections(ctx, t)
    } else if t.k == t.n + 1 {
        terminal_dual_span(ctx, t)
    } else {
        let beta = betai(ctx.genus, t);
        let dual = SystemType::new(t.k - t.n, t.d, t.k);
        ModuliVerdict::blank(beta, Provenance::DualSpanHint).note(format!(
            "for large alpha, birationally equivalent to the moduli of the dual type {dual}"
        ))
    }
}

/// Per-chamber verdict where a theorem classifies every chamber at once;
/// the verdict applies verbatim to each chamber of the decomposition.
fn uniform_chamber_verdict(ctx: CurveContext, t: SystemType) -> Option<ModuliVerdict> {
    let g = i64::from(ctx.genus);
    if ctx.genus < 2 || t.n < 2 {
        return None;
    }
    let beta = betai(ctx.genus, t);
    let (n, d, k) = (i64::from(t.n), t.d, i64::from(t.k));
    match k {
        1 => {
            let mut v = ModuliVerdict::blank(beta, Provenance::ChambersSingleSection);
            if d >= 1 {
                v.nonempty = TriState::Yes;
                v.irreducible = TriState::Yes;
                v.smooth = TriState::Yes;
                v.dimension = Some(beta);
            } else {
                v.nonempty = TriState::No;
            }
            Some(v)
        }
        2 => {
            let holds = if n == 2 { d > 2 } else { d > 0 };
            let mut v = ModuliVerdict::blank(beta, Provenance::ChambersTwoSections);
            v.nonempty = TriState::given_petri(ctx, holds);
            if holds {
                v.irreducible = TriState::given_petri(ctx, true);
                if ctx.petri {
                    v.dimension = Some(beta);
                }
            }
            Some(v)
        }
        3 => {
            let holds = match n {
                2 => 3 * d >= 2 * g + 6,
                3 => d > 3,
                _ => d > 0 && d >= n - (n - 3) * g,
            };
            let mut v = ModuliVerdict::blank(beta, Provenance::ChambersThreeSections);
            v.nonempty = TriState::given_petri(ctx, holds);
            if holds {
                if ctx.petri {
                    v.dimension = Some(beta);
                }
                // irreducibility is only asserted for beta > 0 when n = 2
                if n != 2 || beta > 0 {
                    v.irreducible = TriState::given_petri(ctx, true);
                }
            }
            Some(v)
        }
        4 if n == 2 => Some(
            ModuliVerdict::blank(beta, Provenance::RankTwoBirationalChambers).note(
                "all chambers are birationally equivalent (Petri curve); non-emptiness is open",
            ),
        ),
        _ => None,
    }
}

/// Verdicts for every chamber of the alpha-line. Where no theorem covers
/// the interior chambers, only the terminal one gets a definite verdict.
pub fn classify_all_chambers(ctx: CurveContext, t: SystemType) -> Vec<(Chamber, ModuliVerdict)> {
    let ws = enumerate_walls(t);
    let chambers = ws.chambers;
    if chambers.is_empty() {
        return Vec::new();
    }
    let last = chambers.len() - 1;
    let uniform = if t.n == 1 {
        Some(rank1_moduli(ctx, t.d, t.k))
    } else if t.k == 0 {
        Some(bundle_moduli_verdict(ctx, t))
    } else {
        uniform_chamber_verdict(ctx, t)
    };
    let beta = betai(ctx.genus, t);
    chambers
        .into_iter()
        .enumerate()
        .map(|(i, ch)| {
            let verdict = if i == last {
                // the terminal theorem is at least as sharp there
                classify_terminal(ctx, t)
            } else {
                uniform
                    .clone()
                    .unwrap_or_else(|| ModuliVerdict::blank(beta, Provenance::NoApplicableTheorem))
            };
            (ch, verdict)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: u32, d: i64, k: u32) -> SystemType {
        SystemType::new(n, d, k)
    }

    fn petri(g: u32) -> CurveContext {
        CurveContext::new(g, true)
    }

    #[test]
    fn terminal_fibration_case() {
        let v = classify_terminal(petri(2), t(3, 5, 2));
        assert_eq!(v.nonempty, TriState::Yes);
        assert_eq!(v.irreducible, TriState::Yes);
        assert_eq!(v.smooth, TriState::Yes);
        assert_eq!(v.dimension, Some(10));
        match v.structure {
            Some(ModuliStructure::Fibration {
                base_rank: 1,
                base_degree: 5,
                fibre,
                relation,
            }) => {
                assert_eq!(fibre, SpaceKind::Grassmannian { k: 2, n: 6 });
                // gcd(1, 5) = 1: the birational equivalence is an isomorphism
                assert_eq!(relation, FibrationRelation::Isomorphism);
            }
            other => panic!("unexpected structure {other:?}"),
        }
    }

    #[test]
    fn terminal_equal_sections_symmetric_power() {
        for g in 0..=6 {
            let v = classify_terminal(CurveContext::new(g, false), t(2, 2, 2));
            assert_eq!(v.nonempty, TriState::No);
            let semi = v.semistable_variant.expect("semistable variant");
            assert_eq!(semi.nonempty, TriState::Yes);
            assert_eq!(semi.irreducible, TriState::Yes);
            assert_eq!(semi.dimension, Some(2));
        }
    }

    #[test]
    fn terminal_dual_span_zero_dimensional() {
        let v = classify_terminal(petri(3), t(2, 4, 3));
        assert_eq!(v.nonempty, TriState::Yes);
        assert_eq!(v.dimension, Some(0));

        let unresolved = classify_terminal(CurveContext::new(3, false), t(2, 4, 3));
        assert_eq!(unresolved.nonempty, TriState::ConditionalOnPetri(true));
    }

    #[test]
    fn terminal_genus_zero_grassmannian() {
        let v = classify_terminal(CurveContext::new(0, false), t(3, 4, 2));
        assert_eq!(v.nonempty, TriState::Yes);
        assert_eq!(
            v.structure,
            Some(ModuliStructure::Space(SpaceKind::Grassmannian {
                k: 2,
                n: 3
            }))
        );
        // dimension agrees with the expected one
        assert_eq!(v.dimension, Some(v.expected_dimension));
    }

    #[test]
    fn terminal_genus_zero_divisibility() {
        let v = classify_terminal(CurveContext::new(0, false), t(4, 5, 2));
        assert_eq!(v.nonempty, TriState::No); // 2 does not divide 5
        let v = classify_terminal(CurveContext::new(0, false), t(4, 6, 2));
        assert_eq!(v.nonempty, TriState::Unknown); // divisible, d >= n
    }

    #[test]
    fn chambers_single_section() {
        let all = classify_all_chambers(petri(2), t(3, 4, 1));
        assert!(!all.is_empty());
        for (_, v) in &all {
            assert_eq!(v.nonempty, TriState::Yes);
            assert_eq!(v.smooth, TriState::Yes);
            assert_eq!(v.irreducible, TriState::Yes);
            assert_eq!(v.dimension, Some(10));
        }
    }

    #[test]
    fn chambers_two_sections_low_degree_empty() {
        let all = classify_all_chambers(petri(2), t(2, 2, 2));
        assert!(!all.is_empty());
        for (_, v) in &all {
            assert_eq!(v.nonempty, TriState::No);
        }
    }

    #[test]
    fn chambers_rank_two_three_sections() {
        let all = classify_all_chambers(petri(4), t(2, 6, 3));
        for (_, v) in &all {
            assert_eq!(v.nonempty, TriState::Yes);
            assert_eq!(v.dimension, Some(4));
        }
    }

    #[test]
    fn rank1_examples() {
        let v = rank1_moduli(petri(4), 2, 1);
        assert_eq!(v.nonempty, TriState::Yes);
        assert_eq!(v.dimension, Some(2));

        let v = rank1_moduli(petri(2), 1, 2);
        assert_eq!(v.nonempty, TriState::No);
        assert_eq!(v.dimension, None);

        for g in 0..=5 {
            let v = rank1_moduli(CurveContext::new(g, false), -3, 0);
            assert_eq!(v.nonempty, TriState::Yes);
            assert_eq!(v.dimension, Some(i64::from(g)));
        }
    }

    #[test]
    fn nonpetri_rank1_nonempty_unconditional_when_beta_nonneg() {
        // beta >= 0 gives non-emptiness on any curve
        let ctx = CurveContext::new(5, false);
        let v = rank1_moduli(ctx, 6, 2); // beta = 5 - 2(2 - 6 + 4) = 5
        assert_eq!(v.nonempty, TriState::Yes);
        assert_eq!(v.smooth, TriState::ConditionalOnPetri(true));
        assert_eq!(v.dimension, None);
    }

    #[test]
    fn terminal_genus_one_cases() {
        let ctx = CurveContext::new(1, false);
        // coprime quotient type: nonempty exactly when d >= k
        let v = classify_terminal(ctx, t(3, 5, 2));
        assert_eq!(v.nonempty, TriState::Yes);
        assert_eq!(v.dimension, Some(v.expected_dimension));
        match v.structure {
            Some(ModuliStructure::Fibration { base_rank: 1, base_degree: 5, fibre, .. }) => {
                assert_eq!(fibre, SpaceKind::Grassmannian { k: 2, n: 5 });
            }
            other => panic!("unexpected structure {other:?}"),
        }
        let v = classify_terminal(ctx, t(3, 1, 2));
        assert_eq!(v.nonempty, TriState::No);
        // non-coprime quotient type: nothing decided
        let v = classify_terminal(ctx, t(4, 6, 2));
        assert_eq!(v.nonempty, TriState::Unknown);
    }

    #[test]
    fn terminal_equal_sections_degenerate_degrees() {
        let ctx = CurveContext::new(4, false);
        // d = 0: only the trivial semistable point
        let v = classify_terminal(ctx, t(3, 0, 3));
        assert_eq!(v.nonempty, TriState::No);
        let semi = v.semistable_variant.expect("semistable variant");
        assert_eq!(semi.structure, Some(ModuliStructure::Space(SpaceKind::SinglePoint)));
        assert_eq!(semi.dimension, Some(0));
        // 0 < d < n: both spaces empty
        let v = classify_terminal(ctx, t(3, 2, 3));
        assert_eq!(v.nonempty, TriState::No);
        assert!(v.semistable_variant.is_none());
        // d < 0: empty as well
        let v = classify_terminal(ctx, t(3, -1, 3));
        assert_eq!(v.nonempty, TriState::No);
    }

    #[test]
    fn terminal_many_sections_reports_dual_type() {
        let v = classify_terminal(CurveContext::new(3, true), t(2, 7, 5));
        assert_eq!(v.nonempty, TriState::Unknown);
        assert_eq!(v.provenance, Provenance::DualSpanHint);
        assert!(v.notes.iter().any(|n| n.contains("(3,7,5)")));
    }

    #[test]
    fn bundle_moduli_low_genus() {
        // genus 1: stable bundles exist exactly for coprime rank and degree
        let ctx = CurveContext::new(1, false);
        let v = classify_terminal(ctx, t(2, 3, 0));
        assert_eq!(v.nonempty, TriState::Yes);
        assert_eq!(v.dimension, Some(1));
        assert_eq!(v.structure, Some(ModuliStructure::Space(SpaceKind::Curve)));
        let v = classify_terminal(ctx, t(2, 4, 0));
        assert_eq!(v.nonempty, TriState::No);
        // genus 0: none at all for rank >= 2
        let v = classify_terminal(CurveContext::new(0, false), t(2, 3, 0));
        assert_eq!(v.nonempty, TriState::No);
    }

    #[test]
    fn verdict_dimension_invariants() {
        // nonempty = No forces an absent dimension; smooth = Yes forces
        // dimension = beta unless flagged otherwise
        for g in 0..=5u32 {
            for n in 1..=5u32 {
                for d in -8..=12i64 {
                    for k in 0..=6u32 {
                        let v = classify_terminal(CurveContext::new(g, true), t(n, d, k));
                        if v.nonempty.is_no() {
                            assert_eq!(v.dimension, None, "({n},{d},{k}) at g={g}");
                        }
                        if v.smooth.is_yes() && v.nonempty.is_yes() {
                            assert_eq!(v.dimension, Some(v.expected_dimension));
                        }
                    }
                }
            }
        }
    }
}
