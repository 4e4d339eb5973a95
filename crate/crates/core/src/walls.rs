//! Enumeration of the virtual critical values ("walls") on the alpha-line
//! and the chamber structure they cut out.
//!
//! For a type `(n, d, k)` the non-zero virtual critical values all lie in
//!
//! ```text
//! { (n d' - n' d) / (n' k - n k')  |  0 <= k' <= k,  0 < n' < n,  n' k != n k' }  intersected with  (0, oo)
//! ```
//!
//! together with `alpha = 0`. The set is finite once the admissible range
//! for alpha is imposed: for `k < n` the moduli are empty above
//! `d/(n-k)`; for `k >= n` they are constant above the stabilization
//! bound. Walls carry no genus dependence, which the signature enforces.
//!
//! The enumeration solves the range constraints for `d'` exactly per
//! `(n', k')` pair, producing a closed integer interval; no heuristic
//! windows.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::DomainError;
use crate::rational::Rational;
use crate::types::SystemType;

/// Upper end of the admissible alpha-range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlphaCap {
    /// Stability does not depend on alpha (rank 1, or no sections): a
    /// single chamber `(0, oo)` and never a wall.
    NoWalls,
    /// `k < n`: moduli are empty for `alpha > d/(n-k)`; the endpoint is
    /// excluded (the last wall is the biggest critical value below it).
    Bounded(Rational),
    /// `k >= n`: moduli stabilise; `d(n-1)` is a proven bound after which
    /// the stability condition no longer changes.
    Stabilized(Rational),
}

/// One open interval between consecutive critical values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub lo: Rational,
    /// `None` for the unbounded terminal chamber.
    pub hi: Option<Rational>,
}

impl Chamber {
    /// A deterministic interior point, used wherever "evaluate somewhere
    /// inside this chamber" is needed.
    pub fn representative(&self) -> Rational {
        match &self.hi {
            Some(hi) => (&self.lo + hi) * Rational::new(1, 2).unwrap(),
            None => &self.lo + &Rational::from_int(1),
        }
    }
}

/// The full wall-and-chamber picture for one type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallStructure {
    pub ty: SystemType,
    /// Strictly increasing positive virtual critical values. `alpha = 0`
    /// is always a critical value as well and is not listed.
    pub walls: Vec<Rational>,
    pub cap: AlphaCap,
    /// For `k >= n` the enumeration extends to
    /// `max{d(n-1), d(k-n-1)}`; `walls[i]` for `i >= beyond_bound_from`
    /// lie above the semistability bound `d(n-1)`, where the moduli are
    /// provably unchanged.
    pub beyond_bound_from: Option<usize>,
    pub chambers: Vec<Chamber>,
}

impl WallStructure {
    pub fn terminal_chamber(&self) -> Option<&Chamber> {
        self.chambers.last()
    }
}

fn stabilization_bound_raw(t: SystemType) -> Rational {
    let a = t.d * (i64::from(t.n) - 1);
    let b = t.d * (i64::from(t.k) - i64::from(t.n) - 1);
    Rational::from_int(a.max(b))
}

/// Enumerates all virtual critical values of a type and assembles the
/// chamber decomposition. Genus never enters.
pub fn enumerate_walls(t: SystemType) -> WallStructure {
    let (cap, range_hi, strict_hi) = alpha_range(t);

    let mut walls: BTreeSet<Rational> = BTreeSet::new();
    if let Some(hi) = &range_hi {
        if hi.is_positive() {
            collect_walls(t, hi, strict_hi, &mut walls);
        }
    }
    let walls: Vec<Rational> = walls.into_iter().collect();

    let semistability = match &cap {
        AlphaCap::Stabilized(_) => Some(Rational::from_int(t.d * (i64::from(t.n) - 1))),
        _ => None,
    };
    let beyond_bound_from = semistability.and_then(|bound| {
        let idx = walls.iter().position(|w| *w > bound)?;
        Some(idx)
    });

    let chambers = build_chambers(&cap, &range_hi, &walls);

    WallStructure {
        ty: t,
        walls,
        cap,
        beyond_bound_from,
        chambers,
    }
}

/// (cap for the report, upper end of the enumeration range, whether that
/// upper end is excluded)
fn alpha_range(t: SystemType) -> (AlphaCap, Option<Rational>, bool) {
    if t.n == 1 || t.k == 0 {
        // no proper subbundles, or no sections: stability is alpha-independent
        return (AlphaCap::NoWalls, None, false);
    }
    if t.k < t.n {
        let cap = Rational::new(t.d, i64::from(t.n) - i64::from(t.k)).expect("n > k");
        (AlphaCap::Bounded(cap.clone()), Some(cap), true)
    } else {
        let reported = Rational::from_int(t.d * (i64::from(t.n) - 1));
        (
            AlphaCap::Stabilized(reported),
            Some(stabilization_bound_raw(t)),
            false,
        )
    }
}

fn collect_walls(t: SystemType, hi: &Rational, strict_hi: bool, out: &mut BTreeSet<Rational>) {
    let n = i64::from(t.n);
    let d = t.d;
    let k = i64::from(t.k);
    for n1 in 1..n {
        for k1 in 0..=k {
            let delta = n1 * k - n * k1;
            if delta == 0 {
                continue;
            }
            // w(d') = (n d' - n1 d) / delta; solve 0 < w <= hi (or < hi) for d'
            let lower = Rational::new(n1 * d, n).unwrap(); // w > 0 boundary
            let upper = (hi * &Rational::from_int(delta) + Rational::from_int(n1 * d))
                / Rational::from_int(n);
            let one = BigInt::from(1);
            let (lo_dp, hi_dp): (BigInt, BigInt) = if delta > 0 {
                let lo = lower.floor_int() + &one;
                let hi = if strict_hi {
                    upper.ceil_int() - &one
                } else {
                    upper.floor_int()
                };
                (lo, hi)
            } else {
                let lo = if strict_hi {
                    upper.floor_int() + &one
                } else {
                    upper.ceil_int()
                };
                (lo, lower.ceil_int() - &one)
            };
            let (Some(lo_dp), Some(hi_dp)) = (lo_dp.to_i64(), hi_dp.to_i64()) else {
                continue;
            };
            for dp in lo_dp..=hi_dp {
                let w = Rational::new(n * dp - n1 * d, delta).unwrap();
                debug_assert!(w.is_positive());
                debug_assert!(if strict_hi { w < *hi } else { w <= *hi });
                out.insert(w);
            }
        }
    }
}

fn build_chambers(cap: &AlphaCap, range_hi: &Option<Rational>, walls: &[Rational]) -> Vec<Chamber> {
    let end: Option<Option<Rational>> = match cap {
        AlphaCap::NoWalls | AlphaCap::Stabilized(_) => Some(None),
        AlphaCap::Bounded(_) => match range_hi {
            Some(hi) if hi.is_positive() => Some(Some(hi.clone())),
            // empty admissible range: no chambers at all
            _ => None,
        },
    };
    let Some(end) = end else {
        return Vec::new();
    };
    let mut chambers = Vec::with_capacity(walls.len() + 1);
    let mut lo = Rational::zero();
    for w in walls {
        chambers.push(Chamber {
            lo: lo.clone(),
            hi: Some(w.clone()),
        });
        lo = w.clone();
    }
    chambers.push(Chamber { lo, hi: end });
    chambers
}

/// What the admissible range looks like for a type: the cap together with
/// the degree constraints required for (semi)stable systems to exist.
///
/// For `k >= 1` semistability forces `d >= 0` and stability `d > 0`, with
/// the single exception `(n,d,k) = (1,0,1)`. For `k = 0` the section
/// space is trivial and alpha puts no constraint on the degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub ty: SystemType,
    pub cap: AlphaCap,
    pub semistable_requires_d_nonneg: bool,
    pub stable_requires_d_positive: bool,
    pub exception_case: bool,
}

impl AdmissibilityReport {
    /// Whether any alpha admits a semistable system of this type, as far
    /// as the degree constraints decide it.
    pub fn semistable_possible(&self) -> bool {
        !(self.semistable_requires_d_nonneg && self.ty.d < 0)
    }

    pub fn stable_possible(&self) -> bool {
        !(self.stable_requires_d_positive && self.ty.d <= 0)
    }
}

pub fn alpha_admissibility(t: SystemType) -> AdmissibilityReport {
    let (cap, _, _) = alpha_range(t);
    let exception_case = t.n == 1 && t.d == 0 && t.k == 1;
    if t.k == 0 {
        return AdmissibilityReport {
            ty: t,
            cap,
            semistable_requires_d_nonneg: false,
            stable_requires_d_positive: false,
            exception_case: false,
        };
    }
    AdmissibilityReport {
        ty: t,
        cap,
        semistable_requires_d_nonneg: true,
        stable_requires_d_positive: !exception_case,
        exception_case,
    }
}

/// `d(n-1)/k`: above this threshold the sections of a semistable system
/// generically generate the bundle. Requires `k >= n`, `k > 0`.
pub fn generically_generated_bound(t: SystemType) -> Result<Rational, DomainError> {
    if t.k < t.n || t.k == 0 {
        return Err(DomainError::NeedsGeneratingSections { n: t.n, k: t.k });
    }
    Ok(Rational::new(t.d * (i64::from(t.n) - 1), i64::from(t.k)).expect("k > 0"))
}

/// `max{d(n-1), d(k-n-1)}`: every wall lies at or below this value, and
/// the moduli spaces are constant beyond it. Requires `k >= n`.
pub fn stabilization_bound(t: SystemType) -> Result<Rational, DomainError> {
    if t.k < t.n {
        return Err(DomainError::NeedsSectionsAtLeastRank { n: t.n, k: t.k });
    }
    Ok(stabilization_bound_raw(t))
}
