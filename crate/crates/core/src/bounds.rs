//! Clifford-type section bounds for alpha-semistable coherent systems and
//! codimension formulas for section-count strata.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::DomainError;
use crate::invariants::brill_noether_number;
use crate::rational::Rational;
use crate::types::SystemType;

/// Which lemma the bound instantiates, by the slope of the bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CliffordRegime {
    /// `alpha = 0`: the classical bound `d/2 + n` for semistable bundles.
    ClassicalAlphaZero,
    /// `0 <= mu < 2g - 2`.
    BelowCanonical,
    /// `mu >= 2g - 2`; the bound applies when `h1 > 0`, which is not
    /// checkable from the numerics alone.
    AboveCanonical,
}

impl fmt::Display for CliffordRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliffordRegime::ClassicalAlphaZero => write!(f, "classical alpha=0"),
            CliffordRegime::BelowCanonical => write!(f, "0 <= mu < 2g-2"),
            CliffordRegime::AboveCanonical => write!(f, "mu >= 2g-2 with h1 > 0"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordBound {
    /// `d/2 + n + (n-1) k alpha`, exactly.
    pub value: Rational,
    pub regime: CliffordRegime,
}

/// Section bound `h0(E) <= d/2 + n + (n-1) k alpha` for an
/// alpha-semistable coherent system. Rejects negative alpha. The
/// hypotheses on `h1(E)` are not verified (they involve an actual
/// bundle); the regime label records which statement would apply.
pub fn clifford_bound(
    genus: u32,
    t: SystemType,
    alpha: &Rational,
) -> Result<CliffordBound, DomainError> {
    if alpha.is_negative() {
        return Err(DomainError::NegativeAlpha);
    }
    let n = i64::from(t.n);
    let k = i64::from(t.k);
    let value = Rational::new(t.d, 2).unwrap()
        + Rational::from_int(n)
        + &Rational::from_int((n - 1) * k) * alpha;
    let regime = if alpha.is_zero() {
        CliffordRegime::ClassicalAlphaZero
    } else {
        let mu = Rational::new(t.d, n).unwrap();
        let canonical = Rational::from_int(2 * (i64::from(genus) - 1));
        if mu >= canonical {
            CliffordRegime::AboveCanonical
        } else {
            CliffordRegime::BelowCanonical
        }
    };
    Ok(CliffordBound { value, regime })
}

/// Codimension of one section-count stratum of the rank-1 space
/// `G(1, d, k)` on a Petri curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataCodim {
    /// `h0` of a generic member: `k` when `d <= g-1+k`, else `d-g+1`.
    pub generic_sections: i64,
    /// `j = total - generic`.
    pub extra: i64,
    pub codim: i64,
    /// The stratum may be empty; flagged when the rank-1 Brill-Noether
    /// number for `total` sections is negative. No emptiness decision is
    /// made here.
    pub possibly_empty: bool,
}

/// `codim S_total` inside `G(1, d, k)`: `j(g-d-1+k+j)` in the low-degree
/// branch and `j(d-g+1-k+j)` in the high-degree one. The two branches
/// agree at `d = g-1+k`. Rejects `total` below the generic count.
pub fn rank1_strata_codim(
    genus: u32,
    degree: i64,
    sections: u32,
    total_sections: u32,
) -> Result<StrataCodim, DomainError> {
    let g = i64::from(genus);
    let (d, k) = (degree, i64::from(sections));
    let t = i64::from(total_sections);
    let low_branch = d <= g - 1 + k;
    let generic = if low_branch { k } else { d - g + 1 };
    if t < generic {
        return Err(DomainError::BelowGenericSections {
            total: total_sections,
            generic,
        });
    }
    let j = t - generic;
    let codim = if low_branch {
        j * (g - d - 1 + k + j)
    } else {
        j * (d - g + 1 - k + j)
    };
    let beta_total = brill_noether_number(
        genus,
        SystemType::new(
            1,
            degree,
            u32::try_from(t).expect("total sections fits u32"),
        ),
    );
    Ok(StrataCodim {
        generic_sections: generic,
        extra: j,
        codim,
        possibly_empty: beta_total < 0,
    })
}

/// Uniform bound `2 h0(F* (x) K) - codim S_t <= 2(n(g-1) - d) + 1` over
/// all section strata of `M(n, d)`; returns the right-hand side.
/// Requires `d <= n(g-1)`.
pub fn stable_bundle_strata_bound(genus: u32, rank: u32, degree: i64) -> Result<i64, DomainError> {
    let g = i64::from(genus);
    let n = i64::from(rank);
    let bound = n * (g - 1);
    if degree > bound {
        return Err(DomainError::DegreeAboveBound { d: degree, bound });
    }
    Ok(2 * (bound - degree) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: u32, d: i64, k: u32) -> SystemType {
        SystemType::new(n, d, k)
    }

    #[test]
    fn clifford_examples() {
        // rank 1 kills the alpha term: classical d/2 + 1
        let b = clifford_bound(3, t(1, 4, 1), &Rational::new(9, 2).unwrap()).unwrap();
        assert_eq!(b.value, Rational::from_int(3));

        let b = clifford_bound(4, t(2, 6, 1), &Rational::from_int(1)).unwrap();
        assert_eq!(b.value, Rational::from_int(6));

        for ty in [t(2, 7, 2), t(3, -4, 1), t(5, 12, 0)] {
            let b = clifford_bound(2, ty, &Rational::zero()).unwrap();
            let expect = Rational::new(ty.d, 2).unwrap() + Rational::from_int(i64::from(ty.n));
            assert_eq!(b.value, expect);
            assert_eq!(b.regime, CliffordRegime::ClassicalAlphaZero);
        }

        assert!(clifford_bound(2, t(2, 3, 1), &Rational::new(-1, 2).unwrap()).is_err());
    }

    #[test]
    fn clifford_regimes() {
        let one = Rational::from_int(1);
        // mu = 6 >= 2g-2 = 4
        let b = clifford_bound(3, t(1, 6, 1), &one).unwrap();
        assert_eq!(b.regime, CliffordRegime::AboveCanonical);
        // mu = 3/2 < 4
        let b = clifford_bound(3, t(2, 3, 1), &one).unwrap();
        assert_eq!(b.regime, CliffordRegime::BelowCanonical);
    }

    #[test]
    fn clifford_regime_boundary() {
        // mu exactly 2g-2 falls in the high-slope regime
        let b = clifford_bound(3, t(1, 4, 1), &Rational::from_int(1)).unwrap();
        assert_eq!(b.regime, CliffordRegime::AboveCanonical);
    }

    #[test]
    fn strata_codim_examples() {
        let s = rank1_strata_codim(4, 3, 1, 2).unwrap();
        assert_eq!((s.generic_sections, s.extra, s.codim), (1, 1, 2));

        let s = rank1_strata_codim(2, 4, 1, 3).unwrap();
        assert_eq!((s.generic_sections, s.extra, s.codim), (3, 0, 0));

        let s = rank1_strata_codim(2, 4, 1, 4).unwrap();
        assert_eq!((s.generic_sections, s.extra, s.codim), (3, 1, 3));

        assert!(rank1_strata_codim(2, 4, 1, 2).is_err());
    }

    #[test]
    fn strata_branches_agree_on_boundary() {
        // d = g - 1 + k: both branches give generic count k = d-g+1 and codim j^2
        for g in 2..=6u32 {
            for k in 1..=5u32 {
                let d = i64::from(g) - 1 + i64::from(k);
                for j in 0..4u32 {
                    let s = rank1_strata_codim(g, d, k, k + j).unwrap();
                    assert_eq!(s.generic_sections, i64::from(k));
                    assert_eq!(s.codim, i64::from(j) * i64::from(j));
                }
            }
        }
    }

    #[test]
    fn bundle_strata_bound_examples() {
        assert_eq!(stable_bundle_strata_bound(2, 2, 2).unwrap(), 1);
        assert_eq!(stable_bundle_strata_bound(2, 2, 0).unwrap(), 5);
        for (g, n) in [(2u32, 3u32), (4, 2), (5, 5)] {
            let d = i64::from(n) * (i64::from(g) - 1);
            assert_eq!(stable_bundle_strata_bound(g, n, d).unwrap(), 1);
        }
        assert!(stable_bundle_strata_bound(2, 2, 3).is_err());
    }
}
