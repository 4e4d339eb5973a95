//! Closed-form numerical invariants: the alpha-slope, the Brill-Noether
//! number, the extension counts `C12`/`C21` and the Euler identity tying
//! them together, type duality, and the dimension of the bundle moduli
//! space `M(n, d)`.
//!
//! All formulas are total: they return a value for any integer inputs,
//! including ranges where the corresponding moduli are empty. Whether the
//! number means an actual dimension is the caller's concern.

use serde::{Deserialize, Serialize};

use crate::error::DomainError;
use crate::rational::Rational;
use crate::types::SystemType;

/// `mu_alpha(n, d, k) = d/n + alpha * k/n`, exactly.
pub fn alpha_slope(t: SystemType, alpha: &Rational) -> Rational {
    let n = i64::from(t.n);
    let base = Rational::new(t.d, n).expect("rank is nonzero");
    let weight = Rational::new(i64::from(t.k), n).expect("rank is nonzero");
    base + alpha * &weight
}

/// The Brill-Noether number
/// `beta(n, d, k) = n^2(g-1) + 1 - k(k - d + n(g-1))`,
/// the expected dimension of the moduli spaces and Brill-Noether loci.
pub fn brill_noether_number(genus: u32, t: SystemType) -> i64 {
    let g = i128::from(genus);
    let n = i128::from(t.n);
    let d = i128::from(t.d);
    let k = i128::from(t.k);
    let beta = n * n * (g - 1) + 1 - k * (k - d + n * (g - 1));
    i64::try_from(beta).expect("Brill-Noether number overflows i64")
}

/// Extension counts of a numerical splitting `(n1,d1,k1) + (n2,d2,k2)`,
/// together with the three Brill-Noether numbers they relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionCounts {
    pub c12: i64,
    pub c21: i64,
    pub beta_total: i64,
    pub beta_1: i64,
    pub beta_2: i64,
}

impl DecompositionCounts {
    /// `beta = beta_1 + beta_2 + C12 + C21 - 1` must hold for every input;
    /// a `false` here indicates a bug, not a property of the input.
    pub fn euler_identity_holds(&self) -> bool {
        self.beta_total == self.beta_1 + self.beta_2 + self.c12 + self.c21 - 1
    }
}

// C21 = n1 n2 (g-1) - d1 n2 + d2 n1 + k2 d1 - k2 n1 (g-1) - k1 k2,
// the expanded Euler-characteristic form.
fn c21_raw(genus: u32, t1: SystemType, t2: SystemType) -> i64 {
    let g = i128::from(genus);
    let (n1, d1, k1) = (i128::from(t1.n), i128::from(t1.d), i128::from(t1.k));
    let (n2, d2, k2) = (i128::from(t2.n), i128::from(t2.d), i128::from(t2.k));
    let c = n1 * n2 * (g - 1) - d1 * n2 + d2 * n1 + k2 * d1 - k2 * n1 * (g - 1) - k1 * k2;
    i64::try_from(c).expect("extension count overflows i64")
}

/// Computes `C21` by the expanded formula and `C12` by interchanging the
/// indices, filling in the Brill-Noether numbers of the two parts and of
/// the total type `(n1+n2, d1+d2, k1+k2)`.
pub fn c_counts(genus: u32, t1: SystemType, t2: SystemType) -> DecompositionCounts {
    let total = SystemType::new(t1.n + t2.n, t1.d + t2.d, t1.k + t2.k);
    DecompositionCounts {
        c12: c21_raw(genus, t2, t1),
        c21: c21_raw(genus, t1, t2),
        beta_total: brill_noether_number(genus, total),
        beta_1: brill_noether_number(genus, t1),
        beta_2: brill_noether_number(genus, t2),
    }
}

/// Perpetual self-check of the Euler identity
/// `beta(n,d,k) = beta_1 + beta_2 + C12 + C21 - 1`.
pub fn euler_identity_holds(genus: u32, t1: SystemType, t2: SystemType) -> bool {
    c_counts(genus, t1, t2).euler_identity_holds()
}

/// The dual span type `(k-n, d, k)`; `beta` is invariant under this map
/// for every genus. Requires `k > n`.
pub fn dual_type(t: SystemType) -> Result<SystemType, DomainError> {
    if t.k <= t.n {
        return Err(DomainError::DualNeedsMoreSections { n: t.n, k: t.k });
    }
    Ok(SystemType::new(t.k - t.n, t.d, t.k))
}

/// Dimension of the moduli space `M(n, d)` of stable bundles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BundleModuliDim {
    Known(i64),
    /// `g <= 1` with `n >= 2`: no uniform dimension statement applies.
    NotCovered,
}

/// `dim M(n, d) = n^2(g-1) + 1` for `g >= 2`; for `n = 1` this is the
/// Jacobian of dimension `g` at every genus. The degree does not enter.
pub fn bundle_moduli_dim(genus: u32, rank: u32) -> BundleModuliDim {
    assert!(rank >= 1, "rank must be at least 1");
    if rank == 1 {
        return BundleModuliDim::Known(i64::from(genus));
    }
    if genus < 2 {
        return BundleModuliDim::NotCovered;
    }
    let g = i128::from(genus);
    let n = i128::from(rank);
    BundleModuliDim::Known(i64::try_from(n * n * (g - 1) + 1).expect("dimension overflows i64"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(n: u32, d: i64, k: u32) -> SystemType {
        SystemType::new(n, d, k)
    }

    #[test]
    fn slope_examples() {
        assert_eq!(
            alpha_slope(t(2, 3, 1), &Rational::zero()),
            Rational::new(3, 2).unwrap()
        );
        assert_eq!(
            alpha_slope(t(2, 3, 1), &Rational::from_int(1)),
            Rational::from_int(2)
        );
        assert_eq!(
            alpha_slope(t(1, 0, 1), &Rational::new(7, 3).unwrap()),
            Rational::new(7, 3).unwrap()
        );
    }

    #[test]
    fn beta_examples() {
        assert_eq!(brill_noether_number(2, t(2, 5, 1)), 7);
        // closed form for k = 1: (n^2 - n)(g - 1) + d
        assert_eq!(brill_noether_number(3, t(3, 4, 1)), (9 - 3) * 2 + 4);
        // (2, d, 2) has beta = 2d - 3 for every genus
        assert_eq!(brill_noether_number(3, t(2, 4, 2)), 5);
        // beta(1, d, 0) = g, the Jacobian
        for g in 0..6 {
            assert_eq!(brill_noether_number(g, t(1, -3, 0)), i64::from(g));
        }
    }

    #[test]
    fn c_counts_worked_example() {
        let counts = c_counts(2, t(1, 3, 0), t(1, 2, 1));
        assert_eq!(counts.c21, 2);
        assert_eq!(counts.c12, 2);
        assert_eq!(counts.beta_total, 7);
        assert_eq!(counts.beta_1, 2);
        assert_eq!(counts.beta_2, 2);
        assert!(counts.euler_identity_holds());

        // index swap interchanges c12 and c21
        let swapped = c_counts(2, t(1, 2, 1), t(1, 3, 0));
        assert_eq!(swapped.c12, 2);
        assert_eq!(swapped.c21, 2);
    }

    #[test]
    fn c21_with_no_sections() {
        // k-terms vanish: c21 = n1 n2 (g-1) - d1 n2 + d2 n1
        for g in 0..5u32 {
            for (d1, d2) in [(3, -2), (0, 7), (-4, -4)] {
                let counts = c_counts(g, t(2, d1, 0), t(3, d2, 0));
                let expect = 6 * (i64::from(g) - 1) - d1 * 3 + d2 * 2;
                assert_eq!(counts.c21, expect);
            }
        }
    }

    #[test]
    fn euler_spot_checks() {
        assert!(euler_identity_holds(2, t(1, 3, 0), t(1, 2, 1)));
        assert!(euler_identity_holds(0, t(1, 0, 0), t(1, 0, 0)));
        assert!(euler_identity_holds(5, t(2, 7, 3), t(3, -2, 1)));
    }

    #[test]
    fn dual_type_examples() {
        assert_eq!(dual_type(t(2, 5, 3)).unwrap(), t(1, 5, 3));
        assert_eq!(dual_type(t(1, 4, 2)).unwrap(), t(1, 4, 2));
        assert_eq!(dual_type(t(3, 7, 4)).unwrap(), t(1, 7, 4));
        for g in 2..=6 {
            assert_eq!(
                brill_noether_number(g, t(3, 7, 4)),
                brill_noether_number(g, t(1, 7, 4))
            );
        }
        assert!(dual_type(t(2, 5, 2)).is_err());
        assert!(dual_type(t(3, 1, 1)).is_err());
    }

    #[test]
    fn bundle_moduli_dims() {
        assert_eq!(bundle_moduli_dim(2, 2), BundleModuliDim::Known(5));
        assert_eq!(bundle_moduli_dim(3, 3), BundleModuliDim::Known(19));
        // Jacobian: n = 1 gives g for every genus
        for g in 0..6 {
            assert_eq!(
                bundle_moduli_dim(g, 1),
                BundleModuliDim::Known(i64::from(g))
            );
        }
        assert_eq!(bundle_moduli_dim(1, 2), BundleModuliDim::NotCovered);
        assert_eq!(bundle_moduli_dim(0, 4), BundleModuliDim::NotCovered);
    }

    proptest! {
        // mu is affine in alpha with exact increment delta * k/n
        #[test]
        fn slope_affine_in_alpha(
            n in 1u32..6, d in -30i64..30, k in 0u32..7,
            ap in -50i64..50, aq in 1i64..20, dp in -50i64..50, dq in 1i64..20,
        ) {
            let ty = t(n, d, k);
            let alpha = Rational::new(ap, aq).unwrap();
            let delta = Rational::new(dp, dq).unwrap();
            let lhs = alpha_slope(ty, &(&alpha + &delta)) - alpha_slope(ty, &alpha);
            let rhs = delta * Rational::new(i64::from(k), i64::from(n)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn euler_identity_random(
            g in 0u32..6,
            n1 in 1u32..5, d1 in -12i64..12, k1 in 0u32..6,
            n2 in 1u32..5, d2 in -12i64..12, k2 in 0u32..6,
        ) {
            prop_assert!(euler_identity_holds(g, t(n1, d1, k1), t(n2, d2, k2)));
        }
    }
}
