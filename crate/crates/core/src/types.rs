//! Numerical types of coherent systems and the ambient curve context.

use std::fmt;

use serde::{Deserialize, Serialize};

/// The numerical type `(n, d, k)` of a coherent system: a rank-`n`,
/// degree-`d` vector bundle together with a `k`-dimensional space of
/// sections.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SystemType {
    /// Rank, `n >= 1`.
    pub n: u32,
    /// Degree (any sign).
    pub d: i64,
    /// Number of independent sections, `k >= 0`.
    pub k: u32,
}

impl SystemType {
    pub fn new(n: u32, d: i64, k: u32) -> Self {
        assert!(n >= 1, "rank must be at least 1");
        SystemType { n, d, k }
    }
}

impl fmt::Display for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.d, self.k)
    }
}

impl fmt::Debug for SystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The curve on which everything lives: its genus and whether it is
/// assumed to be a Petri curve.
///
/// Every curve of genus <= 2 is Petri, so the flag is forced there;
/// for higher genus it must be asserted explicitly.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CurveContext {
    pub genus: u32,
    pub petri: bool,
}

impl CurveContext {
    pub fn new(genus: u32, petri: bool) -> Self {
        CurveContext {
            genus,
            petri: petri || genus <= 2,
        }
    }

    /// Petri on by default exactly when it is automatic (genus <= 2).
    pub fn with_default_petri(genus: u32) -> Self {
        Self::new(genus, false)
    }
}
