use thiserror::Error;

/// Domain violations for operations whose hypotheses are part of the contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("dual type requires k > n, got (n, k) = ({n}, {k})")]
    DualNeedsMoreSections { n: u32, k: u32 },
    #[error("bound requires k >= n and k > 0, got (n, k) = ({n}, {k})")]
    NeedsGeneratingSections { n: u32, k: u32 },
    #[error("stabilization bound requires k >= n, got (n, k) = ({n}, {k})")]
    NeedsSectionsAtLeastRank { n: u32, k: u32 },
    #[error("operation only applies to rank 2, got n = {n}")]
    NeedsRankTwo { n: u32 },
    #[error("bound requires k2 > 0")]
    NeedsPositiveSections,
    #[error("operation requires genus >= 2, got g = {genus}")]
    NeedsGenusAtLeastTwo { genus: u32 },
    #[error("alpha must be non-negative")]
    NegativeAlpha,
    #[error("section count {total} is below the generic count {generic}")]
    BelowGenericSections { total: u32, generic: i64 },
    #[error("bound requires d <= n(g-1), got d = {d} > {bound}")]
    DegreeAboveBound { d: i64, bound: i64 },
}
