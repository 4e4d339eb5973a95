//! Exact-arithmetic calculator for the wall-crossing structure of moduli
//! of coherent systems on a smooth projective curve.
//!
//! Given a genus `g` and a numerical type `(n, d, k)` — rank, degree and
//! number of independent sections — the crate computes, with no floating
//! point anywhere:
//!
//! - Brill-Noether numbers, extension counts and their Euler identity;
//! - the finite set of virtual critical values of the stability
//!   parameter alpha, with the chamber decomposition and range bounds;
//! - per-wall flip data: balanced decompositions, codimension lower
//!   bounds, proved good-flip verdicts, and the rank-2 actual-wall
//!   filter;
//! - terminal and per-chamber classifications of the moduli spaces;
//! - Brill-Noether locus verdicts: non-emptiness, irreducibility,
//!   dimension, birational structure, desingularization conditions and
//!   the Picard statement for a single section;
//! - Clifford-type section bounds and stratification codimensions.
//!
//! The [`report`] module assembles all of it into a deterministic
//! dossier; [`sweep`] and [`scan`] drive parameter sweeps and
//! counterexample searches.

pub mod bn;
pub mod bounds;
pub mod error;
pub mod flips;
pub mod invariants;
pub mod moduli;
pub mod rational;
pub mod report;
pub mod scan;
pub mod sweep;
pub mod types;
pub mod walls;

pub use bn::{
    bn_equals_full, bn_nonempty, bn_structure, desingularization_check, picard_statement,
    BNVerdict, DesingConclusion, DesingularizationReport, PicardStatement,
};
pub use bounds::{
    clifford_bound, rank1_strata_codim, stable_bundle_strata_bound, CliffordBound, CliffordRegime,
    StrataCodim,
};
pub use error::DomainError;
pub use flips::{
    codim_bounds, critical_alpha, enumerate_decompositions, flip_good_criterion, good_flip_verdict,
    hopf_bound, n2_actual_wall_filter, Decomposition, DecompositionAnalysis, FlipReport,
    FlipVerdict, Side, Stratum,
};
pub use invariants::{
    alpha_slope, brill_noether_number, bundle_moduli_dim, c_counts, dual_type,
    euler_identity_holds, BundleModuliDim, DecompositionCounts,
};
pub use moduli::{
    classify_all_chambers, classify_terminal, rank1_moduli, FibrationRelation, ModuliStructure,
    ModuliVerdict, Provenance, SpaceKind, TriState,
};
pub use rational::Rational;
pub use report::{build_dossier, dossier_to_json, render_text, Dossier, DOSSIER_SCHEMA};
pub use scan::{identities, run_scan, ScanReport};
pub use sweep::{sweep_rows, tristate_token, SweepRanges, SweepRow, SWEEP_CSV_HEADER};
pub use types::{CurveContext, SystemType};
pub use walls::{
    alpha_admissibility, enumerate_walls, generically_generated_bound, stabilization_bound,
    AdmissibilityReport, AlphaCap, Chamber, WallStructure,
};
