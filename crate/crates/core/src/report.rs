//! The single-type dossier: every invariant, wall, flip, chamber and
//! Brill-Noether verdict for one `(g, n, d, k)`, rendered as
//! deterministic text or JSON. Identical inputs produce byte-identical
//! output for a fixed schema version.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bn::{bn_structure, BNVerdict, DesingConclusion};
use crate::bounds::{clifford_bound, CliffordBound};
use crate::flips::{codim_bounds, n2_actual_wall_filter, FlipReport, FlipVerdict, Side};
use crate::invariants::{alpha_slope, brill_noether_number, bundle_moduli_dim, BundleModuliDim};
use crate::moduli::{classify_all_chambers, classify_terminal, ModuliVerdict};
use crate::rational::Rational;
use crate::types::{CurveContext, SystemType};
use crate::walls::{
    alpha_admissibility, enumerate_walls, AdmissibilityReport, AlphaCap, Chamber, WallStructure,
};

pub const DOSSIER_SCHEMA: &str = "cohsys.dossier/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DossierInput {
    pub genus: u32,
    pub rank: u32,
    pub degree: i64,
    pub sections: u32,
    pub petri: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallAnalysis {
    pub flip: FlipReport,
    /// Rank-2 only: whether the wall survives the necessary condition for
    /// being an actual critical value.
    pub actual_wall_possible: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChamberVerdict {
    pub chamber: Chamber,
    pub verdict: ModuliVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordAt {
    pub alpha: Rational,
    pub bound: CliffordBound,
}

/// Everything the tool knows about one type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dossier {
    pub schema: String,
    pub input: DossierInput,
    pub beta: i64,
    pub slope_at_zero: Rational,
    pub bundle_moduli_dim: Option<i64>,
    pub admissibility: AdmissibilityReport,
    pub walls: WallStructure,
    pub wall_analyses: Vec<WallAnalysis>,
    pub chambers: Vec<ChamberVerdict>,
    pub terminal: ModuliVerdict,
    pub brill_noether: BNVerdict,
    pub clifford: Vec<CliffordAt>,
    pub provenance: Vec<String>,
}

pub fn build_dossier(ctx: CurveContext, t: SystemType) -> Dossier {
    let beta = brill_noether_number(ctx.genus, t);
    let walls = enumerate_walls(t);
    let wall_analyses: Vec<WallAnalysis> = walls
        .walls
        .iter()
        .map(|alpha| {
            let flip = codim_bounds(ctx, t, alpha);
            let actual_wall_possible =
                (t.n == 2).then(|| n2_actual_wall_filter(ctx, t, alpha).expect("rank checked"));
            WallAnalysis {
                flip,
                actual_wall_possible,
            }
        })
        .collect();
    let chambers: Vec<ChamberVerdict> = classify_all_chambers(ctx, t)
        .into_iter()
        .map(|(chamber, verdict)| ChamberVerdict { chamber, verdict })
        .collect();
    let terminal = classify_terminal(ctx, t);
    let brill_noether = bn_structure(ctx, t);
    let clifford: Vec<CliffordAt> = chambers
        .iter()
        .map(|cv| {
            let alpha = cv.chamber.representative();
            let bound = clifford_bound(ctx.genus, t, &alpha).expect("representatives are positive");
            CliffordAt { alpha, bound }
        })
        .collect();

    let mut provenance: Vec<String> = Vec::new();
    let mut cite = |s: String| {
        if !provenance.contains(&s) {
            provenance.push(s);
        }
    };
    for cv in &chambers {
        cite(cv.verdict.provenance.to_string());
    }
    cite(terminal.provenance.to_string());
    cite(brill_noether.provenance.to_string());

    Dossier {
        schema: DOSSIER_SCHEMA.to_string(),
        input: DossierInput {
            genus: ctx.genus,
            rank: t.n,
            degree: t.d,
            sections: t.k,
            petri: ctx.petri,
        },
        beta,
        slope_at_zero: alpha_slope(t, &Rational::zero()),
        bundle_moduli_dim: match bundle_moduli_dim(ctx.genus, t.n) {
            BundleModuliDim::Known(v) => Some(v),
            BundleModuliDim::NotCovered => None,
        },
        admissibility: alpha_admissibility(t),
        walls,
        wall_analyses,
        chambers,
        terminal,
        brill_noether,
        clifford,
        provenance,
    }
}

pub fn dossier_to_json(d: &Dossier) -> String {
    let mut s = serde_json::to_string_pretty(d).expect("dossier serializes");
    s.push('\n');
    s
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn chamber_str(c: &Chamber) -> String {
    match &c.hi {
        Some(hi) => format!("({}, {})", c.lo, hi),
        None => format!("({}, oo)", c.lo),
    }
}

fn verdict_lines(out: &mut String, indent: &str, v: &ModuliVerdict) {
    let _ = writeln!(out, "{indent}nonempty:    {}", v.nonempty);
    let _ = writeln!(out, "{indent}irreducible: {}", v.irreducible);
    let _ = writeln!(out, "{indent}smooth:      {}", v.smooth);
    match v.dimension {
        Some(dim) => {
            let _ = writeln!(
                out,
                "{indent}dimension:   {dim} (expected {})",
                v.expected_dimension
            );
        }
        None => {
            let _ = writeln!(
                out,
                "{indent}dimension:   -  (expected {})",
                v.expected_dimension
            );
        }
    }
    if let Some(s) = &v.structure {
        let _ = writeln!(out, "{indent}structure:   {s}");
    }
    for note in &v.notes {
        let _ = writeln!(out, "{indent}note: {note}");
    }
    let _ = writeln!(out, "{indent}[{}]", v.provenance);
    if let Some(semi) = &v.semistable_variant {
        let _ = writeln!(out, "{indent}semistable moduli (S-equivalence classes):");
        let deeper = format!("{indent}  ");
        verdict_lines(out, &deeper, semi);
    }
}

pub fn render_text(d: &Dossier) -> String {
    let mut out = String::new();
    let t = SystemType::new(d.input.rank, d.input.degree, d.input.sections);
    let _ = writeln!(out, "coherent systems dossier (schema {})", d.schema);
    let _ = writeln!(
        out,
        "type (n,d,k) = {t}   genus g = {}   petri curve: {}",
        d.input.genus,
        yesno(d.input.petri)
    );
    let _ = writeln!(out);

    let _ = writeln!(out, "numerical invariants");
    let _ = writeln!(out, "  beta{t} = {}   (expected dimension)", d.beta);
    match d.bundle_moduli_dim {
        Some(dim) => {
            let _ = writeln!(out, "  dim M({},{}) = {dim}", t.n, t.d);
        }
        None => {
            let _ = writeln!(
                out,
                "  dim M({},{}): no uniform statement at genus {} for rank >= 2",
                t.n, t.d, d.input.genus
            );
        }
    }
    let _ = writeln!(out, "  slope at alpha = 0: {}", d.slope_at_zero);
    let _ = writeln!(out);

    let _ = writeln!(out, "admissible alpha range");
    match &d.admissibility.cap {
        AlphaCap::NoWalls => {
            let _ = writeln!(
                out,
                "  stability is independent of alpha: single chamber (0, oo)"
            );
        }
        AlphaCap::Bounded(c) => {
            let _ = writeln!(out, "  moduli empty for alpha > {c} = d/(n-k)");
        }
        AlphaCap::Stabilized(c) => {
            let _ = writeln!(out, "  moduli stabilise beyond alpha = {c} = d(n-1)");
        }
    }
    if d.admissibility.semistable_requires_d_nonneg {
        let _ = writeln!(
            out,
            "  semistable systems require d >= 0: {}",
            if d.admissibility.semistable_possible() {
                "satisfied"
            } else {
                "violated"
            }
        );
    }
    if d.admissibility.stable_requires_d_positive {
        let _ = writeln!(
            out,
            "  stable systems require d > 0: {}",
            if d.admissibility.stable_possible() {
                "satisfied"
            } else {
                "violated"
            }
        );
    }
    if d.admissibility.exception_case {
        let _ = writeln!(
            out,
            "  exception: (1,0,1) admits the stable system (O, H0(O))"
        );
    }
    let _ = writeln!(out);

    let _ = writeln!(out, "virtual critical values (genus-independent)");
    if d.walls.walls.is_empty() {
        let _ = writeln!(out, "  none");
    } else {
        let listed: Vec<String> = d.walls.walls.iter().map(|w| w.to_string()).collect();
        let _ = writeln!(out, "  {} wall(s): {}", listed.len(), listed.join(", "));
        if let Some(idx) = d.walls.beyond_bound_from {
            let _ = writeln!(
                out,
                "  walls from index {idx} on lie beyond the semistability bound d(n-1)"
            );
        }
    }
    if d.walls.chambers.is_empty() {
        let _ = writeln!(out, "  no admissible alpha: the chamber list is empty");
    } else {
        let listed: Vec<String> = d.walls.chambers.iter().map(chamber_str).collect();
        let _ = writeln!(out, "  chambers: {}", listed.join(" "));
    }
    let _ = writeln!(out);

    if !d.wall_analyses.is_empty() {
        let _ = writeln!(out, "flips at the walls");
        for wa in &d.wall_analyses {
            let _ = writeln!(out, "  wall alpha = {}", wa.flip.alpha);
            let verdict = match &wa.flip.verdict {
                FlipVerdict::GoodProved(p) => format!("flip proved good [{p}]"),
                FlipVerdict::PartiallyGoodProved { lambda_k1, n1, provenance } => format!(
                    "flip proved (lambda={lambda_k1}, n1={n1})-good on the minus side [{provenance}]"
                ),
                FlipVerdict::BoundsOnly => "no covering theorem: codimension bounds only".to_string(),
                FlipVerdict::NotApplicable => "no balanced decomposition".to_string(),
            };
            let _ = writeln!(out, "    verdict: {verdict}");
            if let Some(actual) = wa.actual_wall_possible {
                let note = if actual {
                    "passes the rank-2 necessary condition for an actual critical value"
                } else if d.input.sections >= 2 {
                    "rejected by the rank-2 necessary condition: no actual flip at this wall"
                } else {
                    "not binding (the condition covers only splittings with k2 >= 2)"
                };
                let _ = writeln!(out, "    actual-wall filter: {note}");
            }
            for dec in &wa.flip.decompositions {
                let side = match dec.split.side {
                    Side::Plus => "+",
                    Side::Minus => "-",
                };
                let _ = writeln!(
                    out,
                    "    [{side}] {} + {}: C12 = {}, C21 = {}, beta1 = {}, beta2 = {}, total beta = {}",
                    dec.split.t1,
                    dec.split.t2,
                    dec.counts.c12,
                    dec.counts.c21,
                    dec.counts.beta_1,
                    dec.counts.beta_2,
                    dec.counts.beta_total,
                );
            }
            match (wa.flip.codim_plus_lb, wa.flip.codim_minus_lb) {
                (Some(p), Some(m)) => {
                    let _ = writeln!(
                        out,
                        "    codim lower bounds: plus side >= {p}, minus side >= {m}"
                    );
                }
                (Some(p), None) => {
                    let _ = writeln!(out, "    codim lower bounds: plus side >= {p}");
                }
                (None, Some(m)) => {
                    let _ = writeln!(out, "    codim lower bounds: minus side >= {m}");
                }
                (None, None) => {}
            }
            for c in &wa.flip.caveats {
                let _ = writeln!(out, "    caveat: {c}");
            }
        }
        let _ = writeln!(out);
    }

    let _ = writeln!(out, "chamber classification");
    if d.chambers.is_empty() {
        let _ = writeln!(out, "  no chambers (moduli empty for every alpha)");
    }
    for cv in &d.chambers {
        let _ = writeln!(out, "  chamber {}", chamber_str(&cv.chamber));
        verdict_lines(&mut out, "    ", &cv.verdict);
    }
    let _ = writeln!(out);

    let _ = writeln!(out, "terminal moduli space (largest alpha)");
    verdict_lines(&mut out, "  ", &d.terminal);
    let _ = writeln!(out);

    let _ = writeln!(out, "brill-noether locus B{t}");
    render_bn(&mut out, &d.brill_noether, t);
    let _ = writeln!(out);

    if !d.clifford.is_empty() {
        let _ = writeln!(out, "clifford section bounds at chamber representatives");
        for c in &d.clifford {
            let _ = writeln!(
                out,
                "  alpha = {}: h0 <= {}   [{}]",
                c.alpha, c.bound.value, c.bound.regime
            );
        }
        let _ = writeln!(out);
    }

    let _ = writeln!(out, "provenance of verdicts");
    for p in &d.provenance {
        let _ = writeln!(out, "  * {p}");
    }
    out
}

fn render_bn(out: &mut String, v: &BNVerdict, t: SystemType) {
    let _ = writeln!(
        out,
        "  equals the full moduli space M({},{}): {}",
        t.n,
        t.d,
        yesno(v.equals_full_moduli)
    );
    let _ = writeln!(out, "  nonempty:    {}", v.nonempty);
    let _ = writeln!(out, "  irreducible: {}", v.irreducible);
    match v.dimension {
        Some(dim) => {
            let _ = writeln!(out, "  dimension:   {dim}");
        }
        None => {
            let _ = writeln!(out, "  dimension:   -");
        }
    }
    if let Some(note) = &v.smooth_locus_note {
        let _ = writeln!(out, "  smoothness:  {note}");
    }
    if let Some(s) = &v.structure {
        let _ = writeln!(out, "  structure:   {s}");
    }
    if let Some(p) = &v.picard {
        let _ = writeln!(out, "  picard:      {p}");
    }
    if let Some(ds) = &v.desingularization {
        let conclusion = match ds.conclusion {
            DesingConclusion::EqualsFullModuli => {
                "locus equals the full moduli space; no desingularisation question".to_string()
            }
            DesingConclusion::ZeroDegreePathology => {
                "d = 0 with 0 < k < n: the coherent-systems space is empty but the semistable locus is not".to_string()
            }
            DesingConclusion::DesingularisationOfLocus => {
                "the small-alpha moduli space is a desingularisation of the locus".to_string()
            }
            DesingConclusion::DesingularisationOfClosure => {
                "the small-alpha moduli space is a desingularisation of the closure of the locus".to_string()
            }
            DesingConclusion::Inconclusive => "desingularisation ladder inconclusive".to_string(),
            DesingConclusion::NotCoveredLowGenus => "not covered at this genus".to_string(),
        };
        let _ = writeln!(out, "  desingularisation: {conclusion}");
        let _ = writeln!(
            out,
            "    conditions: beta <= n^2(g-1): {}; G0 irreducible: {}; G0 smooth: {}; locus nonempty: {}; gcd(n,d)=1: {}",
            yesno(ds.beta_within_bundle_dim),
            ds.g0_irreducible,
            ds.g0_smooth,
            ds.locus_nonempty,
            yesno(ds.coprime_rank_degree),
        );
    }
    for note in &v.notes {
        let _ = writeln!(out, "  note: {note}");
    }
    let _ = writeln!(out, "  [{}]", v.provenance);
}
