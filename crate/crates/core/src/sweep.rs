//! Parameter sweeps: one row of verdict summary per type, in
//! lexicographic `(g, n, d, k)` order. Rows are computed in parallel and
//! merged back in order, so output is deterministic regardless of thread
//! count.

#[cfg(not(target_arch = "wasm32"))]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bn::{bn_equals_full, bn_nonempty};
use crate::invariants::brill_noether_number;
use crate::moduli::{classify_all_chambers, classify_terminal, TriState};
use crate::types::{CurveContext, SystemType};
use crate::walls::enumerate_walls;

/// Inclusive ranges for the four sweep parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRanges {
    pub genus: (u32, u32),
    pub rank: (u32, u32),
    pub degree: (i64, i64),
    pub sections: (u32, u32),
}

impl SweepRanges {
    pub fn tuples(&self) -> Vec<(u32, u32, i64, u32)> {
        let mut out = Vec::new();
        for g in self.genus.0..=self.genus.1 {
            for n in self.rank.0.max(1)..=self.rank.1 {
                for d in self.degree.0..=self.degree.1 {
                    for k in self.sections.0..=self.sections.1 {
                        out.push((g, n, d, k));
                    }
                }
            }
        }
        out
    }
}

pub fn tristate_token(t: TriState) -> &'static str {
    match t {
        TriState::Yes => "yes",
        TriState::No => "no",
        TriState::Unknown => "unknown",
        TriState::ConditionalOnPetri(true) => "yes-if-petri",
        TriState::ConditionalOnPetri(false) => "no-if-petri",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub genus: u32,
    pub rank: u32,
    pub degree: i64,
    pub sections: u32,
    pub petri: bool,
    pub beta: i64,
    pub num_walls: usize,
    /// Verdict for the small-alpha moduli space `G_0` (first chamber).
    pub g0_nonempty: TriState,
    pub g0_dimension: Option<i64>,
    pub terminal_nonempty: TriState,
    pub bn_nonempty: TriState,
    /// `None` below genus 2, where the criterion does not apply.
    pub bn_equals_full: Option<bool>,
}

pub const SWEEP_CSV_HEADER: &str =
    "g,n,d,k,petri,beta,walls,g0_nonempty,g0_dimension,terminal_nonempty,bn_nonempty,bn_equals_full";

impl SweepRow {
    pub fn csv_record(&self) -> Vec<String> {
        vec![
            self.genus.to_string(),
            self.rank.to_string(),
            self.degree.to_string(),
            self.sections.to_string(),
            if self.petri { "true" } else { "false" }.to_string(),
            self.beta.to_string(),
            self.num_walls.to_string(),
            tristate_token(self.g0_nonempty).to_string(),
            self.g0_dimension.map(|v| v.to_string()).unwrap_or_default(),
            tristate_token(self.terminal_nonempty).to_string(),
            tristate_token(self.bn_nonempty).to_string(),
            self.bn_equals_full
                .map(|b| b.to_string())
                .unwrap_or_default(),
        ]
    }
}

fn row_for(genus: u32, n: u32, d: i64, k: u32, petri: Option<bool>) -> SweepRow {
    let ctx = match petri {
        Some(p) => CurveContext::new(genus, p),
        None => CurveContext::with_default_petri(genus),
    };
    let t = SystemType::new(n, d, k);
    let walls = enumerate_walls(t);
    let chambers = classify_all_chambers(ctx, t);
    let (g0_nonempty, g0_dimension) = match chambers.first() {
        Some((_, v)) => (v.nonempty, v.dimension),
        None => (TriState::No, None),
    };
    SweepRow {
        genus,
        rank: n,
        degree: d,
        sections: k,
        petri: ctx.petri,
        beta: brill_noether_number(genus, t),
        num_walls: walls.walls.len(),
        g0_nonempty,
        g0_dimension,
        terminal_nonempty: classify_terminal(ctx, t).nonempty,
        bn_nonempty: bn_nonempty(ctx, t),
        bn_equals_full: bn_equals_full(genus, t).ok(),
    }
}

/// All rows for the given ranges. `petri = None` applies the default
/// (true exactly for genus <= 2); `only_nonempty` keeps rows whose `G_0`
/// is definitely nonempty. Rows are computed in parallel where threads
/// exist; an indexed collect restores lexicographic order either way.
pub fn sweep_rows(ranges: &SweepRanges, petri: Option<bool>, only_nonempty: bool) -> Vec<SweepRow> {
    let tuples = ranges.tuples();
    #[cfg(not(target_arch = "wasm32"))]
    let rows: Vec<SweepRow> = tuples
        .into_par_iter()
        .map(|(g, n, d, k)| row_for(g, n, d, k, petri))
        .collect();
    #[cfg(target_arch = "wasm32")]
    let rows: Vec<SweepRow> = tuples
        .into_iter()
        .map(|(g, n, d, k)| row_for(g, n, d, k, petri))
        .collect();
    if only_nonempty {
        rows.into_iter()
            .filter(|r| r.g0_nonempty.is_yes())
            .collect()
    } else {
        rows
    }
}
