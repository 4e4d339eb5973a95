//! Browser bindings for the wall-crossing calculator. Three operations
//! back the demo page: the rendered dossier, the dossier as JSON (the
//! page draws the alpha-line from it), and a small parameter sweep.
//!
//! All arithmetic stays exact on the Rust side; the page only converts
//! wall positions to floats for drawing, never for deciding anything.

use wasm_bindgen::prelude::*;

use cohsys::{
    build_dossier, dossier_to_json, render_text, sweep_rows, CurveContext, SweepRanges, SystemType,
    SWEEP_CSV_HEADER,
};

fn parse_input(rank: u32, degree: i32, sections: u32) -> Result<SystemType, String> {
    if rank < 1 {
        return Err("rank must be at least 1".into());
    }
    Ok(SystemType::new(rank, i64::from(degree), sections))
}

fn dossier_text_impl(
    genus: u32,
    rank: u32,
    degree: i32,
    sections: u32,
    petri: bool,
) -> Result<String, String> {
    let t = parse_input(rank, degree, sections)?;
    let ctx = CurveContext::new(genus, petri);
    Ok(render_text(&build_dossier(ctx, t)))
}

fn dossier_json_impl(
    genus: u32,
    rank: u32,
    degree: i32,
    sections: u32,
    petri: bool,
) -> Result<String, String> {
    let t = parse_input(rank, degree, sections)?;
    let ctx = CurveContext::new(genus, petri);
    Ok(dossier_to_json(&build_dossier(ctx, t)))
}

fn parse_range(s: &str, name: &str) -> Result<(i64, i64), String> {
    let parse = |v: &str| {
        v.trim()
            .parse::<i64>()
            .map_err(|_| format!("{name}: invalid integer `{v}`"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi)?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("{name}: empty range `{s}`"));
    }
    Ok((lo, hi))
}

fn parse_range_u32(s: &str, name: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = parse_range(s, name)?;
    let conv = |v: i64| u32::try_from(v).map_err(|_| format!("{name}: {v} out of range"));
    Ok((conv(lo)?, conv(hi)?))
}

fn sweep_csv_impl(
    genus: &str,
    rank: &str,
    degree: &str,
    sections: &str,
    petri: bool,
) -> Result<String, String> {
    let ranges = SweepRanges {
        genus: parse_range_u32(genus, "genus")?,
        rank: parse_range_u32(rank, "rank")?,
        degree: parse_range(degree, "degree")?,
        sections: parse_range_u32(sections, "sections")?,
    };
    if ranges.rank.0 < 1 {
        return Err("rank must be at least 1".into());
    }
    let size = ranges.tuples().len();
    if size > 20_000 {
        return Err(format!("sweep of {size} rows is too large for the demo"));
    }
    let rows = sweep_rows(&ranges, petri.then_some(true), false);
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_record().join(","));
        out.push('\n');
    }
    Ok(out)
}

/// Full plain-text dossier for one type.
#[wasm_bindgen]
pub fn dossier_text(
    genus: u32,
    rank: u32,
    degree: i32,
    sections: u32,
    petri: bool,
) -> Result<String, JsError> {
    dossier_text_impl(genus, rank, degree, sections, petri).map_err(|e| JsError::new(&e))
}

/// Dossier as JSON (schema `cohsys.dossier/1`); rationals appear as
/// `{num, den}` decimal strings.
#[wasm_bindgen]
pub fn dossier_json(
    genus: u32,
    rank: u32,
    degree: i32,
    sections: u32,
    petri: bool,
) -> Result<String, JsError> {
    dossier_json_impl(genus, rank, degree, sections, petri).map_err(|e| JsError::new(&e))
}

/// CSV sweep over inclusive ranges given as `lo..hi` (or single values).
/// Capped at 20000 rows to keep the page responsive.
#[wasm_bindgen]
pub fn sweep_csv(
    genus: &str,
    rank: &str,
    degree: &str,
    sections: &str,
    petri: bool,
) -> Result<String, JsError> {
    sweep_csv_impl(genus, rank, degree, sections, petri).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bindings_work_on_host() {
        let text = dossier_text_impl(2, 2, 5, 1, true).unwrap();
        assert!(text.contains("beta(2,5,1) = 7"));

        let json = dossier_json_impl(2, 3, 5, 2, true).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["schema"], "cohsys.dossier/1");

        let csv = sweep_csv_impl("2", "2", "1..6", "2", true).unwrap();
        assert_eq!(csv.trim_end().lines().count(), 7);

        assert!(sweep_csv_impl("0..100", "1..9", "-100..100", "0..9", false).is_err());
        assert!(sweep_csv_impl("2", "2", "4..1", "2", false).is_err());
    }
}
