//! Command-line front end: single-type dossiers, parameter sweeps and
//! identity scans, with deterministic text, JSON and CSV output.
//!
//! Exit codes: 0 on success, 1 when a scan finds a violation, 2 on usage
//! errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cohsys::{
    build_dossier, dossier_to_json, render_text, run_scan, sweep_rows, CurveContext, ScanReport,
    SweepRanges, SystemType, SWEEP_CSV_HEADER,
};

#[derive(Parser)]
#[command(
    name = "cohsys",
    version,
    about = "Exact wall-crossing and Brill-Noether calculator for coherent systems on curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full dossier for one type (g, n, d, k)
    Report(ReportArgs),
    /// One summary row per type over inclusive parameter ranges
    Sweep(SweepArgs),
    /// Exhaustive scan for counterexamples to a named identity
    Scan(ScanArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepFormat {
    Csv,
    /// One JSON object per row
    Json,
}

#[derive(Args)]
struct ReportArgs {
    /// Genus of the curve
    #[arg(short = 'g', long)]
    genus: u32,
    /// Rank n >= 1
    #[arg(short = 'n', long, value_parser = clap::value_parser!(u32).range(1..))]
    rank: u32,
    /// Degree (any sign)
    #[arg(short = 'd', long, allow_hyphen_values = true)]
    degree: i64,
    /// Number of independent sections k >= 0
    #[arg(short = 'k', long)]
    sections: u32,
    /// Assert the Petri condition (automatic for genus <= 2)
    #[arg(long)]
    petri: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Inclusive genus range, e.g. 2..4 or a single value
    #[arg(short = 'g', long)]
    genus: Option<String>,
    /// Inclusive rank range
    #[arg(short = 'n', long)]
    rank: Option<String>,
    /// Inclusive degree range
    #[arg(short = 'd', long, allow_hyphen_values = true)]
    degree: Option<String>,
    /// Inclusive section-count range
    #[arg(short = 'k', long)]
    sections: Option<String>,
    /// Assert the Petri condition for every row
    #[arg(long)]
    petri: bool,
    /// Keep only rows whose small-alpha moduli space is nonempty
    #[arg(long)]
    only_nonempty: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: SweepFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    /// key=value file presetting genus/rank/degree/sections/petri;
    /// command-line flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct ScanArgs {
    /// Which identity to scan; `--identity list` prints the registry
    #[arg(long)]
    identity: String,
    /// Override the identity's default genus range
    #[arg(short = 'g', long)]
    genus: Option<String>,
    #[arg(short = 'n', long)]
    rank: Option<String>,
    #[arg(short = 'd', long, allow_hyphen_values = true)]
    degree: Option<String>,
    #[arg(short = 'k', long)]
    sections: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_range_i64(s: &str) -> Result<(i64, i64), String> {
    let parse = |v: &str| {
        v.trim()
            .parse::<i64>()
            .map_err(|_| format!("invalid integer `{v}` in range `{s}`"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi)?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range `{s}` (lo > hi)"));
    }
    Ok((lo, hi))
}

fn parse_range_u32(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = parse_range_i64(s)?;
    let conv = |v: i64| u32::try_from(v).map_err(|_| format!("value {v} out of range in `{s}`"));
    Ok((conv(lo)?, conv(hi)?))
}

#[derive(Default)]
struct ConfigFile {
    genus: Option<String>,
    rank: Option<String>,
    degree: Option<String>,
    sections: Option<String>,
    petri: Option<bool>,
}

fn read_config(path: &PathBuf) -> Result<ConfigFile, String> {
    let body =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut cfg = ConfigFile::default();
    for (lineno, raw) in body.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(format!(
                "{}:{}: expected key=value",
                path.display(),
                lineno + 1
            ));
        };
        let value = value.trim().to_string();
        match key.trim() {
            "genus" => cfg.genus = Some(value),
            "rank" => cfg.rank = Some(value),
            "degree" => cfg.degree = Some(value),
            "sections" => cfg.sections = Some(value),
            "petri" => {
                cfg.petri = Some(value.parse::<bool>().map_err(|_| {
                    format!(
                        "{}:{}: petri must be true or false",
                        path.display(),
                        lineno + 1
                    )
                })?)
            }
            other => {
                return Err(format!(
                    "{}:{}: unknown key `{other}`",
                    path.display(),
                    lineno + 1
                ))
            }
        }
    }
    Ok(cfg)
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| format!("cannot write stdout: {e}"))
        }
    }
}

fn cmd_report(args: ReportArgs) -> Result<ExitCode, String> {
    let ctx = CurveContext::new(args.genus, args.petri);
    let t = SystemType::new(args.rank, args.degree, args.sections);
    let dossier = build_dossier(ctx, t);
    let body = match args.format {
        ReportFormat::Text => render_text(&dossier),
        ReportFormat::Json => dossier_to_json(&dossier),
    };
    emit(&args.out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn resolve_ranges(
    genus: Option<String>,
    rank: Option<String>,
    degree: Option<String>,
    sections: Option<String>,
    cfg: &ConfigFile,
    fallback: Option<SweepRanges>,
) -> Result<SweepRanges, String> {
    let pick = |cli: Option<String>, file: &Option<String>| cli.or_else(|| file.clone());
    let genus = pick(genus, &cfg.genus);
    let rank = pick(rank, &cfg.rank);
    let degree = pick(degree, &cfg.degree);
    let sections = pick(sections, &cfg.sections);

    let need_u32 = |v: Option<String>, name: &str, dflt: Option<(u32, u32)>| match v {
        Some(s) => parse_range_u32(&s).map_err(|e| format!("--{name}: {e}")),
        None => dflt.ok_or_else(|| format!("missing --{name} (give a range or a config entry)")),
    };
    let genus = need_u32(genus, "genus", fallback.map(|r| r.genus))?;
    let rank = need_u32(rank, "rank", fallback.map(|r| r.rank))?;
    if rank.0 < 1 {
        return Err("--rank: rank must be at least 1".into());
    }
    let sections = need_u32(sections, "sections", fallback.map(|r| r.sections))?;
    let degree = match degree {
        Some(s) => parse_range_i64(&s).map_err(|e| format!("--degree: {e}"))?,
        None => fallback
            .map(|r| r.degree)
            .ok_or_else(|| "missing --degree (give a range or a config entry)".to_string())?,
    };
    Ok(SweepRanges {
        genus,
        rank,
        degree,
        sections,
    })
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode, String> {
    let cfg = match &args.config {
        Some(path) => read_config(path)?,
        None => ConfigFile::default(),
    };
    let ranges = resolve_ranges(
        args.genus,
        args.rank,
        args.degree,
        args.sections,
        &cfg,
        None,
    )?;
    let petri = if args.petri { Some(true) } else { cfg.petri };
    let rows = sweep_rows(&ranges, petri, args.only_nonempty);
    let body = match args.format {
        SweepFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(SWEEP_CSV_HEADER.split(','))
                .map_err(|e| e.to_string())?;
            for row in &rows {
                w.write_record(row.csv_record())
                    .map_err(|e| e.to_string())?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
        }
        SweepFormat::Json => {
            let mut s = String::new();
            for row in &rows {
                s.push_str(&serde_json::to_string(row).map_err(|e| e.to_string())?);
                s.push('\n');
            }
            s
        }
    };
    emit(&args.out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn render_scan(report: &ScanReport) -> String {
    match &report.violation {
        None => format!(
            "identity `{}`: no violations ({} instances checked)\n",
            report.identity, report.checked
        ),
        Some(tuple) => format!(
            "identity `{}`: VIOLATION after {} instances\n  {}\n",
            report.identity, report.checked, tuple
        ),
    }
}

fn cmd_scan(args: ScanArgs) -> Result<ExitCode, String> {
    if args.identity == "list" {
        let mut s = String::new();
        for spec in cohsys::identities() {
            s.push_str(&format!("{:<20} {}\n", spec.name, spec.description));
        }
        emit(&args.out, &s)?;
        return Ok(ExitCode::SUCCESS);
    }
    let Some(spec) = cohsys::identities()
        .iter()
        .find(|i| i.name == args.identity)
    else {
        let known: Vec<_> = cohsys::identities().iter().map(|i| i.name).collect();
        return Err(format!(
            "unknown identity `{}`; known identities: {}",
            args.identity,
            known.join(", ")
        ));
    };
    let cfg = match &args.config {
        Some(path) => read_config(path)?,
        None => ConfigFile::default(),
    };
    let ranges = resolve_ranges(
        args.genus,
        args.rank,
        args.degree,
        args.sections,
        &cfg,
        Some(spec.default_ranges),
    )?;
    let report = run_scan(&args.identity, &ranges).expect("identity known");
    emit(&args.out, &render_scan(&report))?;
    Ok(if report.violation.is_some() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Report(args) => cmd_report(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Scan(args) => cmd_scan(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => usage_error(&msg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range_i64("2..5"), Ok((2, 5)));
        assert_eq!(parse_range_i64("-3..4"), Ok((-3, 4)));
        assert_eq!(parse_range_i64("7"), Ok((7, 7)));
        assert!(parse_range_i64("5..2").is_err());
        assert!(parse_range_i64("x..2").is_err());
        assert_eq!(parse_range_u32("0..3"), Ok((0, 3)));
        assert!(parse_range_u32("-1..3").is_err());
    }

    #[test]
    fn scan_rendering() {
        let clean = ScanReport {
            identity: "euler".into(),
            checked: 10,
            violation: None,
        };
        assert!(render_scan(&clean).contains("no violations (10 instances checked)"));
        let bad = ScanReport {
            identity: "euler".into(),
            checked: 3,
            violation: Some("g=1, t1=(1,0,0), t2=(1,0,0)".into()),
        };
        let text = render_scan(&bad);
        assert!(text.contains("VIOLATION"));
        assert!(text.contains("t1=(1,0,0)"));
    }
}
