//! Command-line front end. All logic lives in the library; this module only
//! parses flags, resolves named inputs from structure files and maps
//! verdicts to the exit-code contract: 0 = all checks hold, 1 = a check
//! failed (witness printed), 2 = usage or parse error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::algebra::{enumerate_la_semigroups, CayleyTable, EnumerationMode, Law};
use crate::crisp::{is_crisp, IdealKind};
use crate::fuzzy::{CutKind, FuzzySubset, Thresholds};
use crate::gen::{check_pointwise, check_threshold, PointDefMode, Verdict};
use crate::io::{
    emit_report, parse_structure, ReportDocument, ReportFormat, StructureFile,
};
use crate::theorems::{run_campaign, CampaignConfig};
use crate::{ElemSet, Error};

/// Environment variable naming a directory that receives a JSON report of
/// every check run.
pub const REPORT_DIR_ENV: &str = "LA_IDEALS_REPORT_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "la-ideals",
    version,
    about = "Exact checks of crisp and generalized fuzzy ideals in finite LA-semigroups"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Verify the left-invertive law and report the other laws and
    /// structural properties of a table.
    CheckTable { input: PathBuf },
    /// Decide whether a subset of the carrier is a crisp ideal of a kind.
    CheckCrisp {
        input: PathBuf,
        /// Comma-separated element labels, e.g. "3,4".
        #[arg(long)]
        subset: String,
        #[arg(long)]
        kind: String,
    },
    /// Decide a generalized fuzzy ideal predicate.
    CheckFuzzy {
        input: PathBuf,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        delta: Option<String>,
        /// Named threshold pair from the input file (alternative to
        /// --gamma/--delta).
        #[arg(long)]
        threshold: Option<String>,
        /// Named fuzzy subset; defaults to the file's only one.
        #[arg(long)]
        mu: Option<String>,
        /// "threshold" (closed-form inequalities) or "pointwise"
        /// (fuzzy-point implications).
        #[arg(long, default_value = "threshold")]
        mode: String,
        /// Hypothesis relation for pointwise mode: "in-gamma" or "q-delta".
        #[arg(long, default_value = "in-gamma")]
        hypothesis: String,
    },
    /// Print a level cut of a fuzzy subset.
    LevelSets {
        input: PathBuf,
        #[arg(long)]
        r: String,
        /// in-gamma | q-delta | combined | upper | support-gamma
        #[arg(long)]
        cut: String,
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        threshold: Option<String>,
        #[arg(long)]
        mu: Option<String>,
    },
    /// Stream every LA-semigroup of a given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        up_to_iso: bool,
        /// Stop after this many tables.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Run a theorem-verification campaign from a JSON config.
    VerifyTheorems {
        #[arg(long)]
        config: PathBuf,
    },
}

/// Parses `argv` and runs a subcommand, returning the process exit code.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with success status.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn load(input: &Path) -> Result<(StructureFile, Vec<u8>), Error> {
    let bytes = std::fs::read(input)?;
    let doc = parse_structure(&bytes)?;
    Ok((doc, bytes))
}

fn resolve_thresholds(
    doc: &StructureFile,
    gamma: &Option<String>,
    delta: &Option<String>,
    named: &Option<String>,
) -> Result<Thresholds, Error> {
    match (gamma, delta, named) {
        (Some(g), Some(d), None) => Thresholds::new(g.parse()?, d.parse()?),
        (None, None, Some(name)) => doc.threshold(name),
        _ => Err(Error::BadConfig(
            "pass either --gamma and --delta, or --threshold NAME".into(),
        )),
    }
}

fn resolve_mu(doc: &StructureFile, mu: &Option<String>) -> Result<FuzzySubset, Error> {
    match mu {
        Some(name) => doc.fuzzy_subset(name),
        None => doc.sole_fuzzy_subset().map(|(_, mu)| mu),
    }
}

fn write_report(name: &str, report: &ReportDocument) -> Result<(), Error> {
    if let Ok(dir) = std::env::var(REPORT_DIR_ENV) {
        let path = Path::new(&dir).join(format!(
            "{name}-{}.json",
            &report.input_digest[..12.min(report.input_digest.len())]
        ));
        std::fs::write(path, emit_report(report, ReportFormat::Json))?;
    }
    Ok(())
}

fn finish(name: &str, report: &ReportDocument) -> Result<i32, Error> {
    print!("{}", emit_report(report, ReportFormat::Text));
    write_report(name, report)?;
    Ok(if report.all_hold() { 0 } else { 1 })
}

fn run(cmd: Cmd) -> Result<i32, Error> {
    match cmd {
        Cmd::CheckTable { input } => {
            let (doc, bytes) = load(&input)?;
            let t = doc.to_table()?;
            let mut report = ReportDocument::new(&bytes);
            for (law, w) in [
                (Law::LeftInvertive, t.check_left_invertive()),
                (Law::Medial, t.check_medial()),
                (Law::Paramedial, t.check_paramedial()),
                (Law::Law4, t.check_law4()),
            ] {
                let detail = match &w {
                    None => "holds for all elements".to_string(),
                    Some(w) => crate::ViolationReport::Law(w.clone()).render(t.labels()),
                };
                // Only the left-invertive law is required of an LA-semigroup.
                let required = law == Law::LeftInvertive;
                report.push(format!("{law:?}"), w.is_none() || !required, detail);
            }
            let ids = t.find_left_identities();
            report.push(
                "left-identities",
                true,
                if ids.is_empty() {
                    "none".to_string()
                } else {
                    ids.iter().map(|i| t.label(i).to_string()).collect::<Vec<_>>().join(",")
                },
            );
            report.push("regular", true, t.is_regular().to_string());
            report.push("intra-regular", true, t.is_intra_regular().to_string());
            finish("check-table", &report)
        }
        Cmd::CheckCrisp { input, subset, kind } => {
            let (doc, bytes) = load(&input)?;
            let t = doc.to_table()?;
            let kind: IdealKind = kind.parse()?;
            let mut set = ElemSet::empty();
            for label in subset.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let idx = t
                    .labels()
                    .iter()
                    .position(|l| l == label)
                    .ok_or_else(|| Error::BadLabel(format!("unknown element label '{label}'")))?;
                set.insert(idx);
            }
            let mut report = ReportDocument::new(&bytes);
            match is_crisp(&t, set, kind)? {
                None => report.push(
                    format!("crisp-{}", kind.name()),
                    true,
                    format!("{{{subset}}} is a crisp {} of the table", kind.name()),
                ),
                Some(w) => report.push(
                    format!("crisp-{}", kind.name()),
                    false,
                    crate::ViolationReport::Crisp(w).render(t.labels()),
                ),
            }
            finish("check-crisp", &report)
        }
        Cmd::CheckFuzzy { input, kind, gamma, delta, threshold, mu, mode, hypothesis } => {
            let (doc, bytes) = load(&input)?;
            let t = doc.to_table()?;
            let kind: IdealKind = kind.parse()?;
            let th = resolve_thresholds(&doc, &gamma, &delta, &threshold)?;
            let mu = resolve_mu(&doc, &mu)?;
            let verdict = match mode.as_str() {
                "threshold" => check_threshold(&t, &mu, th, kind)?,
                "pointwise" => {
                    let hyp = match hypothesis.as_str() {
                        "in-gamma" => PointDefMode::InGammaHypothesis,
                        "q-delta" => PointDefMode::QDeltaHypothesis,
                        other => {
                            return Err(Error::Parse(format!("unknown hypothesis '{other}'")))
                        }
                    };
                    check_pointwise(&t, &mu, th, kind, hyp)?
                }
                other => return Err(Error::Parse(format!("unknown mode '{other}'"))),
            };
            let mut report = ReportDocument::new(&bytes);
            let name = format!("fuzzy-{}-{mode}", kind.name());
            match &verdict {
                Verdict::Fails { witness } => {
                    report.push(name, false, witness.render(t.labels()))
                }
                _ => report.push(
                    name,
                    true,
                    format!(
                        "holds at gamma={} delta={}",
                        th.gamma(),
                        th.delta()
                    ),
                ),
            }
            finish("check-fuzzy", &report)
        }
        Cmd::LevelSets { input, r, cut, gamma, delta, threshold, mu } => {
            let (doc, bytes) = load(&input)?;
            let t = doc.to_table()?;
            let cut: CutKind = cut.parse()?;
            let th = resolve_thresholds(&doc, &gamma, &delta, &threshold)?;
            let mu = resolve_mu(&doc, &mu)?;
            if mu.len() != t.order() {
                return Err(Error::CarrierMismatch { expected: t.order(), got: mu.len() });
            }
            let r: crate::Rat = r.parse()?;
            let set = mu.level_cut(th, r, cut);
            let mut report = ReportDocument::new(&bytes);
            report.push(
                format!("level-set-{}", cut.name()),
                true,
                format!(
                    "{{{}}} at r={} (={})",
                    set.iter().map(|i| t.label(i).to_string()).collect::<Vec<_>>().join(","),
                    r,
                    r.decimal_annotation()
                ),
            );
            finish("level-sets", &report)
        }
        Cmd::Enumerate { order, up_to_iso, limit } => {
            let mode = if up_to_iso { EnumerationMode::UpToIso } else { EnumerationMode::All };
            let mut count = 0usize;
            for t in enumerate_la_semigroups(order, mode)? {
                println!("{}", render_table(&t));
                count += 1;
                if limit.is_some_and(|l| count >= l) {
                    break;
                }
            }
            println!("# {count} tables of order {order}{}", if up_to_iso { " up to isomorphism" } else { "" });
            Ok(0)
        }
        Cmd::VerifyTheorems { config } => {
            let bytes = std::fs::read(&config)?;
            let cfg: CampaignConfig = serde_json::from_slice(&bytes)
                .map_err(|e| Error::BadConfig(format!("invalid campaign config: {e}")))?;
            let report = run_campaign(&cfg)?;
            let json = report.to_json();
            println!("{json}");
            if let Ok(dir) = std::env::var(REPORT_DIR_ENV) {
                let path = Path::new(&dir)
                    .join(format!("verify-theorems-{}.json", crate::io::sha256_hex(&bytes)
                        .get(..12).unwrap_or("config")));
                std::fs::write(path, &json)?;
            }
            Ok(if report.total_failures() == 0 { 0 } else { 1 })
        }
    }
}

/// One-line rendering: rows separated by ';', entries as 1-based indices.
fn render_table(t: &CayleyTable) -> String {
    t.rows()
        .iter()
        .map(|row| {
            row.iter().map(|&e| (e + 1).to_string()).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}
