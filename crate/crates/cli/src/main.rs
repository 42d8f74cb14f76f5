//! `conicline`: analyze arrangement files, browse the catalog, check
//! combinatorial types and search the space of types.
//!
//! Exit codes: 0 success, 1 I/O or other failure, 2 parse error,
//! 3 validation error, 4 non-ordinary singularity under `--strict`.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use conicline::arith::rational::{format_decimal, format_rational, parse_rational};
use conicline::catalog::{catalog_get_with, catalog_list, CatalogParams};
use conicline::format::{detect, parse_arrangement, parse_combinatorial_type, serialize_combinatorial_type, FileKind};
use conicline::report::{AnalysisReport, ReportOptions};
use conicline::search::{
    enumerate_types, extremal_slopes, scan_catalog, scan_conjecture, Conjecture, EnumParams, GroundField,
    SlopeWitness, Violation, COMBINATORIAL_LABEL,
};
use conicline::{CombinatorialType, Error};
use serde_json::json;

#[derive(Parser)]
#[command(name = "conicline", version, about = "Exact analysis of conic-line arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an arrangement or combinatorial-type file (`-` reads stdin).
    Analyze {
        path: PathBuf,
        #[command(flatten)]
        report: ReportFlags,
        /// Exit with status 4 if some singular point is not ordinary.
        #[arg(long)]
        strict: bool,
    },
    /// Inspect the catalog of named arrangements.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Enumerate combinatorial types, find extremal slopes, or scan for
    /// violations of an inequality.
    Search(SearchArgs),
    /// Analyze a combinatorial type given on the command line.
    Check {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u32,
        /// Point counts as `r=count,...`, e.g. `2=72,5=12,9=9`.
        #[arg(long, default_value = "")]
        t: String,
        #[command(flatten)]
        report: ReportFlags,
    },
}

#[derive(Args)]
struct ReportFlags {
    #[arg(long)]
    json: bool,
    /// Take the six-line hypothesis as satisfied for combinatorial input.
    #[arg(long)]
    assume_six_lines: bool,
    /// Ground-field reading for the 5/2 question.
    #[arg(long, default_value = "c", value_parser = parse_field)]
    field: GroundField,
}

impl ReportFlags {
    fn options(&self) -> ReportOptions {
        ReportOptions {
            assume_six_lines: self.assume_six_lines,
            field: self.field,
        }
    }
}

#[derive(Args)]
struct PencilFlags {
    /// Number of pencil conics (pencil4 only).
    #[arg(long)]
    k: Option<u32>,
    /// Pencil values, comma separated (pencil4 only).
    #[arg(long)]
    t: Option<String>,
}

impl PencilFlags {
    fn params(&self) -> Result<CatalogParams, CliError> {
        let ts = match &self.t {
            Some(s) => Some(
                s.split(',')
                    .map(|v| parse_rational(v.trim()).map_err(|e| CliError::new(3, format!("--t: {}", e.message))))
                    .collect::<Result<Vec<_>, _>>()?,
            ),
            None => None,
        };
        Ok(CatalogParams { k: self.k, ts })
    }
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Entry names, one per line.
    List,
    Show {
        name: String,
        #[command(flatten)]
        pencil: PencilFlags,
    },
    /// Write an entry in the arrangement or combinatorial-type format.
    Export {
        name: String,
        path: PathBuf,
        #[command(flatten)]
        pencil: PencilFlags,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    d: u32,
    #[arg(long, default_value_t = 0)]
    k: u32,
    /// Largest multiplicity; defaults to d + k.
    #[arg(long)]
    max_mult: Option<u32>,
    /// urzua, slope_8_3 or slope_5_2.
    #[arg(long, value_parser = parse_conjecture)]
    conjecture: Option<Conjecture>,
    /// Report the smallest and largest log-Chern slope.
    #[arg(long, conflicts_with = "conjecture")]
    extremal: bool,
    /// Scan the catalog instead of an enumeration.
    #[arg(long, requires = "conjecture")]
    catalog: bool,
    #[arg(long, default_value = "c", value_parser = parse_field)]
    field: GroundField,
    #[arg(long)]
    json: bool,
    /// Write enumerated types to a file in the combinatorial-type format.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<GroundField, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_conjecture(s: &str) -> Result<Conjecture, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug)]
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        Self::new(1, format!("{}: {e}", path.display()))
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => 2,
            Error::InvalidCurve { .. }
            | Error::DuplicateCurves(..)
            | Error::EmptyArrangement
            | Error::InvalidType(_)
            | Error::InvalidParameter(_)
            | Error::UnknownEntry { .. } => 3,
            _ => 1,
        };
        Self::new(code, e.to_string())
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CliError::io(path, e))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::io(path, e))
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn parse_error(path: &Path, e: conicline::ParseError) -> CliError {
    CliError::new(2, format!("{}: parse error at {e}", path.display()))
}

fn emit(report: &AnalysisReport, json: bool) -> String {
    if json {
        report.to_json() + "\n"
    } else {
        report.render_text()
    }
}

fn analyze(path: &Path, flags: &ReportFlags, strict: bool, out: &mut String) -> Result<(), CliError> {
    let text = read_input(path)?;
    let source = path.display().to_string();
    let report = match detect(&text).map_err(|e| parse_error(path, e))? {
        FileKind::Arrangement => {
            let a = parse_arrangement(&text).map_err(|e| parse_error(path, e))?;
            AnalysisReport::from_arrangement(&source, &a, flags.options())?
        }
        FileKind::CombinatorialType => {
            let ct = parse_combinatorial_type(&text).map_err(|e| parse_error(path, e))?;
            AnalysisReport::from_type(&source, &ct, flags.options())
        }
    };
    out.push_str(&emit(&report, flags.json));
    if strict && report.hypotheses_violated() {
        return Err(CliError::new(4, "non-ordinary singularity (--strict)"));
    }
    Ok(())
}

fn parse_t(spec: &str) -> Result<Vec<(u32, u64)>, CliError> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let bad = || CliError::new(2, format!("--t: expected r=count, found {item:?}"));
            let (r, c) = item.split_once('=').ok_or_else(bad)?;
            Ok((r.trim().parse().map_err(|_| bad())?, c.trim().parse().map_err(|_| bad())?))
        })
        .collect()
}

fn catalog(cmd: &CatalogCommand, out: &mut String) -> Result<(), CliError> {
    match cmd {
        CatalogCommand::List => {
            for name in catalog_list() {
                out.push_str(name);
                out.push('\n');
            }
        }
        CatalogCommand::Show { name, pencil } => {
            let e = catalog_get_with(name, &pencil.params()?)?;
            out.push_str(&e.render());
        }
        CatalogCommand::Export { name, path, pencil } => {
            let e = catalog_get_with(name, &pencil.params()?)?;
            write_file(path, &e.export())?;
            out.push_str(&format!("wrote {} to {}\n", name, path.display()));
        }
    }
    Ok(())
}

fn witness_json(w: &SlopeWitness) -> serde_json::Value {
    json!({
        "ct": w.ct,
        "slope": { "exact": format_rational(&w.slope), "approx": format_decimal(&w.slope, 4) },
    })
}

fn render_violations(v: &[Violation], out: &mut String) {
    out.push_str(&format!("{} violation(s); {COMBINATORIAL_LABEL}\n", v.len()));
    for x in v {
        let src = x.source.as_deref().map(|s| format!("{s}: ")).unwrap_or_default();
        out.push_str(&format!("{src}{} [{}, field {}] {}\n", x.ct, x.conjecture, x.field, x.detail));
        for n in &x.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
    }
}

fn search(args: &SearchArgs, out: &mut String) -> Result<(), CliError> {
    if args.catalog {
        let which = args.conjecture.expect("clap requires --conjecture with --catalog");
        let v = scan_catalog(which, args.field);
        if args.json {
            out.push_str(&serde_json::to_string_pretty(&v).expect("serializable"));
            out.push('\n');
        } else {
            render_violations(&v, out);
        }
        return Ok(());
    }
    let p = EnumParams {
        d: args.d,
        k: args.k,
        max_mult: args.max_mult.unwrap_or(args.d + args.k),
    };
    if args.extremal {
        let e = extremal_slopes(p)?;
        if args.json {
            let v = json!({
                "max": witness_json(&e.max),
                "min": witness_json(&e.min),
                "considered": e.considered,
                "skipped": e.skipped,
                "label": COMBINATORIAL_LABEL,
            });
            out.push_str(&serde_json::to_string_pretty(&v).expect("serializable"));
            out.push('\n');
        } else {
            out.push_str(&format!(
                "max {}, min {}\n",
                format_rational(&e.max.slope),
                format_rational(&e.min.slope)
            ));
            for (tag, w) in [("max", &e.max), ("min", &e.min)] {
                out.push_str(&format!(
                    "{tag} witness: {} slope {} (≈ {})\n",
                    w.ct,
                    format_rational(&w.slope),
                    format_decimal(&w.slope, 4)
                ));
            }
            out.push_str(&format!(
                "{} types considered, {} skipped with c2 = 0; {COMBINATORIAL_LABEL}\n",
                e.considered, e.skipped
            ));
        }
        return Ok(());
    }
    if let Some(which) = args.conjecture {
        let v = scan_conjecture(p, which, args.field)?;
        if args.json {
            out.push_str(&serde_json::to_string_pretty(&v).expect("serializable"));
            out.push('\n');
        } else {
            render_violations(&v, out);
        }
        return Ok(());
    }
    let types: Vec<CombinatorialType> = enumerate_types(p)?.collect();
    let body = if args.json {
        serde_json::to_string_pretty(&json!({ "types": types, "label": COMBINATORIAL_LABEL })).expect("serializable")
            + "\n"
    } else {
        let mut s = format!("# {} type(s); {COMBINATORIAL_LABEL}\n", types.len());
        for ct in &types {
            s.push_str(&serialize_combinatorial_type(ct));
        }
        s
    };
    match &args.output {
        Some(path) => {
            write_file(path, &body)?;
            out.push_str(&format!("wrote {} type(s) to {}\n", types.len(), path.display()));
        }
        None => out.push_str(&body),
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut String) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze { path, report, strict } => analyze(path, report, *strict, out),
        Command::Catalog { command } => catalog(command, out),
        Command::Search(args) => search(args, out),
        Command::Check { d, k, t, report } => {
            let ct = CombinatorialType::new(*d, *k, parse_t(t)?)?;
            let r = AnalysisReport::from_type("command line", &ct, report.options());
            out.push_str(&emit(&r, report.json));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli, &mut out);
    let _ = io::stdout().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
