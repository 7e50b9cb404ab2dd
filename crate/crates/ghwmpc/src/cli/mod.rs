//! Command-line front end. Every subcommand prints a deterministic report
//! to stdout (wall time goes to stderr) and exits with a code that encodes
//! the failure class:
//!
//! - 0: success (for `reproduce`: every check passed)
//! - 1: internal invariant violation, or a failed `reproduce` check
//! - 2: usage, parse, shape, or range errors
//! - 3: an enumeration refused by the scale guard
//! - 4: violated mathematical preconditions (full rank, NSC, nestedness,
//!   zero codes)

pub mod format;
pub mod report;
pub mod reproduce;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::bounds::{
    lb_2x2, lb_general_exhaustive, lb_h2_nested, lb_h3_nested, lb_h3_s2, min_dist_lower_eq2,
    min_dist_lower_eq3, rs_ghw_closed_form, ub_ghw_auto, BoundReport, Method, Variant2x2,
};
use crate::codes::ghw_with_witness;
use crate::linalg::Matrix;
use crate::mpc::{is_nsc, mpc_construct};
use crate::{EnumOptions, Error, LinearCode, Result};
use format::{digest, parse_code_text, parse_family, parse_matrix_text, parse_r_range, render_code};
use report::{OutputFormat, RunReport};

#[derive(Parser)]
#[command(
    name = "ghwmpc",
    version,
    about = "Generalized Hamming weights of matrix-product codes over small finite fields"
)]
struct Cli {
    /// Worker threads for the exhaustive scans; 1 forces the sequential
    /// path. Output bytes do not depend on this.
    #[arg(long, global = true, default_value_t = default_workers())]
    workers: usize,

    /// Output format for the report printed to stdout.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact generalized Hamming weights of one code, with witnesses.
    Ghw(GhwArgs),
    /// Lower and upper bounds for matrix-product codes.
    Bound(BoundArgs),
    /// Build a matrix-product code and report its parameters.
    MpcBuild(MpcBuildArgs),
    /// Check whether a matrix is non-singular by columns.
    NscCheck(NscCheckArgs),
    /// Re-run the built-in reference scenarios and report PASS/FAIL.
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct GhwArgs {
    /// Code file to read.
    #[arg(long, conflicts_with = "family")]
    code: Option<PathBuf>,

    /// Family literal: rs:q=<p^m>,n=<n>,k=<k> or rm:q=<p^m>,nu=<nu>,m=<m>.
    #[arg(long)]
    family: Option<String>,

    /// Weight index, a single value or an inclusive range a..b.
    #[arg(long, conflicts_with = "all")]
    r: Option<String>,

    /// Compute the whole hierarchy d_1 .. d_k.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
#[command(after_help = "Methods: eq2, eq3, 2x2-general, 2x2-nz, 2x2-z, h2-nested, h3-nested, \
                        h3-s2, general-exhaustive, upper, rs-formula")]
struct BoundArgs {
    /// Bound identifier; see the list below.
    #[arg(long)]
    method: String,

    /// First constituent: a code file path or a family literal.
    #[arg(long)]
    c1: Option<String>,

    /// Second constituent.
    #[arg(long)]
    c2: Option<String>,

    /// Third constituent.
    #[arg(long)]
    c3: Option<String>,

    /// Mixing matrix file.
    #[arg(long)]
    matrix: Option<PathBuf>,

    /// Weight index, a single value or an inclusive range a..b (default 1).
    #[arg(long)]
    r: Option<String>,

    /// Common length of the nested MDS pair (rs-formula only).
    #[arg(long)]
    n: Option<usize>,

    /// Dimension of the larger MDS code (rs-formula only).
    #[arg(long)]
    k1: Option<usize>,

    /// Dimension of the smaller MDS code (rs-formula only).
    #[arg(long)]
    k2: Option<usize>,
}

#[derive(Args)]
struct MpcBuildArgs {
    /// Constituent code sources (paths or family literals), one per row of
    /// the mixing matrix.
    #[arg(required = true)]
    constituents: Vec<String>,

    /// Mixing matrix file.
    #[arg(long)]
    matrix: PathBuf,

    /// Write the resulting code (canonical generator) to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NscCheckArgs {
    /// Matrix file to check.
    #[arg(long)]
    matrix: PathBuf,
}

#[derive(Args)]
#[command(after_help = "Scenarios: table1, table2, table3, ex-h3s2, rs-hierarchy, rm-q2, rm-q3")]
struct ReproduceArgs {
    /// Scenario to run; omit to run all of them.
    scenario: Option<String>,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Parses the process arguments, runs the command, prints the report, and
/// returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let start = Instant::now();
    let outcome = dispatch(&cli);
    let code = match outcome {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    };
    eprintln!("wall-time: {:.3}s", start.elapsed().as_secs_f64());
    code
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Shape(_) | Error::Range(_) => 2,
        Error::ScaleGuard(_) => 3,
        Error::Precondition(_) | Error::NotNsc { .. } | Error::ZeroCode | Error::DivisionByZero => 4,
        Error::Internal(_) => 1,
    }
}

fn enum_options_for(workers: usize) -> EnumOptions {
    let mut opts = EnumOptions::default();
    if workers <= 1 {
        opts.parallel = false;
    } else {
        opts.parallel = cfg!(feature = "parallel");
        #[cfg(feature = "parallel")]
        {
            // A later global-pool initialization loses; that is fine, the
            // pool size only affects speed.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build_global();
        }
    }
    opts
}

fn dispatch(cli: &Cli) -> Result<(String, i32)> {
    if cli.workers == 0 {
        return Err(Error::Parse("--workers must be at least 1".into()));
    }
    let opts = enum_options_for(cli.workers);
    match &cli.command {
        Command::Ghw(args) => cmd_ghw(args, &opts, cli.format),
        Command::Bound(args) => cmd_bound(args, &opts, cli.format),
        Command::MpcBuild(args) => cmd_mpc_build(args, cli.format),
        Command::NscCheck(args) => cmd_nsc_check(args, cli.format),
        Command::Reproduce(args) => cmd_reproduce(args, &opts, cli.format),
    }
}

/// Loads a constituent from a family literal (`rs:` / `rm:` prefix) or a
/// code file path. Returns the code and the text that feeds the digest.
fn load_source(source: &str) -> Result<(LinearCode, String)> {
    if source.starts_with("rs:") || source.starts_with("rm:") {
        Ok((parse_family(source)?, source.to_string()))
    } else {
        let text = std::fs::read_to_string(source)
            .map_err(|e| Error::Parse(format!("cannot read {source:?}: {e}")))?;
        Ok((parse_code_text(&text)?, text))
    }
}

fn load_matrix(path: &PathBuf) -> Result<(Matrix, String)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {:?}: {e}", path.display())))?;
    Ok((parse_matrix_text(&text)?, text))
}

fn cmd_ghw(args: &GhwArgs, opts: &EnumOptions, format: OutputFormat) -> Result<(String, i32)> {
    let source = match (&args.code, &args.family) {
        (Some(path), None) => path.display().to_string(),
        (None, Some(lit)) => lit.clone(),
        _ => return Err(Error::Parse("give exactly one of --code or --family".into())),
    };
    let (code, text) = load_source(&source)?;
    if code.is_zero() {
        return Err(Error::ZeroCode);
    }
    let (lo, hi, rspec) = match (&args.r, args.all) {
        (Some(spec), false) => {
            let (lo, hi) = parse_r_range(spec)?;
            (lo, hi, spec.clone())
        }
        (None, true) => (1, code.dim(), "all".to_string()),
        _ => return Err(Error::Parse("give exactly one of --r or --all".into())),
    };
    let mut rep = RunReport::new(
        vec![
            ("command".into(), "ghw".into()),
            (
                "input".into(),
                format!("[{},{}] over gf({})", code.n(), code.dim(), code.field().q()),
            ),
            ("digest".into(), digest(&["ghw", text.as_str(), rspec.as_str()])),
        ],
        vec!["r", "value", "witness"],
    );
    for r in lo..=hi {
        let (w, sub) = ghw_with_witness(&code, r, opts)?;
        rep.push_row(vec![r.to_string(), w.to_string(), sub.support().to_string()]);
    }
    Ok((rep.render(format), 0))
}

/// value, witness, flags.
type BoundRow = (String, String, String);

fn row_of(rep: &BoundReport) -> BoundRow {
    let mut flags = Vec::new();
    if rep.swapped_columns {
        flags.push("swapped");
    }
    if rep.vacuous {
        flags.push("vacuous");
    }
    let flags = if flags.is_empty() { "-".to_string() } else { flags.join(",") };
    (rep.value.to_string(), rep.witness.to_string(), flags)
}

/// Constituent codes, the structure matrix, human-readable input
/// descriptions, and the raw texts that feed the digest.
type BoundInputs = (Vec<LinearCode>, Matrix, Vec<String>, Vec<String>);

/// Reads `--c1 --c2 --c3` (contiguously from `--c1`) and `--matrix`.
fn collect_inputs(args: &BoundArgs, exact: Option<usize>) -> Result<BoundInputs> {
    let slots = [("--c1", &args.c1), ("--c2", &args.c2), ("--c3", &args.c3)];
    let mut codes = Vec::new();
    let mut desc = Vec::new();
    let mut parts = Vec::new();
    let mut ended = false;
    for (flag, slot) in slots {
        match slot {
            Some(src) if !ended => {
                let (code, text) = load_source(src)?;
                desc.push(format!("c{}=[{},{}]", codes.len() + 1, code.n(), code.dim()));
                parts.push(text);
                codes.push(code);
            }
            Some(_) => {
                return Err(Error::Parse(format!(
                    "{flag} was given but an earlier constituent slot is empty"
                )))
            }
            None => ended = true,
        }
    }
    if codes.is_empty() {
        return Err(Error::Parse("this method needs at least --c1".into()));
    }
    if let Some(want) = exact {
        if codes.len() != want {
            return Err(Error::Parse(format!(
                "this method takes exactly {want} constituents, got {}",
                codes.len()
            )));
        }
    }
    let mpath = args
        .matrix
        .as_ref()
        .ok_or_else(|| Error::Parse("this method needs --matrix".into()))?;
    let (matrix, mtext) = load_matrix(mpath)?;
    desc.push(format!(
        "a={}x{} over gf({})",
        matrix.rows(),
        matrix.cols(),
        matrix.field().q()
    ));
    parts.push(mtext);
    Ok((codes, matrix, desc, parts))
}

fn require_param(value: Option<usize>, flag: &str) -> Result<usize> {
    value.ok_or_else(|| Error::Parse(format!("this method needs {flag}")))
}

fn cmd_bound(args: &BoundArgs, opts: &EnumOptions, format: OutputFormat) -> Result<(String, i32)> {
    let method = Method::parse(&args.method).ok_or_else(|| {
        Error::Parse(format!(
            "unknown method {:?}; expected one of: {}",
            args.method,
            Method::all().iter().map(Method::id).collect::<Vec<_>>().join(", ")
        ))
    })?;
    let rspec = args.r.clone().unwrap_or_else(|| "1".to_string());
    let (lo, hi) = parse_r_range(&rspec)?;
    if matches!(method, Method::Eq2 | Method::Eq3) && (lo, hi) != (1, 1) {
        return Err(Error::Parse(
            "this method bounds the minimum distance only; use r = 1".into(),
        ));
    }

    type Eval<'a> = Box<dyn Fn(usize) -> Result<BoundRow> + 'a>;
    let (desc, parts, eval): (Vec<String>, Vec<String>, Eval) = match method {
        Method::RsFormula => {
            let n = require_param(args.n, "--n")?;
            let k1 = require_param(args.k1, "--k1")?;
            let k2 = require_param(args.k2, "--k2")?;
            (
                vec![format!("n={n} k1={k1} k2={k2}")],
                vec![n.to_string(), k1.to_string(), k2.to_string()],
                Box::new(move |r| {
                    let v = rs_ghw_closed_form(n, k1, k2, r)?;
                    Ok((v.to_string(), "-".to_string(), "-".to_string()))
                }),
            )
        }
        Method::Eq2 => {
            let (codes, a, desc, parts) = collect_inputs(args, None)?;
            (
                desc,
                parts,
                Box::new(move |_| Ok(row_of(&min_dist_lower_eq2(&a, &codes, opts)?))),
            )
        }
        Method::Eq3 => {
            let (codes, a, desc, parts) = collect_inputs(args, None)?;
            (
                desc,
                parts,
                Box::new(move |_| Ok(row_of(&min_dist_lower_eq3(&a, &codes, opts)?))),
            )
        }
        Method::TwoGeneral | Method::TwoNz | Method::TwoZ => {
            let variant = match method {
                Method::TwoGeneral => Variant2x2::General,
                Method::TwoNz => Variant2x2::A21Nonzero,
                _ => Variant2x2::A21Zero,
            };
            let (codes, a, desc, parts) = collect_inputs(args, Some(2))?;
            (
                desc,
                parts,
                Box::new(move |r| Ok(row_of(&lb_2x2(&codes[0], &codes[1], &a, r, variant, opts)?))),
            )
        }
        Method::H2Nested => {
            let (codes, a, desc, parts) = collect_inputs(args, Some(2))?;
            (
                desc,
                parts,
                Box::new(move |r| Ok(row_of(&lb_h2_nested(&codes[0], &codes[1], &a, r, opts)?))),
            )
        }
        Method::H3Nested => {
            let (codes, a, desc, parts) = collect_inputs(args, Some(3))?;
            (
                desc,
                parts,
                Box::new(move |r| {
                    Ok(row_of(&lb_h3_nested(
                        &codes[0], &codes[1], &codes[2], &a, r, opts,
                    )?))
                }),
            )
        }
        Method::H3S2 => {
            let (codes, a, desc, parts) = collect_inputs(args, Some(2))?;
            (
                desc,
                parts,
                Box::new(move |r| Ok(row_of(&lb_h3_s2(&codes[0], &codes[1], &a, r, opts)?))),
            )
        }
        Method::GeneralExhaustive => {
            let (codes, a, desc, parts) = collect_inputs(args, None)?;
            let mpc = mpc_construct(&codes, &a)?;
            (
                desc,
                parts,
                Box::new(move |r| Ok(row_of(&lb_general_exhaustive(&mpc, r, opts)?))),
            )
        }
        Method::Upper => {
            let (codes, a, desc, parts) = collect_inputs(args, None)?;
            let mpc = mpc_construct(&codes, &a)?;
            (
                desc,
                parts,
                Box::new(move |r| Ok(row_of(&ub_ghw_auto(&mpc, r, opts)?))),
            )
        }
    };

    let mut digest_parts: Vec<&str> = vec!["bound", method.id()];
    digest_parts.extend(parts.iter().map(String::as_str));
    digest_parts.push(&rspec);
    let mut rep = RunReport::new(
        vec![
            ("command".into(), "bound".into()),
            ("method".into(), method.id().into()),
            ("inputs".into(), desc.join(" ")),
            ("digest".into(), digest(&digest_parts)),
        ],
        vec!["r", "value", "witness", "flags"],
    );
    for r in lo..=hi {
        let (value, witness, flags) = eval(r)?;
        rep.push_row(vec![r.to_string(), value, witness, flags]);
    }
    Ok((rep.render(format), 0))
}

fn cmd_mpc_build(args: &MpcBuildArgs, format: OutputFormat) -> Result<(String, i32)> {
    let mut codes = Vec::new();
    let mut desc = Vec::new();
    let mut parts: Vec<String> = Vec::new();
    for (i, src) in args.constituents.iter().enumerate() {
        let (code, text) = load_source(src)?;
        desc.push(format!("c{}=[{},{}]", i + 1, code.n(), code.dim()));
        parts.push(text);
        codes.push(code);
    }
    let (matrix, mtext) = load_matrix(&args.matrix)?;
    parts.push(mtext);
    let mpc = mpc_construct(&codes, &matrix)?;
    let nsc = is_nsc(&matrix)?;
    let mut digest_parts: Vec<&str> = vec!["mpc-build"];
    digest_parts.extend(parts.iter().map(String::as_str));
    let mut meta = vec![
        ("command".to_string(), "mpc-build".to_string()),
        ("constituents".to_string(), desc.join(" ")),
        (
            "matrix".to_string(),
            format!("{}x{}", matrix.rows(), matrix.cols()),
        ),
        ("field".to_string(), format!("gf({})", mpc.field().q())),
        ("length".to_string(), mpc.code().n().to_string()),
        ("dimension".to_string(), mpc.dim().to_string()),
        ("nsc".to_string(), nsc.is_nsc.to_string()),
        ("digest".to_string(), digest(&digest_parts)),
    ];
    if let Some(out) = &args.out {
        std::fs::write(out, render_code(mpc.code()))
            .map_err(|e| Error::Parse(format!("cannot write {:?}: {e}", out.display())))?;
        meta.push(("out".to_string(), out.display().to_string()));
    }
    let rep = RunReport::new(meta, vec!["r", "value", "witness"]);
    Ok((rep.render(format), 0))
}

fn cmd_nsc_check(args: &NscCheckArgs, format: OutputFormat) -> Result<(String, i32)> {
    let (matrix, mtext) = load_matrix(&args.matrix)?;
    let rep = is_nsc(&matrix)?;
    let witness = match &rep.witness {
        None => "-".to_string(),
        Some((t, cols)) => format!(
            "t={t} cols={}",
            cols.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        ),
    };
    let mut out = RunReport::new(
        vec![
            ("command".into(), "nsc-check".into()),
            (
                "matrix".into(),
                format!(
                    "{}x{} over gf({})",
                    matrix.rows(),
                    matrix.cols(),
                    matrix.field().q()
                ),
            ),
            ("digest".into(), digest(&["nsc-check", mtext.as_str()])),
        ],
        vec!["nsc", "witness"],
    );
    out.push_row(vec![rep.is_nsc.to_string(), witness]);
    Ok((out.render(format), 0))
}

fn cmd_reproduce(
    args: &ReproduceArgs,
    opts: &EnumOptions,
    format: OutputFormat,
) -> Result<(String, i32)> {
    let (reports, all_pass) = reproduce::run(args.scenario.as_deref(), opts)?;
    let text = reports
        .iter()
        .map(|r| r.render(format))
        .collect::<Vec<_>>()
        .join("\n");
    Ok((text, if all_pass { 0 } else { 1 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<(String, i32)> {
        let cli = Cli::try_parse_from(args).expect("arguments should parse");
        dispatch(&cli)
    }

    #[test]
    fn ghw_of_a_family_literal_prints_the_hierarchy() {
        let (text, code) =
            run_args(&["ghwmpc", "ghw", "--family", "rs:q=4,n=4,k=2", "--all"]).unwrap();
        assert_eq!(code, 0);
        assert!(text.contains("input: [4,2] over gf(4)"), "{text}");
        assert!(text.contains("\n1  3"), "{text}");
        assert!(text.contains("\n2  4"), "{text}");
    }

    #[test]
    fn ghw_needs_exactly_one_source_and_one_range() {
        assert!(matches!(
            run_args(&["ghwmpc", "ghw", "--r", "1"]),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            run_args(&["ghwmpc", "ghw", "--family", "rs:q=4,n=4,k=2"]),
            Err(Error::Parse(_))
        ));
        // --code with --family is a clap-level conflict.
        assert!(Cli::try_parse_from([
            "ghwmpc", "ghw", "--code", "x", "--family", "rs:q=4,n=4,k=2", "--all"
        ])
        .is_err());
    }

    #[test]
    fn closed_form_bounds_print_one_row_per_r() {
        let (text, code) = run_args(&[
            "ghwmpc", "bound", "--method", "rs-formula", "--n", "4", "--k1", "3", "--k2", "1",
            "--r", "1..4",
        ])
        .unwrap();
        assert_eq!(code, 0);
        for (r, v) in [(1, 4), (2, 6), (3, 7), (4, 8)] {
            assert!(text.contains(&format!("\n{r}  {v}")), "{text}");
        }
    }

    #[test]
    fn distance_bounds_reject_higher_weights() {
        let err = run_args(&[
            "ghwmpc",
            "bound",
            "--method",
            "eq3",
            "--c1",
            "fixtures/c1.code",
            "--c2",
            "fixtures/c2.code",
            "--matrix",
            "fixtures/a1.mat",
            "--r",
            "2",
        ])
        .unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn skipping_a_constituent_slot_is_rejected() {
        let err = run_args(&[
            "ghwmpc",
            "bound",
            "--method",
            "h2-nested",
            "--c1",
            "fixtures/c1.code",
            "--c3",
            "fixtures/c2.code",
            "--matrix",
            "fixtures/a1.mat",
        ])
        .unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn unknown_methods_and_zero_workers_are_usage_errors() {
        assert!(matches!(
            run_args(&["ghwmpc", "bound", "--method", "wild"]),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            run_args(&["ghwmpc", "ghw", "--workers", "0", "--family", "rs:q=4,n=4,k=2", "--all"]),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn nsc_check_reports_the_fixture_matrices() {
        let (text, code) =
            run_args(&["ghwmpc", "nsc-check", "--matrix", "fixtures/a1.mat"]).unwrap();
        assert_eq!(code, 0);
        assert!(text.contains("true"), "{text}");
    }

    #[test]
    fn mpc_build_reports_the_table_parameters() {
        let (text, code) = run_args(&[
            "ghwmpc",
            "mpc-build",
            "fixtures/c1.code",
            "fixtures/c2.code",
            "--matrix",
            "fixtures/a1.mat",
        ])
        .unwrap();
        assert_eq!(code, 0);
        assert!(text.contains("length: 16"), "{text}");
        assert!(text.contains("dimension: 5"), "{text}");
        assert!(text.contains("nsc: true"), "{text}");
    }

    #[test]
    fn error_classes_map_to_distinct_exit_codes() {
        assert_eq!(exit_code_for(&Error::Parse(String::new())), 2);
        assert_eq!(exit_code_for(&Error::Shape(String::new())), 2);
        assert_eq!(exit_code_for(&Error::Range(String::new())), 2);
        assert_eq!(exit_code_for(&Error::ScaleGuard(String::new())), 3);
        assert_eq!(exit_code_for(&Error::Precondition(String::new())), 4);
        assert_eq!(exit_code_for(&Error::NotNsc { t: 1, cols: vec![1] }), 4);
        assert_eq!(exit_code_for(&Error::ZeroCode), 4);
        assert_eq!(exit_code_for(&Error::DivisionByZero), 4);
        assert_eq!(exit_code_for(&Error::Internal(String::new())), 1);
    }

    #[test]
    fn single_threaded_options_disable_the_parallel_path() {
        assert!(!enum_options_for(1).parallel);
    }
}
