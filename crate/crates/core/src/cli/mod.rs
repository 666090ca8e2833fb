//! Command-line front end: `info`, `suite run` and `witness`.
//!
//! Exit codes: 0 success, 1 a case or verification failed, 2 bad
//! configuration or input, 3 element outside the supported normal forms.

mod element;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chevalley::LieAlg;
use crate::cyclofield::CycloField;
use crate::error::{Error, Result};
use crate::localcheck::{minus_witness, run_suite, Suite, SuiteConfig, SuiteReport};
use crate::rootsys::{cartan, CartanData, CartanType, DEFAULT_MAX_ROOTS, DEFAULT_MAX_WEYL};

pub use element::{parse_element, parse_scalar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lielocal", version, about = "Local automorphism checks for simple Lie algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, root counts, Weyl group data and the constants digest.
    Info(InfoArgs),
    /// Verification suites.
    Suite {
        #[command(subcommand)]
        cmd: SuiteCmd,
    },
    /// Builds and verifies an automorphism mapping an element to its negative.
    Witness(WitnessArgs),
}

#[derive(Subcommand, Debug)]
enum SuiteCmd {
    Run(RunArgs),
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Type letters (A..G), optionally with the rank attached, e.g. `A2,G2`.
    #[arg(long = "type", value_delimiter = ',', required = true)]
    typ: Vec<String>,
    /// Ranks matching `--type` one to one, or one type letter with several ranks.
    #[arg(long, value_delimiter = ',')]
    rank: Vec<usize>,
    /// Order N of the cyclotomic field Q(zeta_N); a positive multiple of 4.
    #[arg(long, default_value_t = 24)]
    field_order: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct InfoArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct RunArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    /// Comma-separated suite names, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suites: Vec<String>,
    /// Sample scalars for the line identities, e.g. `1,2,1/2,z`.
    #[arg(long, value_delimiter = ',')]
    samples: Vec<String>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest Weyl group any suite may enumerate.
    #[arg(long, default_value_t = DEFAULT_MAX_WEYL, value_parser = positive::<u128>)]
    max_weyl: u128,
    /// Largest root system for the closed-subset search.
    #[arg(long, default_value_t = DEFAULT_MAX_ROOTS, value_parser = positive::<usize>)]
    max_roots: usize,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    /// Element such as `h1 + 2h2 + e(alpha1)`.
    element: String,
    /// Include the full matrix of the witness.
    #[arg(long)]
    matrix: bool,
}

fn positive<T>(s: &str) -> std::result::Result<T, String>
where
    T: std::str::FromStr + PartialOrd + From<u8>,
{
    match s.parse::<T>() {
        Ok(v) if v >= T::from(1) => Ok(v),
        Ok(_) => Err("guards must be positive".into()),
        Err(_) => Err(format!("not a positive integer: {s:?}")),
    }
}

/// Resolved `suite run` configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub algebras: Vec<CartanData>,
    pub field_order: u32,
    pub suites: Vec<Suite>,
    /// Whether `all` was requested; inapplicable suites are then skipped.
    pub all_suites: bool,
    pub samples: Vec<String>,
    pub max_weyl: u128,
    pub max_roots: usize,
}

fn parse_algebras(a: &AlgebraArgs) -> Result<Vec<CartanData>> {
    let split = |s: &str| -> Result<(CartanType, Option<usize>)> {
        let s = s.trim();
        let (letter, digits) = s.split_at(s.len().min(1));
        let typ: CartanType = letter.parse()?;
        if digits.is_empty() {
            return Ok((typ, None));
        }
        let r = digits
            .parse::<usize>()
            .map_err(|_| Error::InvalidType(format!("bad rank in {s:?}")))?;
        Ok((typ, Some(r)))
    };
    let parsed: Vec<(CartanType, Option<usize>)> = a.typ.iter().map(|s| split(s)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    if parsed.len() == 1 && parsed[0].1.is_none() && a.rank.len() > 1 {
        for &r in &a.rank {
            out.push(cartan(parsed[0].0, r)?);
        }
        return Ok(out);
    }
    for (k, (typ, r)) in parsed.into_iter().enumerate() {
        let rank = match (r, a.rank.get(k), a.rank.len()) {
            (Some(r), _, _) => r,
            (None, Some(&r), _) => r,
            (None, None, 1) => a.rank[0],
            _ => return Err(Error::InvalidType(format!("no rank given for type {typ}"))),
        };
        out.push(cartan(typ, rank)?);
    }
    Ok(out)
}

impl RunConfig {
    fn from_args(a: &RunArgs) -> Result<RunConfig> {
        let algebras = parse_algebras(&a.alg)?;
        CycloField::new(a.alg.field_order)?;
        let all_suites = a.suites.iter().any(|s| s.trim().eq_ignore_ascii_case("all"));
        let suites = if all_suites {
            Suite::ALL.to_vec()
        } else {
            let mut v: Vec<Suite> = a.suites.iter().map(|s| s.parse()).collect::<Result<_>>()?;
            v.dedup();
            v
        };
        if suites.is_empty() {
            return Err(Error::NotApplicable("no suite selected".into()));
        }
        Ok(RunConfig {
            algebras,
            field_order: a.alg.field_order,
            suites,
            all_suites,
            samples: a.samples.clone(),
            max_weyl: a.max_weyl,
            max_roots: a.max_roots,
        })
    }
}

/// Outcome of `suite run` before rendering.
pub struct RunOutcome {
    pub report: Value,
    pub all_passed: bool,
}

/// Runs every selected suite on every algebra. Suites of one algebra run in
/// parallel; the report keeps the configured order.
pub fn run_config(cfg: &RunConfig) -> Result<RunOutcome> {
    let field = CycloField::new(cfg.field_order)?;
    let mut runs = Vec::new();
    let mut all_passed = true;
    for c in &cfg.algebras {
        let l = LieAlg::build(c.clone(), field)?;
        let mut sc = SuiteConfig::new(&l);
        sc.max_weyl = cfg.max_weyl;
        sc.max_roots = cfg.max_roots;
        if !cfg.samples.is_empty() {
            sc.samples = cfg
                .samples
                .iter()
                .map(|s| parse_scalar(field, s))
                .collect::<Result<_>>()?;
            if sc.samples.iter().any(|k| k.is_zero()) {
                return Err(Error::ZeroScalar);
            }
        }
        let results: Vec<(Suite, Result<SuiteReport>)> = cfg
            .suites
            .par_iter()
            .map(|&s| (s, run_suite(&l, s, &sc)))
            .collect();
        let mut suites = Vec::new();
        let mut skipped = Vec::new();
        for (s, r) in results {
            match r {
                Ok(rep) => {
                    all_passed &= rep.all_passed();
                    suites.push(serde_json::to_value(&rep).expect("serializable"));
                }
                Err(e) if cfg.all_suites && is_guard(&e) => {
                    skipped.push(json!({"suite": s.name(), "reason": e.to_string()}));
                }
                Err(e) => return Err(e),
            }
        }
        runs.push(json!({
            "algebra": c.to_string(),
            "field_order": cfg.field_order,
            "constants_digest": l.constants_digest(),
            "suites": suites,
            "skipped": skipped,
        }));
    }
    Ok(RunOutcome {
        report: json!({ "runs": runs }),
        all_passed,
    })
}

/// Errors that mean "this suite does not apply here" rather than a bug.
fn is_guard(e: &Error) -> bool {
    matches!(
        e,
        Error::NotApplicable(_) | Error::TooLarge { .. } | Error::WeylTooLarge { .. }
    )
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NotNormalForm(_) => EXIT_UNSUPPORTED,
        Error::Parse { .. }
        | Error::InvalidType(_)
        | Error::InvalidFieldOrder(_)
        | Error::NotApplicable(_)
        | Error::TooLarge { .. }
        | Error::WeylTooLarge { .. }
        | Error::NotARoot(_)
        | Error::UnrepresentableScalar { .. }
        | Error::ZeroScalar => EXIT_CONFIG,
        _ => EXIT_FAIL,
    }
}

/// Renders a `suite run` report as a table.
pub fn render_text(report: &Value) -> String {
    let mut s = String::new();
    for run in report["runs"].as_array().into_iter().flatten() {
        let _ = writeln!(
            s,
            "{} over Q(zeta_{})  constants {}",
            run["algebra"].as_str().unwrap_or(""),
            run["field_order"],
            run["constants_digest"].as_str().unwrap_or("")
        );
        for suite in run["suites"].as_array().into_iter().flatten() {
            let (p, t) = (&suite["summary"]["passed"], &suite["summary"]["total"]);
            let _ = writeln!(s, "  {:<10} {:>5}/{:<5}", suite["suite"].as_str().unwrap_or(""), p, t);
            for c in suite["cases"].as_array().into_iter().flatten() {
                let mark = if c["pass"] == json!(true) { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "    {mark}  {}", c["id"].as_str().unwrap_or(""));
            }
        }
        for sk in run["skipped"].as_array().into_iter().flatten() {
            let _ = writeln!(
                s,
                "  {:<10} skipped: {}",
                sk["suite"].as_str().unwrap_or(""),
                sk["reason"].as_str().unwrap_or("")
            );
        }
    }
    s
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn info_json(c: &CartanData, field: CycloField) -> Result<Value> {
    let l = LieAlg::build(c.clone(), field)?;
    let rs = l.root_system();
    let order = c.weyl_order();
    let w0 = rs.longest_element();
    let theta: Vec<usize> = rs.opposite_involution().iter().map(|i| i + 1).collect();
    Ok(json!({
        "algebra": c.to_string(),
        "dim": l.dim(),
        "positive_roots": rs.num_positive(),
        "weyl_order": order.to_string(),
        "w0": w0.display_word(),
        "w0_length": w0.len(),
        "opposite_involution": theta,
        "highest_root": rs.highest_root().to_string(),
        "constants_digest": l.constants_digest(),
    }))
}

fn info_text(v: &Value) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", v["algebra"].as_str().unwrap_or(""));
    let _ = writeln!(s, "  dim g            {}", v["dim"]);
    let _ = writeln!(s, "  |Phi+|           {}", v["positive_roots"]);
    let _ = writeln!(s, "  |W|              {}", v["weyl_order"].as_str().unwrap_or(""));
    let _ = writeln!(s, "  w0               {} (length {})", v["w0"].as_str().unwrap_or(""), v["w0_length"]);
    let _ = writeln!(s, "  theta            {}", v["opposite_involution"]);
    let _ = writeln!(s, "  highest root     {}", v["highest_root"].as_str().unwrap_or(""));
    let _ = writeln!(s, "  constants digest {}", v["constants_digest"].as_str().unwrap_or(""));
    s
}

fn cmd_info(a: &InfoArgs, out: &mut dyn Write) -> Result<i32> {
    let field = CycloField::new(a.alg.field_order)?;
    let algs = parse_algebras(&a.alg)?;
    let infos: Vec<Value> = algs
        .iter()
        .map(|c| info_json(c, field))
        .collect::<Result<_>>()?;
    let text = match a.format {
        Format::Json if infos.len() == 1 => pretty(&infos[0]),
        Format::Json => pretty(&Value::Array(infos)),
        Format::Text => infos.iter().map(info_text).collect(),
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    Ok(EXIT_OK)
}

fn cmd_suite(a: &RunArgs, out: &mut dyn Write) -> Result<i32> {
    let cfg = RunConfig::from_args(a)?;
    let res = run_config(&cfg)?;
    let text = match a.format {
        Format::Json => pretty(&res.report),
        Format::Text => render_text(&res.report),
    };
    match &a.out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Error::NotApplicable(format!("cannot write {}: {e}", path.display())))?;
            let summary: String = render_text(&res.report)
                .lines()
                .filter(|l| !l.starts_with("    "))
                .map(|l| format!("{l}\n"))
                .collect();
            out.write_all(summary.as_bytes()).map_err(io_err)?;
        }
        None => out.write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(if res.all_passed { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_witness(a: &WitnessArgs, out: &mut dyn Write) -> Result<i32> {
    let field = CycloField::new(a.alg.field_order)?;
    let algs = parse_algebras(&a.alg)?;
    let [c] = algs.as_slice() else {
        return Err(Error::InvalidType("witness takes exactly one algebra".into()));
    };
    let l = LieAlg::build(c.clone(), field)?;
    let x = parse_element(&l, &a.element)?;
    let w = minus_witness(&l, &x)?;
    let verified = w.verify(&l);
    let mut doc = json!({
        "algebra": c.to_string(),
        "field_order": a.alg.field_order,
        "x": l.format_vec(&x),
        "trace": w.map.trace_json(&l),
        "verified": verified.is_ok(),
    });
    if let Err(e) = &verified {
        doc["error"] = json!(e.to_string());
    }
    if a.matrix {
        doc["matrix"] = w.matrix_json();
    }
    out.write_all(pretty(&doc).as_bytes()).map_err(io_err)?;
    Ok(if verified.is_ok() { EXIT_OK } else { EXIT_FAIL })
}

fn io_err(e: std::io::Error) -> Error {
    Error::NotApplicable(format!("output error: {e}"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let res = match &cli.cmd {
        Command::Info(a) => cmd_info(a, out),
        Command::Suite { cmd: SuiteCmd::Run(a) } => cmd_suite(a, out),
        Command::Witness(a) => cmd_witness(a, out),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let (Error::Parse { pos, .. }, Command::Witness(a)) = (&e, &cli.cmd) {
                let _ = writeln!(err, "  {}\n  {}^", a.element, " ".repeat(pos.saturating_sub(1)));
            }
            exit_code_for(&e)
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
