//! Command-line front end. Reports go to standard output as JSON (default)
//! or aligned text; exit codes are 0 on success, 1 on computation errors and
//! 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bound_table, BoundReport};
use crate::envelope::{algorithm1, AlgorithmReport, ConeStrategy, ExampleName, ExampleReport};
use crate::error::{Error, Result};
use crate::groebner::IdealFile;
use crate::matgroup::{named_group, GroupFile, GroupName, DEFAULT_CLOSURE_CAP};
use crate::multipoly::{MonomialOrder, VarietyProfile};
use crate::verify::{run_verification, VerifyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grlex,
    Grevlex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grlex => MonomialOrder::GrLex,
            OrderArg::Grevlex => MonomialOrder::GrevLex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Intersection,
    Interpolation,
}

impl From<StrategyArg> for ConeStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Intersection => ConeStrategy::Intersection,
            StrategyArg::Interpolation => ConeStrategy::Interpolation,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "toricenv", version, about = "Exact degree bounds for toric envelopes of matrix groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form bounds for one n or a range of n.
    Bounds {
        #[arg(long)]
        n: u64,
        /// Last n of a range starting at --n.
        #[arg(long)]
        to: Option<u64>,
    },
    /// Minimal truncation degree for the scalar cone of a finite subgroup of SL2.
    #[command(group(ArgGroup::new("source").required(true).args(["group", "file"])))]
    Algorithm1 {
        /// Catalog tag, e.g. binary-icosahedral or cyclic-5.
        #[arg(long, value_parser = parse_group_tag)]
        group: Option<GroupName>,
        /// Group file (JSON).
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OrderArg::Grlex)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = StrategyArg::Interpolation)]
        strategy: StrategyArg,
    },
    /// Dimension and degree of the variety of an ideal file.
    Degree {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Group and envelope profiles of the example families.
    Examples {
        /// roots-of-unity, torus, dihedral or permutation-diag.
        #[arg(long, value_parser = parse_example_tag)]
        name: Option<ExampleName>,
        #[arg(long, requires = "name")]
        param: Option<u32>,
    },
    /// Run the catalog self-check; exits 1 on any mismatch.
    Verify,
}

fn parse_group_tag(s: &str) -> std::result::Result<GroupName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_example_tag(s: &str) -> std::result::Result<ExampleName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, ok)) => {
            let _ = writeln!(out, "{text}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Output text and whether the command succeeded.
fn execute(cli: &Cli) -> Result<(String, bool)> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Bounds { n, to } => {
            let table = bound_table(*n, to.unwrap_or(*n))?;
            let text = if !json {
                bounds_text(&table)
            } else if to.is_some() {
                to_json(&table)?
            } else {
                to_json(&table[0])?
            };
            Ok((text, true))
        }
        Command::Algorithm1 { group, file, order, strategy } => {
            let (label, g) = match (group, file) {
                (Some(name), _) => (name.tag(), named_group(*name)),
                (None, Some(path)) => {
                    let gf: GroupFile = read_json(path)?;
                    (path.display().to_string(), gf.to_group(DEFAULT_CLOSURE_CAP)?)
                }
                (None, None) => unreachable!("clap requires a group source"),
            };
            let r = algorithm1(&g, (*order).into(), (*strategy).into())?;
            let report = AlgorithmReport::new(&label, g.order(), &r);
            let text = if json {
                to_json(&report)?
            } else {
                algorithm_text(&report)
            };
            Ok((text, true))
        }
        Command::Degree { ideal } => {
            let file: IdealFile = read_json(ideal)?;
            let profile = file.to_ideal()?.profile()?;
            let text = if json {
                to_json(&profile)?
            } else {
                profile_text(&profile)
            };
            Ok((text, true))
        }
        Command::Examples { name, param } => {
            let reports: Vec<ExampleReport> = match name {
                Some(e) => vec![e.run(param.unwrap_or_else(|| e.default_param()))?],
                None => crate::envelope::example_degrees()?,
            };
            let text = if !json {
                examples_text(&reports)
            } else if name.is_some() {
                to_json(&reports[0])?
            } else {
                to_json(&reports)?
            };
            Ok((text, true))
        }
        Command::Verify => {
            let report = run_verification();
            let text = if json {
                to_json(&report)?
            } else {
                verify_text(&report)
            };
            Ok((text, report.passed))
        }
    }
}

fn opt(v: &Option<num_bigint::BigInt>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), ToString::to_string)
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = vec![line(header.iter().map(|s| s.to_string()).collect())];
    out.extend(rows.iter().map(|r| line(r.clone())));
    out.join("\n")
}

fn bounds_text(reports: &[BoundReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                format!("{}{}", r.schur_j, if r.schur_j_is_integer { "" } else { "*" }),
                opt(&r.a_exact),
                r.a_upper.to_string(),
                r.unipotent.to_string(),
                opt(&r.reductive),
                r.product_factor.to_string(),
                opt(&r.tight),
                r.headline.to_string(),
                r.factorial_lower.to_string(),
            ]
        })
        .collect();
    let mut t = table(
        &["n", "J", "A", "A_upper", "unipotent", "reductive", "2^(n(n-1)/2)", "tight", "headline", "n!"],
        &rows,
    );
    if reports.iter().any(|r| !r.schur_j_is_integer) {
        t.push_str("\n* irrational value; the ceiling is shown");
    }
    t
}

fn algorithm_text(r: &AlgorithmReport) -> String {
    format!(
        "group          {}\norder of group {}\nlines          {}\nbasis degree   {}\nd              {}\ncone degree    {}\norder          {}",
        r.group, r.order_of_group, r.num_lines, r.gb_max_degree, r.d, r.degree, r.order
    )
}

fn profile_text(p: &VarietyProfile) -> String {
    format!("dimension {}\ndegree    {}", p.dimension, p.degree)
}

fn examples_text(reports: &[ExampleReport]) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.example.clone(),
                r.param.to_string(),
                format!("{}/{}", r.group.dimension, r.group.degree),
                format!("{}/{}", r.envelope.dimension, r.envelope.degree),
                r.envelope_contains_group.to_string(),
            ]
        })
        .collect();
    table(&["example", "param", "group dim/deg", "envelope dim/deg", "contains"], &rows)
}

fn verify_text(r: &VerifyReport) -> String {
    let mut lines: Vec<String> = r
        .checks
        .iter()
        .map(|c| format!("[{}] {} ({})", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
        .collect();
    lines.push(if r.passed { "all checks passed".into() } else { "some checks FAILED".into() });
    lines.join("\n")
}
