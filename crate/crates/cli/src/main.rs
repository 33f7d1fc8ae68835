//! `chordgenus`: genus-stratified counts of chord diagrams on one and two
//! backbones, the associated generating polynomials, and self-checks.

mod config;
mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use chordgenus::oracle::{self, OracleConfig};
use chordgenus::verify::{self, Suite};
use chordgenus::{one_backbone, two_backbone, Backbones, Error, GenusTable};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "chordgenus",
    version,
    about = "Genus enumeration of chord diagrams on one and two backbones"
)]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// `key=value` file with `oracle_limit` and `oracle_symbolic_limit`.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Largest chord count for brute-force genus tables.
    #[arg(long, global = true)]
    oracle_limit: Option<usize>,

    /// Largest chord count for brute-force N-polynomials.
    #[arg(long, global = true)]
    symbolic_limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Diagram counts for a fixed number of chords.
    Count {
        #[arg(long, value_parser = parse_backbones)]
        backbones: Backbones,
        #[arg(long)]
        chords: usize,
        /// Print only this genus.
        #[arg(long)]
        genus: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Coefficients of a generating polynomial.
    Poly {
        #[arg(long, value_enum)]
        which: Which,
        /// The genus for `P`, `P2`, `R2`; the chord count for the N-polynomials.
        #[arg(long)]
        index: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Run a check suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(Suite), default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Counts for every chord number up to `--max-n`.
    Table {
        #[arg(long, value_parser = parse_backbones)]
        backbones: Backbones,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_g: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Formula,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "P")]
    P,
    #[value(name = "P2")]
    P2,
    #[value(name = "R2")]
    R2,
    #[value(name = "PnN")]
    PnN,
    #[value(name = "UnN")]
    UnN,
    #[value(name = "QnN")]
    QnN,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::P => "P",
            Which::P2 => "P2",
            Which::R2 => "R2",
            Which::PnN => "PnN",
            Which::UnN => "UnN",
            Which::QnN => "QnN",
        }
    }
}

fn parse_backbones(s: &str) -> Result<Backbones, String> {
    let b: usize = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    Backbones::try_from(b).map_err(|b| format!("{b} backbones are not supported (use 1 or 2)"))
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(io::Error),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match config::resolve(
        cli.config.as_deref(),
        std::env::var(config::LIMIT_ENV).ok(),
        cli.oracle_limit,
        cli.symbolic_limit,
    ) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}", e.0);
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(&cli, &config) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(EXIT_FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAILED)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::LimitExceeded { .. } => EXIT_LIMIT,
                Error::UnsupportedGenus(_)
                | Error::InvalidPartition(_)
                | Error::InvalidPermutation(_) => EXIT_USAGE,
                _ => EXIT_FAILED,
            })
        }
    }
}

fn run(cli: &Cli, config: &OracleConfig) -> Result<(), Failure> {
    match &cli.command {
        Command::Count {
            backbones,
            chords,
            genus,
            method,
        } => {
            let table = genus_table(*backbones, *chords, *method, config)?;
            let out = match (cli.format.unwrap_or(Format::Text), genus) {
                (Format::Text, None) => format!("{table}\n"),
                (Format::Text, Some(g)) => format!("{}\n", table.get(*g)),
                (Format::Json, None) => json_line(&render::table_json(&table)),
                (Format::Json, Some(g)) => json_line(&json!({
                    "backbones": backbones.count(),
                    "chords": chords,
                    "genus": g,
                    "count": table.get(*g).to_string(),
                })),
                (Format::Csv, None) => render::csv_rows(std::slice::from_ref(&table), None),
                (Format::Csv, Some(g)) => format!("n,g,count\n{chords},{g},{}\n", table.get(*g)),
            };
            emit(&out, None)
        }
        Command::Poly {
            which,
            index,
            method,
        } => {
            let (variable, coefficients, rendered) = poly(*which, *index, *method, config)?;
            let out = match cli.format.unwrap_or(Format::Json) {
                Format::Json => json_line(&json!({
                    "which": which.name(),
                    "index": index,
                    "variable": variable,
                    "coefficients": coefficients,
                    "rendered": rendered,
                })),
                Format::Text => format!("{rendered}\n"),
                Format::Csv => {
                    let mut s = String::from("power,coefficient\n");
                    for (k, c) in coefficients.iter().enumerate() {
                        s.push_str(&format!("{k},{c}\n"));
                    }
                    s
                }
            };
            emit(&out, None)
        }
        Command::Verify { suite, max_n } => {
            let report = verify::run(*suite, *max_n, config)?;
            let out = match cli.format.unwrap_or(Format::Text) {
                Format::Json => {
                    let checks: Vec<_> = report
                        .checks
                        .iter()
                        .map(|c| {
                            json!({
                                "suite": c.suite.name(),
                                "name": c.name,
                                "passed": c.passed,
                                "detail": c.detail,
                                "elapsed_ms": c.elapsed.as_secs_f64() * 1e3,
                            })
                        })
                        .collect();
                    json_line(&json!({ "passed": report.passed(), "checks": checks }))
                }
                Format::Csv => {
                    return Err(Failure::Usage("verify supports text or json output".into()))
                }
                Format::Text => {
                    let mut s = String::new();
                    for c in &report.checks {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        s.push_str(&format!(
                            "{status}  [{}] {} ({:.1} ms)\n",
                            c.suite,
                            c.name,
                            c.elapsed.as_secs_f64() * 1e3
                        ));
                        if let Some(detail) = &c.detail {
                            s.push_str(&format!("      {detail}\n"));
                        }
                    }
                    let failed = report.failures().count();
                    s.push_str(&format!(
                        "{} checks, {failed} failed, {:.2} s\n",
                        report.checks.len(),
                        report.elapsed().as_secs_f64()
                    ));
                    s
                }
            };
            emit(&out, None)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::ChecksFailed)
            }
        }
        Command::Table {
            backbones,
            max_n,
            max_g,
            method,
            output,
        } => {
            let tables = (0..=*max_n)
                .map(|n| genus_table(*backbones, n, *method, config))
                .collect::<Result<Vec<_>, _>>()?;
            let out = match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => render::csv_rows(&tables, *max_g),
                Format::Json => json_line(&render::rows_json(&tables, *max_g)),
                Format::Text => {
                    return Err(Failure::Usage("table supports csv or json output".into()))
                }
            };
            emit(&out, output.as_ref())
        }
    }
}

fn genus_table(
    backbones: Backbones,
    n: usize,
    method: Method,
    config: &OracleConfig,
) -> Result<GenusTable, Failure> {
    Ok(match (backbones, method) {
        (Backbones::One, Method::Formula) => one_backbone::genus_table(n),
        (Backbones::Two, Method::Formula) => two_backbone::genus_table(n)?,
        (Backbones::One, Method::Oracle) => oracle::oracle_one_backbone(n, config)?,
        (Backbones::Two, Method::Oracle) => oracle::oracle_two_backbone(n, config)?,
    })
}

fn poly(
    which: Which,
    index: usize,
    method: Method,
    config: &OracleConfig,
) -> Result<(&'static str, Vec<String>, String), Failure> {
    if method == Method::Oracle && matches!(which, Which::P | Which::P2 | Which::R2) {
        return Err(Failure::Usage(format!(
            "{} has no oracle method",
            which.name()
        )));
    }
    let z = |p: chordgenus::QPolynomial| ("z", render::q_coefficients(&p), p.render_factored("z"));
    let n = |p: chordgenus::NPolynomial| ("N", render::n_coefficients(&p), p.to_string());
    let oracle = method == Method::Oracle;
    Ok(match which {
        Which::P => z(one_backbone::p_poly(index)?),
        Which::P2 => z(two_backbone::p2_poly(index)?),
        Which::R2 => z(two_backbone::r2_poly(index)?),
        Which::PnN if oracle => n(oracle::oracle_p(index, config)?),
        Which::PnN => n(one_backbone::genus_poly_p(index)),
        Which::UnN if oracle => n(oracle::oracle_u(index, config)?),
        Which::UnN => n(two_backbone::u_poly(index)),
        Which::QnN if oracle => n(oracle::oracle_q(index, config)?),
        Which::QnN => n(two_backbone::q_poly(index)?),
    })
}

fn json_line(value: &serde_json::Value) -> String {
    format!("{value}\n")
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
