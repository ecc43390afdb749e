//! Command-line front end. [`run_cli`] returns the process exit code.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bsgs::GeneratedGroup;
use crate::catalog::{catalog, find};
use crate::closure::{k_closure, k_closure_naive};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::structure::{base_number, greedy_base, minimal_base, sylow_decomposition};
use crate::totality::{cayley_table, classify, probe_totally_k_closed};
use crate::verify::{verify, VerificationReport, VerifyOptions, TAGS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "wielandt",
    version,
    about = "k-closures, bases and Sylow structure of permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the k-closure of a group.
    Closure {
        /// Catalog name or `degree: gen, gen` in cycle notation.
        #[arg(short, long)]
        group: String,
        #[arg(short, long)]
        k: usize,
        /// Use the brute-force filter over Sym(n).
        #[arg(long)]
        naive: bool,
    },
    /// Compute a base and the base number.
    Base {
        #[arg(short, long)]
        group: String,
        /// Only report the greedy base.
        #[arg(long, conflicts_with = "exact")]
        greedy: bool,
        /// Only report a minimum base.
        #[arg(long)]
        exact: bool,
    },
    /// Split a nilpotent group into its Sylow subgroups.
    Sylow {
        #[arg(short, long)]
        group: String,
    },
    /// Search faithful representations for one that is not k-closed.
    Prober {
        #[arg(short, long)]
        group: String,
        #[arg(short, long)]
        k: usize,
        #[arg(long, default_value_t = 12)]
        max_degree: usize,
    },
    /// Decide total k-closedness from structure alone.
    Classify {
        #[arg(short, long)]
        group: String,
        #[arg(short, long)]
        k: usize,
    },
    /// Run a verification suite (or `all`).
    Verify {
        tag: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        max_order: Option<u64>,
        #[arg(short, long)]
        k: Option<usize>,
    },
    /// List the catalog.
    Catalog,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn resolve(spec: &str) -> Result<GeneratedGroup> {
    match find(spec) {
        Some(e) => Ok(e.group),
        None => GeneratedGroup::parse(spec),
    }
}

fn one_based(points: &[usize]) -> Vec<usize> {
    points.iter().map(|p| p + 1).collect()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run_cli<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main_exit() -> ExitCode {
    ExitCode::from(run_cli(std::env::args_os()) as u8)
}

fn run(command: Command) -> Result<i32> {
    let limits = Limits::default();
    match command {
        Command::Closure { group, k, naive } => {
            let g = resolve(&group)?;
            let closure = if naive {
                k_closure_naive(&g, k, &limits)?
            } else {
                k_closure(&g, k, &limits)?
            };
            println!("group order: {}", g.order());
            println!("closure order: {}", closure.order());
            println!("closure: {closure}");
            println!("{k}-closed: {}", closure.order() == g.order());
        }
        Command::Base {
            group,
            greedy,
            exact,
        } => {
            let g = resolve(&group)?;
            if !exact {
                let b = greedy_base(&g);
                println!("greedy base: {:?} (length {})", one_based(&b), b.len());
            }
            if !greedy {
                let b = minimal_base(&g, &limits)?;
                println!("minimum base: {:?}", one_based(&b));
                println!("base number: {}", base_number(&g, &limits)?);
            }
        }
        Command::Sylow { group } => {
            let g = resolve(&group)?;
            let d = sylow_decomposition(&g)?;
            for c in &d.components {
                println!(
                    "p = {}: order {}^{} = {}, {}",
                    c.prime,
                    c.prime,
                    c.exponent,
                    c.order(),
                    c.group
                );
            }
        }
        Command::Prober {
            group,
            k,
            max_degree,
        } => {
            let g = resolve(&group)?;
            let lim = limits.with_search_degree(limits.max_search_degree.max(max_degree));
            let table = cayley_table(&g, &lim)?;
            let verdict = probe_totally_k_closed(&table, k, max_degree, &lim)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&verdict.to_json()).expect("json")
            );
        }
        Command::Classify { group, k } => {
            let g = resolve(&group)?;
            let verdict = classify(&g, k, &limits)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&verdict.to_json()).expect("json")
            );
        }
        Command::Verify {
            tag,
            format,
            max_degree,
            max_order,
            k,
        } => {
            let opts = VerifyOptions {
                limits,
                max_degree,
                max_order,
                k,
            };
            let reports: Vec<VerificationReport> = if tag == "all" {
                TAGS.iter()
                    .map(|t| verify(t, &opts))
                    .collect::<Result<_>>()?
            } else {
                vec![verify(&tag, &opts)?]
            };
            match format {
                Format::Json => {
                    let value = if tag == "all" {
                        json!(reports)
                    } else {
                        json!(reports[0])
                    };
                    println!("{}", serde_json::to_string_pretty(&value).expect("json"));
                }
                Format::Text => {
                    for r in &reports {
                        print!("{}", r.to_text());
                    }
                }
            }
            if reports.iter().any(|r| r.summary.failed > 0) {
                return Ok(EXIT_FAIL);
            }
            if reports.iter().any(|r| r.summary.cap_exceeded > 0) {
                return Ok(EXIT_CAP);
            }
        }
        Command::Catalog => {
            for e in catalog() {
                println!("{:<16} order {:>3}  {}", e.name, e.order(), e.group);
            }
        }
    }
    Ok(EXIT_OK)
}
