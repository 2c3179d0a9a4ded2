//! Argument parsing and subcommand dispatch.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use subcubic_core::catalog::{self, UnknownGraphName};
use subcubic_core::generate::{enum_connected_cubic, enum_connected_subcubic, EnumError};
use subcubic_core::Graph;
use thiserror::Error;

use crate::checks::{self, Check};
use crate::graph6;
use crate::input::{GraphLines, InputError};
use crate::pipeline::map_ordered;
use crate::records::{BoundRecord, CertifyRecord, CheckStatus, ScanRecord};

#[derive(Debug, Parser)]
#[command(name = "subcubic", version, about = "Independent domination and packing scans on subcubic graphs")]
pub struct Cli {
    /// Worker threads. Output order never depends on this.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: u16,
    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Treat unmet preconditions as input errors (exit 2).
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a named graph as graph6.
    Catalog { name: String },
    /// alpha, gamma, i and rho for each input graph.
    Invariants {
        /// graph6 files; `-` or nothing reads stdin.
        files: Vec<PathBuf>,
    },
    /// Build the 3|S| certificate for maximal packings of each input graph.
    Certify {
        /// `all`, or an index into the lexicographically sorted maximal packings.
        #[arg(long, default_value = "all")]
        packing: PackingChoice,
        files: Vec<PathBuf>,
    },
    /// Run checks over a built-in enumeration or over graph6 input.
    Scan {
        /// Enumerate this class instead of reading input.
        #[arg(long, requires = "max_n", conflicts_with = "files")]
        class: Option<Class>,
        /// Largest order to enumerate.
        #[arg(long, requires = "class")]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_values_t = [Check::All], value_delimiter = ',')]
        check: Vec<Check>,
        files: Vec<PathBuf>,
    },
    /// Packing lower bound and its supporting claims on cubic girth-5 graphs.
    Bound {
        #[arg(long, required = true)]
        girth5: bool,
        files: Vec<PathBuf>,
    },
    /// Print one graph6 line per isomorphism class.
    Enumerate {
        #[arg(long)]
        class: Class,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        min_girth: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Cubic,
    Subcubic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PackingChoice {
    All,
    Index(usize),
}

impl FromStr for PackingChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(PackingChoice::All);
        }
        s.parse()
            .map(PackingChoice::Index)
            .map_err(|_| format!("expected `all` or a packing index, got {s:?}"))
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Enumerate(#[from] EnumError),
    #[error(transparent)]
    Catalog(#[from] UnknownGraphName),
    #[error("output: {0}")]
    Output(#[from] io::Error),
    #[error("output: {0}")]
    Json(#[from] serde_json::Error),
}

trait Record: Serialize {
    fn status(&self) -> CheckStatus;
}

impl Record for ScanRecord {
    fn status(&self) -> CheckStatus {
        self.checks.values().copied().max().unwrap_or(CheckStatus::Pass)
    }
}

impl Record for CertifyRecord {
    fn status(&self) -> CheckStatus {
        self.status
    }
}

impl Record for BoundRecord {
    fn status(&self) -> CheckStatus {
        self.status
    }
}

type Item = Result<(String, Graph), CliError>;

fn from_files(files: &[PathBuf]) -> impl Iterator<Item = Item> {
    GraphLines::new(files).map(|r| r.map(|l| (l.graph6, l.graph)).map_err(CliError::from))
}

fn enumerate(class: Class, n: usize, min_girth: Option<usize>) -> Result<Vec<Graph>, EnumError> {
    match class {
        Class::Cubic => enum_connected_cubic(n, min_girth),
        Class::Subcubic => Ok(enum_connected_subcubic(n)?
            .into_iter()
            .filter(|g| min_girth.is_none_or(|k| g.girth().is_none_or(|c| c >= k)))
            .collect()),
    }
}

/// Every order the class admits up to `max_n`: even orders from 4 for
/// cubic graphs, orders from 2 for subcubic ones.
fn enumerate_up_to(class: Class, max_n: usize) -> Result<Vec<Graph>, EnumError> {
    let orders: Vec<usize> = match class {
        Class::Cubic => (4..=max_n).step_by(2).collect(),
        Class::Subcubic => (2..=max_n).collect(),
    };
    // Reject an out-of-range cap even when it is odd.
    if class == Class::Cubic && max_n > subcubic_core::generate::MAX_CUBIC_ORDER {
        return Err(EnumError::OutOfRange {
            n: max_n,
            min: 4,
            max: subcubic_core::generate::MAX_CUBIC_ORDER,
        });
    }
    let mut out = Vec::new();
    for n in orders {
        out.extend(enumerate(class, n, None)?);
    }
    Ok(out)
}

fn run_records<I, R, F>(items: I, jobs: usize, out: &mut dyn Write, work: F) -> Result<CheckStatus, CliError>
where
    I: IntoIterator<Item = Item>,
    R: Record + Send,
    F: Fn(String, &Graph) -> R + Sync,
{
    let mut worst = CheckStatus::Pass;
    map_ordered(
        items,
        jobs,
        |(s, g)| work(s, &g),
        |rec: R| {
            worst = worst.max(rec.status());
            serde_json::to_writer(&mut *out, &rec)?;
            out.write_all(b"\n")?;
            Ok(())
        },
    )?;
    Ok(worst)
}

/// Runs a parsed command line, writing records to `out`. Returns the
/// worst status seen.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<CheckStatus, CliError> {
    let jobs = usize::from(cli.jobs);
    match &cli.command {
        Command::Catalog { name } => {
            writeln!(out, "{}", graph6::encode(&catalog::catalog(name)?.graph))?;
            Ok(CheckStatus::Pass)
        }
        Command::Invariants { files } => run_records(from_files(files), jobs, out, |s, g| {
            checks::scan_record(s, g, &[Check::Obs6])
        }),
        Command::Certify { packing, files } => {
            let index = match packing {
                PackingChoice::All => None,
                PackingChoice::Index(i) => Some(*i),
            };
            run_records(from_files(files), jobs, out, |s, g| checks::certify_record(s, g, index))
        }
        Command::Scan {
            class,
            max_n,
            check,
            files,
        } => {
            let items: Box<dyn Iterator<Item = Item>> = match (class, max_n) {
                (Some(class), Some(max_n)) => Box::new(
                    enumerate_up_to(*class, *max_n)?
                        .into_iter()
                        .map(|g| Ok((graph6::encode(&g), g))),
                ),
                _ => Box::new(from_files(files)),
            };
            run_records(items, jobs, out, |s, g| checks::scan_record(s, g, check))
        }
        Command::Bound { files, .. } => run_records(from_files(files), jobs, out, checks::bound_record),
        Command::Enumerate { class, n, min_girth } => {
            for g in enumerate(*class, *n, *min_girth)? {
                writeln!(out, "{}", graph6::encode(&g))?;
            }
            Ok(CheckStatus::Pass)
        }
    }
}

/// Entry point for the binary: 0 when every check passed, 1 on a
/// violation, 2 on usage or input errors.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match &cli.output {
        Some(path) => match File::create(path) {
            Ok(f) => finish(&cli, BufWriter::new(f)),
            Err(e) => {
                eprintln!("subcubic: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => finish(&cli, BufWriter::new(io::stdout().lock())),
    };
    match result {
        Ok(CheckStatus::Fail) => ExitCode::from(1),
        Ok(CheckStatus::Unmet) if cli.strict => {
            eprintln!("subcubic: some inputs do not meet a check's preconditions");
            ExitCode::from(2)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("subcubic: {e}");
            ExitCode::from(2)
        }
    }
}

fn finish<W: Write>(cli: &Cli, mut out: W) -> Result<CheckStatus, CliError> {
    let status = run(cli, &mut out);
    // Flush what was produced even when the stream ended in an error.
    out.flush()?;
    status
}
