//! Command-line front end: placement files, result documents, rendering
//! and the `m_3(n)` table.
//!
//! Every command writes one JSON document to standard output and a short
//! human summary to standard error. The process exit status is part of the
//! contract, see [`exit`].

pub mod document;
pub mod render;
pub mod table;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use no3line::{
    audit, refute_goodness, solve_min_good, verify, AuditReport, CnCertificate, Error, Placement,
    SearchConfig, SearchResult, VerifyReport,
};
use serde::{Deserialize, Serialize};

pub use document::{
    parse_document, parse_placement, placement_to_json, ParseError, PlacementDocument,
};
pub use render::{render_ascii, render_board, render_svg, Format};
pub use table::{run_table, Table, TableEntry};

/// Process exit statuses. Stable across releases.
pub mod exit {
    /// Command succeeded; for `verify`, the placement is good.
    pub const SUCCESS: u8 = 0;
    /// `verify`: the placement is not good. The document lists why.
    pub const NOT_GOOD: u8 = 1;
    /// `refute`: a certificate shows the placement is not good.
    pub const REFUTED: u8 = 2;
    /// Bad command-line arguments.
    pub const USAGE: u8 = 3;
    /// Unreadable or malformed placement file.
    pub const INPUT: u8 = 4;
    /// Three queens in a line where the command needs a no-3 placement.
    pub const INVALID_PLACEMENT: u8 = 5;
    /// `refute` on a placement too large for the lower-bound argument.
    pub const BOUND_NOT_APPLICABLE: u8 = 6;
    /// `solve` ran out of node budget; the document carries a bracket.
    pub const INCONCLUSIVE: u8 = 7;
    /// Board beyond the search engine, or any other failure.
    pub const FAILURE: u8 = 8;
}

/// Environment variable capping the number of search workers.
pub const MAX_WORKERS_ENV: &str = "NO3LINE_MAX_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "no3line",
    version,
    about = "Minimum no-3-in-line placements of queens"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Compute m_k(n) with a witness placement.
    Solve {
        #[arg(long)]
        n: i32,
        #[arg(long, default_value_t = 3)]
        k: u32,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check a placement for three in a line and for goodness.
    Verify {
        #[arg(long)]
        file: PathBuf,
    },
    /// Certify that a small placement is not good.
    Refute {
        #[arg(long)]
        file: PathBuf,
    },
    /// Report the quantities of the counting argument for a placement.
    Audit {
        #[arg(long)]
        file: PathBuf,
    },
    /// Tabulate m_3(n) for n = 1..=max_n.
    Table {
        #[arg(long)]
        max_n: i32,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Draw a placement.
    Render {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct SearchArgs {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Node budget per placement size.
    #[arg(long)]
    pub node_budget: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum CommandResult {
    Solve(SearchResult),
    Verify {
        placement: Placement,
        report: VerifyReport,
    },
    Refute {
        certificate: CnCertificate,
    },
    Audit {
        report: AuditReport,
    },
    Table(Table),
    Error(Failure),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// Subcommand that failed.
    pub failed: String,
    pub kind: String,
    pub message: String,
    /// Known bounds on the minimum when a solve was cut short.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<(usize, Option<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    #[serde(flatten)]
    pub result: CommandResult,
    pub exit_code: u8,
}

/// What a command run produced; `main` only prints it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

/// Applies the worker cap from `env_value` (the raw value of
/// [`MAX_WORKERS_ENV`]) to a requested count. Unparsable or zero caps are
/// ignored.
pub fn cap_workers(requested: Option<usize>, env_value: Option<&str>) -> usize {
    let wanted =
        requested.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let cap = env_value
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&c| c > 0);
    cap.map_or(wanted, |c| wanted.min(c)).max(1)
}

fn search_config(k: u32, args: &SearchArgs) -> SearchConfig {
    let env = std::env::var(MAX_WORKERS_ENV).ok();
    SearchConfig {
        k,
        node_budget: args.node_budget,
        ..SearchConfig::default()
    }
    .with_workers(cap_workers(args.workers, env.as_deref()))
}

/// Exit status for a library error.
pub fn error_code(e: &Error) -> u8 {
    match e {
        Error::ThreeInLine(_) => exit::INVALID_PLACEMENT,
        Error::BoundNotApplicable { .. } => exit::BOUND_NOT_APPLICABLE,
        Error::Inconclusive { .. } | Error::Unresolved { .. } => exit::INCONCLUSIVE,
        Error::InvalidBoardSide(_) | Error::InvalidConfig(_) => exit::USAGE,
        Error::OutOfRange { .. } | Error::DuplicateSquare(_) => exit::INPUT,
        _ => exit::FAILURE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidBoardSide(_) => "invalid_board_side",
        Error::OutOfRange { .. } => "out_of_range",
        Error::DuplicateSquare(_) => "duplicate_square",
        Error::EmptyIntersection { .. } => "empty_intersection",
        Error::ThreeInLine(_) => "three_in_line",
        Error::BoundNotApplicable { .. } => "bound_not_applicable",
        Error::Planner(_) => "planner",
        Error::InvalidConfig(_) => "invalid_config",
        Error::Inconclusive { .. } => "inconclusive",
        Error::Unresolved { .. } => "unresolved",
        Error::UnsupportedBoard { .. } => "unsupported_board",
    }
}

fn parse_kind(e: &ParseError) -> &'static str {
    match e {
        ParseError::Syntax { .. } => "syntax",
        ParseError::InvalidSide(_) => "invalid_board_side",
        ParseError::OutOfRange { .. } => "out_of_range",
        ParseError::Duplicate { .. } => "duplicate_square",
    }
}

fn emit(result: CommandResult, code: u8, stderr: String) -> Output {
    let doc = ResultDocument {
        result,
        exit_code: code,
    };
    let mut stdout = serde_json::to_string_pretty(&doc).expect("result documents always serialize");
    stdout.push('\n');
    Output {
        stdout,
        stderr,
        code,
    }
}

fn fail(
    command: &str,
    kind: &str,
    message: String,
    code: u8,
    bracket: Option<(usize, Option<usize>)>,
) -> Output {
    let stderr = format!("error: {message}\n");
    let failure = Failure {
        failed: command.into(),
        kind: kind.into(),
        message,
        bracket,
    };
    emit(CommandResult::Error(failure), code, stderr)
}

fn library_failure(command: &str, e: &Error) -> Output {
    let bracket = match e {
        Error::Unresolved { lower, upper, .. } => Some((*lower, *upper)),
        _ => None,
    };
    fail(
        command,
        error_kind(e),
        e.to_string(),
        error_code(e),
        bracket,
    )
}

fn load(command: &str, path: &Path) -> Result<Placement, Output> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        fail(
            command,
            "io",
            format!("{}: {e}", path.display()),
            exit::INPUT,
            None,
        )
    })?;
    parse_placement(&text).map_err(|e| {
        fail(
            command,
            parse_kind(&e),
            format!("{}: {e}", path.display()),
            exit::INPUT,
            None,
        )
    })
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Solve { .. } => "solve",
            Command::Verify { .. } => "verify",
            Command::Refute { .. } => "refute",
            Command::Audit { .. } => "audit",
            Command::Table { .. } => "table",
            Command::Render { .. } => "render",
        }
    }
}

pub fn execute(command: &Command) -> Output {
    let name = command.name();
    let run = || -> Result<Output, Output> {
        Ok(match command {
            Command::Solve { n, k, search } => {
                let r = solve_min_good(*n, &search_config(*k, search))
                    .map_err(|e| library_failure(name, &e))?;
                let summary = format!(
                    "m_{}({}) = {}  ({} nodes, {:.2}s)\n{}\n",
                    r.k,
                    r.n,
                    r.minimum,
                    r.stats.nodes,
                    r.stats.elapsed.as_secs_f64(),
                    render_ascii(&r.witness)
                );
                emit(CommandResult::Solve(r), exit::SUCCESS, summary)
            }
            Command::Verify { file } => {
                let p = load(name, file)?;
                let report = verify(&p);
                let (code, summary) = match (&report.violating_line, report.good) {
                    (Some(line), _) => (
                        exit::NOT_GOOD,
                        format!("not good: three or more queens on {line}\n"),
                    ),
                    (None, true) => (exit::SUCCESS, "good\n".to_string()),
                    (None, false) => (
                        exit::NOT_GOOD,
                        format!(
                            "not good: {} addable squares, first {}\n",
                            report.addable.len(),
                            report.addable[0]
                        ),
                    ),
                };
                emit(
                    CommandResult::Verify {
                        placement: p,
                        report,
                    },
                    code,
                    summary,
                )
            }
            Command::Refute { file } => {
                let p = load(name, file)?;
                let certificate = refute_goodness(&p).map_err(|e| library_failure(name, &e))?;
                let (t1, t2) = certificate.plan.monomial;
                let summary = format!(
                    "not good: coefficient {} at x^{t1} y^{t2}, queen can be added at {}\n",
                    certificate.coefficient, certificate.witness
                );
                emit(
                    CommandResult::Refute { certificate },
                    exit::REFUTED,
                    summary,
                )
            }
            Command::Audit { file } => {
                let p = load(name, file)?;
                let report = audit(&p).map_err(|e| library_failure(name, &e))?;
                let summary = format!(
                    "q = {}, q'' = {}, c = {}, r = {}, good = {}\n",
                    report.q, report.q_dd, report.columns.count, report.rows.count, report.good
                );
                emit(CommandResult::Audit { report }, exit::SUCCESS, summary)
            }
            Command::Table { max_n, search } => {
                let table = run_table(*max_n, &search_config(3, search))
                    .map_err(|e| library_failure(name, &e))?;
                let summary = format!("{}\n", table.render());
                emit(CommandResult::Table(table), exit::SUCCESS, summary)
            }
            Command::Render { file, format } => {
                let p = load(name, file)?;
                let mut stdout = render_board(&p, *format);
                if !stdout.ends_with('\n') {
                    stdout.push('\n');
                }
                Output {
                    stdout,
                    stderr: String::new(),
                    code: exit::SUCCESS,
                }
            }
        })
    };
    run().unwrap_or_else(|failure| failure)
}
