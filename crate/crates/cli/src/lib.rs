//! Library side of the `trisect` command: diagram documents, the verbs, and
//! the exit-code contract (0 success, 1 domain or validation failure, 2 parse,
//! usage or I/O failure).

pub mod commands;
pub mod document;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use trisect_core::{Equivalence, Execution};

use crate::commands::{GraphFormat, Report};
use crate::document::{parse_document, Diagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// Unreadable file, malformed document or bad argument.
    #[error("{0}")]
    Parse(String),
    /// A well-formed input the domain rejects.
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Invalid(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "trisect",
    version,
    about = "Homological (2,0)-trisection diagrams"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every diagram invariant; errors are listed one per line.
    Validate { path: PathBuf },
    /// Print I(V).
    Invariant { path: PathBuf },
    /// Apply a move word such as D2,D2' and write the resulting diagram.
    Move {
        path: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the six vertical 3-manifolds.
    SixTuple { path: PathBuf },
    /// Match the six-tuple against the five families.
    Classify {
        path: PathBuf,
        #[arg(long)]
        oriented: bool,
    },
    /// Report the hypotheses and certify V, sigma2 V, sigma2^2 V.
    CheckTheorem { path: PathBuf },
    /// Breadth-first orbit under the move group.
    Orbit {
        path: PathBuf,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Compare L(p,q) with L(p',q').
    Lens {
        #[arg(allow_negative_numbers = true)]
        p: String,
        #[arg(allow_negative_numbers = true)]
        q: String,
        #[arg(allow_negative_numbers = true)]
        p2: String,
        #[arg(allow_negative_numbers = true)]
        q2: String,
        #[arg(long)]
        oriented: bool,
    },
}

/// What to print and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

pub fn load(path: &PathBuf) -> Result<Diagram, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_document(&text)
}

fn mode(oriented: bool) -> Equivalence {
    if oriented {
        Equivalence::Oriented
    } else {
        Equivalence::Unoriented
    }
}

fn finish(report: Report, json: bool) -> Outcome {
    let stdout = if json {
        let mut s = serde_json::to_string_pretty(&report.json).expect("serializable report");
        s.push('\n');
        s
    } else {
        report.text
    };
    Outcome {
        stdout,
        code: if report.ok { 0 } else { 1 },
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let report = match &cli.command {
        Command::Validate { path } => commands::validate(&load(path)?),
        Command::Invariant { path } => commands::invariant(&load(path)?)?,
        Command::Move { path, word, out } => {
            let rendered = commands::apply_word(&load(path)?, word)?;
            return match out {
                Some(target) => {
                    std::fs::write(target, rendered).map_err(|e| {
                        CliError::Parse(format!("cannot write {}: {e}", target.display()))
                    })?;
                    Ok(Outcome {
                        stdout: String::new(),
                        code: 0,
                    })
                }
                None => Ok(Outcome {
                    stdout: rendered,
                    code: 0,
                }),
            };
        }
        Command::SixTuple { path } => commands::six_tuple_report(&load(path)?)?,
        Command::Classify { path, oriented } => {
            commands::classify_report(&load(path)?, mode(*oriented))?
        }
        Command::CheckTheorem { path } => commands::check_theorem(&load(path)?)?,
        Command::Orbit {
            path,
            depth,
            format,
        } => {
            let format = match format {
                FormatArg::Text => GraphFormat::Text,
                FormatArg::Dot => GraphFormat::Dot,
            };
            commands::orbit_report(&load(path)?, *depth, format, Execution::default())?
        }
        Command::Lens {
            p,
            q,
            p2,
            q2,
            oriented,
        } => commands::lens_report([p, q, p2, q2], mode(*oriented))?,
    };
    Ok(finish(report, cli.json))
}
