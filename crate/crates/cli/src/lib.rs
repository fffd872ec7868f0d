//! Command line front end: problem files, Pauli expressions and JSON reports.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod expr;
pub mod problem;

use thiserror::Error;

pub use commands::{run_command, Cli};
pub use expr::{parse_pauli_expression, parse_terms, ParseError, Term};
pub use problem::{load_problem, HamSpec, Kind, Method, Options, Problem, ProblemSpec, TargetSpec, UnitarySpec};

/// Problems with the user's input; reported with exit code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("dimension inconsistency: {0}")]
    Dimension(String),
    #[error("{what}: {source}")]
    Expression {
        what: String,
        #[source]
        source: ParseError,
    },
    #[error("usage: {0}")]
    Usage(String),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("computation failed: {0}")]
    Compute(#[from] symqsl::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}
