//! Implementation of the `antimagic` command-line tool.
//!
//! The binary in `main.rs` only parses arguments; each subcommand lives in
//! [`commands`] so integration tests can drive the same code paths, and
//! [`certificate`] defines the JSON artifact the subcommands exchange.
//!
//! Process exit codes are part of the interface:
//!
//! | code | meaning |
//! |------|---------|
//! | 0    | every requested check passed |
//! | 1    | I/O or input-parse failure |
//! | 2    | invalid parameters or usage |
//! | 3    | verification failure (labeling is not what it should be) |
//! | 4    | search results disagree with a frozen fixture |
//! | 5    | search budget exhausted before completion |

use thiserror::Error;

pub mod certificate;
pub mod commands;

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_FIXTURE: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

/// A subcommand failure, classified by which exit code it maps to.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad parameters or flag combinations (exit 2).
    #[error("{0}")]
    Usage(String),
    /// I/O trouble or unparseable input (exit 1).
    #[error("{0}")]
    Runtime(String),
    /// The labeling under test failed a check (exit 3).
    #[error("{0}")]
    Verification(String),
    /// Search results contradict a frozen fixture (exit 4).
    #[error("{0}")]
    FixtureMismatch(String),
    /// A search budget ran out before the space was covered (exit 5).
    #[error("{0}")]
    BudgetExhausted(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Runtime(_) => EXIT_RUNTIME,
            CliError::Verification(_) => EXIT_VERIFY,
            CliError::FixtureMismatch(_) => EXIT_FIXTURE,
            CliError::BudgetExhausted(_) => EXIT_BUDGET,
        }
    }
}
