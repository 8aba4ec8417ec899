//! Command-line front end for the tree-approximation library: input
//! parsing, Newick/DOT/JSON emission, and the verification harness.

pub mod commands;
pub mod dot;
pub mod formats;
pub mod newick;
pub mod report;

/// Exit codes: 0 success, 1 certified bound violated (an implementation
/// bug), 2 unreadable or malformed input, 3 invariant violation in the data.
pub const EXIT_OK: i32 = 0;
pub const EXIT_BOUND_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    /// Malformed input with a human-readable location.
    Parse(String),
    /// Well-formed input describing invalid data (non-metric, cyclic order,
    /// disconnected graph, ...).
    Invariant(String),
    /// A certified inequality failed, naming the witness.
    BoundFailure(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Invariant(msg) => write!(f, "invariant violation: {msg}"),
            CliError::BoundFailure(msg) => write!(f, "bound failure: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Invariant(_) => EXIT_INVARIANT,
            CliError::BoundFailure(_) => EXIT_BOUND_FAILURE,
        }
    }
}
