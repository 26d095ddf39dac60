use std::fmt;

use flagtri::format::ParseError;

/// Failure of a subcommand, carrying its exit code class.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or a missing or empty input location. Exit code 1.
    Usage(String),
    /// Malformed input file. Exit code 2.
    Parse(String),
    /// Valid input that fails a mathematical check or a construction. Exit code 3.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    pub fn parse_in(path: &std::path::Path, e: ParseError) -> Self {
        CliError::Parse(format!("{}: {e}", path.display()))
    }

    pub fn io(what: impl fmt::Display, e: std::io::Error) -> Self {
        CliError::Domain(format!("{what}: {e}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<flagtri::Error> for CliError {
    fn from(e: flagtri::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;
