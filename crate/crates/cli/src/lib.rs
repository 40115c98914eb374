//! Command-line front end for `unruh-min`: single-point reports, sweeps and
//! figure presets as CSV, sudden-change queries and the oracle verification
//! harness.

pub mod format;
pub mod point;
pub mod presets;
pub mod settings;
pub mod sweep;
pub mod verify;

use thiserror::Error;

/// Process exit statuses.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const UNPHYSICAL: i32 = 2;
    pub const VERIFICATION: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Unphysical(String),

    #[error("verification failed")]
    Verification,

    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => exit::USAGE,
            CliError::Unphysical(_) => exit::UNPHYSICAL,
            CliError::Verification => exit::VERIFICATION,
        }
    }
}

impl From<unruh_min::Error> for CliError {
    fn from(e: unruh_min::Error) -> Self {
        use unruh_min::Error as E;
        match e {
            E::CouplingOutOfRange { .. } | E::Unphysical { .. } => CliError::Unphysical(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Parses `c1,c2,c3`.
pub fn parse_triple(s: &str) -> Result<[f64; 3], CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!("expected c1,c2,c3, got `{s}`")));
    }
    let mut out = [0.0; 3];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = parse_number(p)?;
    }
    Ok(out)
}

/// Parses a float, accepting `inf`.
pub fn parse_number(s: &str) -> Result<f64, CliError> {
    s.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("not a number: `{s}`")))
}
