use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("invalid regime: {0}")]
    Regime(String),
    #[error("{0}")]
    ToleranceExceeded(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 usage, 2 numerical failure, 3 invalid regime, 4 a declared comparison tolerance failed.
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code())
    }

    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Regime(_) => 3,
            CliError::ToleranceExceeded(_) => 4,
        }
    }
}

impl From<graetzkit::Error> for CliError {
    fn from(e: graetzkit::Error) -> Self {
        use graetzkit::Error as E;
        let msg = e.to_string();
        match e {
            E::RootStructure { .. } | E::DegenerateRoots { .. } | E::NonConvergence { .. } => CliError::Numerical(msg),
            E::InsulatedWithDissipation | E::InvalidRegime(_) => CliError::Regime(msg),
            _ => CliError::Usage(msg),
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

pub type CliResult<T> = Result<T, CliError>;
