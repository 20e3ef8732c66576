//! Error channel with the process exit-code contract: 1 for input errors,
//! 2 for inconsistent exact sequences, 3 for verification mismatches.
//! Underdetermined solver outcomes are reported on stdout and exit 0.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Inconsistent(String),
    VerifyMismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Inconsistent(_) => 2,
            CliError::VerifyMismatch(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {}", msg),
            CliError::Inconsistent(msg) => write!(f, "inconsistent exact sequence: {}", msg),
            CliError::VerifyMismatch(msg) => write!(f, "verification mismatch: {}", msg),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_cover_all_error_classes() {
        assert_eq!(CliError::Input(String::new()).exit_code(), 1);
        assert_eq!(CliError::Inconsistent(String::new()).exit_code(), 2);
        assert_eq!(CliError::VerifyMismatch(String::new()).exit_code(), 3);
    }

    #[test]
    fn messages_name_their_class() {
        assert!(format!("{}", CliError::VerifyMismatch("x".into())).contains("mismatch"));
        assert!(format!("{}", CliError::Inconsistent("x".into())).contains("inconsistent"));
        assert!(format!("{}", CliError::Input("x".into())).starts_with("input error"));
    }
}
