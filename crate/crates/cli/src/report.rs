//! Machine-readable run reports and the exit-code policy.

use std::collections::BTreeMap;
use std::fmt;
use std::process::ExitCode;

use serde::{Deserialize, Serialize};

/// Outcome of a command, mapped onto the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Success, or every check verified.
    Ok,
    /// A check failed on a concrete instance.
    Counterexample,
}

impl Verdict {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Ok
        } else {
            Verdict::Counterexample
        }
    }

    pub fn exit_code(self) -> ExitCode {
        match self {
            Verdict::Ok => ExitCode::SUCCESS,
            Verdict::Counterexample => ExitCode::from(1),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Ok => "ok",
            Verdict::Counterexample => "counterexample",
        })
    }
}

/// A reproducible record of one run. Timing is deliberately absent so that
/// identical parameters give identical bytes; commands report it on stderr.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: serde_json::Value,
    pub verdict: Verdict,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: serde_json::Value::Null,
            verdict: Verdict::Ok,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

/// Exit code 2: malformed input or a violated precondition.
pub const EXIT_USAGE: u8 = 2;
/// Exit code 3: a resource guard refused the computation.
pub const EXIT_GUARD: u8 = 3;

/// Classifies a library error for the exit-code policy.
pub fn error_exit_code(err: &anyhow::Error) -> u8 {
    use hilb_spine::Error;
    match err.downcast_ref::<Error>() {
        Some(Error::MinorGuard { .. } | Error::DeterminantTooLarge { .. } | Error::GroundTooLarge(_)) => EXIT_GUARD,
        Some(Error::CertificateMismatch { .. } | Error::ExtremesMismatch { .. } | Error::InconsistentInitialIdeal) => 1,
        _ => EXIT_USAGE,
    }
}
