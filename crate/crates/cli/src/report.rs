//! JSON reports written to standard output, one object per run.

use std::process::ExitCode;

use digraph_kernels::certificate::{Certificate, Optimality};
use digraph_kernels::error::Error;
use serde::Serialize;

/// A vertex set that passed its own re-verification.
#[derive(Debug, Serialize)]
pub struct Solved {
    pub status: &'static str,
    pub set: Vec<usize>,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<u64>,
    pub certificate_checked: bool,
    pub algorithm: String,
    pub optimality: Optimality,
}

impl Solved {
    /// Refuses certificates whose checks failed, so no unchecked set is reported.
    pub fn new(cert: &Certificate, weights: Option<&[u64]>) -> Result<Self, Error> {
        if !cert.passed() {
            let failed: Vec<String> =
                cert.checks().iter().filter(|(_, ok)| !**ok).map(|(p, _)| p.to_string()).collect();
            return Err(Error::InvalidCertificate(format!("result failed re-verification: {}", failed.join(", "))));
        }
        Ok(Solved {
            status: "solved",
            set: cert.set().to_vec(),
            size: cert.len(),
            weight: weights.map(|w| cert.weight(Some(w))),
            certificate_checked: true,
            algorithm: cert.provenance().algorithm.clone(),
            optimality: cert.provenance().optimality,
        })
    }
}

/// What a subcommand produced, and how the process should exit.
pub enum Outcome {
    /// Printed as JSON, exit 0.
    Json(serde_json::Value),
    /// Proven nonexistence, printed as JSON, exit 2.
    None(serde_json::Value),
    /// A file body printed verbatim, exit 0.
    Text(String),
    /// Printed as JSON, exit 1.
    Failed(serde_json::Value),
}

impl Outcome {
    pub fn json(value: impl Serialize) -> Self {
        Outcome::Json(serde_json::to_value(value).expect("reports serialize"))
    }

    pub fn solved(cert: &Certificate, weights: Option<&[u64]>) -> Result<Self, Error> {
        Ok(Outcome::json(Solved::new(cert, weights)?))
    }

    pub fn status(status: &str) -> Self {
        Outcome::Json(serde_json::json!({ "status": status }))
    }

    pub fn emit(self, wrap_text: bool) -> ExitCode {
        match self {
            Outcome::Json(v) => {
                println!("{v}");
                ExitCode::SUCCESS
            }
            Outcome::None(v) => {
                println!("{v}");
                ExitCode::from(2)
            }
            Outcome::Failed(v) => {
                println!("{v}");
                ExitCode::from(1)
            }
            Outcome::Text(text) if wrap_text => {
                println!("{}", serde_json::json!({ "status": "ok", "file": text }));
                ExitCode::SUCCESS
            }
            Outcome::Text(text) => {
                print!("{text}");
                ExitCode::SUCCESS
            }
        }
    }
}

pub fn error(message: &str) -> ExitCode {
    println!("{}", serde_json::json!({ "status": "error", "error": message }));
    eprintln!("error: {message}");
    ExitCode::from(1)
}
