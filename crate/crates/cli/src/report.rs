//! Persisted JSON reports.
//!
//! A report echoes the parsed input, records the surface validation
//! findings, and carries one entry per evaluated configuration: its cusps,
//! genus, genus-feasibility gate, per-divisor verdicts and a one-word
//! summary. `obstructed` means at least one FAIL verdict; configurations
//! whose divisors were all skipped are `skipped-only`, never silently
//! "fine". Serialization round-trips losslessly, and the timestamp is the
//! only field that varies between identical runs (suppressed by
//! `--reproducible`).

use serde::{Deserialize, Serialize};

use cuspidal_core::{Status, SurfaceFinding, Verdict};

use crate::request::CuspSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Summary {
    Obstructed,
    NotObstructed,
    SkippedOnly,
}

pub fn summarize(verdicts: &[Verdict]) -> Summary {
    if verdicts.iter().any(|v| v.status.is_fail()) {
        Summary::Obstructed
    } else if verdicts.iter().any(|v| v.status.is_pass()) {
        Summary::NotObstructed
    } else {
        Summary::SkippedOnly
    }
}

/// The genus gate: `sum delta_i` against the arithmetic genus of the class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GenusFeasibility {
    pub pass: bool,
    pub configured: u64,
    pub required: i64,
}

/// Everything recorded about one configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigReport {
    pub cusps: Vec<CuspSpec>,
    pub genus: u64,
    pub genus_feasibility: GenusFeasibility,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
}

/// The complete tool output for `check` and `search`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub tool: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timestamp: Option<String>,
    pub input: serde_json::Value,
    pub surface_findings: Vec<SurfaceFinding>,
    pub configurations: Vec<ConfigReport>,
}

impl Report {
    pub fn new(input: serde_json::Value, reproducible: bool) -> Self {
        Report {
            tool: "cuspidal".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            timestamp: if reproducible {
                None
            } else {
                Some(chrono::Utc::now().to_rfc3339())
            },
            input,
            surface_findings: Vec::new(),
            configurations: Vec::new(),
        }
    }

    /// Exit code is a function of the report content only: 1 when any
    /// verdict failed, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        let failed = self
            .configurations
            .iter()
            .any(|c| c.verdicts.iter().any(|v| v.status.is_fail()));
        i32::from(failed)
    }
}

/// Render a status as one short token for text output.
pub fn status_token(status: &Status) -> String {
    match status {
        Status::Pass => "PASS".into(),
        Status::Fail => "FAIL".into(),
        Status::Skipped { reason } => format!("SKIPPED({})", reason),
    }
}
