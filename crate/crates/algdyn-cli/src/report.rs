//! The JSON report emitted on stdout.
//!
//! Numbers are carried as exact strings ("89", "5/2"); real-valued estimates
//! are decimal strings with six digits. Field order is fixed by declaration
//! and map keys are sorted, so a report is byte-identical across runs with
//! the same inputs and seed. Timings are opt-in (`--timings`) because they
//! would break that reproducibility.

use std::collections::BTreeMap;

use serde::Serialize;

use algdyn::algebra::AlgebraProfile;
use algdyn::degrees::{CheckOutcome, DegreeSequence};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub predictions: Vec<SequenceDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub measurements: Vec<SequenceDoc>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<VerdictDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dynamical_degree: Option<LambdaDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs: BTreeMap::new(),
            profile: None,
            predictions: Vec::new(),
            measurements: Vec::new(),
            verdicts: Vec::new(),
            dynamical_degree: None,
            timings_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<String>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Serialize)]
pub struct FlagsDoc {
    pub unitary: bool,
    pub commutative: bool,
    pub associative: bool,
    pub alternative: bool,
    pub power_associative: bool,
    pub abelian: bool,
    pub jordan: bool,
}

#[derive(Debug, Serialize)]
pub struct ProfileDoc {
    pub dim: String,
    pub flags: FlagsDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilradical_basis: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_dim: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic_delta: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic_k: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic_note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim2_class: Option<String>,
}

impl ProfileDoc {
    pub fn from_profile(p: &AlgebraProfile) -> Self {
        ProfileDoc {
            dim: p.dim.to_string(),
            flags: FlagsDoc {
                unitary: p.flags.unitary,
                commutative: p.flags.commutative,
                associative: p.flags.associative,
                alternative: p.flags.alternative,
                power_associative: p.flags.power_associative,
                abelian: p.flags.abelian,
                jordan: p.flags.jordan(),
            },
            unit: p
                .unit
                .as_ref()
                .map(|u| u.coords.iter().map(|c| c.to_string()).collect()),
            nilradical_basis: p.nilradical_basis.as_ref().map(|basis| {
                basis
                    .iter()
                    .map(|v| v.coords.iter().map(|c| c.to_string()).collect())
                    .collect()
            }),
            reduced_dim: p.reduced_dim.map(|m| m.to_string()),
            generic_delta: p.generic.map(|g| g.delta.to_string()),
            generic_k: p.generic.map(|g| g.k.to_string()),
            generic_note: p
                .generic
                .map(|_| format!("sampled, seed={}, samples={}", p.seed, p.samples)),
            dim2_class: p.dim2_class.map(|c| c.as_str().to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SequenceDoc {
    pub p: String,
    pub provenance: String,
    pub values: Vec<String>,
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub growth_rate_estimate: Option<String>,
    pub params: BTreeMap<String, String>,
}

impl SequenceDoc {
    pub fn from_sequence(s: &DegreeSequence, params: BTreeMap<String, String>) -> Self {
        SequenceDoc {
            p: s.p.to_string(),
            provenance: s.provenance.as_str().to_string(),
            values: s.values.iter().map(|v| v.to_string()).collect(),
            truncated: s.truncated,
            growth_rate_estimate: s.growth_rate_estimate().map(fmt6),
            params,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerdictDoc {
    pub pass: bool,
    pub ratio_ok: bool,
    pub slope_ok: bool,
    pub max_ratio: String,
    pub slope_gap: String,
    pub c_max: String,
    pub slope_eps: String,
    pub note: String,
}

impl VerdictDoc {
    pub fn from_outcome(o: &CheckOutcome) -> Self {
        VerdictDoc {
            pass: o.pass,
            ratio_ok: o.ratio_ok,
            slope_ok: o.slope_ok,
            max_ratio: fmt6(o.max_ratio),
            slope_gap: fmt6(o.slope_gap),
            c_max: fmt6(o.c_max),
            slope_eps: fmt6(o.slope_eps),
            note: "asymptotics compared up to constants; c_max and slope_eps are \
                   engineering thresholds, not part of the underlying statement"
                .to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LambdaDoc {
    pub p: String,
    pub lambda: String,
}

/// Six-decimal rendering used for every real-valued estimate.
pub fn fmt6(v: f64) -> String {
    format!("{v:.6}")
}
