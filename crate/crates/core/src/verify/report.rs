use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default)]
    pub metadata: BTreeMap<String, Value>,
}

impl CheckOutcome {
    /// `pass ⇔ residual ≤ tolerance`.
    pub fn new(residual: f64, tolerance: f64) -> Self {
        Self {
            residual,
            tolerance,
            pass: residual <= tolerance,
            error: None,
            metadata: BTreeMap::new(),
        }
    }

    /// A check that could not be evaluated.
    pub fn failed(error: &Error, tolerance: f64) -> Self {
        Self {
            residual: f64::NAN,
            tolerance,
            pass: false,
            error: Some(error.to_string()),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.metadata.insert(key.to_string(), value.into());
        self
    }
}

/// Check name → outcome, serialized in key order.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub checks: BTreeMap<String, CheckOutcome>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        Self { subject: subject.into(), checks: BTreeMap::new() }
    }

    pub fn insert(&mut self, name: &str, outcome: CheckOutcome) {
        self.checks.insert(name.to_string(), outcome);
    }

    /// Stores `Ok` outcomes as-is and errors as failed checks.
    pub fn record(&mut self, name: &str, tolerance: f64, outcome: Result<CheckOutcome>) {
        let o = outcome.unwrap_or_else(|e| CheckOutcome::failed(&e, tolerance));
        self.insert(name, o);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|c| c.pass)
    }

    /// True if any check failed to evaluate (as opposed to exceeding its tolerance).
    pub fn has_errors(&self) -> bool {
        self.checks.values().any(|c| c.error.is_some())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}

/// Default tolerances of the verification checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub ode: f64,
    pub a_spread: f64,
    pub dynamical: f64,
    pub darcy: f64,
    pub corner_relative: f64,
    pub integral: f64,
    pub jump: f64,
    pub m_plus: f64,
    pub moments: f64,
    pub reflection: f64,
    pub capacity_imag: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            ode: 1e-7,
            a_spread: 1e-6,
            dynamical: 1e-7,
            darcy: 1e-6,
            corner_relative: 0.02,
            integral: 1e-6,
            jump: 1e-6,
            m_plus: 1e-3,
            moments: 1e-4,
            reflection: 1e-10,
            capacity_imag: 1e-8,
        }
    }
}

impl Tolerances {
    pub const NAMES: [&'static str; 11] = [
        "ode",
        "a_spread",
        "dynamical",
        "darcy",
        "corner_relative",
        "integral",
        "jump",
        "m_plus",
        "moments",
        "reflection",
        "capacity_imag",
    ];

    fn slot(&mut self, name: &str) -> Option<&mut f64> {
        Some(match name {
            "ode" => &mut self.ode,
            "a_spread" => &mut self.a_spread,
            "dynamical" => &mut self.dynamical,
            "darcy" => &mut self.darcy,
            "corner_relative" => &mut self.corner_relative,
            "integral" => &mut self.integral,
            "jump" => &mut self.jump,
            "m_plus" => &mut self.m_plus,
            "moments" => &mut self.moments,
            "reflection" => &mut self.reflection,
            "capacity_imag" => &mut self.capacity_imag,
            _ => return None,
        })
    }

    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value >= 0.0) {
            return Err(Error::invalid("tolerance", format!("{name}={value} must be a non-negative number")));
        }
        match self.slot(name) {
            Some(s) => {
                *s = value;
                Ok(())
            }
            None => Err(Error::invalid(
                "tolerance",
                format!("unknown tolerance `{name}`; known: {}", Self::NAMES.join(", ")),
            )),
        }
    }
}
