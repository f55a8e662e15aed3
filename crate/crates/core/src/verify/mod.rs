//! Randomized verification of the identities in [`checks`].
//!
//! Every trial of every check gets its own RNG seeded from the run seed,
//! the check name and the trial index, so a report depends only on the
//! configuration and not on scheduling.

pub mod checks;
pub mod gen;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::format::{to_value, Document};
pub use checks::{Check, CHECKS, OUT_OF_SCOPE};
pub use gen::{Gen, GenConfig, MAX_DIM};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub statement: String,
    pub trials: usize,
    pub failures: usize,
    /// First failing trial: its index, what went wrong and the inputs.
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: GenConfig,
    pub pass: bool,
    pub checks: Vec<CheckResult>,
    pub out_of_scope: Vec<String>,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub enum Selection<'a> {
    Default,
    Named(&'a [&'a str]),
}

pub fn find_check(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

fn counterexample(trial: usize, detail: String, notes: Vec<(String, Document)>) -> Value {
    let inputs: Map<String, Value> = notes
        .into_iter()
        .map(|(name, doc)| (name, to_value(&doc)))
        .collect();
    serde_json::json!({"trial": trial, "detail": detail, "inputs": inputs})
}

/// Runs one trial; `None` on success.
pub fn run_trial(check: &Check, cfg: &GenConfig, trial: usize) -> Option<Value> {
    let mut g = Gen::new(cfg, check.name, trial);
    let detail = match (check.run)(&mut g) {
        Ok(Ok(())) => return None,
        Ok(Err(detail)) => detail,
        Err(e) => format!("library error: {e}"),
    };
    Some(counterexample(trial, detail, std::mem::take(&mut g.notes)))
}

pub fn run_check(check: &Check, cfg: &GenConfig) -> CheckResult {
    let failed: Vec<(usize, Value)> = (0..cfg.trials)
        .into_par_iter()
        .filter_map(|t| run_trial(check, cfg, t).map(|v| (t, v)))
        .collect();
    CheckResult {
        name: check.name.to_string(),
        statement: check.statement.to_string(),
        trials: cfg.trials,
        failures: failed.len(),
        counterexample: failed.into_iter().min_by_key(|(t, _)| *t).map(|(_, v)| v),
    }
}

pub fn validate_config(cfg: &GenConfig) -> Result<()> {
    if cfg.ambient_dim < 2 || cfg.ambient_dim > MAX_DIM {
        return Err(Error::Dimension(format!(
            "ambient dimension {} outside 2..={MAX_DIM}",
            cfg.ambient_dim
        )));
    }
    if cfg.max_entry < 1 {
        return Err(Error::Dimension("max_entry must be at least 1".into()));
    }
    if !(cfg.angle_tol > 0.0 && cfg.angle_tol < 1e-3) {
        return Err(Error::Dimension(format!("angle tolerance {} outside (0, 1e-3)", cfg.angle_tol)));
    }
    Ok(())
}

pub fn verify_suite(cfg: &GenConfig, selection: Selection) -> Result<VerificationReport> {
    validate_config(cfg)?;
    let selected: Vec<&Check> = match selection {
        Selection::Default => CHECKS.iter().filter(|c| c.default).collect(),
        Selection::Named(names) => names
            .iter()
            .map(|n| {
                find_check(n).ok_or_else(|| Error::Parse {
                    context: "check".into(),
                    message: format!("unknown check {n:?}"),
                })
            })
            .collect::<Result<_>>()?,
    };
    let checks: Vec<CheckResult> = selected.iter().map(|c| run_check(c, cfg)).collect();
    Ok(VerificationReport {
        config: cfg.clone(),
        pass: checks.iter().all(|c| c.failures == 0),
        checks,
        out_of_scope: OUT_OF_SCOPE.iter().map(|s| s.to_string()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> GenConfig {
        GenConfig {
            ambient_dim: 3,
            trials: 6,
            seed: 7,
            ..GenConfig::default()
        }
    }

    #[test]
    fn default_suite_passes_small() {
        let report = verify_suite(&small(), Selection::Default).unwrap();
        for c in &report.checks {
            assert_eq!(c.failures, 0, "{}: {:?}", c.name, c.counterexample);
        }
        assert!(report.pass);
    }

    #[test]
    fn broken_check_is_caught() {
        let cfg = GenConfig { trials: 20, ..small() };
        let report = verify_suite(&cfg, Selection::Named(&["broken_sub_criterion"])).unwrap();
        assert!(!report.pass);
        let ce = report.checks[0].counterexample.as_ref().unwrap();
        assert!(ce["inputs"]["E"]["kind"] == "relation");
    }

    #[test]
    fn reports_are_deterministic() {
        let a = verify_suite(&small(), Selection::Named(&["sub_criterion", "angle_basics"])).unwrap();
        let b = verify_suite(&small(), Selection::Named(&["sub_criterion", "angle_basics"])).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn config_is_validated() {
        let cfg = GenConfig { ambient_dim: 9, ..small() };
        assert!(matches!(verify_suite(&cfg, Selection::Default), Err(Error::Dimension(_))));
        assert!(verify_suite(&small(), Selection::Named(&["nope"])).is_err());
    }
}
