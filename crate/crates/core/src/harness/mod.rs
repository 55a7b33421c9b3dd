//! Randomized property suites with reproducible seeds and replayable counterexamples.

pub mod gen;
mod suites;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::spectrum::{FloatConfig, Mode};
pub use gen::{GbrKind, Gen};
pub use suites::{suite_ids, REQUIRED_SUITES};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GeneratorConfig {
    pub seed: u64,
    pub max_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<usize>,
    pub entry_bound: u64,
    pub trials: usize,
    /// Overrides both float tolerances.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub float_eps: Option<f64>,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig { seed: 0, max_dim: 6, kappa: None, entry_bound: 8, trials: 500, float_eps: None }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_dim == 0 {
            return Err(Error::PreconditionUnmet("maxDim must be at least 1".into()));
        }
        if let Some(k) = self.kappa {
            if k > self.max_dim {
                return Err(Error::PreconditionUnmet(format!("kappa {k} exceeds maxDim {}", self.max_dim)));
            }
        }
        Ok(())
    }

    /// Float mode for the spectral checks inside suites.
    pub fn mode(&self) -> Mode {
        match self.float_eps {
            Some(e) => Mode::Float(FloatConfig { eps: e, kernel_eps: e }),
            None => Mode::float(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "HYPOTHESIS-STARVED")]
    HypothesisStarved,
}

/// Everything needed to regenerate and re-check one failing trial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub suite: String,
    pub seed: u64,
    pub trial: usize,
    pub max_dim: usize,
    pub entry_bound: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub float_eps: Option<f64>,
    pub message: String,
    /// The offending instance as an instance document.
    pub instance: Value,
}

impl Counterexample {
    fn config(&self) -> GeneratorConfig {
        GeneratorConfig {
            seed: self.seed,
            max_dim: self.max_dim,
            kappa: self.kappa,
            entry_bound: self.entry_bound,
            trials: 1,
            float_eps: self.float_eps,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PropertyReport {
    pub suite_id: String,
    pub trials: usize,
    pub failures: usize,
    /// Trials whose hypotheses held.
    pub applicable: usize,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<Counterexample>,
    pub elapsed_ms: u64,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// The report without timing, which is the part fixed by the inputs.
    pub fn deterministic_json(&self) -> String {
        let mut r = self.clone();
        r.elapsed_ms = 0;
        r.to_json_line()
    }
}

/// Result of one trial.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Pass,
    /// Hypotheses did not hold; nothing was asserted.
    Vacuous,
    Fail {
        message: String,
        instance: Value,
    },
}

/// Wall-clock timer; browsers have no monotonic clock in std, so it reads zero there.
struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    fn millis(&self) -> u64 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.start.elapsed().as_millis() as u64;
        #[cfg(target_arch = "wasm32")]
        0
    }
}

fn run_trial(id: &str, cfg: &GeneratorConfig, trial: usize) -> Result<Outcome> {
    let body = suites::lookup(id).ok_or_else(|| Error::UnknownSuite(id.into()))?;
    let mut g = Gen::for_trial(cfg, trial);
    (body.run)(&mut g)
}

#[cfg(feature = "parallel")]
fn run_all(id: &str, cfg: &GeneratorConfig, trials: usize) -> Vec<Result<Outcome>> {
    use rayon::prelude::*;
    (0..trials).into_par_iter().map(|t| run_trial(id, cfg, t)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_all(id: &str, cfg: &GeneratorConfig, trials: usize) -> Vec<Result<Outcome>> {
    (0..trials).map(|t| run_trial(id, cfg, t)).collect()
}

fn summarize(id: &str, cfg: &GeneratorConfig, outcomes: Vec<(usize, Outcome)>, started: Stopwatch) -> PropertyReport {
    let trials = outcomes.len();
    let mut failures = 0;
    let mut applicable = 0;
    let mut first = None;
    for (trial, o) in outcomes {
        match o {
            Outcome::Pass => applicable += 1,
            Outcome::Vacuous => {}
            Outcome::Fail { message, instance } => {
                applicable += 1;
                failures += 1;
                if first.is_none() {
                    first = Some(Counterexample {
                        suite: id.into(),
                        seed: cfg.seed,
                        trial,
                        max_dim: cfg.max_dim,
                        entry_bound: cfg.entry_bound,
                        kappa: cfg.kappa,
                        float_eps: cfg.float_eps,
                        message,
                        instance,
                    });
                }
            }
        }
    }
    let status = if failures > 0 {
        Status::Fail
    } else if trials == 0 || 2 * applicable <= trials {
        Status::HypothesisStarved
    } else {
        Status::Pass
    };
    PropertyReport {
        suite_id: id.into(),
        trials,
        failures,
        applicable,
        status,
        first_counterexample: first,
        elapsed_ms: started.millis(),
    }
}

/// Runs a registered suite; identical inputs give identical reports apart from `elapsedMs`.
pub fn run_suite(id: &str, cfg: &GeneratorConfig) -> Result<PropertyReport> {
    cfg.validate()?;
    let body = suites::lookup(id).ok_or_else(|| Error::UnknownSuite(id.into()))?;
    let started = Stopwatch::start();
    let trials = body.fixed_trials.unwrap_or(cfg.trials);
    let outcomes = run_all(id, cfg, trials).into_iter().collect::<Result<Vec<_>>>()?;
    let report = summarize(id, cfg, outcomes.into_iter().enumerate().collect(), started);
    if let Some(c) = &report.first_counterexample {
        // A counterexample is only reported once it re-fails identically.
        match run_trial(id, cfg, c.trial)? {
            Outcome::Fail { message, .. } if message == c.message => {}
            _ => return Err(Error::RouteMismatch(format!("counterexample for {id} did not replay"))),
        }
    }
    Ok(report)
}

/// Regenerates the counterexample's trial and checks it again.
pub fn replay(c: &Counterexample) -> Result<PropertyReport> {
    let cfg = c.config();
    cfg.validate()?;
    let started = Stopwatch::start();
    let outcome = run_trial(&c.suite, &cfg, c.trial)?;
    Ok(summarize(&c.suite, &cfg, vec![(c.trial, outcome)], started))
}
