//! Named verification suites. Each suite runs a family of exact or
//! toleranced checks, records failures as serialized witnesses, and reports
//! deterministically for a fixed seed.

mod algebra;
mod analysis;
mod metric;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{AlgebraError, Result};
use crate::random::trial_rng;

/// Witnesses kept in a report; the total failure count is always reported.
pub const MAX_REPORT_WITNESSES: usize = 20;
pub const MAX_TRIALS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteName {
    LieAxioms,
    Adjoint,
    Derivations,
    VfieldBracket,
    DetExpTr,
    PadicExp,
    UltrametricNorms,
    FactorialValuation,
    Quaternion,
    PnormInequalities,
}

impl SuiteName {
    pub const ALL: [SuiteName; 10] = [
        SuiteName::LieAxioms,
        SuiteName::Adjoint,
        SuiteName::Derivations,
        SuiteName::VfieldBracket,
        SuiteName::DetExpTr,
        SuiteName::PadicExp,
        SuiteName::UltrametricNorms,
        SuiteName::FactorialValuation,
        SuiteName::Quaternion,
        SuiteName::PnormInequalities,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::LieAxioms => "lie-axioms",
            SuiteName::Adjoint => "adjoint",
            SuiteName::Derivations => "derivations",
            SuiteName::VfieldBracket => "vfield-bracket",
            SuiteName::DetExpTr => "det-exp-tr",
            SuiteName::PadicExp => "padic-exp",
            SuiteName::UltrametricNorms => "ultrametric-norms",
            SuiteName::FactorialValuation => "factorial-valuation",
            SuiteName::Quaternion => "quaternion",
            SuiteName::PnormInequalities => "pnorm-inequalities",
        }
    }

    /// Suites that draw random inputs and therefore need a seed.
    pub fn is_randomized(self) -> bool {
        !matches!(self, SuiteName::LieAxioms | SuiteName::FactorialValuation)
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = Self::ALL.iter().map(|n| n.as_str()).collect();
            AlgebraError::InvalidArgument(format!("unknown suite '{s}' (expected one of: {})", names.join(", ")))
        })
    }
}

/// Which suite to run and with which parameters; unset values take the
/// suite's defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteSpec {
    pub name: SuiteName,
    pub dim: Option<usize>,
    pub prime: Option<u64>,
    pub precision: Option<u32>,
    pub truncation: Option<u32>,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub mode: Option<String>,
    pub algebras: Vec<String>,
}

impl SuiteSpec {
    pub fn new(name: SuiteName) -> Self {
        Self {
            name,
            dim: None,
            prime: None,
            precision: None,
            truncation: None,
            seed: None,
            trials: None,
            mode: None,
            algebras: Vec::new(),
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn trials(mut self, trials: u64) -> Self {
        self.trials = Some(trials);
        self
    }

    pub fn dim(mut self, dim: usize) -> Self {
        self.dim = Some(dim);
        self
    }

    pub fn prime(mut self, prime: u64) -> Self {
        self.prime = Some(prime);
        self
    }

    pub fn precision(mut self, precision: u32) -> Self {
        self.precision = Some(precision);
        self
    }

    pub fn truncation(mut self, truncation: u32) -> Self {
        self.truncation = Some(truncation);
        self
    }

    pub fn mode(mut self, mode: &str) -> Self {
        self.mode = Some(mode.to_string());
        self
    }

    pub fn algebra(mut self, name: &str) -> Self {
        self.algebras.push(name.to_string());
        self
    }
}

/// One named family of cases inside a suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub params: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    /// Failure witnesses, sorted canonically and capped.
    pub witnesses: Vec<Value>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }

    /// Canonical JSON value; keys are sorted and timing is left out so that
    /// identical runs serialize identically.
    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.passed(), "cases": c.cases, "failures": c.failures}))
            .collect();
        json!({
            "suite": self.suite.as_str(),
            "pass": self.passed(),
            "params": self.params,
            "checks": checks,
            "failures": self.failures(),
            "witness": self.witnesses,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

impl FromStr for OutputFormat {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "text" => Ok(OutputFormat::Text),
            other => Err(AlgebraError::InvalidArgument(format!(
                "unknown format '{other}' (json, text)"
            ))),
        }
    }
}

/// Render a report. JSON is a single line with sorted keys.
pub fn emit_report(report: &SuiteReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!("{}\n", report.to_json()),
        OutputFormat::Text => {
            let mut out = format!(
                "suite {}: {} ({} checks, {} failures, {:.3} s)\n",
                report.suite,
                if report.passed() { "PASS" } else { "FAIL" },
                report.checks.len(),
                report.failures(),
                report.elapsed.as_secs_f64()
            );
            let params: Vec<String> = report.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("params: {}\n", params.join(" ")));
            for c in &report.checks {
                let tag = if c.passed() { "ok  " } else { "FAIL" };
                out.push_str(&format!(
                    "  [{tag}] {} ({} cases, {} failures)\n",
                    c.name, c.cases, c.failures
                ));
            }
            if !report.witnesses.is_empty() {
                out.push_str("witnesses:\n");
                for w in &report.witnesses {
                    out.push_str(&format!("  {w}\n"));
                }
            }
            out
        }
    }
}

/// Accumulates check outcomes and witnesses.
#[derive(Debug, Default)]
pub(crate) struct Collector {
    checks: Vec<Check>,
    witnesses: Vec<Value>,
}

impl Collector {
    fn check_mut(&mut self, name: &str) -> &mut Check {
        if let Some(i) = self.checks.iter().position(|c| c.name == name) {
            return &mut self.checks[i];
        }
        self.checks.push(Check {
            name: name.to_string(),
            cases: 0,
            failures: 0,
        });
        self.checks.last_mut().expect("just pushed")
    }

    /// Count one case; on failure store the witness built by `witness`.
    pub(crate) fn record(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> Value) {
        let c = self.check_mut(name);
        c.cases += 1;
        if !ok {
            c.failures += 1;
            let mut w = witness();
            if let Value::Object(map) = &mut w {
                map.insert("check".into(), json!(name));
            }
            self.witnesses.push(w);
        }
    }

    /// Record a case whose computation may itself fail.
    pub(crate) fn record_result(&mut self, name: &str, outcome: Result<bool>, witness: impl FnOnce() -> Value) {
        match outcome {
            Ok(ok) => self.record(name, ok, witness),
            Err(e) => self.record(name, false, || {
                let mut w = witness();
                if let Value::Object(map) = &mut w {
                    map.insert("error".into(), json!(e.to_string()));
                }
                w
            }),
        }
    }

    fn merge(&mut self, other: Collector) {
        for c in other.checks {
            let mine = self.check_mut(&c.name);
            mine.cases += c.cases;
            mine.failures += c.failures;
        }
        self.witnesses.extend(other.witnesses);
    }

    /// Run `trials` independent trials in parallel. Trial `t` draws from
    /// stream `stream + t`; outcomes are merged in trial order.
    pub(crate) fn trials<F>(&mut self, seed: u64, stream: u64, trials: u64, f: F)
    where
        F: Fn(&mut ChaCha8Rng, u64, &mut Collector) + Sync,
    {
        let parts: Vec<Collector> = (0..trials)
            .into_par_iter()
            .map(|t| {
                let mut c = Collector::default();
                let mut rng = trial_rng(seed, stream + t);
                f(&mut rng, t, &mut c);
                c
            })
            .collect();
        for p in parts {
            self.merge(p);
        }
    }

    fn finish(mut self, suite: SuiteName, params: BTreeMap<String, Value>, elapsed: Duration) -> SuiteReport {
        self.witnesses.sort_by_cached_key(|w| w.to_string());
        self.witnesses.truncate(MAX_REPORT_WITNESSES);
        SuiteReport {
            suite,
            params,
            checks: self.checks,
            witnesses: self.witnesses,
            elapsed,
        }
    }
}

/// Stream offset separating the sub-checks of one suite.
pub(crate) const STREAM_STRIDE: u64 = 1 << 32;

/// Effective parameters after defaults and range checks.
pub(crate) struct Params {
    map: BTreeMap<String, Value>,
}

impl Params {
    fn new() -> Self {
        Self { map: BTreeMap::new() }
    }

    pub(crate) fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.map.insert(key.to_string(), v.into());
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::InvalidArgument(msg.into())
}

pub(crate) fn in_range<T: PartialOrd + fmt::Display + Copy>(what: &str, v: T, lo: T, hi: T) -> Result<T> {
    if v < lo || v > hi {
        Err(usage(format!("{what} must lie in {lo}..={hi}, got {v}")))
    } else {
        Ok(v)
    }
}

/// Run a suite. Parameter problems are reported as `InvalidArgument`.
pub fn run_suite(spec: &SuiteSpec) -> Result<SuiteReport> {
    if spec.name.is_randomized() && spec.seed.is_none() {
        return Err(usage(format!("suite {} is randomized and needs --seed", spec.name)));
    }
    if let Some(t) = spec.trials {
        in_range("trials", t, 1, MAX_TRIALS)?;
    }
    if let Some(p) = spec.prime {
        crate::scalars::check_prime(p).map_err(|e| usage(e.to_string()))?;
    }
    let start = Instant::now();
    let mut params = Params::new();
    if let Some(seed) = spec.seed {
        params.set("seed", seed);
    }
    let mut c = Collector::default();
    match spec.name {
        SuiteName::LieAxioms => algebra::lie_axioms(spec, &mut params, &mut c)?,
        SuiteName::Adjoint => algebra::adjoint(spec, &mut params, &mut c)?,
        SuiteName::Derivations => algebra::derivations(spec, &mut params, &mut c)?,
        SuiteName::VfieldBracket => analysis::vfield_bracket(spec, &mut params, &mut c)?,
        SuiteName::DetExpTr => analysis::det_exp_tr(spec, &mut params, &mut c)?,
        SuiteName::PadicExp => analysis::padic_exp(spec, &mut params, &mut c)?,
        SuiteName::FactorialValuation => analysis::factorial_valuation(spec, &mut params, &mut c)?,
        SuiteName::UltrametricNorms => metric::ultrametric_norms(spec, &mut params, &mut c)?,
        SuiteName::Quaternion => metric::quaternion(spec, &mut params, &mut c)?,
        SuiteName::PnormInequalities => metric::pnorm_inequalities(spec, &mut params, &mut c)?,
    }
    Ok(c.finish(spec.name, params.map, start.elapsed()))
}

/// Reject parameters a suite does not use, so typos surface as usage errors.
pub(crate) fn reject_unused(spec: &SuiteSpec, allowed: &[&str]) -> Result<()> {
    let given = [
        ("dim", spec.dim.is_some()),
        ("prime", spec.prime.is_some()),
        ("precision", spec.precision.is_some()),
        ("truncation", spec.truncation.is_some()),
        ("mode", spec.mode.is_some()),
        ("algebra", !spec.algebras.is_empty()),
    ];
    for (name, set) in given {
        if set && !allowed.contains(&name) {
            return Err(usage(format!("suite {} does not take --{name}", spec.name)));
        }
    }
    Ok(())
}
