//! Verification reports: counting, counterexample payloads, rendering.

use std::time::Instant;

use serde::Serialize;

/// Outcome of one verification suite.
///
/// A counterexample is present exactly when `passed < attempted`; the first
/// failure stops the suite, so at most one payload is carried.
#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub instances: Vec<InstanceReport>,
    pub attempted: u64,
    pub passed: u64,
    pub counterexample: Option<serde_json::Value>,
    pub wall_ms: u128,
}

#[derive(Debug, Serialize)]
pub struct InstanceReport {
    pub descriptor: String,
    pub attempted: u64,
    pub passed: u64,
}

/// Accumulator threaded through a suite run.
pub struct SuiteRun {
    report: VerifyReport,
    started: Instant,
}

impl SuiteRun {
    pub fn new(suite: &str) -> SuiteRun {
        SuiteRun {
            report: VerifyReport {
                suite: suite.to_string(),
                instances: Vec::new(),
                attempted: 0,
                passed: 0,
                counterexample: None,
                wall_ms: 0,
            },
            started: Instant::now(),
        }
    }

    /// Opens a new instance block; subsequent checks count against it.
    pub fn instance(&mut self, descriptor: impl Into<String>) {
        self.report.instances.push(InstanceReport {
            descriptor: descriptor.into(),
            attempted: 0,
            passed: 0,
        });
    }

    /// Records one check.  On a failure the counterexample payload is kept
    /// and the suite should stop checking.
    pub fn check(&mut self, ok: bool, payload: impl FnOnce() -> serde_json::Value) {
        let instance = self
            .report
            .instances
            .last_mut()
            .expect("a suite opens an instance before checking");
        instance.attempted += 1;
        self.report.attempted += 1;
        if ok {
            instance.passed += 1;
            self.report.passed += 1;
        } else if self.report.counterexample.is_none() {
            self.report.counterexample = Some(payload());
        }
    }

    pub fn failed(&self) -> bool {
        self.report.counterexample.is_some()
    }

    pub fn finish(mut self) -> VerifyReport {
        self.report.wall_ms = self.started.elapsed().as_millis();
        self.report
    }
}

impl VerifyReport {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "suite {}: {} instances, {}/{} checks passed ({} ms)\n",
            self.suite,
            self.instances.len(),
            self.passed,
            self.attempted,
            self.wall_ms
        );
        for i in &self.instances {
            out.push_str(&format!("  {}: {}/{}\n", i.descriptor, i.passed, i.attempted));
        }
        if let Some(payload) = &self.counterexample {
            out.push_str("counterexample:\n");
            out.push_str(&serde_json::to_string_pretty(payload).expect("payloads serialize"));
            out.push('\n');
        }
        out
    }
}
