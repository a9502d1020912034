//! Structured pass/fail records shared by every verification suite.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not be certified (e.g. a tail bound too loose); never a pass.
    Flagged,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub tag: String,
    pub params: String,
    pub status: Status,
    pub residual: f64,
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    /// A check of an exact identity: passes iff `holds`.
    pub fn exact(tag: impl Into<String>, params: impl Into<String>, holds: bool) -> Self {
        Check {
            tag: tag.into(),
            params: params.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            residual: if holds { 0.0 } else { 1.0 },
            tolerance: 0.0,
            note: None,
        }
    }

    pub fn numeric(tag: impl Into<String>, params: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        let ok = residual.is_finite() && residual <= tolerance;
        Check {
            tag: tag.into(),
            params: params.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            residual,
            tolerance,
            note: None,
        }
    }

    pub fn flagged(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Flagged;
        self.note = Some(why.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub suite: String,
    pub checks: Vec<Check>,
    /// Wall times in milliseconds keyed by check tag. Kept apart from `checks` so
    /// that identical runs produce identical check lists.
    #[serde(default)]
    pub timing: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport { schema_version: SCHEMA_VERSION, suite: suite.into(), ..Default::default() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    /// Runs `f`, records its checks and accumulates its wall time under `tag`.
    pub fn timed<F: FnOnce(&mut Vec<Check>)>(&mut self, tag: &str, f: F) {
        let t0 = Instant::now();
        let mut buf = Vec::new();
        f(&mut buf);
        *self.timing.entry(tag.to_string()).or_default() += t0.elapsed().as_secs_f64() * 1e3;
        self.checks.extend(buf);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        for (k, v) in other.timing {
            *self.timing.entry(k).or_default() += v;
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn flagged(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Flagged)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// True iff every non-flagged check passed.
    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// True iff every check passed outright.
    pub fn all_certified(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// Stable order: by tag, then parameters.
    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.tag.cmp(&b.tag).then_with(|| a.params.cmp(&b.params)));
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} checks, {} pass, {} fail, {} flagged",
            self.suite,
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Flagged)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flagged_does_not_fail_but_is_not_certified() {
        let mut r = VerificationReport::new("t");
        r.push(Check::exact("a", "", true));
        r.push(Check::numeric("b", "", 1e-3, 1e-6).flagged("tail"));
        assert!(r.passed());
        assert!(!r.all_certified());
        r.push(Check::numeric("c", "", f64::NAN, 1.0));
        assert!(!r.passed());
    }
}
