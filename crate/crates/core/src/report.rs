//! Verification records shared by every identity sweep.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::par;

/// Witnesses kept per identity; the total count is always exact.
pub const MAX_WITNESSES: usize = 5;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IdentityRecord {
    pub identity: String,
    /// The formula being checked, so a failure can be traced to the law it breaks.
    pub anchor: String,
    pub instances_checked: u64,
    pub failure_count: u64,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
}

impl IdentityRecord {
    pub fn new(identity: &str, anchor: &str) -> Self {
        IdentityRecord {
            identity: identity.into(),
            anchor: anchor.into(),
            instances_checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            mode: None,
        }
    }

    /// Run `check` over every item; `Some(witness)` marks a failure.
    pub fn sweep<T: Sync>(
        identity: &str,
        anchor: &str,
        items: &[T],
        check: impl Fn(&T) -> Option<String> + Sync + Send,
    ) -> Self {
        let mut rec = Self::new(identity, anchor);
        let fails = par::filter_map(items, check);
        rec.instances_checked = items.len() as u64;
        rec.failure_count = fails.len() as u64;
        rec.failures = fails.into_iter().take(MAX_WITNESSES).collect();
        rec
    }

    /// Single yes/no instance.
    pub fn single(identity: &str, anchor: &str, failure: Option<String>) -> Self {
        let mut rec = Self::new(identity, anchor);
        rec.instances_checked = 1;
        if let Some(w) = failure {
            rec.failure_count = 1;
            rec.failures.push(w);
        }
        rec
    }

    pub fn with_mode(mut self, mode: impl Into<String>) -> Self {
        self.mode = Some(mode.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Merge another record's counts into this one.
    pub fn absorb(&mut self, o: IdentityRecord) {
        self.instances_checked += o.instances_checked;
        self.failure_count += o.failure_count;
        for w in o.failures {
            if self.failures.len() < MAX_WITNESSES {
                self.failures.push(w);
            }
        }
    }
}

pub fn all_passed(records: &[IdentityRecord]) -> bool {
    records.iter().all(IdentityRecord::passed)
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Everything one command checked, in a stable JSON shape.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub command: Vec<String>,
    pub fixtures: BTreeMap<String, String>,
    pub truncation: BTreeMap<String, usize>,
    pub status: Status,
    pub records: Vec<IdentityRecord>,
    pub facts: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub duration_ms: u64,
}

impl VerificationReport {
    pub fn new(command: Vec<String>) -> Self {
        VerificationReport {
            command,
            fixtures: BTreeMap::new(),
            truncation: BTreeMap::new(),
            status: Status::Pass,
            records: Vec::new(),
            facts: BTreeMap::new(),
            seed: None,
            duration_ms: 0,
        }
    }

    pub fn fixture(&mut self, kind: &str, name: impl Into<String>) -> &mut Self {
        self.fixtures.insert(kind.into(), name.into());
        self
    }

    pub fn truncate(&mut self, name: &str, value: usize) -> &mut Self {
        self.truncation.insert(name.into(), value);
        self
    }

    pub fn fact(&mut self, name: &str, value: impl Serialize) -> &mut Self {
        self.facts.insert(name.into(), serde_json::to_value(value).expect("serializable fact"));
        self
    }

    pub fn extend(&mut self, recs: impl IntoIterator<Item = IdentityRecord>) -> &mut Self {
        self.records.extend(recs);
        self
    }

    /// Sets status and duration.
    pub fn finish(&mut self, elapsed: Duration) -> &mut Self {
        self.status = if all_passed(&self.records) { Status::Pass } else { Status::Fail };
        self.duration_ms = elapsed.as_millis() as u64;
        self
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityRecord> {
        self.records.iter().filter(|r| !r.passed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_capped_counts_exact() {
        let items: Vec<u32> = (0..100).collect();
        let rec = IdentityRecord::sweep("odd", "x even", &items, |x| (x % 2 == 1).then(|| x.to_string()));
        assert_eq!(rec.instances_checked, 100);
        assert_eq!(rec.failure_count, 50);
        assert_eq!(rec.failures, vec!["1", "3", "5", "7", "9"]);
        assert!(!rec.passed());
    }

    #[test]
    fn status_follows_records() {
        let mut r = VerificationReport::new(vec!["x".into()]);
        r.extend([IdentityRecord::single("a", "a = a", None)]).finish(Duration::from_millis(3));
        assert_eq!(r.status, Status::Pass);
        r.extend([IdentityRecord::single("b", "b = c", Some("b".into()))]).finish(Duration::ZERO);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.failures().count(), 1);
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["status"], "fail");
        assert!(j.get("seed").is_none());
    }
}
