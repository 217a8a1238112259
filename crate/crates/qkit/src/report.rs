//! Structured check reports: one record per verified law instance,
//! serialized as JSON lines. A report is clean when nothing is violated;
//! `noted` records carry informational witnesses (e.g. outcomes of
//! counterexample searches) and do not count as failures.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Violated,
    Noted,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn pass(&mut self, check: &str, instance: &str) {
        self.records.push(CheckRecord {
            check: check.into(),
            instance: instance.into(),
            status: Status::Passed,
            witness: None,
        });
    }

    pub fn violate(&mut self, check: &str, instance: &str, witness: serde_json::Value) {
        self.records.push(CheckRecord {
            check: check.into(),
            instance: instance.into(),
            status: Status::Violated,
            witness: Some(witness),
        });
    }

    pub fn note(&mut self, check: &str, instance: &str, witness: serde_json::Value) {
        self.records.push(CheckRecord {
            check: check.into(),
            instance: instance.into(),
            status: Status::Noted,
            witness: Some(witness),
        });
    }

    /// Records a pass or a witness-free violation.
    pub fn check(&mut self, check: &str, instance: &str, ok: bool) {
        if ok {
            self.pass(check, instance);
        } else {
            self.violate(check, instance, serde_json::Value::Null);
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn violations(&self) -> Vec<&CheckRecord> {
        self.records
            .iter()
            .filter(|r| r.status == Status::Violated)
            .collect()
    }

    pub fn is_clean(&self) -> bool {
        self.violations().is_empty()
    }

    pub fn to_json_lines(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("report records serialize"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn notes_do_not_count_as_failures() {
        let mut r = Report::new();
        r.pass("a", "x");
        r.note("b", "y", serde_json::json!({"found": false}));
        assert!(r.is_clean());
        r.violate("c", "z", serde_json::json!("w"));
        assert!(!r.is_clean());
        assert_eq!(r.violations().len(), 1);
        assert_eq!(r.to_json_lines().lines().count(), 3);
    }
}
