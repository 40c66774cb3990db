use std::fmt;

use serde::{Deserialize, Serialize};

use crate::kring::Localized;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// Outcome of one named identity on one graph. `diff` renders `lhs - rhs`
/// and the status is `pass` exactly when it is zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub graph: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub diff: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckResult {
    /// Compares two ring elements.
    pub fn compare<const K: i64>(name: &str, graph: &str, lhs: &Localized<K>, rhs: &Localized<K>) -> Self {
        let diff = lhs - rhs;
        Self::build(name, graph, lhs.to_string(), rhs.to_string(), diff.to_string(), num_traits::Zero::is_zero(&diff))
    }

    /// Compares two integers (counts, dimensions, mismatch tallies).
    pub fn compare_counts(name: &str, graph: &str, lhs: i64, rhs: i64) -> Self {
        Self::build(name, graph, lhs.to_string(), rhs.to_string(), (lhs - rhs).to_string(), lhs == rhs)
    }

    /// Compares two renderings that have no subtraction; the diff lists the
    /// pair when they differ.
    pub fn compare_text(name: &str, graph: &str, lhs: String, rhs: String) -> Self {
        let same = lhs == rhs;
        let diff = if same { "0".to_string() } else { format!("{lhs} != {rhs}") };
        Self::build(name, graph, lhs, rhs, diff, same)
    }

    /// A condition that is not an equation; `diff` is `0` when it holds.
    pub fn holds(name: &str, graph: &str, lhs: String, rhs: String, ok: bool) -> Self {
        let diff = if ok { "0".to_string() } else { "violated".to_string() };
        Self::build(name, graph, lhs, rhs, diff, ok)
    }

    pub fn skip(name: &str, graph: &str, reason: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            graph: graph.to_string(),
            status: Status::Skip,
            lhs: String::new(),
            rhs: String::new(),
            diff: String::new(),
            note: Some(reason.into()),
            elapsed_ms: None,
        }
    }

    fn build(name: &str, graph: &str, lhs: String, rhs: String, diff: String, pass: bool) -> Self {
        Self {
            name: name.to_string(),
            graph: graph.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
            diff,
            note: None,
            elapsed_ms: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Marks the result failed with a reason, keeping both sides.
    pub fn fail_with(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.note = Some(reason.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}
