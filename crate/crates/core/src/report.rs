use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one named property check, with witnessing data on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Fail, detail: detail.into() }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Skipped, detail: detail.into() }
    }

    /// Pass when `failures` is empty, otherwise fail listing the first few.
    pub fn from_failures(name: impl Into<String>, ok_detail: impl Into<String>, failures: &[String]) -> Self {
        if failures.is_empty() {
            Check::pass(name, ok_detail)
        } else {
            let shown: Vec<&str> = failures.iter().take(5).map(String::as_str).collect();
            let more = if failures.len() > 5 { format!(" (+{} more)", failures.len() - 5) } else { String::new() };
            Check::fail(name, format!("{}{more}", shown.join("; ")))
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}
