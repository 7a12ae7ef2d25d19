use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRecord {
    pub id: String,
    pub description: String,
    pub anchor: String,
    pub status: Status,
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn push(
        &mut self,
        id: &str,
        description: &str,
        anchor: &str,
        status: Status,
        detail: Vec<String>,
    ) {
        self.records.push(CheckRecord {
            id: id.to_string(),
            description: description.to_string(),
            anchor: anchor.to_string(),
            status,
            detail,
        });
    }

    pub fn check(
        &mut self,
        id: &str,
        description: &str,
        anchor: &str,
        ok: bool,
        detail: Vec<String>,
    ) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(id, description, anchor, status, detail);
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    /// One JSON object per line.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Self, serde_json::Error> {
        let records = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(serde_json::from_str)
            .collect::<Result<_, _>>()?;
        Ok(VerificationReport { records })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "[{}] {}: {}", r.status, r.id, r.description)?;
            for d in &r.detail {
                writeln!(f, "    {d}")?;
            }
        }
        writeln!(
            f,
            "{} passed, {} failed, {} informational",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Info)
        )
    }
}
