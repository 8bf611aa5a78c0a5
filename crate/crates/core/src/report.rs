//! JSONL report records. Each line is one [`ReportRecord`]; a sweep ends
//! with a summary record whose `check_name` is `"summary"`.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::SetFamily;
use crate::format::{from_compact, to_compact, ParseError};
use crate::verify::{CheckName, CheckResult, Params, Summary, Verdict, Witness};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed record: {0}")]
    Json(#[from] serde_json::Error),
    #[error("record family: {0}")]
    Family(#[from] ParseError),
    #[error("record is not a check result: {0}")]
    NotACheck(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<u32>,
}

impl From<Params> for ParamsRecord {
    fn from(p: Params) -> Self {
        ParamsRecord { x: p.x, k: p.k, i: p.i, j: p.j }
    }
}

impl From<&ParamsRecord> for Params {
    fn from(p: &ParamsRecord) -> Self {
        Params { x: p.x, k: p.k, i: p.i, j: p.j }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledFamily {
    pub label: String,
    pub family: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: String,
    pub families: Vec<LabelledFamily>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema_version: u32,
    pub timestamp: Option<String>,
    pub check_name: String,
    pub n: Option<u32>,
    pub family: Option<String>,
    pub params: ParamsRecord,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub values: BTreeMap<String, String>,
    pub witness: Option<WitnessRecord>,
}

impl ReportRecord {
    /// A record with no family attached, e.g. for a solver call.
    pub fn new(check_name: impl Into<String>, family: Option<&SetFamily>, verdict: &str) -> Self {
        ReportRecord {
            schema_version: SCHEMA_VERSION,
            timestamp: None,
            check_name: check_name.into(),
            n: family.map(SetFamily::n),
            family: family.map(to_compact),
            params: ParamsRecord::default(),
            verdict: verdict.to_string(),
            reason: None,
            values: BTreeMap::new(),
            witness: None,
        }
    }

    pub fn value(mut self, key: &str, v: impl ToString) -> Self {
        self.values.insert(key.to_string(), v.to_string());
        self
    }

    pub fn with_witness(mut self, kind: &str, families: &[(String, SetFamily)]) -> Self {
        self.witness = Some(WitnessRecord {
            kind: kind.to_string(),
            families: families
                .iter()
                .map(|(label, f)| LabelledFamily { label: label.clone(), family: to_compact(f) })
                .collect(),
        });
        self
    }

    pub fn from_result(r: &CheckResult) -> Self {
        let mut rec = ReportRecord::new(r.check.as_str(), Some(&r.family), r.verdict.as_str());
        rec.params = r.params.into();
        if let Verdict::Skipped(reason) = &r.verdict {
            rec.reason = Some(reason.clone());
        }
        rec.values = r.values.clone();
        if let Some(w) = &r.witness {
            rec = rec.with_witness(&w.kind, &w.families);
        }
        rec
    }

    pub fn summary(s: &Summary) -> Self {
        let verdict = if s.defect > 0 {
            "defect"
        } else if s.fail > 0 {
            "fail"
        } else {
            "pass"
        };
        ReportRecord::new("summary", None, verdict)
            .value("total", s.total())
            .value("pass", s.pass)
            .value("fail", s.fail)
            .value("defect", s.defect)
            .value("skipped", s.skipped)
    }

    /// Reconstructs the check result this record was written from.
    pub fn to_result(&self) -> Result<CheckResult, ReportError> {
        let check: CheckName = self.check_name.parse().map_err(ReportError::NotACheck)?;
        let (Some(n), Some(text)) = (self.n, self.family.as_deref()) else {
            return Err(ReportError::NotACheck("record has no family".into()));
        };
        let family = from_compact(n, text)?;
        let verdict = match self.verdict.as_str() {
            "pass" => Verdict::Pass,
            "fail" => Verdict::Fail,
            "defect" => Verdict::Defect,
            "skipped" => Verdict::Skipped(self.reason.clone().unwrap_or_default()),
            other => return Err(ReportError::NotACheck(format!("unknown verdict `{other}`"))),
        };
        let witness = match &self.witness {
            None => None,
            Some(w) => Some(Witness {
                kind: w.kind.clone(),
                families: w
                    .families
                    .iter()
                    .map(|lf| Ok((lf.label.clone(), from_compact(n, &lf.family)?)))
                    .collect::<Result<_, ReportError>>()?,
            }),
        };
        Ok(CheckResult {
            check,
            family,
            params: (&self.params).into(),
            verdict,
            values: self.values.clone(),
            witness,
        })
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn from_json_line(line: &str) -> Result<Self, ReportError> {
        Ok(serde_json::from_str(line)?)
    }
}

/// Writes one record per line. `timestamp` is copied into every record.
pub fn write_jsonl<W: Write>(
    mut out: W,
    records: &[ReportRecord],
    timestamp: Option<&str>,
) -> io::Result<()> {
    for rec in records {
        let line = match timestamp {
            None => rec.to_json_line(),
            Some(t) => {
                let mut stamped = rec.clone();
                stamped.timestamp = Some(t.to_string());
                stamped.to_json_line()
            }
        };
        out.write_all(line.as_bytes())?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn read_jsonl(text: &str) -> Result<Vec<ReportRecord>, ReportError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(ReportRecord::from_json_line)
        .collect()
}

/// Records for a finished sweep, summary last.
pub fn sweep_records(results: &[CheckResult], summary: &Summary) -> Vec<ReportRecord> {
    results
        .iter()
        .map(ReportRecord::from_result)
        .chain(std::iter::once(ReportRecord::summary(summary)))
        .collect()
}
