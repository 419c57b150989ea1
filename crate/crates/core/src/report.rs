//! Experiment records and the JSON report.
//!
//! Rationals are written as `"p/q"` strings and complex numbers as
//! `[re, im]` pairs. Floats use the shortest representation that reads back
//! to the same value. Wall-clock timings are only written when requested,
//! so a default report is byte-for-byte reproducible.

use crate::error::{Error, Result};
use crate::web::WebFile;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::path::Path;

pub const TOOL: &str = concat!("reye ", env!("CARGO_PKG_VERSION"));

/// One experiment of the suite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    /// Short identifier, e.g. `nodes`.
    pub name: String,
    /// What must hold for the record to pass.
    pub claim: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Set when the failure was a count mismatch.
    #[serde(default)]
    pub count_mismatch: bool,
    pub detail: Value,
}

impl Record {
    pub fn new(name: &str, claim: &str) -> Self {
        Record {
            name: name.into(),
            claim: claim.into(),
            pass: false,
            expected: None,
            found: None,
            error: None,
            count_mismatch: false,
            detail: Value::Null,
        }
    }

    pub fn count(mut self, expected: usize, found: usize) -> Self {
        self.expected = Some(expected);
        self.found = Some(found);
        if expected != found {
            self.count_mismatch = true;
        }
        self
    }

    pub fn detail(mut self, detail: impl Serialize) -> Self {
        self.detail = serde_json::to_value(detail).unwrap_or(Value::Null);
        self
    }

    pub fn pass_if(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }

    /// A record for an experiment that returned an error.
    pub fn failed(name: &str, claim: &str, err: &Error) -> Self {
        let mut r = Record::new(name, claim);
        r.error = Some(err.to_string());
        if let Error::CountMismatch { expected, found, .. } = err {
            r.expected = Some(*expected);
            r.found = Some(*found);
            r.count_mismatch = true;
        }
        r
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub tool: String,
    pub seed: u64,
    pub web: WebFile,
    pub tolerance: f64,
    pub samples: usize,
    pub records: Vec<Record>,
    /// Headline counts by record name.
    pub counts: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
    pub pass: bool,
}

impl ExperimentReport {
    pub fn failures(&self) -> Vec<&Record> {
        self.records.iter().filter(|r| !r.pass).collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// Process exit code: 0 when every record passes, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            2
        }
    }
}

/// Write `text` to `path`, or to stdout without a path.
pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(Error::from),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

pub fn read_web(path: &Path) -> Result<crate::web::Web> {
    let text = std::fs::read_to_string(path)?;
    let file: WebFile = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    crate::web::Web::from_file(&file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_mismatch_is_flagged() {
        let r = Record::new("x", "y").count(10, 9);
        assert!(r.count_mismatch);
        let e = Error::CountMismatch {
            what: "rays".into(),
            expected: 7,
            found: 6,
        };
        let f = Record::failed("rays", "seven", &e);
        assert_eq!((f.expected, f.found, f.pass), (Some(7), Some(6), false));
    }

    #[test]
    fn record_round_trips() {
        let r = Record::new("n", "c").count(3, 3).pass_if(true).detail(vec![[1.5, -0.25]]);
        let back: Record = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
