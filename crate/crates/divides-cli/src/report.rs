//! Verification report plumbing: parameter ranges and pass/fail records.

use std::error::Error;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Integer parameter interval: `A..B` is half-open, `A..=B` inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeSpec {
    pub start: i64,
    pub end: i64,
    pub inclusive: bool,
}

impl RangeSpec {
    pub const fn inclusive(start: i64, end: i64) -> Self {
        RangeSpec { start, end, inclusive: true }
    }

    pub fn values(&self) -> impl Iterator<Item = i64> {
        let end = if self.inclusive { self.end + 1 } else { self.end };
        self.start..end
    }

    /// Range values with the parameters no family accepts removed.
    pub fn family_parameters(&self) -> impl Iterator<Item = i64> {
        self.values().filter(|&j| j != 0 && j != -1)
    }
}

impl fmt::Display for RangeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eq = if self.inclusive { "=" } else { "" };
        write!(f, "{}..{eq}{}", self.start, self.end)
    }
}

#[derive(Debug, Clone)]
pub struct RangeParseError(String);

impl fmt::Display for RangeParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid range {:?}: expected A..B or A..=B", self.0)
    }
}

impl Error for RangeParseError {}

impl FromStr for RangeSpec {
    type Err = RangeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RangeParseError(s.to_owned());
        let (lo, hi, inclusive) = if let Some((lo, hi)) = s.split_once("..=") {
            (lo, hi, true)
        } else if let Some((lo, hi)) = s.split_once("..") {
            (lo, hi, false)
        } else {
            return Err(bad());
        };
        Ok(RangeSpec {
            start: lo.trim().parse().map_err(|_| bad())?,
            end: hi.trim().parse().map_err(|_| bad())?,
            inclusive,
        })
    }
}

/// One expected-vs-actual comparison inside a record.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

impl Check {
    pub fn int(name: &str, expected: i64, actual: i64) -> Self {
        Check {
            name: name.to_owned(),
            expected: Value::from(expected),
            actual: Value::from(actual),
            pass: expected == actual,
        }
    }

    pub fn text(name: &str, expected: String, actual: String) -> Self {
        let pass = expected == actual;
        Check {
            name: name.to_owned(),
            expected: Value::from(expected),
            actual: Value::from(actual),
            pass,
        }
    }

    pub fn flag(name: &str, expected: bool, actual: bool) -> Self {
        Check {
            name: name.to_owned(),
            expected: Value::from(expected),
            actual: Value::from(actual),
            pass: expected == actual,
        }
    }
}

/// All checks for one parameter value of one family.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParameterRecord {
    pub id: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl ParameterRecord {
    pub fn new(id: String, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        ParameterRecord { id, checks, pass }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub family: String,
    pub range: String,
    pub records: Vec<ParameterRecord>,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

impl VerificationReport {
    pub fn assemble(
        suite: &str,
        family: &str,
        range: RangeSpec,
        records: Vec<ParameterRecord>,
    ) -> Self {
        let passed = records.iter().filter(|r| r.pass).count();
        let failed = records.len() - passed;
        VerificationReport {
            suite: suite.to_owned(),
            family: family.to_owned(),
            range: range.to_string(),
            records,
            passed,
            failed,
            pass: failed == 0,
        }
    }

    pub fn record(&self, id: &str) -> Option<&ParameterRecord> {
        self.records.iter().find(|r| r.id == id)
    }
}
