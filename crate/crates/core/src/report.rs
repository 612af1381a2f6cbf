//! Pass/fail reports for identity and relation checks.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::series::{fraction_string, JacobiSeries, QSeries, Q_GRID, Y_GRID};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Which key names the check in JSON output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    Identity,
    Relation,
}

/// First coefficient at which two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deviation {
    pub q_exp: String,
    pub y_exp: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub kind: ReportKind,
    pub name: String,
    pub status: Status,
    pub first_deviation: Option<Deviation>,
    /// Exponent of `q` below which the comparison was made.
    pub checked_below: Option<String>,
    pub note: Option<String>,
}

impl IdentityReport {
    fn new(kind: ReportKind, name: impl Into<String>, status: Status) -> Self {
        Self { kind, name: name.into(), status, first_deviation: None, checked_below: None, note: None }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Self::new(ReportKind::Identity, name, Status::Pass)
    }

    pub fn fail(name: impl Into<String>, dev: Option<Deviation>, note: impl Into<String>) -> Self {
        let mut r = Self::new(ReportKind::Identity, name, Status::Fail);
        r.first_deviation = dev;
        r.note = Some(note.into());
        r
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut r = Self::new(ReportKind::Identity, name, Status::Skipped);
        r.note = Some(reason.into());
        r
    }

    pub fn as_relation(mut self) -> Self {
        self.kind = ReportKind::Relation;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Compare two Jacobi series below their common truncation, requiring at least `min_trunc`.
    pub fn compare_jacobi(name: impl Into<String>, lhs: &JacobiSeries, rhs: &JacobiSeries, min_trunc: i64) -> Self {
        let name = name.into();
        let t = lhs.trunc().min(rhs.trunc());
        if t < min_trunc {
            return Self::fail(name, None, format!("only known below q^{}", fraction_string(t, Q_GRID)));
        }
        let keys: BTreeSet<(i64, i64)> = lhs.terms().chain(rhs.terms()).map(|(k, _)| k).filter(|k| k.0 < t).collect();
        let mut r = Self::pass(name);
        r.checked_below = Some(fraction_string(t, Q_GRID));
        for (qi, yi) in keys {
            let (a, b) = (lhs.coeff(qi, yi), rhs.coeff(qi, yi));
            if a != b {
                r.status = Status::Fail;
                r.first_deviation = Some(Deviation {
                    q_exp: fraction_string(qi, Q_GRID),
                    y_exp: fraction_string(yi, Y_GRID),
                    lhs: a.to_string(),
                    rhs: b.to_string(),
                });
                break;
            }
        }
        r
    }

    /// Compare two q-series below their common truncation, requiring at least `min_trunc`.
    pub fn compare_q(name: impl Into<String>, lhs: &QSeries, rhs: &QSeries, min_trunc: i64) -> Self {
        Self::compare_jacobi(name, &JacobiSeries::from_qseries(lhs), &JacobiSeries::from_qseries(rhs), min_trunc)
    }

    pub fn to_json(&self) -> Value {
        let key = match self.kind {
            ReportKind::Identity => "identity",
            ReportKind::Relation => "relation",
        };
        let mut v = json!({
            key: self.name,
            "status": self.status,
            "first_deviation": self.first_deviation,
        });
        if let Some(c) = &self.checked_below {
            v["checked_below_q_exp"] = json!(c);
        }
        if let Some(n) = &self.note {
            v["note"] = json!(n);
        }
        v
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        write!(f, "{tag} {}", self.name)?;
        if let Some(d) = &self.first_deviation {
            write!(f, " at q^{} y^{}: lhs={} rhs={}", d.q_exp, d.y_exp, d.lhs, d.rhs)?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

/// True if every report passed or was skipped.
pub fn all_ok(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RadicalScalar;

    #[test]
    fn first_deviation_is_lowest() {
        let a = QSeries::from_terms([(0, RadicalScalar::from_int(1)), (24, RadicalScalar::from_int(2))], 72);
        let b = QSeries::from_terms([(0, RadicalScalar::from_int(1)), (48, RadicalScalar::from_int(2))], 72);
        let r = IdentityReport::compare_q("t", &a, &b, 72);
        assert_eq!(r.status, Status::Fail);
        let d = r.first_deviation.unwrap();
        assert_eq!((d.q_exp.as_str(), d.lhs.as_str(), d.rhs.as_str()), ("1", "2", "0"));
    }

    #[test]
    fn json_shape() {
        let r = IdentityReport::pass("x").as_relation();
        let v = r.to_json();
        assert_eq!(v["relation"], "x");
        assert_eq!(v["status"], "pass");
        assert!(v["first_deviation"].is_null());
    }

    #[test]
    fn insufficient_precision_fails() {
        let r = IdentityReport::compare_q("t", &QSeries::zero(24), &QSeries::zero(48), 48);
        assert_eq!(r.status, Status::Fail);
    }
}
