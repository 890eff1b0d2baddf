//! Output records and their three serializations (json, csv, md).
//!
//! Field order is fixed so that JSON emissions round-trip byte-identically.
//! Rationals are serialized as decimal strings: the values routinely exceed
//! what common JSON consumers accept as numbers.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use hsnum_core::verify::CheckReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalParts {
    pub num: String,
    pub den: String,
}

impl RationalParts {
    pub fn from_rational(value: &BigRational) -> Self {
        RationalParts {
            num: value.numer().to_string(),
            den: value.denom().to_string(),
        }
    }

    /// "n" when integral, "n/d" otherwise.
    pub fn display(&self) -> String {
        if self.den == "1" {
            self.num.clone()
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

/// One row describing a Severi triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub g: u32,
    pub d: u32,
    pub l: u32,
    pub kind: String,
    pub strongly: bool,
    pub nonempty: bool,
    pub nodes: i64,
    pub dim_w: i64,
    pub dim_w_tilde: i64,
    pub dim_p: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hs: Option<RationalParts>,
    pub status: String,
    pub warnings: Vec<String>,
}

pub const CSV_HEADER: &str =
    "g,d,l,kind,strongly,nonempty,nodes,dimW,dimWt,dimP,h,hs_num,hs_den,status,warnings";

pub const MD_HEADER: &str =
    "| g | d | l | kind | nonempty | nodes | dimW | dimWt | dimP | h | hs | status | warnings |";

pub const MD_RULE: &str =
    "|---|---|---|------|----------|-------|------|-------|------|---|----|--------|----------|";

impl OutputRecord {
    pub fn csv_row(&self) -> String {
        let (hs_num, hs_den) = match &self.hs {
            Some(r) => (r.num.as_str(), r.den.as_str()),
            None => ("", ""),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.g,
            self.d,
            self.l,
            self.kind,
            self.strongly,
            self.nonempty,
            self.nodes,
            self.dim_w,
            self.dim_w_tilde,
            self.dim_p,
            self.h.as_deref().unwrap_or(""),
            hs_num,
            hs_den,
            self.status,
            self.warnings.join("; "),
        )
    }

    /// In the human-readable table, strong bendability folds into the kind.
    pub fn md_row(&self) -> String {
        let kind = if self.strongly {
            "strongly bendable".to_string()
        } else {
            self.kind.clone()
        };
        format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            self.g,
            self.d,
            self.l,
            kind,
            self.nonempty,
            self.nodes,
            self.dim_w,
            self.dim_w_tilde,
            self.dim_p,
            self.h.as_deref().unwrap_or("-"),
            self.hs.as_ref().map(|r| r.display()).unwrap_or_else(|| "-".to_string()),
            self.status,
            self.warnings.join("; "),
        )
    }
}

/// One row describing a plain Hurwitz-number query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HurwitzRecord {
    pub g: u32,
    pub d: u32,
    pub r: u64,
    pub method: String,
    /// Per-engine values; more than one entry when every engine was run.
    pub engines: Vec<EngineValue>,
    pub h: String,
    pub pair: RationalParts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineValue {
    pub engine: String,
    pub h: String,
}

pub const HURWITZ_CSV_HEADER: &str = "g,d,r,method,h,pair_num,pair_den,engines";

impl HurwitzRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.g,
            self.d,
            self.r,
            self.method,
            self.h,
            self.pair.num,
            self.pair.den,
            self.engines
                .iter()
                .map(|e| format!("{}={}", e.engine, e.h))
                .collect::<Vec<_>>()
                .join("; "),
        )
    }

    pub fn md_table(&self) -> String {
        let engines = self
            .engines
            .iter()
            .map(|e| format!("{}={}", e.engine, e.h))
            .collect::<Vec<_>>()
            .join("; ");
        format!(
            "| g | d | r | method | h | h/d! | engines |\n\
             |---|---|---|--------|---|------|---------|\n\
             | {} | {} | {} | {} | {} | {} | {} |",
            self.g,
            self.d,
            self.r,
            self.method,
            self.h,
            self.pair.display(),
            engines,
        )
    }
}

/// Serializable mirror of a verification check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckRecord {
    pub fn from_report(report: &CheckReport) -> Self {
        CheckRecord {
            check: report.name.clone(),
            expected: report.expected.clone(),
            actual: report.actual.clone(),
            pass: report.pass,
        }
    }
}

pub const CHECK_CSV_HEADER: &str = "check,expected,actual,pass";

pub fn check_csv_row(c: &CheckRecord) -> String {
    format!("{},{},{},{}", c.check, c.expected, c.actual, c.pass)
}

pub fn check_md_rows(checks: &[CheckRecord]) -> String {
    let mut out = String::from("| check | expected | actual | result |\n|-------|----------|--------|--------|\n");
    for c in checks {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            c.check,
            c.expected,
            c.actual,
            if c.pass { "pass" } else { "FAIL" }
        ));
    }
    out
}
