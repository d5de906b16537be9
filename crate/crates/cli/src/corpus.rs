//! JSON Lines identity corpus.

use std::collections::HashSet;
use std::time::Instant;

use nestrad::identity::eval_side;
use nestrad::parser::parse_lower;
use nestrad::IdentityRecord;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::EntryReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Verified,
    Refuted,
}

impl Expect {
    pub fn as_str(self) -> &'static str {
        match self {
            Expect::Verified => "verified",
            Expect::Refuted => "refuted",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub id: String,
    pub lhs: String,
    pub rhs: String,
    pub expect: Expect,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// A corpus line, or the reason it could not be read.
#[derive(Clone, Debug)]
pub enum Line {
    Entry(CorpusEntry),
    Malformed { id: String, message: String },
}

/// Splits `text` into non-blank lines; duplicate ids are malformed.
pub fn read_lines(text: &str) -> Vec<Line> {
    let mut seen = HashSet::new();
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| match serde_json::from_str::<CorpusEntry>(l) {
            Ok(e) if !seen.insert(e.id.clone()) => Line::Malformed {
                id: e.id.clone(),
                message: format!("line {}: duplicate id {}", i + 1, e.id),
            },
            Ok(e) => Line::Entry(e),
            Err(err) => Line::Malformed {
                id: format!("line-{}", i + 1),
                message: format!("line {}: {err}", i + 1),
            },
        })
        .collect()
}

fn error_report(id: &str, message: String, expect: Option<Expect>, elapsed_ms: f64) -> EntryReport {
    EntryReport {
        id: id.into(),
        status: "error".into(),
        lhs_terms: 0,
        rhs_terms: 0,
        interesting: false,
        elapsed_ms,
        expect: expect.map(|e| e.as_str().into()),
        matched: None,
        numeric_agrees: None,
        note: None,
        error: Some(message),
    }
}

/// Verifies a claim given as two expression strings.
pub fn check(id: &str, lhs: &str, rhs: &str, precision: u32) -> Result<EntryReport, String> {
    let start = Instant::now();
    let l = parse_lower(lhs).map_err(|e| format!("lhs: {e}"))?;
    let r = parse_lower(rhs).map_err(|e| format!("rhs: {e}"))?;
    let rec = IdentityRecord::new(id, l, r, "").verified();
    let counts = rec.term_counts();
    let verified = rec.status().is_verified();
    let numeric_agrees = verified.then(|| {
        match (eval_side(rec.lhs(), precision), eval_side(rec.rhs(), precision)) {
            (Ok(a), Ok(b)) => a.overlaps(&b),
            _ => false,
        }
    });
    let note = match rec.status() {
        nestrad::Status::Indeterminate(reason) => Some(reason.clone()),
        _ => rec.note().map(str::to_owned),
    };
    Ok(EntryReport {
        id: id.into(),
        status: rec.status().as_str().into(),
        lhs_terms: counts.lhs_terms,
        rhs_terms: counts.rhs_terms,
        interesting: verified && counts.interesting,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        expect: None,
        matched: None,
        numeric_agrees,
        note,
        error: None,
    })
}

fn run_entry(entry: &CorpusEntry, precision: u32) -> EntryReport {
    let start = Instant::now();
    match check(&entry.id, &entry.lhs, &entry.rhs, precision) {
        Ok(mut rep) => {
            let matched = match entry.expect {
                Expect::Verified => rep.status == "verified-exact" && rep.numeric_agrees != Some(false),
                Expect::Refuted => rep.status.starts_with("refuted"),
            };
            rep.expect = Some(entry.expect.as_str().into());
            rep.matched = Some(matched);
            rep
        }
        Err(message) => error_report(&entry.id, message, Some(entry.expect), start.elapsed().as_secs_f64() * 1e3),
    }
}

/// Verifies all lines in parallel; the output keeps corpus order.
pub fn run(lines: &[Line], precision: u32) -> Vec<EntryReport> {
    lines
        .par_iter()
        .map(|line| match line {
            Line::Entry(e) => run_entry(e, precision),
            Line::Malformed { id, message } => error_report(id, message.clone(), None, 0.0),
        })
        .collect()
}
