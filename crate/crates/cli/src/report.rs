use serde::{Deserialize, Serialize};

/// One verified claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub id: String,
    pub status: String,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub interesting: bool,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matched: Option<bool>,
    /// Whether certified enclosures of both sides overlap; only checked for
    /// verified claims.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric_agrees: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub verified: usize,
    pub refuted: usize,
    pub indeterminate: usize,
    pub errors: usize,
    pub mismatched: usize,
}

impl Summary {
    pub fn tally(entries: &[EntryReport]) -> Self {
        let mut s = Summary { total: entries.len(), ..Summary::default() };
        for e in entries {
            if e.error.is_some() {
                s.errors += 1;
            } else if e.status == "verified-exact" {
                s.verified += 1;
            } else if e.status.starts_with("refuted") {
                s.refuted += 1;
            } else {
                s.indeterminate += 1;
            }
            if e.matched == Some(false) {
                s.mismatched += 1;
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub engine: String,
    pub version: String,
    pub precision: u32,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
}

impl RunReport {
    pub fn new(precision: u32, entries: Vec<EntryReport>) -> Self {
        RunReport {
            engine: "nestrad".into(),
            version: nestrad::VERSION.into(),
            precision,
            summary: Summary::tally(&entries),
            entries,
        }
    }
}
