//! Observed-versus-claimed comparison records shared by the audit reports.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Mismatch,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

/// One statistic: the value computed here next to the value a published claim predicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Compared<T> {
    pub observed: T,
    pub claimed: T,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl<T: PartialEq> Compared<T> {
    pub fn new(observed: T, claimed: T) -> Self {
        let matches = observed == claimed;
        Self {
            observed,
            claimed,
            matches,
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.matches {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }
}

/// A flattened row used when rendering mixed reports as text or Markdown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub check: String,
    pub observed: String,
    pub claimed: String,
    pub verdict: Verdict,
}

impl Finding {
    pub fn new(check: impl Into<String>, observed: impl fmt::Display, claimed: impl fmt::Display, verdict: Verdict) -> Self {
        Self {
            check: check.into(),
            observed: observed.to_string(),
            claimed: claimed.to_string(),
            verdict,
        }
    }

    pub fn compared<T: fmt::Display + PartialEq>(check: impl Into<String>, c: &Compared<T>) -> Self {
        Self::new(check, &c.observed, &c.claimed, c.verdict())
    }

    pub fn skipped(check: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            observed: reason.into(),
            claimed: String::new(),
            verdict: Verdict::Skipped,
        }
    }
}

pub fn findings_markdown(rows: &[Finding]) -> String {
    let mut out = String::from("| check | observed | claimed | verdict |\n|---|---|---|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            r.check, r.observed, r.claimed, r.verdict
        ));
    }
    out
}

pub fn findings_text(rows: &[Finding]) -> String {
    let mut out = String::new();
    for r in rows {
        if r.claimed.is_empty() {
            out.push_str(&format!("[{}] {}: {}\n", r.verdict, r.check, r.observed));
        } else {
            out.push_str(&format!(
                "[{}] {}: observed {}; claimed {}\n",
                r.verdict, r.check, r.observed, r.claimed
            ));
        }
    }
    out
}
