use std::fmt::{self, Write as _};

use serde::Serialize;

use super::spec::Grading;
use crate::graded::Deg;
use crate::linalg::{BettiTable, Reliability};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub degree: i32,
    pub dim: usize,
    pub reliability: Reliability,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiSection {
    pub label: String,
    pub grading: Grading,
    pub rows: Vec<BettiRow>,
}

/// `dim π_n ⊗ Q = dim H_{n−1}` of a Lie model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PiRow {
    pub n: u32,
    pub homological_degree: i32,
    pub dim: usize,
    pub reliability: Reliability,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub subject: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Agreement {
    Equal,
    Unequal,
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareRow {
    pub degree: i32,
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub verdict: Agreement,
}

/// Output of a command: labelled tables, each number with its reliability.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub structure: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub betti: Vec<BettiSection>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub pi: Vec<PiRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub comparison: Vec<CompareRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report { title: title.into(), ..Report::default() }
    }

    pub fn add_betti(&mut self, label: impl Into<String>, table: &BettiTable, grading: Grading) {
        let mut rows: Vec<BettiRow> = table
            .entries
            .values()
            .map(|e| BettiRow { degree: grading.display(Deg(e.degree)), dim: e.dim, reliability: e.reliability })
            .collect();
        rows.sort_by_key(|r| r.degree);
        self.betti.push(BettiSection { label: label.into(), grading, rows });
    }

    pub fn add_verdict(&mut self, subject: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.verdicts.push(Verdict { subject: subject.into(), ok, detail: detail.into() });
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    /// True when every verdict passed and no compared degree disagrees.
    pub fn ok(&self) -> bool {
        self.verdicts.iter().all(|v| v.ok) && self.comparison.iter().all(|r| r.verdict != Agreement::Unequal)
    }

    pub fn pi_dim(&self, n: u32) -> Option<&PiRow> {
        self.pi.iter().find(|r| r.n == n)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

fn flag(r: Reliability) -> &'static str {
    match r {
        Reliability::Exact => "exact",
        Reliability::Boundary => "boundary",
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |d| d.to_string())
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string()
    };
    let _ = writeln!(out, "  {}", line(header.iter().map(|s| s.to_string()).collect()));
    for r in rows {
        let _ = writeln!(out, "  {}", line(r.clone()));
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title);
        for line in &self.structure {
            let _ = writeln!(out, "  {line}");
        }
        for s in &self.betti {
            let name = match s.grading {
                Grading::Homological => "homological degree n, H_n",
                Grading::Cohomological => "cohomological degree n, H^n",
            };
            let _ = writeln!(out, "\n{} ({name})", s.label);
            let rows: Vec<Vec<String>> = s
                .rows
                .iter()
                .map(|r| vec![r.degree.to_string(), r.dim.to_string(), flag(r.reliability).to_string()])
                .collect();
            table(&mut out, &["n", "dim", "status"], &rows);
        }
        if !self.pi.is_empty() {
            let _ = writeln!(out, "\nrational homotopy (π_n ⊗ Q = H_(n-1) of the Lie model)");
            let rows: Vec<Vec<String>> = self
                .pi
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.homological_degree.to_string(),
                        r.dim.to_string(),
                        flag(r.reliability).to_string(),
                        r.note.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            table(&mut out, &["n", "H_", "dim", "status", ""], &rows);
        }
        if !self.verdicts.is_empty() {
            let _ = writeln!(out);
            let rows: Vec<Vec<String>> = self
                .verdicts
                .iter()
                .map(|v| vec![v.subject.clone(), if v.ok { "ok" } else { "FAIL" }.to_string(), v.detail.clone()])
                .collect();
            table(&mut out, &["check", "result", "detail"], &rows);
        }
        if !self.comparison.is_empty() {
            let _ = writeln!(out);
            let rows: Vec<Vec<String>> = self
                .comparison
                .iter()
                .map(|r| {
                    let v = match r.verdict {
                        Agreement::Equal => "equal",
                        Agreement::Unequal => "UNEQUAL",
                        Agreement::Unchecked => "unchecked",
                    };
                    vec![r.degree.to_string(), opt(r.left), opt(r.right), v.to_string()]
                })
                .collect();
            table(&mut out, &["H_n", "twisted", "harrison", "verdict"], &rows);
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let mut t = BettiTable::default();
        t.insert(-2, 1, Reliability::Exact);
        t.insert(0, 3, Reliability::Boundary);
        let mut r = Report::new("demo");
        r.add_betti("cohomology", &t, Grading::Cohomological);
        r.add_verdict("d²", true, "");
        assert_eq!(r.betti[0].rows[0].degree, 0);
        assert_eq!(r.betti[0].rows[1].degree, 2);
        let text = r.to_string();
        assert!(text.contains("boundary"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["betti"][0]["rows"][1]["reliability"], "exact");
        assert!(r.ok());
    }
}
