use std::collections::BTreeMap;
use std::fmt::Write;

use k3kit::elliptic::{FiberConfiguration, Val};
use k3kit::Rational;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

/// A valuation, or `"inf"` for an identically zero coefficient.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum Valuation {
    Finite(u32),
    Infinite(&'static str),
}

impl From<Val> for Valuation {
    fn from(v: Val) -> Self {
        match v {
            Val::Finite(n) => Valuation::Finite(n),
            Val::Infinite => Valuation::Infinite("inf"),
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(n) => write!(f, "{n}"),
            Valuation::Infinite(s) => f.write_str(s),
        }
    }
}

#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct PlaceRow {
    pub factor: String,
    pub v_c4: Valuation,
    pub v_c6: Valuation,
    pub v_delta: u32,
    #[serde(rename = "type")]
    pub kodaira: String,
    pub count: usize,
}

pub fn place_rows(c: &FiberConfiguration<Rational>) -> Vec<PlaceRow> {
    c.places
        .iter()
        .map(|p| PlaceRow {
            factor: p.factor.to_string(),
            v_c4: p.v_c4.into(),
            v_c6: p.v_c6.into(),
            v_delta: p.v_delta,
            kodaira: p.kodaira.to_string(),
            count: p.root_count,
        })
        .collect()
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct ScenarioReport {
    pub name: String,
    pub kind: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    /// Seed of the scenario's own generator, for randomized scenarios.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub configuration: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub places: Vec<PlaceRow>,
    /// Computed values such as invariant tuples and witnesses.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub facts: BTreeMap<String, String>,
}

impl ScenarioReport {
    pub fn new(name: &str, kind: &str) -> Self {
        ScenarioReport {
            name: name.to_string(),
            kind: kind.to_string(),
            status: Status::Pass,
            message: None,
            seed: None,
            trials: None,
            configuration: None,
            places: Vec::new(),
            facts: BTreeMap::new(),
        }
    }
}

#[derive(Serialize, Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct Report {
    pub schema_version: u32,
    pub seed: u64,
    pub summary: Summary,
    pub scenarios: Vec<ScenarioReport>,
}

impl Report {
    /// Sorts the scenarios by name and tallies the summary.
    pub fn new(seed: u64, mut scenarios: Vec<ScenarioReport>) -> Self {
        scenarios.sort_by(|a, b| a.name.cmp(&b.name));
        let mut summary = Summary { total: scenarios.len(), ..Summary::default() };
        for s in &scenarios {
            match s.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Error => summary.errors += 1,
            }
        }
        Report { schema_version: SCHEMA_VERSION, seed, summary, scenarios }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => emit_text(report),
    }
}

fn emit_text(report: &Report) -> String {
    let mut out = String::new();
    for s in &report.scenarios {
        let _ = write!(out, "{:<6}{}  [{}]", s.status.label(), s.name, s.kind);
        if let Some(c) = &s.configuration {
            let _ = write!(out, "  {c}");
        }
        out.push('\n');
        if let Some(m) = &s.message {
            let _ = writeln!(out, "      {m}");
        }
        if let (Some(seed), Some(n)) = (s.seed, s.trials) {
            let _ = writeln!(out, "      seed {seed}, {n} trials");
        }
        for (k, v) in &s.facts {
            let _ = writeln!(out, "      {k}: {v}");
        }
        if !s.places.is_empty() {
            out.push_str(&place_table(&s.places));
        }
    }
    let m = &report.summary;
    let _ = writeln!(
        out,
        "{} scenarios: {} passed, {} failed, {} errors (seed {})",
        m.total, m.passed, m.failed, m.errors, report.seed
    );
    out
}

fn place_table(rows: &[PlaceRow]) -> String {
    let header = ["factor", "v(c4)", "v(c6)", "v(D)", "type", "count"];
    let cells: Vec<[String; 6]> = rows
        .iter()
        .map(|r| {
            [
                r.factor.clone(),
                r.v_c4.to_string(),
                r.v_c6.to_string(),
                r.v_delta.to_string(),
                r.kodaira.clone(),
                r.count.to_string(),
            ]
        })
        .collect();
    let mut width = header.map(str::len);
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cols: &[String]| {
        out.push_str("      ");
        for (i, c) in cols.iter().enumerate() {
            let pad = width[i] - c.chars().count();
            // the factor column is left-aligned, numbers right-aligned
            if i == 0 || i == 4 {
                out.push_str(c);
                out.push_str(&" ".repeat(pad));
            } else {
                out.push_str(&" ".repeat(pad));
                out.push_str(c);
            }
            out.push_str(if i + 1 < cols.len() { "  " } else { "\n" });
        }
    };
    line(&header.map(String::from));
    for row in &cells {
        line(row);
    }
    out
}
