//! Machine-readable reports. Field order is fixed by the struct layouts, so
//! the JSON text is stable for equal reports.

use koszul_core::invariants::BettiTable;
use koszul_core::{Outcome, Verdict};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// Settings a command ran with; unset fields did not apply.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trunc: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub imax: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dmax: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attempts: Option<usize>,
}

/// One `β_{i,j}` entry as an `[i, j, β]` triple.
pub type BettiTriple = (usize, u32, u64);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Section {
    Ideal {
        label: String,
        field: String,
        vars: Vec<String>,
        generators: Vec<String>,
    },
    Basis {
        order: String,
        elements: Vec<String>,
    },
    Hilbert {
        coefficients: Vec<String>,
        numerator: Vec<String>,
        dim: usize,
    },
    Betti {
        subject: String,
        i_max: usize,
        d_max: u32,
        entries: Vec<BettiTriple>,
        /// Internal degrees whose entries may be incomplete.
        flagged: Vec<u32>,
    },
    Apolar {
        h_vector: Vec<usize>,
        cone: bool,
    },
    Matrix {
        label: String,
        rows: Vec<Vec<String>>,
    },
    Points {
        coordinates: Vec<Vec<String>>,
    },
    Check {
        entry: String,
        label: String,
        tag: String,
        expected: Outcome,
        observed: Outcome,
        passed: bool,
    },
    /// A certificate record that the matching `*-verify` command accepts.
    Certificate {
        format: String,
        record: serde_json::Value,
    },
    Text {
        label: String,
        value: String,
    },
}

impl Section {
    pub fn betti(table: &BettiTable) -> Self {
        let flagged = (0..=table.d_max).filter(|&j| table.is_flagged(j)).collect();
        Section::Betti {
            subject: table.subject.clone(),
            i_max: table.i_max,
            d_max: table.d_max,
            entries: table.entries.iter().map(|e| (e.i, e.j, e.beta)).collect(),
            flagged,
        }
    }

    pub fn text(label: impl Into<String>, value: impl Into<String>) -> Self {
        Section::Text {
            label: label.into(),
            value: value.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub label: String,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub command: String,
    #[serde(default)]
    pub config: Config,
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sections: Vec<Section>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub timings: Vec<Timing>,
}

impl Default for Report {
    fn default() -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command: String::new(),
            config: Config::default(),
            verdicts: Vec::new(),
            sections: Vec::new(),
            timings: Vec::new(),
        }
    }
}

impl Report {
    pub fn new(command: impl Into<String>, config: Config) -> Self {
        Report {
            command: command.into(),
            config,
            ..Report::default()
        }
    }

    /// Whether every `check` section passed.
    pub fn checks_passed(&self) -> bool {
        self.sections
            .iter()
            .all(|s| !matches!(s, Section::Check { passed: false, .. }))
    }

    /// The report without timings, for determinism comparisons.
    pub fn untimed(&self) -> Report {
        Report {
            timings: Vec::new(),
            ..self.clone()
        }
    }
}

pub fn emit_report(r: &Report) -> String {
    serde_json::to_string_pretty(r).expect("reports serialize")
}

pub fn parse_report(text: &str) -> serde_json::Result<Report> {
    serde_json::from_str(text)
}

/// One line per verdict and check.
pub fn summary(r: &Report) -> String {
    let mut out = String::new();
    for v in &r.verdicts {
        out.push_str(&format!("{:?} {:?} {}\n", v.property, v.outcome, witness_kind(v)));
    }
    for s in &r.sections {
        if let Section::Check {
            entry,
            label,
            expected,
            observed,
            passed,
            ..
        } = s
        {
            let mark = if *passed { "ok" } else { "FAILED" };
            out.push_str(&format!("{entry} {label}: expected {expected:?}, observed {observed:?} {mark}\n"));
        }
    }
    out
}

fn witness_kind(v: &Verdict) -> String {
    serde_json::to_value(&v.witness)
        .ok()
        .and_then(|w| w.get("kind").and_then(|k| k.as_str()).map(String::from))
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use koszul_core::{Property, Witness};

    #[test]
    fn empty_report() {
        assert_eq!(
            serde_json::to_string(&Report::default()).unwrap(),
            r#"{"schema":1,"config":{},"verdicts":[]}"#
        );
    }

    #[test]
    fn betti_witness_shape() {
        let v = Verdict::no(Property::Koszul, Witness::NonlinearBetti { i: 2, j: 3, beta: 1 });
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["witness"], serde_json::json!({"kind": "nonlinear_betti", "i": 2, "j": 3, "beta": 1}));
        assert_eq!(json["outcome"], "CertifiedNo");
    }
}
