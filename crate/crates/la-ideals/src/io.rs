//! On-disk JSON formats: structure files holding a Cayley table with named
//! fuzzy subsets and threshold pairs, and report documents for check runs.
//! Tables are stored as label matrices so fixtures diff like the tables they
//! describe.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::CayleyTable;
use crate::fuzzy::{FuzzySubset, Thresholds};
use crate::rat::Rat;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFile {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub fuzzy_subsets: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub thresholds: BTreeMap<String, (String, String)>,
}

/// Parses and fully validates a structure document: distinct nonempty
/// labels, a square table over the declared labels, grades that are exact
/// rationals in `[0,1]`, and threshold pairs with `gamma < delta`.
pub fn parse_structure(bytes: &[u8]) -> Result<StructureFile, Error> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::Parse(format!("structure file is not UTF-8: {e}")))?;
    let doc: StructureFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    doc.validate()?;
    Ok(doc)
}

/// Deterministic pretty-printed JSON; `parse_structure(emit(x)) == x`.
pub fn emit_structure(doc: &StructureFile) -> String {
    serde_json::to_string_pretty(doc).expect("structure serializes")
}

impl StructureFile {
    pub fn validate(&self) -> Result<(), Error> {
        if self.elements.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        let n = self.elements.len();
        for (i, l) in self.elements.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::BadLabel("empty label".into()));
            }
            if self.elements[..i].contains(l) {
                return Err(Error::BadLabel(format!("duplicate label '{l}'")));
            }
        }
        if self.table.len() != n || self.table.iter().any(|row| row.len() != n) {
            return Err(Error::Parse(format!("table must be {n}x{n}")));
        }
        for row in &self.table {
            for cell in row {
                self.index_of(cell)?;
            }
        }
        for (name, grades) in &self.fuzzy_subsets {
            if grades.len() != n {
                return Err(Error::Parse(format!(
                    "fuzzy subset '{name}' must assign a grade to each of the {n} elements"
                )));
            }
            for (label, grade) in grades {
                self.index_of(label)?;
                let g: Rat = grade.parse()?;
                if !g.is_grade() {
                    return Err(Error::GradeOutOfRange(g));
                }
            }
        }
        for (g, d) in self.thresholds.values() {
            Thresholds::new(g.parse()?, d.parse()?)?;
        }
        Ok(())
    }

    fn index_of(&self, label: &str) -> Result<usize, Error> {
        self.elements
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::BadLabel(format!("unknown element label '{label}'")))
    }

    /// The Cayley table with the file's labels.
    pub fn to_table(&self) -> Result<CayleyTable, Error> {
        let entries = self
            .table
            .iter()
            .map(|row| row.iter().map(|c| self.index_of(c)).collect())
            .collect::<Result<Vec<Vec<usize>>, Error>>()?;
        CayleyTable::with_labels(&entries, self.elements.clone())
    }

    /// A named fuzzy subset, ordered by the element list.
    pub fn fuzzy_subset(&self, name: &str) -> Result<FuzzySubset, Error> {
        let grades = self
            .fuzzy_subsets
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        FuzzySubset::new(
            self.elements
                .iter()
                .map(|l| {
                    grades
                        .get(l)
                        .ok_or_else(|| Error::BadLabel(format!("no grade for element '{l}'")))
                        .and_then(|g| g.parse())
                })
                .collect::<Result<Vec<Rat>, Error>>()?,
        )
    }

    /// A named threshold pair.
    pub fn threshold(&self, name: &str) -> Result<Thresholds, Error> {
        let (g, d) = self
            .thresholds
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        Thresholds::new(g.parse()?, d.parse()?)
    }

    /// The only fuzzy subset in the file, if there is exactly one.
    pub fn sole_fuzzy_subset(&self) -> Result<(String, FuzzySubset), Error> {
        if self.fuzzy_subsets.len() == 1 {
            let name = self.fuzzy_subsets.keys().next().unwrap().clone();
            let mu = self.fuzzy_subset(&name)?;
            Ok((name, mu))
        } else {
            Err(Error::BadConfig(format!(
                "file declares {} fuzzy subsets; pass --mu NAME",
                self.fuzzy_subsets.len()
            )))
        }
    }
}

/// One named check with its verdict and rendered witness/details.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Machine-readable record of a CLI run. `timing_ms` is omitted when
/// reproducibility matters more than the wall clock (campaign reports).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub input_digest: String,
    pub checks: Vec<CheckRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errata: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl ReportDocument {
    pub fn new(input: &[u8]) -> Self {
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            input_digest: sha256_hex(input),
            checks: Vec::new(),
            errata: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.checks.push(CheckRecord { name: name.into(), holds, detail: detail.into() });
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

pub fn emit_report(doc: &ReportDocument, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(doc).expect("report serializes"),
        ReportFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "tool {} | input sha256 {}\n",
                doc.tool_version, doc.input_digest
            ));
            for c in &doc.checks {
                out.push_str(&format!(
                    "[{}] {}: {}\n",
                    if c.holds { "ok" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            for e in &doc.errata {
                out.push_str(&format!("[erratum] {e}\n"));
            }
            if let Some(ms) = doc.timing_ms {
                out.push_str(&format!("elapsed {ms} ms\n"));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> StructureFile {
        let mut fuzzy = BTreeMap::new();
        fuzzy.insert(
            "mu".to_string(),
            [("1", "3/5"), ("2", "0.9"), ("3", "7/10"), ("4", "3/10")]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        );
        let mut ths = BTreeMap::new();
        ths.insert("agreeing".to_string(), ("1/5".to_string(), "3/10".to_string()));
        StructureFile {
            name: "sample".to_string(),
            elements: vec!["1".into(), "2".into(), "3".into(), "4".into()],
            table: vec![
                vec!["4".into(), "3".into(), "3".into(), "3".into()],
                vec!["3".into(), "3".into(), "4".into(), "4".into()],
                vec!["3".into(), "3".into(), "3".into(), "3".into()],
                vec!["3".into(), "3".into(), "3".into(), "3".into()],
            ],
            fuzzy_subsets: fuzzy,
            thresholds: ths,
        }
    }

    #[test]
    fn round_trip() {
        let doc = sample();
        let emitted = emit_structure(&doc);
        let parsed = parse_structure(emitted.as_bytes()).unwrap();
        assert_eq!(parsed, doc);
    }

    #[test]
    fn table_and_subset_accessors() {
        let doc = sample();
        let t = doc.to_table().unwrap();
        assert_eq!(t.order(), 4);
        assert_eq!(t.mul(0, 0), 3);
        assert_eq!(t.label(3), "4");
        let mu = doc.fuzzy_subset("mu").unwrap();
        assert_eq!(mu.grade(1), "9/10".parse().unwrap());
        let th = doc.threshold("agreeing").unwrap();
        assert_eq!(th.gamma(), "1/5".parse().unwrap());
        assert!(matches!(doc.fuzzy_subset("nu"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn validation_errors() {
        let mut doc = sample();
        doc.elements.clear();
        assert!(matches!(doc.validate(), Err(Error::EmptyCarrier)));

        let mut doc = sample();
        doc.elements[1] = "1".to_string();
        assert!(matches!(doc.validate(), Err(Error::BadLabel(_))));

        let mut doc = sample();
        doc.table[2].pop();
        assert!(matches!(doc.validate(), Err(Error::Parse(_))));

        let mut doc = sample();
        doc.table[0][0] = "9".to_string();
        assert!(matches!(doc.validate(), Err(Error::BadLabel(_))));

        let mut doc = sample();
        doc.fuzzy_subsets.get_mut("mu").unwrap().insert("2".into(), "7/5".into());
        assert!(matches!(doc.validate(), Err(Error::GradeOutOfRange(_))));

        let mut doc = sample();
        doc.thresholds.insert("bad".into(), ("1/2".into(), "1/3".into()));
        assert!(matches!(doc.validate(), Err(Error::BadThresholds { .. })));
    }

    #[test]
    fn report_document_shape() {
        let mut doc = ReportDocument::new(b"input");
        doc.push("left-invertive", true, "holds");
        doc.push("medial", false, "fails at (1,2,3,4)");
        assert!(!doc.all_hold());
        let json = emit_report(&doc, ReportFormat::Json);
        let back: ReportDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        // timing omitted when unset, stable digest.
        assert!(!json.contains("timing_ms"));
        assert_eq!(doc.input_digest, sha256_hex(b"input"));
        let text = emit_report(&doc, ReportFormat::Text);
        assert!(text.contains("[FAIL] medial"));
    }
}
