//! JSON input documents and CSV tables.

use std::io::Read;

use pseudo_fuzzy::{DiscretePseudoFuzzySet, Kind, PseudoTfn};
use serde::Deserialize;

use crate::CliError;

/// `{"a": 0, "b": 1, "c": 2, "kind": "dependent"}`; nothing else allowed.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PtfnDocument {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub kind: String,
}

impl PtfnDocument {
    pub fn into_ptfn(self) -> Result<PseudoTfn, CliError> {
        let kind: Kind = self
            .kind
            .parse()
            .map_err(|e| CliError::parse(format!("{e}")))?;
        PseudoTfn::from_vertices(self.a, self.b, self.c, kind)
            .map_err(|e| CliError::parse(format!("invalid number: {e}")))
    }
}

pub fn parse_ptfn(bytes: &[u8]) -> Result<PseudoTfn, CliError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| CliError::parse(format!("input is not UTF-8: {e}")))?;
    let doc: PtfnDocument = serde_json::from_str(text)
        .map_err(|e| CliError::parse(format!("malformed document: {e}")))?;
    doc.into_ptfn()
}

/// Reads a file, or standard input when `path` is `-`.
pub fn read_input(path: &str) -> Result<Vec<u8>, CliError> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::parse(format!("cannot read standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| CliError::parse(format!("cannot read {path}: {e}")))
    }
}

pub fn load_ptfn(path: &str) -> Result<PseudoTfn, CliError> {
    parse_ptfn(&read_input(path)?).map_err(|e| e.context(path))
}

/// Parses an `x,mu,lambda` curve as written by `curve`. Comment lines are
/// skipped; malformed rows are format errors, out-of-range pairs and
/// unordered support points are domain errors.
pub fn parse_curve(bytes: &[u8]) -> Result<DiscretePseudoFuzzySet, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(bytes);
    let header = reader
        .headers()
        .map_err(|e| CliError::parse(format!("bad CSV header: {e}")))?;
    if header.iter().collect::<Vec<_>>() != ["x", "mu", "lambda"] {
        return Err(CliError::parse(format!(
            "expected header x,mu,lambda, got {}",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut triplets = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::parse(format!("bad CSV row: {e}")))?;
        let field = |i: usize| -> Result<f64, CliError> {
            record[i]
                .parse::<f64>()
                .map_err(|e| CliError::parse(format!("row {}: {:?}: {e}", line + 1, &record[i])))
        };
        triplets.push((field(0)?, field(1)?, field(2)?));
    }
    Ok(DiscretePseudoFuzzySet::from_triplets(triplets)?)
}
