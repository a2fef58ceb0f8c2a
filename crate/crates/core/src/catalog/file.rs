//! On-disk JSON description of an algebra.
//!
//! ```json
//! {
//!   "name": "so3",
//!   "dim": 3,
//!   "basis": ["e1", "e2", "e3"],
//!   "brackets": [
//!     { "i": 0, "j": 1, "result": { "2": "1" } },
//!     { "i": 0, "j": 2, "result": { "1": "-1" } },
//!     { "i": 1, "j": 2, "result": { "0": "1" } }
//!   ]
//! }
//! ```
//!
//! Indices are 0-based, `i < j`, and pairs that are not listed bracket to zero.
//! Coefficients are strings `"p"` or `"p/q"`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{validate, Algebra, RawAlgebra, RawBracket, ValidationReport};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// Basis index (as a decimal string) → rational coefficient.
    pub result: BTreeMap<String, String>,
}

/// Parses coefficients and collects every violation, structural ones included.
fn to_raw(file: &AlgebraFile) -> (RawAlgebra, ValidationReport) {
    let mut report = ValidationReport::default();
    let dim = file.dim;
    if dim != file.basis.len() {
        report.push(
            "dim",
            format!("dim is {dim} but basis has {} labels", file.basis.len()),
        );
    }
    let mut brackets = Vec::with_capacity(file.brackets.len());
    for (n, entry) in file.brackets.iter().enumerate() {
        let mut coords = vec![Scalar::zero(); dim];
        for (key, value) in &entry.result {
            let loc = format!("brackets[{n}].result[\"{key}\"]");
            let Ok(k) = key.trim().parse::<usize>() else {
                report.push(loc, format!("`{key}` is not a basis index"));
                continue;
            };
            if k >= dim {
                report.push(loc, format!("index {k} out of range for dim {dim}"));
                continue;
            }
            match value.parse::<Scalar>() {
                Ok(c) => coords[k] = c,
                Err(e) => report.push(loc, e.to_string()),
            }
        }
        brackets.push(RawBracket {
            i: entry.i,
            j: entry.j,
            coords,
        });
    }
    let raw = RawAlgebra {
        name: file.name.clone(),
        basis: file.basis.clone(),
        brackets,
    };
    report.violations.extend(validate(&raw).violations);
    (raw, report)
}

pub fn validate_file(file: &AlgebraFile) -> ValidationReport {
    to_raw(file).1
}

pub fn from_file(file: &AlgebraFile) -> Result<Algebra> {
    let (raw, report) = to_raw(file);
    if !report.is_valid() {
        return Err(Error::InvalidAlgebra(report));
    }
    Algebra::from_raw(raw)
}

pub fn to_file(algebra: &Algebra) -> AlgebraFile {
    let raw = algebra.to_raw();
    AlgebraFile {
        name: raw.name,
        dim: raw.basis.len(),
        basis: raw.basis,
        brackets: raw
            .brackets
            .into_iter()
            .map(|b| BracketEntry {
                i: b.i,
                j: b.j,
                result: b
                    .coords
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k.to_string(), c.to_string()))
                    .collect(),
            })
            .collect(),
    }
}

pub fn to_json_string(algebra: &Algebra) -> String {
    let mut s = serde_json::to_string_pretty(&to_file(algebra)).expect("algebra file serializes");
    s.push('\n');
    s
}

/// Parses and validates JSON text; `origin` is only used in error messages.
pub fn from_json_str(text: &str, origin: &Path) -> Result<Algebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|source| Error::Json {
        path: origin.to_path_buf(),
        source,
    })?;
    from_file(&file).map_err(|e| match e {
        Error::InvalidAlgebra(report) => Error::InvalidFile {
            path: origin.to_path_buf(),
            report,
        },
        other => other,
    })
}

pub fn load(path: impl AsRef<Path>) -> Result<Algebra> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    from_json_str(&text, path)
}

pub fn save(algebra: &Algebra, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_json_string(algebra)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    fn parse(text: &str) -> Result<Algebra> {
        from_json_str(text, Path::new("test.alg.json"))
    }

    fn invalid_report(text: &str) -> ValidationReport {
        match parse(text) {
            Err(Error::InvalidFile { report, .. }) => report,
            other => panic!("expected invalid file, got {other:?}"),
        }
    }

    #[test]
    fn so3_text_matches_builtin() {
        let text = r#"{
            "name": "so3", "dim": 3, "basis": ["e1", "e2", "e3"],
            "brackets": [
                {"i": 0, "j": 1, "result": {"2": "1"}},
                {"i": 0, "j": 2, "result": {"1": "-1"}},
                {"i": 1, "j": 2, "result": {"0": "1"}}
            ]
        }"#;
        assert_eq!(parse(text).unwrap(), builtin("so3").unwrap());
    }

    #[test]
    fn roundtrip_every_builtin() {
        let dir = tempfile::tempdir().unwrap();
        for name in ["abelian(3)", "so3", "sl2", "m7", "nc3"] {
            let a = builtin(name).unwrap();
            let path = dir.path().join("a.alg.json");
            save(&a, &path).unwrap();
            assert_eq!(load(&path).unwrap(), a, "{name}");
        }
    }

    #[test]
    fn rejects_reversed_pair() {
        let r = invalid_report(
            r#"{"name":"x","dim":3,"basis":["a","b","c"],"brackets":[{"i":2,"j":1,"result":{"0":"1"}}]}"#,
        );
        assert!(r.to_string().contains("i must be < j"), "{r}");
    }

    #[test]
    fn rejects_result_index_out_of_range() {
        let r = invalid_report(
            r#"{"name":"x","dim":3,"basis":["a","b","c"],"brackets":[{"i":0,"j":1,"result":{"3":"1"}}]}"#,
        );
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].location, "brackets[0].result[\"3\"]");
        assert!(r.violations[0].message.contains("out of range"));
    }

    #[test]
    fn rejects_zero_denominator() {
        let r = invalid_report(
            r#"{"name":"x","dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":1,"result":{"0":"1/0"}}]}"#,
        );
        assert_eq!(r.violations[0].location, "brackets[0].result[\"0\"]");
        assert!(r.violations[0].message.contains("zero denominator"));
    }

    #[test]
    fn rejects_dim_mismatch_and_bad_json() {
        let r = invalid_report(r#"{"name":"x","dim":3,"basis":["a","b"]}"#);
        assert_eq!(r.violations[0].location, "dim");
        assert!(matches!(parse("{"), Err(Error::Json { .. })));
        assert!(matches!(
            load("/nonexistent/missing.alg.json"),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn fractional_constants_survive() {
        let text = r#"{"name":"q","dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":1,"result":{"0":"-2/6","1":"5"}}]}"#;
        let a = parse(text).unwrap();
        assert_eq!(a.structure_constant(0, 1)[0], Scalar::ratio(-1, 3).unwrap());
        let again = parse(&to_json_string(&a)).unwrap();
        assert_eq!(a, again);
        assert_eq!(to_file(&a).brackets[0].result["0"], "-1/3");
    }
}
