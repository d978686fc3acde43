//! Instance files.
//!
//! JSON documents of the form
//! `{"kind": "arp", "label": "...", "items": [{"v": "6", "c": "2"}, ...]}`.
//! Numeric fields are strings holding either `p/q` or a decimal literal;
//! decimals convert exactly (never through binary floating point). Bare JSON
//! integers are accepted; non-integer JSON numbers are rejected so no value
//! ever passes through an f64.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::model::{Instance, ProblemKind};
use crate::rational::Rational;

#[derive(Debug, Serialize, Deserialize)]
struct FileDoc {
    kind: String,
    #[serde(default)]
    label: String,
    items: Vec<FileItem>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FileItem {
    v: Value,
    c: Value,
}

fn value_to_rational(value: &Value, item: usize, field: &str) -> Result<Rational> {
    let ctx = || format!("item {item}, field '{field}'");
    match value {
        Value::String(s) => s
            .parse()
            .map_err(|e| Error::Parse(format!("{}: {e}", ctx()))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rational::from_int(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from(u))
            } else {
                Err(Error::Parse(format!(
                    "{}: non-integer number {n}; quote it as a string to keep it exact",
                    ctx()
                )))
            }
        }
        other => Err(Error::Parse(format!(
            "{}: expected a string or integer, got {other}",
            ctx()
        ))),
    }
}

/// Parses an instance document. Ids follow file order; all values are
/// converted exactly.
pub fn parse_instance_str(text: &str) -> Result<Instance> {
    let doc: FileDoc = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("instance file: {e}")))?;
    let kind: ProblemKind = doc.kind.parse()?;
    let mut values = Vec::with_capacity(doc.items.len());
    for (i, item) in doc.items.iter().enumerate() {
        let v = value_to_rational(&item.v, i + 1, "v")?;
        let c = value_to_rational(&item.c, i + 1, "c")?;
        values.push((v, c));
    }
    Instance::new(kind, values, doc.label)
}

pub fn parse_instance_bytes(bytes: &[u8]) -> Result<Instance> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::Parse(format!("instance file is not UTF-8: {e}")))?;
    parse_instance_str(text)
}

pub fn read_instance_file(path: &Path) -> Result<Instance> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_instance_bytes(&bytes)
}

/// Renders an instance as a pretty-printed document that parses back to an
/// identical instance.
pub fn instance_to_string(inst: &Instance) -> String {
    let doc = FileDoc {
        kind: inst.kind().as_str().to_string(),
        label: inst.label().to_string(),
        items: inst
            .items()
            .iter()
            .map(|a| FileItem {
                v: Value::String(a.fuel().to_string()),
                c: Value::String(a.rate().to_string()),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("instance documents serialize")
}

pub fn write_instance_file(inst: &Instance, path: &Path) -> Result<()> {
    let mut text = instance_to_string(inst);
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_schema_example() {
        let inst = parse_instance_str(
            r#"{"kind":"arp","items":[{"v":"6","c":"2"},{"v":"1","c":"1"}]}"#,
        )
        .unwrap();
        assert_eq!(inst.n(), 2);
        assert_eq!(inst.kind(), ProblemKind::Arp);
        assert_eq!(inst.item(1).fuel(), &Rational::from_int(6));
        assert_eq!(inst.label(), "");
    }

    #[test]
    fn decimal_and_fraction_literals_convert_exactly() {
        let inst =
            parse_instance_str(r#"{"kind":"arp","items":[{"v":"2.5","c":"1/3"}]}"#).unwrap();
        assert_eq!(inst.item(1).fuel(), &Rational::new(5, 2));
        assert_eq!(inst.item(1).rate(), &Rational::new(1, 3));
    }

    #[test]
    fn bare_integers_are_accepted_but_floats_are_not() {
        let inst = parse_instance_str(r#"{"kind":"nvep","items":[{"v":6,"c":2}]}"#).unwrap();
        assert_eq!(inst.kind(), ProblemKind::Nvep);
        assert_eq!(inst.item(1).fuel(), &Rational::from_int(6));

        let err = parse_instance_str(r#"{"kind":"arp","items":[{"v":2.5,"c":1}]}"#).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("item 1"), "{msg}");
        assert!(msg.contains("quote"), "{msg}");
    }

    #[test]
    fn reports_empty_and_non_positive_instances() {
        assert!(matches!(
            parse_instance_str(r#"{"kind":"arp","items":[]}"#),
            Err(Error::EmptyInstance)
        ));
        assert!(matches!(
            parse_instance_str(r#"{"kind":"arp","items":[{"v":"0","c":"1"}]}"#),
            Err(Error::NonPositiveValue { .. })
        ));
    }

    #[test]
    fn rejects_unknown_kind_and_malformed_documents() {
        assert!(parse_instance_str(r#"{"kind":"jeep","items":[{"v":"1","c":"1"}]}"#).is_err());
        let err = parse_instance_str("{not json").unwrap_err();
        assert!(err.to_string().contains("line"), "{err}");
        assert!(parse_instance_str(r#"{"kind":"arp","items":[{"v":"1/0","c":"1"}]}"#).is_err());
    }

    #[test]
    fn round_trips_exactly() {
        let inst = parse_instance_str(
            r#"{"kind":"nvep","label":"probe","items":[{"v":"2.5","c":"1/3"},{"v":"7","c":"0.125"}]}"#,
        )
        .unwrap();
        let text = instance_to_string(&inst);
        let back = parse_instance_str(&text).unwrap();
        assert_eq!(inst, back);
    }
}
