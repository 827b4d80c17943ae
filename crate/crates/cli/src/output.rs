//! Serialized forms of command results and their parsers.
//!
//! JSON is the primary encoding. CSV comes in two shapes: tables (one row
//! per record, numeric cells written as [`format_value`]) and single
//! records (`field,value` rows whose values are compact JSON).

use anyhow::{anyhow, bail, Context};
use repgrowth::bounds::BoundValue;
use repgrowth::interval::IntervalRepr;
use repgrowth::Error;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// `exact:<digits>`, `interval:[<lo>,<hi>]@<prec>` or `external:<note>`.
pub fn format_value(v: &BoundValue) -> String {
    match v {
        BoundValue::Exact { value } => format!("exact:{value}"),
        BoundValue::Interval(r) => format!("interval:[{},{}]@{}", r.lo, r.hi, r.prec),
        BoundValue::External { note } => format!("external:{note}"),
    }
}

pub fn parse_value(s: &str) -> anyhow::Result<BoundValue> {
    let (kind, body) = s.split_once(':').ok_or_else(|| anyhow!("untagged value `{s}`"))?;
    Ok(match kind {
        "exact" => BoundValue::Exact {
            value: body.parse().with_context(|| format!("exact value `{body}`"))?,
        },
        "interval" => {
            let (range, prec) = body
                .rsplit_once('@')
                .ok_or_else(|| anyhow!("interval `{body}` lacks a precision"))?;
            let (lo, hi) = range
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .and_then(|r| r.split_once(','))
                .ok_or_else(|| anyhow!("malformed interval `{range}`"))?;
            BoundValue::Interval(IntervalRepr {
                lo: lo.to_string(),
                hi: hi.to_string(),
                prec: prec.parse()?,
            })
        }
        "external" => BoundValue::External {
            note: body.to_string(),
        },
        other => bail!("unknown value kind `{other}`"),
    })
}

/// Machine-readable failure, emitted in place of a result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: String,
    pub message: String,
    /// The violated hypothesis, quoted as the engine states it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<String>,
    /// For non-regular partitions, the repeating part value.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repeated_part: Option<u32>,
}

impl From<&Error> for ErrorReport {
    fn from(e: &Error) -> Self {
        let (kind, hypothesis, repeated_part) = match e {
            Error::InvalidRank { .. } => ("invalid-rank", None, None),
            Error::IndexOutOfRange { .. } => ("index-out-of-range", None, None),
            Error::RankMismatch { .. } => ("rank-mismatch", None, None),
            Error::NotDominant(_) => ("not-dominant", None, None),
            Error::NotTypeA(_) => ("not-type-a", None, None),
            Error::RankTooSmall { .. } => ("rank-too-small", None, None),
            Error::Hypothesis { hypothesis, .. } => ("hypothesis", Some(hypothesis.clone()), None),
            Error::CapExceeded { .. } => ("cap-exceeded", None, None),
            Error::InvalidCharacteristic(_) => ("invalid-characteristic", None, None),
            Error::NotRegular { part, .. } => ("not-regular", None, Some(*part)),
            Error::InvalidPartition(_) => ("invalid-partition", None, None),
            Error::Domain(_) => ("domain", None, None),
            Error::UnknownFunction(_) => ("unknown-function", None, None),
        };
        ErrorReport {
            error: kind.into(),
            message: e.to_string(),
            hypothesis,
            repeated_part,
        }
    }
}

impl From<&anyhow::Error> for ErrorReport {
    fn from(e: &anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(inner) => inner.into(),
            None => ErrorReport {
                error: "other".into(),
                message: format!("{e:#}"),
                hypothesis: None,
                repeated_part: None,
            },
        }
    }
}

pub fn to_json<T: Serialize>(v: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// A single record as `field,value` rows.
pub fn record_to_csv<T: Serialize>(v: &T) -> anyhow::Result<String> {
    let Value::Object(map) = serde_json::to_value(v)? else {
        bail!("record is not a JSON object");
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["field", "value"])?;
    for (k, v) in map {
        w.write_record([k, serde_json::to_string(&v)?])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn record_from_csv<T: DeserializeOwned>(text: &str) -> anyhow::Result<T> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut map = Map::new();
    for row in r.records() {
        let row = row?;
        let (k, v) = (row.get(0).unwrap_or_default(), row.get(1).unwrap_or_default());
        map.insert(k.to_string(), serde_json::from_str(v)?);
    }
    Ok(serde_json::from_value(Value::Object(map))?)
}

/// Rows of a table, one CSV line each, with a header.
pub fn table_to_csv<R: Serialize>(rows: &[R]) -> anyhow::Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(true).from_writer(Vec::new());
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn table_from_csv<R: DeserializeOwned>(text: &str) -> anyhow::Result<Vec<R>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize().map(|row| Ok(row?)).collect()
}
