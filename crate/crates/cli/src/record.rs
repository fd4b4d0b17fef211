//! The record printed for every computation, in text or JSON form.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use zetasum::CesaroEvaluation;

/// A float that serializes with 17 significant digits, so it reads back
/// bit-for-bit. Non-finite values are written as the strings `"inf"`,
/// `"-inf"` and `"nan"`.
#[derive(Clone, Copy, Debug)]
pub struct Float(pub f64);

impl PartialEq for Float {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0 || (self.0.is_nan() && other.0.is_nan())
    }
}

impl fmt::Display for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.0;
        if x.is_nan() {
            f.write_str("nan")
        } else if x.is_infinite() {
            f.write_str(if x > 0.0 { "inf" } else { "-inf" })
        } else {
            write!(f, "{x:.16e}")
        }
    }
}

impl Serialize for Float {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let raw = RawValue::from_string(self.to_string()).map_err(serde::ser::Error::custom)?;
            raw.serialize(serializer)
        } else {
            serializer.serialize_str(&self.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Float {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct FloatVisitor;

        impl Visitor<'_> for FloatVisitor {
            type Value = Float;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a number or one of \"inf\", \"-inf\", \"nan\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Float, E> {
                Ok(Float(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Float, E> {
                Ok(Float(v as f64))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Float, E> {
                Ok(Float(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Float, E> {
                match v {
                    "inf" => Ok(Float(f64::INFINITY)),
                    "-inf" => Ok(Float(f64::NEG_INFINITY)),
                    "nan" => Ok(Float(f64::NAN)),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }

        deserializer.deserialize_any(FloatVisitor)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ResultValue {
    /// Exact rational (`"p/q"`, or `"p"` for integers) or exact polynomial.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub float: Option<Float>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub at: Float,
    pub value: Float,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub order: Float,
    /// Terms summed or largest abscissa reached.
    pub n_terms: u64,
    /// Tail samples the verdict was based on.
    pub samples: usize,
    pub error_estimate: Float,
    pub converged: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<TracePoint>,
}

impl From<&CesaroEvaluation> for Diagnostics {
    fn from(e: &CesaroEvaluation) -> Self {
        Diagnostics {
            order: Float(e.order),
            n_terms: e.n_terms,
            samples: e.trace.len(),
            error_estimate: Float(e.error_estimate),
            converged: e.converged,
            trace: e
                .trace
                .iter()
                .map(|s| TracePoint {
                    at: Float(s.at),
                    value: Float(s.value),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    /// Parameters as given on the command line, after defaults are applied.
    pub inputs: BTreeMap<String, String>,
    pub result: ResultValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<Diagnostics>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            result: ResultValue::default(),
            diagnostics: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn exact(mut self, value: impl ToString) -> Self {
        self.result.exact = Some(value.to_string());
        self
    }

    pub fn float(mut self, value: f64) -> Self {
        self.result.float = Some(Float(value));
        self
    }

    pub fn evaluation(mut self, e: &CesaroEvaluation) -> Self {
        self.result.float = Some(Float(e.value));
        self.diagnostics = Some(e.into());
        self
    }

    /// `false` only when diagnostics are present and report divergence.
    pub fn converged(&self) -> bool {
        self.diagnostics.as_ref().map_or(true, |d| d.converged)
    }

    /// Line-oriented `key: value` form.
    pub fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "command: {}", self.command)?;
        for (k, v) in &self.inputs {
            writeln!(out, "input.{k}: {v}")?;
        }
        if let Some(e) = &self.result.exact {
            writeln!(out, "exact: {e}")?;
        }
        if let Some(f) = &self.result.float {
            writeln!(out, "float: {f}")?;
        }
        if let Some(d) = &self.diagnostics {
            writeln!(out, "order: {}", d.order.0)?;
            writeln!(out, "n_terms: {}", d.n_terms)?;
            writeln!(out, "samples: {}", d.samples)?;
            writeln!(out, "error_estimate: {}", d.error_estimate)?;
            writeln!(out, "converged: {}", d.converged)?;
            for p in &d.trace {
                writeln!(out, "trace: {} {}", p.at, p.value)?;
            }
        }
        Ok(())
    }

    /// One JSON object on a single line.
    pub fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        let s = serde_json::to_string(self).map_err(io::Error::other)?;
        writeln!(out, "{s}")
    }
}
