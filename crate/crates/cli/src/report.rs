//! Command output in JSON, CSV or text.
//!
//! JSON objects always carry `command`, `inputs`, one body key (`rows`,
//! `coeffs` or `classes`), any command-specific extras, then `pass`.
//! Key order is insertion order, so output is byte-for-byte reproducible.

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use crate::config::OutputFormat;
use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub body_key: &'static str,
    pub body: Vec<Value>,
    pub extra: Vec<(&'static str, Value)>,
    /// `None` when the command makes no claim to check.
    pub pass: Option<bool>,
    pub text: String,
}

impl Report {
    pub fn new(command: &'static str, body_key: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            body_key,
            body: Vec::new(),
            extra: Vec::new(),
            pass: None,
            text: String::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), self.command.into());
        m.insert("inputs".into(), Value::Object(self.inputs.clone()));
        m.insert(self.body_key.into(), Value::Array(self.body.clone()));
        for (k, v) in &self.extra {
            m.insert((*k).into(), v.clone());
        }
        m.insert("pass".into(), self.pass.map_or(Value::Null, Value::Bool));
        Value::Object(m)
    }

    pub fn render(&self, format: OutputFormat) -> Result<String, CliError> {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json values serialize");
                s.push('\n');
                Ok(s)
            }
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Text => Ok(self.text.clone()),
        }
    }

    /// Objects become one record each with their keys as the header; plain
    /// numbers become `exponent,coeff`; arrays become `q_exp,t_exp,coeff`.
    fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        match self.body.first() {
            None => {}
            Some(Value::Object(first)) => {
                w.write_record(first.keys())?;
                for row in &self.body {
                    let obj = row.as_object().expect("homogeneous rows");
                    w.write_record(obj.values().map(cell))?;
                }
            }
            Some(Value::Array(_)) => {
                w.write_record(["q_exp", "t_exp", "coeff"])?;
                for row in &self.body {
                    let cells: Vec<String> = row.as_array().expect("triples").iter().map(cell).collect();
                    w.write_record(&cells)?;
                }
            }
            Some(_) => {
                w.write_record(["exponent", "coeff"])?;
                for (k, c) in self.body.iter().enumerate() {
                    w.write_record([k.to_string(), cell(c)])?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 cells"))
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        other => other.to_string(),
    }
}

/// An arbitrary-precision integer as a JSON number.
pub fn big(b: &BigInt) -> Value {
    Value::Number(b.to_string().parse::<Number>().expect("integer literal"))
}

pub fn bigs<'a>(v: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(v.into_iter().map(big).collect())
}

/// Builds an object with keys in the given order.
pub fn object<const N: usize>(pairs: [(&str, Value); N]) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}
