use std::io::{self, Write};

use num_bigint::BigInt;
use serde_json::{json, Map, Value as Json};

use incpat::TPoly;

use crate::Format;

pub enum Value {
    Int(BigInt),
    Poly(TPoly),
}

impl Value {
    /// Integers as decimal, polynomials as ascending coefficients.
    fn text(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Poly(p) => p.to_coeff_string(),
        }
    }

    // Big integers go out as decimal strings so no JSON reader rounds them.
    fn json_fields(&self, obj: &mut Map<String, Json>) {
        match self {
            Value::Int(v) => {
                obj.insert("value".into(), Json::String(v.to_string()));
            }
            Value::Poly(p) => {
                let coeffs: Vec<Json> = if p.is_zero() {
                    vec![Json::String("0".into())]
                } else {
                    p.coeffs().iter().map(|c| Json::String(c.to_string())).collect()
                };
                obj.insert("coefficients".into(), Json::Array(coeffs));
            }
        }
    }
}

pub struct Renderer {
    command: &'static str,
    format: Format,
    params: Map<String, Json>,
}

impl Renderer {
    pub fn new(command: &'static str, format: Format) -> Self {
        Renderer {
            command,
            format,
            params: Map::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl serde::Serialize) -> Self {
        self.params
            .insert(key.to_string(), serde_json::to_value(value).expect("serializable parameter"));
        self
    }

    fn line(&self, out: &mut dyn Write, n: u64, value: &Value) -> io::Result<()> {
        match self.format {
            Format::Plain => writeln!(out, "{}", value.text()),
            Format::Bfile => writeln!(out, "{n} {}", value.text()),
            Format::Structured => {
                let mut obj = Map::new();
                obj.insert("command".into(), json!(self.command));
                obj.insert("parameters".into(), Json::Object(self.params.clone()));
                obj.insert("n".into(), json!(n));
                value.json_fields(&mut obj);
                writeln!(out, "{}", Json::Object(obj))
            }
        }
    }

    /// A single value; `n` is the word length.
    pub fn point(&self, out: &mut dyn Write, n: u64, value: &Value) -> io::Result<()> {
        self.line(out, n, value)
    }

    /// Values for `n = 0, 1, 2, ...`.
    pub fn sequence(&self, out: &mut dyn Write, values: &[Value]) -> io::Result<()> {
        for (n, v) in values.iter().enumerate() {
            self.line(out, n as u64, v)?;
        }
        Ok(())
    }
}
