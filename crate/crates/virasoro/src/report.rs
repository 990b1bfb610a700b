use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// `Ok` covers negative verdicts; `IdentityFailed` means a relation that must
/// hold did not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    IdentityFailed,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::IdentityFailed => 1,
        }
    }

    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Ok
        } else {
            Status::IdentityFailed
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub body: Value,
}

impl Outcome {
    pub fn new<T: Serialize>(status: Status, report: &T) -> Self {
        let body = serde_json::to_value(report).expect("reports serialize to JSON");
        Outcome { status, body }
    }

    pub fn ok<T: Serialize>(report: &T) -> Self {
        Self::new(Status::Ok, report)
    }
}

/// Object keys come out sorted: `serde_json::Map` is a `BTreeMap` here.
pub fn emit(body: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(body).expect("Value always serializes"),
        Format::Table => {
            let mut out = String::new();
            table_rows(body, "", &mut out);
            out
        }
    }
}

fn table_rows(v: &Value, path: &str, out: &mut String) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                table_rows(x, &p, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object()) => {
            for (i, x) in items.iter().enumerate() {
                table_rows(x, &format!("{path}[{i}]"), out);
            }
        }
        Value::String(s) => {
            let _ = writeln!(out, "{path:<32} {s}");
        }
        other => {
            let _ = writeln!(out, "{path:<32} {other}");
        }
    }
}
