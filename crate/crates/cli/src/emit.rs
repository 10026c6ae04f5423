use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};
use tripart::{Error, Partition};

/// An error with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<tripart::ParseError> for Failure {
    fn from(e: tripart::ParseError) -> Self {
        Failure::usage(e.to_string())
    }
}

pub type Outcome = Result<String, Failure>;

pub fn json<T: Serialize>(value: &T) -> Outcome {
    let mut text = serde_json::to_string(value).map_err(|e| Failure {
        code: 1,
        message: e.to_string(),
    })?;
    text.push('\n');
    Ok(text)
}

pub fn partition(p: &Partition) -> Value {
    json!({ "partition": p, "canonical": p.to_string() })
}

pub fn csv<R, I>(header: &str, rows: I) -> String
where
    R: IntoIterator,
    R::Item: std::fmt::Display,
    I: IntoIterator<Item = R>,
{
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        let mut first = true;
        for field in row {
            if !first {
                out.push(',');
            }
            first = false;
            write!(out, "{field}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}
