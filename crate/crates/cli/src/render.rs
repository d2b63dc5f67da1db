//! Output document assembly: every subcommand produces a `Doc`, rendered
//! either as plain text lines or as a versioned JSON document with stable
//! (sorted) key order.

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use setqm::Rat;

pub const SCHEMA_VERSION: &str = "1";

pub struct Doc {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub text: Vec<String>,
    pub float: bool,
}

impl Doc {
    pub fn new(command: &str, float: bool) -> Self {
        Doc {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            text: Vec::new(),
            float,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    /// Records a rational result as a reduced "num/den" string, with a
    /// floating sibling when `--float` is active.
    pub fn result_rat(&mut self, key: &str, value: &Rat) {
        self.results
            .insert(key.to_string(), Value::String(rat_json(value)));
        if self.float {
            if let Some(f) = value.to_f64() {
                self.results.insert(format!("{key}_float"), json!(f));
            }
        }
    }

    pub fn line(&mut self, line: impl Into<String>) {
        self.text.push(line.into());
    }

    /// Renders a rational for text output: reduced form, with a decimal
    /// approximation when `--float` is active.
    pub fn fmt_rat(&self, value: &Rat) -> String {
        if self.float {
            match value.to_f64() {
                Some(f) => format!("{value} (~{f})"),
                None => value.to_string(),
            }
        } else {
            value.to_string()
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "results": Value::Object(self.results.clone()),
        })
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.to_json()).expect("document serializes")
        } else {
            self.text.join("\n")
        }
    }
}

/// Rationals serialize as "num/den", always reduced, denominator ≥ 1.
pub fn rat_json(value: &Rat) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// A list of (label, rational) pairs as a JSON object.
pub fn distribution_json(entries: &[(String, Rat)]) -> Value {
    let mut map = Map::new();
    for (label, p) in entries {
        map.insert(label.clone(), Value::String(rat_json(p)));
    }
    Value::Object(map)
}

/// 0/1 matrix as JSON rows.
pub fn bit_rows_json(rows: &[Vec<u8>]) -> Value {
    json!(rows)
}

/// Aligns rows of cells into a text table.
pub fn text_table(rows: &[Vec<String>]) -> Vec<String> {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    rows.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(i, cell)| format!("{:width$}", cell, width = widths[i]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect()
}
