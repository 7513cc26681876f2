//! The result envelope and its two renderings.

use serde_json::{json, Value};

/// Version of the payload schemas shipped under `schemas/`.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

pub struct CommandResult {
    pub command: String,
    pub payload: Result<Value, String>,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    pub fn to_json(&self) -> Value {
        let (status, payload) = match &self.payload {
            Ok(p) => ("ok", p.clone()),
            Err(e) => ("error", json!({ "error": e })),
        };
        json!({
            "status": status,
            "command": self.command,
            "version": SCHEMA_VERSION,
            "payload": payload,
            "diagnostics": self.diagnostics,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("serializable"),
            Format::Table => {
                let env = self.to_json();
                let mut out = String::new();
                out.push_str(&format!(
                    "status   {}\ncommand  {}\n",
                    env["status"].as_str().unwrap(),
                    self.command
                ));
                out.push('\n');
                render_value(&env["payload"], 0, &mut out);
                for d in &self.diagnostics {
                    out.push_str(&format!("note: {d}\n"));
                }
                out
            }
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, val) in map {
                match val {
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_rows(items, indent + 2, out);
                    }
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(val, indent + 2, out);
                    }
                    Value::Array(_) => out.push_str(&format!("{pad}{k:<width$}  {val}\n")),
                    _ => out.push_str(&format!("{pad}{k:<width$}  {}\n", scalar(val))),
                }
            }
        }
        Value::Array(items) if items.iter().any(Value::is_object) => {
            render_rows(items, indent, out)
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

/// Arrays of objects become aligned tables keyed by the union of fields.
fn render_rows(items: &[Value], indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    let mut cols: Vec<String> = Vec::new();
    for item in items {
        if let Value::Object(m) = item {
            for k in m.keys() {
                if !cols.contains(k) {
                    cols.push(k.clone());
                }
            }
        }
    }
    let cell = |item: &Value, c: &str| match item.get(c) {
        Some(v) if is_scalar(v) => scalar(v),
        Some(v) => v.to_string(),
        None => "-".into(),
    };
    let widths: Vec<usize> = cols
        .iter()
        .map(|c| {
            items
                .iter()
                .map(|i| cell(i, c).len())
                .chain([c.len()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |cells: Vec<String>| {
        let row: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        format!("{pad}{}\n", row.join("  ").trim_end())
    };
    out.push_str(&line(cols.clone()));
    for item in items {
        out.push_str(&line(cols.iter().map(|c| cell(item, c)).collect()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_lists_every_field() {
        let r = CommandResult {
            command: "x".into(),
            payload: Ok(
                json!({"t": 4, "rows": [{"a": 1, "b": [1, 2]}, {"a": 2}], "m": {"k": true}}),
            ),
            diagnostics: vec!["hello".into()],
        };
        let t = r.render(Format::Table);
        for needle in ["t     4", "a  b", "1  [1,2]", "2  -", "k  true", "note: hello"] {
            assert!(t.contains(needle), "{needle:?} missing from\n{t}");
        }
        let e = CommandResult {
            command: "x".into(),
            payload: Err("boom".into()),
            diagnostics: vec![],
        };
        assert_eq!(e.to_json()["status"], "error");
        assert_eq!(e.to_json()["payload"]["error"], "boom");
    }
}
