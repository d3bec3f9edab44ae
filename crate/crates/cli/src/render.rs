//! Plain-text rendering of JSON reports for `--pretty`.

use serde_json::{Map, Value};

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn grid(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    out += &line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>());
    for r in rows {
        out += &line(r);
    }
    out
}

// Columns are the union of keys in first-seen order.
fn records(items: &[Value]) -> Option<String> {
    let mut keys: Vec<String> = Vec::new();
    for it in items {
        for k in it.as_object()?.keys() {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    let rows: Vec<Vec<String>> = items
        .iter()
        .map(|it| keys.iter().map(|k| it.get(k).map(cell).unwrap_or_default()).collect())
        .collect();
    Some(grid(&keys, &rows))
}

fn object(m: &Map<String, Value>) -> String {
    let mut scalars = Vec::new();
    let mut sections = String::new();
    for (k, v) in m {
        match v {
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
                sections += &format!("\n{k}:\n{}", records(items).unwrap_or_default());
            }
            _ => scalars.push(vec![k.clone(), cell(v)]),
        }
    }
    let mut out = String::new();
    let width = scalars.iter().map(|r| r[0].chars().count()).max().unwrap_or(0);
    for r in &scalars {
        out += &format!("{:width$}  {}\n", r[0], r[1]);
    }
    out + &sections
}

/// Renders a report: arrays of records as aligned columns, objects as
/// key/value lines followed by any nested record lists.
pub fn table(v: &Value) -> String {
    match v {
        Value::Array(items) if items.is_empty() => "(empty)\n".into(),
        Value::Array(items) => records(items).unwrap_or_else(|| items.iter().map(|i| cell(i) + "\n").collect()),
        Value::Object(m) => object(m),
        other => cell(other) + "\n",
    }
}
