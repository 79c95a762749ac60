//! Aligned text rendering of JSON results.

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(", ")
        }
        Value::Array(items) => items.iter().map(Value::to_string).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn is_table(v: &Value) -> bool {
    matches!(v, Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object))
}

fn collect_rows(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>, tables: &mut Vec<(String, Vec<Value>)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                if let Value::Object(_) = x {
                    collect_rows(&key, x, rows, tables);
                } else if is_table(x) {
                    tables.push((key, x.as_array().cloned().unwrap_or_default()));
                } else {
                    rows.push((key, scalar(x)));
                }
            }
        }
        other => rows.push((prefix.to_string(), scalar(other))),
    }
}

fn table(name: &str, items: &[Value]) -> String {
    let mut cols: Vec<String> = Vec::new();
    for item in items {
        if let Value::Object(map) = item {
            for k in map.keys() {
                if !cols.contains(k) {
                    cols.push(k.clone());
                }
            }
        }
    }
    let cells: Vec<Vec<String>> = items
        .iter()
        .map(|item| cols.iter().map(|c| scalar(item.get(c).unwrap_or(&Value::Null))).collect())
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |row: &[String]| {
        row.iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = format!("{name}:\n  {}\n", line(&cols));
    for row in &cells {
        out.push_str(&format!("  {}\n", line(row)));
    }
    out
}

pub fn render_text(command: &str, result: &Value) -> String {
    let mut rows = Vec::new();
    let mut tables = Vec::new();
    collect_rows("", result, &mut rows, &mut tables);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = format!("{command}\n");
    for (k, v) in &rows {
        out.push_str(&format!("  {k:<width$}  {v}\n"));
    }
    for (name, items) in &tables {
        out.push_str(&table(name, items));
    }
    out
}
