//! Human-readable tables from JSON values.

use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn pad(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn table(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            let rows: Vec<Vec<String>> = map.iter().map(|(k, v)| vec![k.clone(), cell(v)]).collect();
            pad(&rows)
        }
        Value::Array(items) if items.iter().all(|i| i.is_object()) && !items.is_empty() => {
            let keys: Vec<String> = items[0].as_object().expect("object").keys().cloned().collect();
            let mut rows = vec![keys.clone()];
            for i in items {
                rows.push(keys.iter().map(|k| cell(&i[k])).collect());
            }
            pad(&rows)
        }
        Value::Array(items) => items.iter().map(|i| cell(i) + "\n").collect(),
        other => cell(other) + "\n",
    }
}
