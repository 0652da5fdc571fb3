use std::io::Write;

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Writes records in the chosen format. CSV columns are the union of the
/// record keys in first-seen order, so all records are collected first.
pub fn emit(format: Format, records: &[Value]) -> std::io::Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            for r in records {
                writeln!(out, "{r}")?;
            }
        }
        Format::Text => {
            for r in records {
                writeln!(out, "{}", text_line(r))?;
            }
        }
        Format::Csv => {
            let rows: Vec<Map<String, Value>> = records.iter().map(flatten).collect();
            let mut header: Vec<String> = Vec::new();
            for row in &rows {
                for k in row.keys() {
                    if !header.contains(k) {
                        header.push(k.clone());
                    }
                }
            }
            // count columns stay together in size order, errors go last
            header.sort_by_key(|k| match (k.as_str(), count_index(k)) {
                ("error", _) => (2, 0),
                (_, Some(i)) => (1, i),
                _ => (0, 0),
            });
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for row in &rows {
                w.write_record(header.iter().map(|k| row.get(k).map(cell).unwrap_or_default()))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// A `sequence` array holds `s_2, s_3, ...` and becomes one column per
/// size; other arrays are joined into one cell.
fn flatten(record: &Value) -> Map<String, Value> {
    let mut out = Map::new();
    match record {
        Value::Object(map) => {
            for (k, v) in map {
                match (k.as_str(), v) {
                    ("sequence", Value::Array(items)) => {
                        for (i, item) in items.iter().enumerate() {
                            out.insert(format!("s{}", i + 2), item.clone());
                        }
                    }
                    _ => {
                        out.insert(k.clone(), v.clone());
                    }
                }
            }
        }
        other => {
            out.insert("value".into(), other.clone());
        }
    }
    out
}

fn count_index(key: &str) -> Option<usize> {
    key.strip_prefix('s')?.parse().ok()
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(" "),
        Value::Object(_) => v.to_string(),
        other => other.to_string(),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", cell(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => cell(other),
    }
}

fn text_line(v: &Value) -> String {
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) if s.contains('\n') => format!("{k}:\n{s}"),
                Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
                    let rows: Vec<String> = items.iter().map(inline).collect();
                    format!("{k}:\n  {}", rows.join("\n  "))
                }
                _ => format!("{k}: {}", cell(v)),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => cell(other),
    }
}
