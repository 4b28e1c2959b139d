//! Plain-text tables for the default output mode.

use serde_json::{Map, Value};

pub fn table(payload: &Map<String, Value>) -> String {
    let mut out = String::new();
    write_object(&mut out, payload, 0);
    out
}

fn write_object(out: &mut String, obj: &Map<String, Value>, indent: usize) {
    let width = obj.keys().filter(|k| *k != "schema").map(|k| k.chars().count()).max().unwrap_or(0);
    let pad = " ".repeat(indent);
    for (key, value) in obj {
        if key == "schema" {
            continue;
        }
        if let Some(rows) = as_complex_matrix(value) {
            out.push_str(&format!("{pad}{key}:\n"));
            write_matrix(out, &rows, indent + 2);
        } else if let Some(rows) = as_real_matrix(value) {
            out.push_str(&format!("{pad}{key}:\n"));
            write_grid(out, rows, indent + 2);
        } else if let Some(mats) = as_matrix_list(value) {
            for (k, rows) in mats.iter().enumerate() {
                out.push_str(&format!("{pad}{key}[{k}]:\n"));
                write_matrix(out, rows, indent + 2);
            }
        } else if let Value::Object(inner) = value {
            out.push_str(&format!("{pad}{key}:\n"));
            write_object(out, inner, indent + 2);
        } else if let Some(items) = value.as_array().filter(|a| a.iter().any(Value::is_object)) {
            for (k, item) in items.iter().enumerate() {
                out.push_str(&format!("{pad}{key}[{k}]:\n"));
                match item {
                    Value::Object(inner) => write_object(out, inner, indent + 2),
                    other => out.push_str(&format!("{pad}  {}\n", inline(other))),
                }
            }
        } else {
            out.push_str(&format!("{pad}{key:<width$}  {}\n", inline(value)));
        }
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) => items.iter().map(inline).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

fn is_pair(v: &Value) -> bool {
    matches!(v.as_array(), Some(a) if a.len() == 2 && a.iter().all(Value::is_number))
}

/// Rows of `[re, im]` pairs, at least 2×2.
fn as_complex_matrix(v: &Value) -> Option<Vec<Vec<(String, String)>>> {
    let rows = v.as_array()?;
    if rows.len() < 2 {
        return None;
    }
    rows.iter()
        .map(|r| {
            let r = r.as_array()?;
            if r.len() < 2 || !r.iter().all(is_pair) {
                return None;
            }
            Some(
                r.iter()
                    .map(|z| {
                        let z = z.as_array().unwrap();
                        (z[0].to_string(), z[1].to_string())
                    })
                    .collect(),
            )
        })
        .collect()
}

fn as_matrix_list(v: &Value) -> Option<Vec<Vec<Vec<(String, String)>>>> {
    let items = v.as_array()?;
    if items.is_empty() {
        return None;
    }
    items.iter().map(as_complex_matrix).collect()
}

fn complex_text((re, im): &(String, String)) -> String {
    match (re.as_str(), im.as_str()) {
        (r, "0") => r.to_string(),
        ("0", i) => format!("{i}i"),
        (r, i) if i.starts_with('-') => format!("{r}{i}i"),
        (r, i) => format!("{r}+{i}i"),
    }
}

/// Square array of scalars, at least 2×2.
fn as_real_matrix(v: &Value) -> Option<Vec<Vec<String>>> {
    let rows = v.as_array()?;
    if rows.len() < 2 {
        return None;
    }
    rows.iter()
        .map(|r| {
            let r = r.as_array().filter(|r| r.len() == rows.len())?;
            r.iter()
                .map(|x| match x {
                    Value::Number(n) => Some(n.to_string()),
                    Value::String(s) => Some(s.clone()),
                    _ => None,
                })
                .collect()
        })
        .collect()
}

fn write_matrix(out: &mut String, rows: &[Vec<(String, String)>], indent: usize) {
    let cells = rows.iter().map(|r| r.iter().map(complex_text).collect()).collect();
    write_grid(out, cells, indent);
}

fn write_grid(out: &mut String, cells: Vec<Vec<String>>, indent: usize) {
    let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(0);
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&format!("{}{}\n", " ".repeat(indent), line.join("  ")));
    }
}
