//! Flat CSV rendering of JSON payloads. Arrays of objects become one row per
//! element; nested values are written as compact JSON inside the cell.

use serde_json::Value;

fn escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => escape(s),
        Value::Null => String::new(),
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        _ => escape(&v.to_string()),
    }
}

pub fn from_json(v: &Value) -> String {
    match v {
        Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
            let mut keys: Vec<&String> = Vec::new();
            for it in items {
                for k in it.as_object().unwrap().keys() {
                    if !keys.contains(&k) {
                        keys.push(k);
                    }
                }
            }
            let mut out = keys.iter().map(|k| escape(k)).collect::<Vec<_>>().join(",") + "\n";
            for it in items {
                let row: Vec<String> = keys.iter().map(|k| it.get(k.as_str()).map(cell).unwrap_or_default()).collect();
                out += &(row.join(",") + "\n");
            }
            out
        }
        Value::Array(items) => items.iter().map(|x| cell(x) + "\n").collect(),
        Value::Object(m) => {
            let mut out = String::from("key,value\n");
            for (k, x) in m {
                out += &format!("{},{}\n", escape(k), cell(x));
            }
            out
        }
        _ => cell(v) + "\n",
    }
}

pub fn matrix(corner: &str, rows: &[String], cols: &[String], cells: Vec<Vec<String>>) -> String {
    let mut out = std::iter::once(corner.to_string()).chain(cols.iter().cloned()).map(|s| escape(&s)).collect::<Vec<_>>().join(",");
    out.push('\n');
    for (r, row) in rows.iter().zip(cells) {
        let line: Vec<String> = std::iter::once(r.clone()).chain(row).map(|s| escape(&s)).collect();
        out += &(line.join(",") + "\n");
    }
    out
}
