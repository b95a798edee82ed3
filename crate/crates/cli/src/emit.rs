//! Output formats. Every command produces a JSON document and a flat table;
//! the table is written as CSV or as TSV with `#` header lines.

use std::io::Write;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Tsv,
}

#[derive(Debug, Default)]
pub struct Table {
    pub comments: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { comments: Vec::new(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

pub struct Emission {
    pub json: Value,
    pub table: Table,
}

/// Re-parsing through `Value` fixes the key order (sorted maps), so emitted
/// JSON round-trips byte for byte.
pub fn json_text(v: &Value) -> String {
    let canonical: Value = serde_json::from_str(&v.to_string()).expect("valid json");
    let mut s = serde_json::to_string_pretty(&canonical).expect("serializable");
    s.push('\n');
    s
}

pub fn render(e: &Emission, format: Format) -> Result<Vec<u8>, String> {
    match format {
        Format::Json => Ok(json_text(&e.json).into_bytes()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&e.table.columns).map_err(|x| x.to_string())?;
            for r in &e.table.rows {
                w.write_record(r).map_err(|x| x.to_string())?;
            }
            w.into_inner().map_err(|x| x.to_string())
        }
        Format::Tsv => {
            let mut out = Vec::new();
            for c in &e.table.comments {
                writeln!(out, "# {c}").map_err(|x| x.to_string())?;
            }
            writeln!(out, "# {}", e.table.columns.join("\t")).map_err(|x| x.to_string())?;
            for r in &e.table.rows {
                writeln!(out, "{}", r.join("\t")).map_err(|x| x.to_string())?;
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_is_canonical() {
        let v = json!({"b": 1, "a": {"d": "x", "c": [1, 2]}});
        let s = json_text(&v);
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        let again: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(json_text(&again), s);
    }

    #[test]
    fn tsv_and_csv() {
        let mut t = Table::new(&["x", "y"]);
        t.comments.push("note".into());
        t.push(vec!["1".into(), "2".into()]);
        let e = Emission { json: Value::Null, table: t };
        assert_eq!(String::from_utf8(render(&e, Format::Tsv).unwrap()).unwrap(), "# note\n# x\ty\n1\t2\n");
        assert_eq!(String::from_utf8(render(&e, Format::Csv).unwrap()).unwrap(), "x,y\n1,2\n");
    }
}
