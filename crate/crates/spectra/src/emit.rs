//! CSV and JSON-lines serialization of result records.
//!
//! Reals are written as `{:.16e}`, seventeen significant digits, which
//! round-trips every f64. Non-finite reals become `NaN`, `inf` and `-inf`
//! in CSV and `null` in JSON.

use std::io::Write;
use std::path::Path;

use indexmap::{IndexMap, IndexSet};

use crate::record::{Record, Value};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    JsonLines,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::JsonLines => "jsonl",
        }
    }
}

pub fn format_real(v: f64) -> String {
    if v.is_nan() {
        "NaN".to_string()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{v:.16e}")
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Real(x) => format_real(*x),
        Value::Bool(b) => b.to_string(),
        Value::Text(s) => s.clone(),
    }
}

/// Header: `id` followed by the union of field names in first-seen order.
fn header(records: &[Record]) -> IndexSet<&str> {
    let mut cols = IndexSet::new();
    for r in records {
        for k in r.fields.keys() {
            cols.insert(k.as_str());
        }
    }
    cols
}

pub fn write_csv<W: Write>(out: W, records: &[Record]) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let cols = header(records);
    let mut row = vec!["id".to_string()];
    row.extend(cols.iter().map(|c| c.to_string()));
    w.write_record(&row)?;
    for r in records {
        row.clear();
        row.push(r.id.clone());
        row.extend(cols.iter().map(|c| r.fields.get(*c).map(csv_cell).unwrap_or_default()));
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn json_value(v: &Value) -> String {
    match v {
        Value::Int(i) => i.to_string(),
        Value::Real(x) if x.is_finite() => format_real(*x),
        Value::Real(_) => "null".to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Text(s) => serde_json::Value::from(s.as_str()).to_string(),
    }
}

pub fn write_json_lines<W: Write>(mut out: W, records: &[Record]) -> std::io::Result<()> {
    for r in records {
        let mut line = String::from("{\"id\":");
        line.push_str(&serde_json::Value::from(r.id.as_str()).to_string());
        for (k, v) in &r.fields {
            line.push(',');
            line.push_str(&serde_json::Value::from(k.as_str()).to_string());
            line.push(':');
            line.push_str(&json_value(v));
        }
        line.push_str("}\n");
        out.write_all(line.as_bytes())?;
    }
    out.flush()
}

pub fn write_records<W: Write>(out: W, records: &[Record], format: Format) -> std::io::Result<()> {
    match format {
        Format::Csv => write_csv(out, records).map_err(std::io::Error::other),
        Format::JsonLines => write_json_lines(out, records),
    }
}

pub fn emit_results(records: &[Record], format: Format, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let file = std::fs::File::create(p).map_err(|e| CliError::io(p, e))?;
            write_records(std::io::BufWriter::new(file), records, format).map_err(|e| CliError::io(p, e))
        }
        None => write_records(std::io::stdout().lock(), records, format).map_err(|e| CliError::io(Path::new("<stdout>"), e)),
    }
}

fn parse_cell(s: &str) -> Option<Value> {
    if s.is_empty() {
        return None;
    }
    Some(if let Ok(i) = s.parse::<i64>() {
        Value::Int(i)
    } else if s == "true" || s == "false" {
        Value::Bool(s == "true")
    } else if s == "NaN" || s == "inf" || s == "-inf" || s.contains('e') && s.parse::<f64>().is_ok() {
        Value::Real(s.parse().unwrap_or(f64::NAN))
    } else {
        Value::Text(s.to_string())
    })
}

/// Reads back what [`write_csv`] produced. Empty cells are absent fields.
pub fn read_csv(text: &str) -> csv::Result<Vec<Record>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let cols: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row?;
        let mut fields = IndexMap::new();
        for (c, cell) in cols.iter().zip(row.iter()).skip(1) {
            if let Some(v) = parse_cell(cell) {
                fields.insert(c.clone(), v);
            }
        }
        out.push(Record {
            id: row.get(0).unwrap_or_default().to_string(),
            fields,
        });
    }
    Ok(out)
}

/// Reads back what [`write_json_lines`] produced.
pub fn read_json_lines(text: &str) -> serde_json::Result<Vec<Record>> {
    let mut out = Vec::new();
    for line in text.lines().filter(|l| !l.is_empty()) {
        let obj: serde_json::Map<String, serde_json::Value> = serde_json::from_str(line)?;
        let mut fields = IndexMap::new();
        let mut id = String::new();
        for (k, v) in obj {
            let value = match v {
                serde_json::Value::String(s) if k == "id" => {
                    id = s;
                    continue;
                }
                serde_json::Value::String(s) => Value::Text(s),
                serde_json::Value::Bool(b) => Value::Bool(b),
                serde_json::Value::Null => Value::Real(f64::NAN),
                serde_json::Value::Number(n) => match n.as_i64() {
                    Some(i) if !n.to_string().contains(['e', '.']) => Value::Int(i),
                    _ => Value::Real(n.as_f64().unwrap_or(f64::NAN)),
                },
                other => Value::Text(other.to_string()),
            };
            fields.insert(k, value);
        }
        out.push(Record { id, fields });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Record {
        Record::new("zeta-eval-0")
            .with("t", 14.134725141734693)
            .with("n", 7i64)
            .with("ok", true)
            .with("method", "riemann-siegel, asymptotic")
            .with("tiny", -1.0e-300)
    }

    #[test]
    fn empty_csv_is_header_only() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &[]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "id\n");
    }

    #[test]
    fn csv_round_trip() {
        let r = sample();
        let mut buf = Vec::new();
        write_csv(&mut buf, std::slice::from_ref(&r)).unwrap();
        assert_eq!(read_csv(std::str::from_utf8(&buf).unwrap()).unwrap(), vec![r]);
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let mut buf = Vec::new();
        write_json_lines(&mut buf, std::slice::from_ref(&r)).unwrap();
        assert_eq!(read_json_lines(std::str::from_utf8(&buf).unwrap()).unwrap(), vec![r]);
    }

    #[test]
    fn csv_header_is_a_union() {
        let a = Record::new("x-0").with("a", 1i64);
        let b = Record::new("x-1").with("b", 2i64).with("a", 3i64);
        let mut buf = Vec::new();
        write_csv(&mut buf, &[a, b]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "id,a,b\nx-0,1,\nx-1,3,2\n");
    }

    #[test]
    fn reals_keep_seventeen_digits() {
        assert_eq!(format_real(0.1), "1.0000000000000001e-1");
        assert_eq!(format_real(-1.4603545088095868), "-1.4603545088095868e0");
        assert_eq!(format_real(f64::NAN), "NaN");
        assert_eq!(json_value(&Value::Real(f64::INFINITY)), "null");
    }
}
