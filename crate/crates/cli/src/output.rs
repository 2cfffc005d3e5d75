//! Rendering of key/value reports and row tables in the three output formats.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::ser::{Serialize, SerializeMap, Serializer};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Ordered key/value report. Serializes as a JSON object in insertion order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub rows: Vec<(String, Value)>,
}

impl Report {
    pub fn push(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.rows.push((key.to_string(), value.into()));
        self
    }

    pub fn write<W: Write + ?Sized>(&self, out: &mut W, format: Format) -> io::Result<()> {
        match format {
            Format::Table => {
                let width = self
                    .rows
                    .iter()
                    .map(|(k, _)| k.chars().count())
                    .max()
                    .unwrap_or(0);
                for (k, v) in &self.rows {
                    writeln!(out, "{k:<width$}  {}", plain(v))?;
                }
                Ok(())
            }
            Format::Json => {
                serde_json::to_writer(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["key", "value"])?;
                for (k, v) in &self.rows {
                    w.write_record([k.as_str(), &plain(v)])?;
                }
                w.flush()
            }
        }
    }
}

impl Serialize for Report {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.rows.len()))?;
        for (k, v) in &self.rows {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// A table with a fixed header. JSON output is one object per row.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write<W: Write + ?Sized>(&self, out: &mut W, format: Format) -> io::Result<()> {
        match format {
            Format::Table => {
                let cells: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(plain).collect())
                    .collect();
                let widths: Vec<usize> = (0..self.header.len())
                    .map(|i| {
                        cells
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([self.header[i].chars().count()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |cols: &[String]| {
                    cols.iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c:>w$}"))
                        .collect::<Vec<_>>()
                        .join("  ")
                };
                writeln!(out, "{}", line(&self.header))?;
                for r in &cells {
                    writeln!(out, "{}", line(r))?;
                }
                Ok(())
            }
            Format::Json => {
                for r in &self.rows {
                    let obj: Report = Report {
                        rows: self.header.iter().cloned().zip(r.iter().cloned()).collect(),
                    };
                    serde_json::to_writer(&mut *out, &obj)?;
                    writeln!(out)?;
                }
                Ok(())
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for r in &self.rows {
                    w.write_record(r.iter().map(plain))?;
                }
                w.flush()
            }
        }
    }
}

/// Strings unquoted, arrays space-separated, everything else as JSON.
pub fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(plain).collect::<Vec<_>>().join(" "),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn render(f: impl Fn(&mut Vec<u8>)) -> String {
        let mut buf = Vec::new();
        f(&mut buf);
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn report_keeps_insertion_order() {
        let mut r = Report::default();
        r.push("genus", 4)
            .push("frobenius", 7)
            .push("gaps", json!([1, 2, 4, 7]));
        assert_eq!(
            render(|b| r.write(b, Format::Json).unwrap()),
            "{\"genus\":4,\"frobenius\":7,\"gaps\":[1,2,4,7]}\n"
        );
        assert_eq!(
            render(|b| r.write(b, Format::Table).unwrap()),
            "genus      4\nfrobenius  7\ngaps       1 2 4 7\n"
        );
        assert_eq!(
            render(|b| r.write(b, Format::Csv).unwrap()),
            "key,value\ngenus,4\nfrobenius,7\ngaps,1 2 4 7\n"
        );
    }

    #[test]
    fn table_formats() {
        let mut t = Table::new(&["d", "F"]);
        t.push(vec![json!(1), json!(19)]);
        t.push(vec![json!(10), json!(-1)]);
        assert_eq!(
            render(|b| t.write(b, Format::Table).unwrap()),
            " d   F\n 1  19\n10  -1\n"
        );
        assert_eq!(
            render(|b| t.write(b, Format::Json).unwrap()),
            "{\"d\":1,\"F\":19}\n{\"d\":10,\"F\":-1}\n"
        );
    }
}
