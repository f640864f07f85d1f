//! Count tables and their serializations.
//!
//! Four formats are supported:
//!
//! - `table`: one aligned block per family, for reading.
//! - `csv`: header `family,n,value`, one row per entry.
//! - `json`: an array of `{"family": ..., "counts": [{"n": ..., "value": "..."}]}`
//!   objects; values are decimal strings so consumers never overflow.
//! - `bfile`: OEIS-style `n a(n)` lines, each family preceded by a
//!   `# <family>` comment line.
//!
//! CSV and b-file output can be parsed back into [`CountTable`]s.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::json;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
    Bfile,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "bfile" => Ok(OutputFormat::Bfile),
            other => Err(Error::InvalidArgument(format!("unknown format {other:?}"))),
        }
    }
}

/// `(n, value)` rows for one labelled sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub family: String,
    pub rows: Vec<(usize, BigInt)>,
}

impl CountTable {
    pub fn new(family: impl Into<String>, rows: Vec<(usize, BigInt)>) -> Self {
        CountTable {
            family: family.into(),
            rows,
        }
    }
}

pub fn render(format: OutputFormat, tables: &[CountTable]) -> String {
    match format {
        OutputFormat::Table => render_table(tables),
        OutputFormat::Json => render_json(tables),
        OutputFormat::Csv => render_csv(tables),
        OutputFormat::Bfile => render_bfile(tables),
    }
}

pub fn render_table(tables: &[CountTable]) -> String {
    let mut out = String::new();
    for (i, table) in tables.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let values: Vec<String> = table.rows.iter().map(|(_, v)| v.to_string()).collect();
        let n_width = table
            .rows
            .iter()
            .map(|(n, _)| n.to_string().len())
            .chain([1])
            .max()
            .unwrap_or(1);
        let v_width = values.iter().map(String::len).chain([5]).max().unwrap_or(5);
        let _ = writeln!(out, "{}", table.family);
        let _ = writeln!(out, "{:>n_width$}  {:>v_width$}", "n", "count");
        for ((n, _), v) in table.rows.iter().zip(&values) {
            let _ = writeln!(out, "{n:>n_width$}  {v:>v_width$}");
        }
    }
    out
}

pub fn render_csv(tables: &[CountTable]) -> String {
    let mut out = String::from("family,n,value\n");
    for table in tables {
        for (n, v) in &table.rows {
            let _ = writeln!(out, "{},{n},{v}", table.family);
        }
    }
    out
}

pub fn render_json(tables: &[CountTable]) -> String {
    let doc: Vec<_> = tables
        .iter()
        .map(|t| {
            json!({
                "family": t.family,
                "counts": t.rows.iter().map(|(n, v)| json!({"n": n, "value": v.to_string()})).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&doc).expect("JSON of strings and integers");
    s.push('\n');
    s
}

pub fn render_bfile(tables: &[CountTable]) -> String {
    let mut out = String::new();
    for table in tables {
        let _ = writeln!(out, "# {}", table.family);
        for (n, v) in &table.rows {
            let _ = writeln!(out, "{n} {v}");
        }
    }
    out
}

fn parse_error(line: usize, msg: &str) -> Error {
    Error::InvalidArgument(format!("line {line}: {msg}"))
}

fn parse_row(line: usize, n: &str, v: &str) -> Result<(usize, BigInt)> {
    let n = n.trim().parse().map_err(|_| parse_error(line, "bad index"))?;
    let v = v.trim().parse().map_err(|_| parse_error(line, "bad value"))?;
    Ok((n, v))
}

/// Parses b-file text. Each `#` comment line starts a new family; blank
/// lines are ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<CountTable>> {
    let mut tables: Vec<CountTable> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('#') {
            tables.push(CountTable::new(name.trim(), Vec::new()));
            continue;
        }
        let (n, v) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| parse_error(i + 1, "expected `n a(n)`"))?;
        let row = parse_row(i + 1, n, v)?;
        match tables.last_mut() {
            Some(t) => t.rows.push(row),
            None => tables.push(CountTable::new("", vec![row])),
        }
    }
    Ok(tables)
}

/// Parses CSV produced by [`render_csv`]; consecutive rows with the same
/// family form one table.
pub fn parse_csv(text: &str) -> Result<Vec<CountTable>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == "family,n,value" => {}
        _ => return Err(parse_error(1, "expected header `family,n,value`")),
    }
    let mut tables: Vec<CountTable> = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let (Some(family), Some(n), Some(v), None) =
            (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Err(parse_error(i + 1, "expected three fields"));
        };
        let row = parse_row(i + 1, n, v)?;
        match tables.last_mut() {
            Some(t) if t.family == family => t.rows.push(row),
            _ => tables.push(CountTable::new(family, vec![row])),
        }
    }
    Ok(tables)
}
