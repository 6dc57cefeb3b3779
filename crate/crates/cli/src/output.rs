//! Tabular output in CSV or JSON.
//!
//! CSV layout: one `# graetzkit <version> <command> <parameters>` line, the
//! column names, then data. Missing values are empty fields.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Missing,
}

impl Cell {
    /// Non-finite numbers become missing values.
    pub fn num(v: f64) -> Self {
        if v.is_finite() {
            Cell::Num(v)
        } else {
            Cell::Missing
        }
    }

    pub fn opt(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::num)
    }

    fn csv_field(&self) -> String {
        match self {
            Cell::Num(v) => format!("{v}"),
            Cell::Int(v) => format!("{v}"),
            Cell::Text(s) => s.clone(),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => json!(v),
            Cell::Int(v) => json!(v),
            Cell::Text(s) => json!(s),
            Cell::Missing => Value::Null,
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    /// Subcommand as typed, e.g. `figure fig2`.
    pub command: String,
    /// Parameters that reproduce the table when passed back as flags.
    pub parameters: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: impl Into<String>, parameters: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            command: command.into(),
            parameters: parameters.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn header_line(&self) -> String {
        let mut line = format!("# graetzkit {} {}", env!("CARGO_PKG_VERSION"), self.command);
        if !self.parameters.is_empty() {
            line.push(' ');
            line.push_str(&self.parameters);
        }
        line
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> CliResult<()> {
        writeln!(out, "{}", self.header_line())?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv_field))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> CliResult<()> {
        let rows: Vec<Value> = self.rows.iter().map(|r| Value::Array(r.iter().map(Cell::json).collect())).collect();
        let doc = json!({
            "generator": "graetzkit",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "parameters": self.parameters,
            "columns": self.columns,
            "rows": rows,
        });
        serde_json::to_writer_pretty(&mut out, &doc)?;
        writeln!(out)?;
        Ok(())
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> CliResult<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    /// Writes to `path`, or to stdout when no path is given.
    pub fn emit(&self, format: Format, path: Option<&Path>) -> CliResult<()> {
        match path {
            Some(p) => {
                let mut w = BufWriter::new(File::create(p)?);
                self.write(format, &mut w)?;
                w.flush()?;
            }
            None => {
                let stdout = io::stdout();
                let mut lock = stdout.lock();
                self.write(format, &mut lock)?;
            }
        }
        Ok(())
    }
}
