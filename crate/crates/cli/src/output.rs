use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;
use crate::error::{usage, CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Cell {
    Int(u128),
    Float(f64),
    Na,
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Float(x) => x.to_string(),
            Cell::Na => "NA".into(),
        }
    }

    fn json(&self) -> Value {
        match *self {
            Cell::Int(n) => u64::try_from(n).map(Value::from).unwrap_or_else(|_| Value::from(n.to_string())),
            Cell::Float(x) => Value::from(x),
            Cell::Na => Value::Null,
        }
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        Cell::Int(n as u128)
    }
}

impl From<u128> for Cell {
    fn from(n: u128) -> Self {
        Cell::Int(n)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Na, Into::into)
    }
}

pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

pub struct Sink {
    out: Option<PathBuf>,
    format: Option<Format>,
}

impl Sink {
    pub fn new(out: Option<PathBuf>, format: Option<Format>) -> Self {
        Sink { out, format }
    }

    /// Tables default to CSV; `--format json` gives an array of row objects.
    pub fn table(&self, table: &Table) -> Result<()> {
        match self.format.unwrap_or(Format::Csv) {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&table.header)?;
                for row in &table.rows {
                    w.write_record(row.iter().map(Cell::text))?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Write(e.into_error()))?;
                self.emit(&bytes)
            }
            Format::Json => {
                let rows: Vec<Value> = table
                    .rows
                    .iter()
                    .map(|row| {
                        Value::Object(table.header.iter().cloned().zip(row.iter().map(Cell::json)).collect())
                    })
                    .collect();
                self.json(&rows)
            }
        }
    }

    /// Reports are JSON only.
    pub fn report<T: Serialize>(&self, value: &T) -> Result<()> {
        if self.format == Some(Format::Csv) {
            return usage("this command writes a JSON report; --format csv is not available");
        }
        self.json(value)
    }

    fn json<T: Serialize + ?Sized>(&self, value: &T) -> Result<()> {
        let mut bytes = serde_json::to_vec_pretty(value)?;
        bytes.push(b'\n');
        self.emit(&bytes)
    }

    fn emit(&self, bytes: &[u8]) -> Result<()> {
        match &self.out {
            Some(path) => {
                let io_err = |source| CliError::Io { path: path.clone(), source };
                let mut f = File::create(path).map_err(io_err)?;
                f.write_all(bytes).map_err(io_err)?;
            }
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(bytes)?;
                stdout.flush()?;
            }
        }
        Ok(())
    }
}
