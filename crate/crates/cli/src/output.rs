//! Records rendered as JSON, CSV or plain text.
//!
//! Floats are always printed with 17 significant digits (`{:.16e}`), so
//! identical inputs give byte-identical output.

use std::fmt::Write as _;

use clap::ValueEnum;
use dedekind_core::exact::to_f64;
use dedekind_core::{Rational, Scalar};
use serde::ser::{Error as _, SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Float(f64),
    Int(i64),
    Bool(bool),
    Null,
    Complex(f64, f64),
    /// Already-serialized JSON.
    Json(String),
}

pub fn f17(x: f64) -> String {
    format!("{x:.16e}")
}

fn raw<S: Serializer>(s: S, text: String) -> Result<S::Ok, S::Error> {
    RawValue::from_string(text)
        .map_err(S::Error::custom)?
        .serialize(s)
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Text(t) => s.serialize_str(t),
            Cell::Float(x) if x.is_finite() => raw(s, f17(*x)),
            Cell::Float(_) | Cell::Null => s.serialize_unit(),
            Cell::Int(i) => s.serialize_i64(*i),
            Cell::Bool(b) => s.serialize_bool(*b),
            Cell::Complex(re, im) => {
                let mut seq = s.serialize_seq(Some(2))?;
                seq.serialize_element(&Cell::Float(*re))?;
                seq.serialize_element(&Cell::Float(*im))?;
                seq.end()
            }
            Cell::Json(j) => raw(s, j.clone()),
        }
    }
}

impl Cell {
    pub fn rational(r: &Rational, numeric: bool) -> Cell {
        if numeric {
            Cell::Float(to_f64(r))
        } else {
            Cell::Text(r.to_string())
        }
    }

    pub fn scalar(x: &Scalar, numeric: bool) -> Cell {
        match x {
            Scalar::Exact(r) => Cell::rational(r, numeric),
            Scalar::Float(z) if z.im == 0.0 => Cell::Float(z.re),
            Scalar::Float(z) => Cell::Complex(z.re, z.im),
        }
    }

    pub fn json<T: Serialize>(value: &T) -> Cell {
        Cell::Json(serde_json::to_string(value).expect("plain data serializes"))
    }

    fn plain(&self) -> String {
        match self {
            Cell::Text(t) => t.clone(),
            Cell::Float(x) => f17(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Null => String::new(),
            Cell::Complex(re, im) => format!(
                "{}{}{}i",
                f17(*re),
                if *im < 0.0 { "" } else { "+" },
                f17(*im)
            ),
            Cell::Json(j) => j.clone(),
        }
    }

    fn csv(&self) -> String {
        let p = self.plain();
        if p.contains([',', '"', '\n']) {
            format!("\"{}\"", p.replace('"', "\"\""))
        } else {
            p
        }
    }
}

/// An ordered list of named cells.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(pub Vec<(&'static str, Cell)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &'static str, cell: Cell) -> Self {
        self.0.push((key, cell));
        self
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// A single record or a table of records.
pub enum Output {
    One(Record),
    Table(Vec<Record>),
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match (self, format) {
            (Output::One(r), Format::Json) => serde_json::to_string(r).expect("records serialize"),
            (Output::Table(rs), Format::Json) => {
                serde_json::to_string(rs).expect("records serialize")
            }
            (Output::One(r), Format::Csv) => csv(std::slice::from_ref(r)),
            (Output::Table(rs), Format::Csv) => csv(rs),
            (Output::One(r), Format::Human) => {
                let width = r.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                r.0.iter()
                    .map(|(k, v)| format!("{k:<width$}  {}", v.plain()))
                    .collect::<Vec<_>>()
                    .join("\n")
            }
            (Output::Table(rs), Format::Human) => rs
                .iter()
                .map(|r| {
                    r.0.iter()
                        .map(|(k, v)| format!("{k}={}", v.plain()))
                        .collect::<Vec<_>>()
                        .join("  ")
                })
                .collect::<Vec<_>>()
                .join("\n"),
        }
    }
}

fn csv(rows: &[Record]) -> String {
    let mut out = String::new();
    if let Some(first) = rows.first() {
        let header: Vec<&str> = first.0.iter().map(|(k, _)| *k).collect();
        out.push_str(&header.join(","));
        for r in rows {
            out.push('\n');
            let line: Vec<String> = r.0.iter().map(|(_, v)| v.csv()).collect();
            let _ = write!(out, "{}", line.join(","));
        }
    }
    out
}
