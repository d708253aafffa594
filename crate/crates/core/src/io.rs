//! Planes and lines files, and CSV output.
//!
//! A planes file has one plane per row, `a b c d` as rational literals
//! separated by whitespace; a lines file has rows `a b c`. Text after `#` is
//! a comment and blank rows are skipped. Rows get ids `0, 1, ...` in order.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::exact::{parse_rational, ExactScalar};
use crate::geometry::{Line2, Plane};
use crate::harness::HarnessError;

/// Non-comment rows as `(line number, values)`, each with exactly `fields` values.
fn parse_rows(text: &str, fields: usize) -> Result<Vec<(usize, Vec<ExactScalar>)>, HarnessError> {
    let mut rows = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != fields {
            return Err(HarnessError::Parse {
                line,
                message: format!("expected {fields} fields, found {}", tokens.len()),
            });
        }
        let values = tokens
            .iter()
            .map(|t| parse_rational(t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| HarnessError::Parse {
                line,
                message: e.to_string(),
            })?;
        rows.push((line, values));
    }
    Ok(rows)
}

pub fn parse_planes(text: &str) -> Result<Vec<Plane>, HarnessError> {
    let mut planes = Vec::new();
    for (line, values) in parse_rows(text, 4)? {
        let [a, b, c, d] = <[ExactScalar; 4]>::try_from(values).expect("four fields");
        let plane = Plane::new(planes.len(), a, b, c, d).map_err(|e| HarnessError::Parse {
            line,
            message: e.to_string(),
        })?;
        planes.push(plane);
    }
    Ok(planes)
}

pub fn parse_lines(text: &str) -> Result<Vec<Line2>, HarnessError> {
    let mut lines = Vec::new();
    for (line, values) in parse_rows(text, 3)? {
        let [a, b, c] = <[ExactScalar; 3]>::try_from(values).expect("three fields");
        let l = Line2::new(lines.len(), a, b, c).map_err(|e| HarnessError::Parse {
            line,
            message: e.to_string(),
        })?;
        lines.push(l);
    }
    Ok(lines)
}

/// Parses a single plane given inline, e.g. `"1 1 1 -1/2"`.
pub fn parse_plane_literal(text: &str, id: usize) -> Result<Plane, HarnessError> {
    let planes = parse_planes(text)?;
    match planes.as_slice() {
        [p] => Ok(p.with_id(id)),
        _ => Err(HarnessError::Parse {
            line: 1,
            message: "expected exactly one plane".into(),
        }),
    }
}

pub fn parse_line_literal(text: &str, id: usize) -> Result<Line2, HarnessError> {
    let lines = parse_lines(text)?;
    match lines.as_slice() {
        [l] => Ok(l.with_id(id)),
        _ => Err(HarnessError::Parse {
            line: 1,
            message: "expected exactly one line".into(),
        }),
    }
}

pub fn parse_planes_file(path: &Path) -> Result<Vec<Plane>, HarnessError> {
    parse_planes(&fs::read_to_string(path)?)
}

pub fn parse_lines_file(path: &Path) -> Result<Vec<Line2>, HarnessError> {
    parse_lines(&fs::read_to_string(path)?)
}

/// Planes in the file format, one canonical row each.
pub fn format_planes(planes: &[Plane]) -> String {
    planes.iter().map(|p| format!("{p}\n")).collect()
}

pub fn format_lines(lines: &[Line2]) -> String {
    lines.iter().map(|l| format!("{l}\n")).collect()
}

/// A header plus rows of already formatted cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn new(header: &[&str]) -> Self {
        CsvTable {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// Comma separated, header first, LF line endings.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

pub fn emit_csv(table: &CsvTable, path: &Path) -> Result<(), HarnessError> {
    let mut file = fs::File::create(path)?;
    file.write_all(table.render().as_bytes())?;
    Ok(())
}
