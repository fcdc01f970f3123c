//! Plain-text vector files: one real per line, an optional `# n=<order>`
//! header, other `#` lines ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use crate::error::CliError;

pub fn parse_vector(text: &str) -> Result<Vec<f64>, String> {
    let mut header: Option<usize> = None;
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(n) = comment.trim().strip_prefix("n=") {
                if header.is_some() || !values.is_empty() {
                    return Err(format!("line {}: header must come first", lineno + 1));
                }
                let n = n
                    .trim()
                    .parse()
                    .map_err(|_| format!("line {}: bad header {line:?}", lineno + 1))?;
                header = Some(n);
            }
            continue;
        }
        let v: f64 = line
            .parse()
            .map_err(|_| format!("line {}: not a number: {line:?}", lineno + 1))?;
        if !v.is_finite() {
            return Err(format!("line {}: non-finite value", lineno + 1));
        }
        values.push(v);
    }
    if let Some(n) = header {
        if n != values.len() {
            return Err(format!("header says n={n} but file has {} values", values.len()));
        }
    }
    Ok(values)
}

pub fn format_vector(v: &[f64]) -> String {
    let mut out = format!("# n={}\n", v.len());
    for x in v {
        writeln!(out, "{x}").unwrap();
    }
    out
}

pub fn read_vector(path: &Path) -> Result<Vec<f64>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::file(path, e))?;
    parse_vector(&text).map_err(|msg| CliError::File(format!("{}: {msg}", path.display())))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::file(path, e))
}

pub fn write_vector(path: &Path, v: &[f64]) -> Result<(), CliError> {
    write_text(path, &format_vector(v))
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

pub fn write_json<T: Serialize>(path: &Path, report: &T) -> Result<(), CliError> {
    write_text(path, &to_json(report))
}
