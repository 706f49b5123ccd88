//! Plain-text formats for groups, automorphisms and quandles.
//!
//! ```text
//! group <n> <name>        aut <n>            quandle <n> <name>
//! <n rows of n indices>   <n indices>        <n rows of n indices>
//! ```
//!
//! Lines starting with `#` are comments and are skipped on input.

use std::fmt::Write as _;

use thiserror::Error;

use crate::group::{automorphism_from_permutation, FiniteGroup, GroupAutomorphism, GroupError};
use crate::quandle::{validate_table, Quandle, QuandleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("axiom violation: {0}")]
    AxiomViolation(crate::quandle::AxiomViolation),
    #[error(transparent)]
    Quandle(QuandleError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Parse { line, message: message.into() })
}

fn write_rows(out: &mut String, n: usize, cell: impl Fn(usize, usize) -> usize) {
    for a in 0..n {
        for b in 0..n {
            if b > 0 {
                out.push(' ');
            }
            write!(out, "{}", cell(a, b)).unwrap();
        }
        out.push('\n');
    }
}

pub fn emit_group(g: &FiniteGroup) -> String {
    let mut out = format!("group {} {}\n", g.order(), g.name());
    write_rows(&mut out, g.order(), |a, b| g.mul(a, b));
    out
}

pub fn emit_automorphism(phi: &GroupAutomorphism<'_>) -> String {
    let perm: Vec<String> = phi.perm().iter().map(usize::to_string).collect();
    format!("aut {}\n{}\n", perm.len(), perm.join(" "))
}

pub fn emit_quandle(q: &Quandle) -> String {
    let mut out = format!("quandle {} {}\n", q.order(), q.name());
    write_rows(&mut out, q.order(), |x, y| q.op(x, y));
    out
}

/// Non-comment lines with their 1-based physical line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

struct Header {
    line: usize,
    order: usize,
    name: String,
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    with_name: bool,
) -> Result<Header, FormatError> {
    let Some((line, text)) = lines.next() else {
        return parse_err(1, format!("missing `{keyword}` header"));
    };
    let mut parts = text.splitn(3, char::is_whitespace);
    if parts.next() != Some(keyword) {
        return parse_err(line, format!("expected `{keyword}` header"));
    }
    let order = match parts.next().map(str::parse::<usize>) {
        Some(Ok(n)) if n > 0 => n,
        _ => return parse_err(line, "expected a positive order"),
    };
    let name = parts.next().map(str::trim).unwrap_or("").to_string();
    if with_name && name.is_empty() {
        return parse_err(line, "missing name");
    }
    Ok(Header { line, order, name })
}

fn parse_row(line: usize, text: &str, n: usize) -> Result<Vec<usize>, FormatError> {
    let row: Vec<usize> = text
        .split_whitespace()
        .map(|t| t.parse::<usize>().or_else(|_| parse_err(line, format!("bad index `{t}`"))))
        .collect::<Result<_, _>>()?;
    if row.len() != n {
        return parse_err(line, format!("expected {n} entries, found {}", row.len()));
    }
    if let Some(&v) = row.iter().find(|&&v| v >= n) {
        return parse_err(line, format!("index {v} out of range for order {n}"));
    }
    Ok(row)
}

fn parse_rows<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header: &Header,
) -> Result<Vec<Vec<usize>>, FormatError> {
    let n = header.order;
    let mut rows = Vec::with_capacity(n);
    let mut last = header.line;
    for _ in 0..n {
        let Some((line, text)) = lines.next() else {
            return parse_err(last + 1, format!("expected {n} rows, found {}", rows.len()));
        };
        rows.push(parse_row(line, text, n)?);
        last = line;
    }
    if let Some((line, _)) = lines.next() {
        return parse_err(line, "unexpected trailing content");
    }
    Ok(rows)
}

pub fn parse_group(text: &str) -> Result<FiniteGroup, FormatError> {
    let mut lines = content_lines(text);
    let header = parse_header(&mut lines, "group", true)?;
    let rows = parse_rows(&mut lines, &header)?;
    Ok(FiniteGroup::from_table(header.name, rows)?)
}

pub fn parse_automorphism<'g>(text: &str, group: &'g FiniteGroup) -> Result<GroupAutomorphism<'g>, FormatError> {
    let mut lines = content_lines(text);
    let header = parse_header(&mut lines, "aut", false)?;
    if header.order != group.order() {
        return parse_err(
            header.line,
            format!("automorphism of order {} for group of order {}", header.order, group.order()),
        );
    }
    let Some((line, row)) = lines.next() else {
        return parse_err(header.line + 1, "missing permutation line");
    };
    let perm = parse_row(line, row, header.order)?;
    if let Some((line, _)) = lines.next() {
        return parse_err(line, "unexpected trailing content");
    }
    Ok(automorphism_from_permutation(group, perm)?)
}

/// A parsed but unvalidated quandle table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTable {
    pub name: String,
    pub order: usize,
    pub op: Vec<usize>,
}

impl RawTable {
    pub fn validate(&self) -> Result<(), QuandleError> {
        validate_table(self.order, &self.op)
    }
}

/// Parses the table without checking the quandle axioms.
pub fn parse_quandle_table(text: &str) -> Result<RawTable, FormatError> {
    let mut lines = content_lines(text);
    let header = parse_header(&mut lines, "quandle", true)?;
    let rows = parse_rows(&mut lines, &header)?;
    Ok(RawTable { name: header.name, order: header.order, op: rows.concat() })
}

/// Parses and validates a quandle file.
pub fn parse_quandle_file(text: &str) -> Result<Quandle, FormatError> {
    let raw = parse_quandle_table(text)?;
    Quandle::new(raw.name, raw.order, raw.op).map_err(|e| match e {
        QuandleError::Axiom(v) => FormatError::AxiomViolation(v),
        other => FormatError::Quandle(other),
    })
}
