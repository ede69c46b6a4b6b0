//! Cayley-table text format and the group-spec grammar.
//!
//! A table file is `n` on the first line followed by `n` lines of `n`
//! whitespace-separated indices; row `x` lists `x + y` for `y = 0..n`.
//! Group specs: `Z6`, `Z4+Z2`, `S3`, `D4`, `Q8`, `table:<path>`.

use super::{AbelianSpec, Elem, FiniteGroup, Limits};
use crate::error::{Error, Result};
use std::path::Path;

const D4_TABLE: &str = include_str!("../../data/d4.tbl");
const Q8_TABLE: &str = include_str!("../../data/q8.tbl");

pub fn parse_cayley(text: &str) -> Result<Vec<Vec<Elem>>> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing order line".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("bad order line {header:?}")))?;
    let mut rows = Vec::with_capacity(n);
    for (i, line) in lines.enumerate() {
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Elem>()
                    .map_err(|_| Error::Parse(format!("row {i}: bad entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} rows, found {}",
            rows.len()
        )));
    }
    Ok(rows)
}

pub fn format_cayley(n: usize, flat: &[Elem]) -> String {
    let width = n.saturating_sub(1).to_string().len();
    let mut out = format!("{n}\n");
    for row in flat.chunks(n) {
        let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_cayley_file(path: &Path, limits: &Limits) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let rows = parse_cayley(&text)?;
    FiniteGroup::from_table(format!("table:{}", path.display()), &rows, limits)
}

/// Resolves a group spec string to a validated group.
pub fn parse_group_spec(spec: &str, limits: &Limits) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix("table:") {
        return read_cayley_file(Path::new(path), limits);
    }
    match spec {
        "S3" => return Ok(FiniteGroup::s3()),
        "D4" => return builtin_table("D4", D4_TABLE, limits),
        "Q8" => return builtin_table("Q8", Q8_TABLE, limits),
        "V" => {
            return FiniteGroup::abelian(&AbelianSpec::new(vec![2, 2])?, limits)
                .map(|g| g.with_name("V"))
        }
        _ => {}
    }
    let mut factors = Vec::new();
    for part in spec.split('+') {
        let part = part.trim();
        let digits = part
            .strip_prefix('Z')
            .ok_or_else(|| Error::Parse(format!("unknown group {spec:?}")))?;
        let m: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad cyclic factor {part:?}")))?;
        match m {
            0 => return Err(Error::Parse(format!("bad cyclic factor {part:?}"))),
            1 => {}
            _ => factors.push(m),
        }
    }
    let abelian_spec = AbelianSpec::new(factors)?;
    FiniteGroup::abelian(&abelian_spec, limits)
}

pub(crate) fn builtin_table(name: &str, text: &str, limits: &Limits) -> Result<FiniteGroup> {
    let rows = parse_cayley(text)?;
    FiniteGroup::from_table(name, &rows, limits)
}
