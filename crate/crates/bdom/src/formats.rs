//! Text formats.
//!
//! - `.ug`: first line `n m`, then `m` lines `u v`, one undirected edge each;
//!   line order is the canonical edge order.
//! - `.dg`: same layout, each line `u v` an arc from `u` to `v`.
//! - `.pat`: first line `pa pb`, then `pa` rows of `T`/`.` (towers), `pa`
//!   rows of `0`/`1` (east arcs) and `pa` rows of `0`/`1` (north arcs).
//!
//! Lines starting with `#` and blank lines are skipped everywhere.

use std::fmt::Write as _;

use bdom_core::lattice::TorusPattern;
use bdom_core::{Digraph, Graph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
    #[error(transparent)]
    Invalid(#[from] bdom_core::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: usize, s: &str) -> Result<(usize, usize), FormatError> {
    let mut it = s.split_whitespace();
    let mut next = |what: &str| -> Result<usize, FormatError> {
        let tok = it.next().ok_or_else(|| syntax(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| syntax(line, format!("invalid {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(syntax(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

fn parse_pairs(text: &str) -> Result<(usize, Vec<(usize, usize)>), FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| FormatError::Truncated("missing header".into()))?;
    let (n, m) = two_numbers(line, header)?;
    let mut pairs = Vec::with_capacity(m);
    for (line, s) in lines.by_ref().take(m) {
        pairs.push(two_numbers(line, s)?);
    }
    if pairs.len() < m {
        return Err(FormatError::Truncated(format!(
            "header promises {m} lines, found {}",
            pairs.len()
        )));
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "trailing content after the declared lines"));
    }
    Ok((n, pairs))
}

pub fn parse_ug(text: &str) -> Result<Graph, FormatError> {
    let (n, edges) = parse_pairs(text)?;
    Ok(Graph::new(n, &edges)?)
}

pub fn parse_dg(text: &str) -> Result<Digraph, FormatError> {
    let (n, arcs) = parse_pairs(text)?;
    Ok(Digraph::from_arcs(n, &arcs)?)
}

pub fn write_ug(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_dg(d: &Digraph) -> String {
    let arcs = d.arcs();
    let mut out = format!("{} {}\n", d.n(), arcs.len());
    for (u, v) in arcs {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn parse_rows<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    rows: usize,
    cols: usize,
    on: u8,
    off: u8,
    what: &str,
) -> Result<Vec<bool>, FormatError> {
    let mut cells = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (line, s) = lines
            .next()
            .ok_or_else(|| FormatError::Truncated(format!("missing {what} rows")))?;
        if s.len() != cols {
            return Err(syntax(line, format!("{what} row must have {cols} characters")));
        }
        for c in s.bytes() {
            match c {
                c if c == on => cells.push(true),
                c if c == off => cells.push(false),
                _ => return Err(syntax(line, format!("unexpected {:?} in {what} row", c as char))),
            }
        }
    }
    Ok(cells)
}

pub fn parse_pat(name: &str, text: &str) -> Result<TorusPattern, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| FormatError::Truncated("missing header".into()))?;
    let (pa, pb) = two_numbers(line, header)?;
    let towers = parse_rows(&mut lines, pa, pb, b'T', b'.', "tower")?;
    let east = parse_rows(&mut lines, pa, pb, b'1', b'0', "east")?;
    let north = parse_rows(&mut lines, pa, pb, b'1', b'0', "north")?;
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "trailing content after the pattern"));
    }
    Ok(TorusPattern::new(name, pa, pb, towers, east, north)?)
}

pub fn write_pat(pat: &TorusPattern) -> String {
    let (pa, pb) = pat.period();
    let mut out = format!("{pa} {pb}\n");
    let mut block = |f: &dyn Fn(usize, usize) -> char| {
        for i in 0..pa {
            let row: String = (0..pb).map(|j| f(i, j)).collect();
            out.push_str(&row);
            out.push('\n');
        }
    };
    block(&|i, j| if pat.is_tower(i, j) { 'T' } else { '.' });
    block(&|i, j| if pat.east_bit(i, j) { '1' } else { '0' });
    block(&|i, j| if pat.north_bit(i, j) { '1' } else { '0' });
    out
}
