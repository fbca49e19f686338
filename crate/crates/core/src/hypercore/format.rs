//! Plain-text hypergraph format: a header line `d n m`, then `m` lines of
//! `d` space-separated vertex indices. Blank lines and `#` comments are
//! ignored on input.

use std::str::FromStr;

use sha2::{Digest, Sha256};

use super::{Hypergraph, HypergraphError, Vertex};

impl Hypergraph {
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.d, self.n, self.edges.len());
        for e in &self.edges {
            let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, HypergraphError> {
        let mut lines = content_lines(text);
        let (h, _) = parse_from_lines(&mut lines)?;
        if let Some((line, _)) = lines.next() {
            return Err(parse_err(line, "trailing content after the last edge"));
        }
        Ok(h)
    }

    /// Hex SHA-256 of the canonical text form.
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }
}

impl FromStr for Hypergraph {
    type Err = HypergraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Hypergraph::parse_text(s)
    }
}

pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> HypergraphError {
    HypergraphError::Parse { line, message: message.into() }
}

pub(crate) fn parse_numbers<T: FromStr>(line: usize, text: &str) -> Result<Vec<T>, HypergraphError> {
    text.split_whitespace()
        .map(|tok| tok.parse::<T>().map_err(|_| parse_err(line, format!("not a non-negative integer: {tok:?}"))))
        .collect()
}

/// Reads one hypergraph record; returns it with the last line number consumed.
pub(crate) fn parse_from_lines<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<(Hypergraph, usize), HypergraphError> {
    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing header line `d n m`"))?;
    let head: Vec<usize> = parse_numbers(hline, header)?;
    let [d, n, m] = head[..] else {
        return Err(parse_err(hline, "header must be `d n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for _ in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| parse_err(last + 1, format!("expected {m} edge lines, found {}", edges.len())))?;
        let edge: Vec<Vertex> = parse_numbers(line, text)?;
        if edge.len() != d {
            return Err(parse_err(line, format!("edge has {} vertices, expected {d}", edge.len())));
        }
        edges.push(edge);
        last = line;
    }
    let h = Hypergraph::new(n, d, edges).map_err(|e| parse_err(last, e.to_string()))?;
    Ok((h, last))
}
