//! graph6: `N(n)` followed by the upper triangle of the adjacency matrix,
//! column by column, packed big-endian into 6-bit groups biased by 63.

use std::io::BufRead;

use super::LabError;
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

fn malformed(line: usize, reason: impl Into<String>) -> LabError {
    LabError::MalformedGraph6 { line, reason: reason.into() }
}

/// Decode one graph6 string; `line` is only used in error messages.
pub fn parse_graph6_line(text: &str, line: usize) -> Result<Graph, LabError> {
    let text = text.trim_end_matches(['\r', '\n']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed(line, "empty line"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(malformed(line, format!("byte {b:#04x} outside 63..=126")));
    }
    let values: Vec<usize> = bytes.iter().map(|&b| (b - BIAS) as usize).collect();
    let (n, body) = if values[0] < 63 {
        (values[0], &values[1..])
    } else if values.len() >= 4 && values[1] < 63 {
        (values[1] << 12 | values[2] << 6 | values[3], &values[4..])
    } else if values.len() >= 8 && values[1] == 63 {
        let n = values[2..8].iter().fold(0usize, |acc, &x| acc << 6 | x);
        (n, &values[8..])
    } else {
        return Err(malformed(line, "truncated vertex count"));
    };
    if n > MAX_VERTICES {
        return Err(malformed(line, format!("{n} vertices, at most {MAX_VERTICES} supported")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(line, format!("expected {expected} data bytes, found {}", body.len())));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if pairs % 6 != 0 && body[expected - 1] & ((1 << (6 - pairs % 6)) - 1) != 0 {
        return Err(malformed(line, "nonzero padding bits"));
    }
    Ok(g)
}

pub fn parse_graph6(text: &str) -> Result<Graph, LabError> {
    parse_graph6_line(text.trim(), 1)
}

/// One graph per nonblank line; line numbers in errors are 1-based.
pub fn ingest_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, LabError>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(LabError::Io(e.to_string()))),
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(parse_graph6_line(l.trim(), i + 1)),
    })
}
