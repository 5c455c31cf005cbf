//! graph6 and digraph6 text encodings.
//!
//! Both start with the order `N(n)`: one byte `n + 63` for `n <= 62`,
//! `126` and three 6-bit groups up to 258047, otherwise `126 126` and six
//! groups. The adjacency bits follow, six per byte, most significant first,
//! each byte offset by 63 and the last one zero-padded. graph6 lists the
//! upper triangle column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`);
//! digraph6 has a leading `&` and lists all `n^2` entries row by row.

use std::io::BufRead;

use totdist_core::constructions::Built;
use totdist_core::{Digraph, Graph};

use super::CodecError;

pub const GRAPH6_HEADER: &str = ">>graph6<<";
pub const DIGRAPH6_HEADER: &str = ">>digraph6<<";

const BIAS: u8 = 63;

fn push_order(out: &mut Vec<u8>, n: usize) {
    let n = n as u64;
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + BIAS);
        }
    }
}

fn pack(out: &mut Vec<u8>, bits: impl Iterator<Item = bool>) {
    let mut acc = 0u8;
    let mut filled = 0;
    for b in bits {
        acc = acc << 1 | u8::from(b);
        filled += 1;
        if filled == 6 {
            out.push(acc + BIAS);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
}

fn upper_triangle(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v)))
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_order(&mut out, n);
    pack(&mut out, upper_triangle(n).map(|(u, v)| g.has_edge(u, v)));
    String::from_utf8(out).expect("every byte is printable ASCII")
}

pub fn encode_digraph6(d: &Digraph) -> String {
    let n = d.order();
    let mut out = Vec::with_capacity(5 + (n * n).div_ceil(6));
    out.push(b'&');
    push_order(&mut out, n);
    pack(
        &mut out,
        (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .map(|(u, v)| d.has_arc(u, v)),
    );
    String::from_utf8(out).expect("every byte is printable ASCII")
}

/// graph6 for graphs, digraph6 for digraphs.
pub fn encode(b: &Built) -> String {
    match b {
        Built::Graph(g) => encode_graph6(g),
        Built::Digraph(d) => encode_digraph6(d),
    }
}

/// Validated view of the bytes after the optional `&`.
struct Body<'a> {
    bytes: &'a [u8],
    offset: usize,
}

impl<'a> Body<'a> {
    fn new(bytes: &'a [u8], offset: usize) -> Result<Self, CodecError> {
        if let Some(i) = bytes.iter().position(|b| !(BIAS..=126).contains(b)) {
            return Err(CodecError::ByteOutOfRange {
                position: offset + i,
                byte: bytes[i],
            });
        }
        Ok(Body { bytes, offset })
    }

    fn order(&self) -> Result<(usize, &'a [u8]), CodecError> {
        let b = self.bytes;
        let group = |s: &[u8]| {
            s.iter()
                .fold(0u64, |acc, &x| acc << 6 | u64::from(x - BIAS))
        };
        let (n, rest) = match b {
            [] => return Err(CodecError::Empty),
            [126, 126, tail @ ..] => {
                if tail.len() < 6 {
                    return Err(CodecError::TruncatedOrder);
                }
                (group(&tail[..6]), &tail[6..])
            }
            [126, tail @ ..] => {
                if tail.len() < 3 {
                    return Err(CodecError::TruncatedOrder);
                }
                (group(&tail[..3]), &tail[3..])
            }
            [x, tail @ ..] => (u64::from(x - BIAS), tail),
        };
        let n = usize::try_from(n).map_err(|_| CodecError::TruncatedOrder)?;
        Ok((n, rest))
    }

    fn bits(
        &self,
        data: &'a [u8],
        count: usize,
    ) -> Result<impl Iterator<Item = bool> + 'a, CodecError> {
        let expected = count.div_ceil(6);
        if data.len() != expected {
            let kind = if data.len() > expected {
                CodecError::TrailingData {
                    position: self.offset + self.bytes.len() - data.len() + expected,
                }
            } else {
                CodecError::Length {
                    expected,
                    found: data.len(),
                }
            };
            return Err(kind);
        }
        if let Some(&last) = data.last() {
            let spare = expected * 6 - count;
            if (last - BIAS) & ((1u8 << spare) - 1) != 0 {
                return Err(CodecError::Padding);
            }
        }
        Ok(data
            .iter()
            .flat_map(|&x| (0..6).rev().map(move |k| (x - BIAS) >> k & 1 == 1))
            .take(count))
    }
}

fn trim_line(text: &str) -> &str {
    text.strip_suffix('\n')
        .map_or(text, |t| t.strip_suffix('\r').unwrap_or(t))
}

pub fn parse_graph6(text: &str) -> Result<Graph, CodecError> {
    let text = trim_line(text);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    match text.as_bytes().first() {
        Some(b'&') => return Err(CodecError::WrongKind { expected: "graph6" }),
        Some(b':') | Some(b';') => return Err(CodecError::Sparse6),
        _ => {}
    }
    let body = Body::new(text.as_bytes(), 0)?;
    let (n, data) = body.order()?;
    let mut g = Graph::new(n)?;
    let bits = body.bits(data, n * n.saturating_sub(1) / 2)?;
    for ((u, v), set) in upper_triangle(n).zip(bits) {
        if set {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn parse_digraph6(text: &str) -> Result<Digraph, CodecError> {
    let text = trim_line(text);
    let text = text.strip_prefix(DIGRAPH6_HEADER).unwrap_or(text);
    let Some(rest) = text.strip_prefix('&') else {
        return Err(CodecError::MissingAmpersand);
    };
    let body = Body::new(rest.as_bytes(), 1)?;
    let (n, data) = body.order()?;
    let mut d = Digraph::new(n)?;
    let bits = body.bits(data, n * n)?;
    for (k, set) in bits.enumerate() {
        if set {
            let (u, v) = (k / n, k % n);
            if u == v {
                return Err(CodecError::Loop { vertex: u });
            }
            d.add_arc(u, v)?;
        }
    }
    Ok(d)
}

/// Either format, told apart by the leading `&`.
pub fn parse(text: &str) -> Result<Built, CodecError> {
    let line = trim_line(text);
    let bare = line
        .strip_prefix(DIGRAPH6_HEADER)
        .or_else(|| line.strip_prefix(GRAPH6_HEADER))
        .unwrap_or(line);
    if bare.starts_with('&') {
        parse_digraph6(bare).map(Built::Digraph)
    } else {
        parse_graph6(bare).map(Built::Graph)
    }
}

/// Reads one (di)graph per line. Blank lines are skipped, and a header may
/// precede the first entry on its own or on the same line.
pub fn read_stream<R: BufRead>(reader: R) -> Result<Vec<Built>, CodecError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| CodecError::Io(e.to_string()))?;
        let line = line.trim_end();
        let line = if i == 0 {
            line.strip_prefix(GRAPH6_HEADER)
                .or_else(|| line.strip_prefix(DIGRAPH6_HEADER))
                .unwrap_or(line)
        } else {
            line
        };
        if line.is_empty() {
            continue;
        }
        out.push(parse(line).map_err(|e| CodecError::AtLine {
            line: i + 1,
            source: Box::new(e),
        })?);
    }
    Ok(out)
}

/// One encoding per line. With `header`, the first line is prefixed by the
/// header of its format.
pub fn write_stream<'a, I>(items: I, header: bool) -> String
where
    I: IntoIterator<Item = &'a Built>,
{
    let mut out = String::new();
    for (i, b) in items.into_iter().enumerate() {
        if header && i == 0 {
            out.push_str(if b.is_directed() {
                DIGRAPH6_HEADER
            } else {
                GRAPH6_HEADER
            });
        }
        out.push_str(&encode(b));
        out.push('\n');
    }
    out
}
