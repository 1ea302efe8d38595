//! graph6: vertex count header followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per byte with offset 63.

use thiserror::Error;

use super::Graph;

const OFFSET: u8 = 63;
const MAX_BYTE: u8 = 126;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed vertex-count header")]
    BadHeader,
    #[error("illegal byte {byte:#04x} at position {position}")]
    IllegalByte { byte: u8, position: usize },
    #[error("adjacency data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} unexpected bytes after the adjacency data")]
    TrailingData(usize),
    #[error("padding bits of the last byte are not zero")]
    NonZeroPadding,
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing line
/// terminators are accepted and ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(position) = bytes.iter().position(|b| !(OFFSET..=MAX_BYTE).contains(b)) {
        return Err(Graph6Error::IllegalByte {
            byte: bytes[position],
            position,
        });
    }
    let (n, body) = decode_count(bytes)?;

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData(body.len() - expected));
    }

    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("upper-triangle edges are valid"))
}

fn decode_count(bytes: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    let value = |chunk: &[u8]| {
        chunk
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - OFFSET))
    };
    if bytes[0] != MAX_BYTE {
        return Ok((usize::from(bytes[0] - OFFSET), &bytes[1..]));
    }
    if bytes.get(1) != Some(&MAX_BYTE) {
        let chunk = bytes.get(1..4).ok_or(Graph6Error::BadHeader)?;
        let n = value(chunk);
        // Only the shortest encoding of a count is accepted.
        if n <= SHORT_MAX {
            return Err(Graph6Error::BadHeader);
        }
        return Ok((n, &bytes[4..]));
    }
    let chunk = bytes.get(2..8).ok_or(Graph6Error::BadHeader)?;
    let n = value(chunk);
    if n <= MEDIUM_MAX {
        return Err(Graph6Error::BadHeader);
    }
    Ok((n, &bytes[8..]))
}

fn encode_count(n: usize, out: &mut Vec<u8>) {
    let push_groups = |out: &mut Vec<u8>, groups: u32| {
        for g in (0..groups).rev() {
            out.push(((n >> (6 * g)) & 0x3f) as u8 + OFFSET);
        }
    };
    if n <= SHORT_MAX {
        out.push(n as u8 + OFFSET);
    } else if n <= MEDIUM_MAX {
        out.push(MAX_BYTE);
        push_groups(out, 3);
    } else {
        assert!(n <= LONG_MAX, "graph6 cannot encode {n} vertices");
        out.extend([MAX_BYTE, MAX_BYTE]);
        push_groups(out, 6);
    }
}

/// Encodes `g` as a graph6 line without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n) / 12);
    encode_count(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hand_decoded_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        // 5 vertices, bits 6..9 set: every vertex joined to vertex 4.
        let star = parse_graph6("D?{").unwrap();
        assert_eq!(star, Graph::from_edges(5, (0..4).map(|v| (v, 4))).unwrap());
        assert_eq!(to_graph6(&star), "D?{");
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn long_header() {
        let g = Graph::path(63);
        let text = to_graph6(&g);
        assert_eq!(&text.as_bytes()[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(parse_graph6(&text).unwrap(), g);

        // A graph this large would need gigabytes of adjacency data.
        for n in [MEDIUM_MAX, MEDIUM_MAX + 1, LONG_MAX] {
            let mut header = Vec::new();
            encode_count(n, &mut header);
            assert_eq!(header.len(), if n > MEDIUM_MAX { 8 } else { 4 });
            assert_eq!(decode_count(&header).unwrap(), (n, &[][..]));
        }
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("A "),
            Err(Graph6Error::IllegalByte {
                byte: b' ',
                position: 1
            })
        );
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::BadHeader));
        // n = 3 written in the four-byte form
        assert_eq!(parse_graph6("~??B?"), Err(Graph6Error::BadHeader));
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::Truncated { expected: 2, found: 1 })
        );
        assert_eq!(parse_graph6("A__"), Err(Graph6Error::TrailingData(1)));
        assert_eq!(parse_graph6("A`"), Err(Graph6Error::NonZeroPadding));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..70, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state ^= state << 13; state ^= state >> 7; state ^= state << 17;
                    if state & 1 == 1 { edges.push((i, j)); }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let text = to_graph6(&g);
            let back = parse_graph6(&text).unwrap();
            prop_assert_eq!(to_graph6(&back), text);
            prop_assert_eq!(back, g);
        }
    }
}
