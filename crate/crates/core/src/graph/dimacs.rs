use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
}

/// Parses the DIMACS edge format (`p edge n m`, then `e u v` lines with
/// 1-indexed endpoints). Comment lines start with `c`.
pub fn parse_dimacs(text: &str) -> Result<Graph, DimacsError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let malformed = |reason: &str| DimacsError::Malformed {
            line,
            reason: reason.to_string(),
        };
        match tag {
            "c" => {}
            "p" => {
                if n.is_some() {
                    return Err(malformed("second problem line"));
                }
                let kind = fields.next().ok_or_else(|| malformed("missing format"))?;
                if kind != "edge" && kind != "col" {
                    return Err(malformed("expected `p edge`"));
                }
                let count = fields
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| malformed("bad vertex count"))?;
                // The edge count is informational; duplicates collapse anyway.
                fields
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| malformed("bad edge count"))?;
                n = Some(count);
            }
            "e" => {
                let n = n.ok_or(DimacsError::MissingHeader)?;
                let mut endpoint = || -> Result<usize, DimacsError> {
                    let v: usize = fields
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| malformed("bad edge endpoint"))?;
                    if v == 0 || v > n {
                        return Err(DimacsError::VertexOutOfRange { line, vertex: v, n });
                    }
                    Ok(v - 1)
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if u == v {
                    return Err(DimacsError::SelfLoop { line, vertex: u + 1 });
                }
                edges.push((u, v));
            }
            _ => return Err(malformed("unknown line type")),
        }
    }
    let n = n.ok_or(DimacsError::MissingHeader)?;
    Graph::from_edges(n, edges).map_err(|e: GraphError| DimacsError::Malformed {
        line: 0,
        reason: e.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcription() {
        let g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
        let g = parse_dimacs("c two copies\np edge 2 1\ne 1 2\ne 2 1\n").unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!(parse_dimacs("p edge 4 0\n").unwrap(), Graph::empty(4));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_dimacs("p edge 2 1\ne 1 1\n"),
            Err(DimacsError::SelfLoop { line: 2, vertex: 1 })
        );
        assert_eq!(parse_dimacs("e 1 2\n"), Err(DimacsError::MissingHeader));
        assert_eq!(parse_dimacs(""), Err(DimacsError::MissingHeader));
        assert_eq!(
            parse_dimacs("p edge 2 1\ne 1 3\n"),
            Err(DimacsError::VertexOutOfRange {
                line: 2,
                vertex: 3,
                n: 2
            })
        );
        assert!(matches!(
            parse_dimacs("p edge 2 1\ne 1\n"),
            Err(DimacsError::Malformed { line: 2, .. })
        ));
    }
}
