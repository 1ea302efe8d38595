use std::fmt;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use distgi::recognition::BuiltinClass;
use distgi::{parse_dimacs, parse_graph6, ForbiddenFamily, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Auto,
    Graph6,
    Dimacs,
}

#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

pub fn read_text(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn looks_like_graph6(text: &str) -> bool {
    text.lines()
        .map(str::trim_end)
        .find(|l| !l.is_empty())
        .map(|l| l.strip_prefix(">>graph6<<").unwrap_or(l))
        .is_some_and(|l| !l.is_empty() && l.bytes().all(|b| (63..=126).contains(&b)))
}

/// Extension first (`.g6`, `.dimacs`/`.col`), then a graph6 sniff, then DIMACS.
fn detect(path: &Path, text: &str) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => Format::Graph6,
        Some("dimacs" | "col" | "clq") => Format::Dimacs,
        _ if looks_like_graph6(text) => Format::Graph6,
        _ => Format::Dimacs,
    }
}

pub fn read_graph(path: &Path, format: Format) -> Result<Graph, InputError> {
    let text = read_text(path)?;
    let format = match format {
        Format::Auto => detect(path, &text),
        f => f,
    };
    let fail = |e: &dyn fmt::Display| InputError(format!("{}: {e}", path.display()));
    match format {
        Format::Graph6 => {
            let mut lines = text.lines().filter(|l| !l.trim().is_empty());
            let first = lines.next().unwrap_or("");
            if lines.next().is_some() {
                return Err(fail(&"expected a single graph6 line"));
            }
            parse_graph6(first).map_err(|e| fail(&e))
        }
        _ => parse_dimacs(&text).map_err(|e| fail(&e)),
    }
}

/// A built-in class name, or a file of graph6 patterns.
pub fn read_family(name: Option<&str>, file: Option<&Path>) -> Result<ForbiddenFamily, InputError> {
    match (name, file) {
        (_, Some(path)) => {
            let text = read_text(path)?;
            let label = path.file_stem().and_then(|s| s.to_str()).unwrap_or("custom");
            ForbiddenFamily::from_graph6_lines(label, &text).map_err(|e| InputError(format!("{}: {e}", path.display())))
        }
        (Some(name), None) => name
            .parse::<BuiltinClass>()
            .map(ForbiddenFamily::builtin)
            .map_err(|e| InputError(e.to_string())),
        (None, None) => Err(InputError("pass --family or --family-file".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sniffing() {
        assert!(looks_like_graph6("A_\n"));
        assert!(looks_like_graph6(">>graph6<<C~\n"));
        assert!(!looks_like_graph6("p edge 3 2\ne 1 2\n"));
        assert!(!looks_like_graph6("c comment\np edge 1 0\n"));
        assert!(!looks_like_graph6(""));
    }
}
