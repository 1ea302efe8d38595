//! Membership in classes defined by finitely many forbidden induced subgraphs.
//!
//! Occurrences are scanned in a fixed order: smaller pattern sizes first, then
//! vertex subsets as sorted tuples in lexicographic order. The first occurrence
//! reported is therefore deterministic, and the deletion search tree relies on
//! that.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::backends::cotree::build_cotree;
use crate::graph::{parse_graph6, Graph, Graph6Error};

/// Patterns larger than this make the precomputed labeling tables too big.
pub const MAX_PATTERN_SIZE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("unknown graph class `{0}` (expected cograph, cluster, threshold or edgeless)")]
    UnknownFamily(String),
    #[error("a forbidden family needs at least one pattern")]
    NoPatterns,
    #[error("pattern {0} has no vertices")]
    EmptyPattern(usize),
    #[error("pattern {index} has {size} vertices; at most {MAX_PATTERN_SIZE} are supported")]
    PatternTooLarge { index: usize, size: usize },
    #[error("pattern line {line}: {source}")]
    BadPattern { line: usize, source: Graph6Error },
}

/// Classes with a dedicated polynomial recognizer and colored-isomorphism backend.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinClass {
    Cograph,
    Cluster,
    Threshold,
    Edgeless,
}

impl BuiltinClass {
    pub const ALL: [BuiltinClass; 4] = [
        BuiltinClass::Cograph,
        BuiltinClass::Cluster,
        BuiltinClass::Threshold,
        BuiltinClass::Edgeless,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinClass::Cograph => "cograph",
            BuiltinClass::Cluster => "cluster",
            BuiltinClass::Threshold => "threshold",
            BuiltinClass::Edgeless => "edgeless",
        }
    }

    fn patterns(self) -> Vec<Graph> {
        match self {
            BuiltinClass::Cograph => vec![Graph::path(4)],
            BuiltinClass::Cluster => vec![Graph::path(3)],
            BuiltinClass::Threshold => vec![
                Graph::path(4),
                Graph::cycle(4),
                Graph::complete(2).disjoint_union(&Graph::complete(2)),
            ],
            BuiltinClass::Edgeless => vec![Graph::complete(2)],
        }
    }

    /// Polynomial-time membership test equivalent to the forbidden-pattern scan.
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            BuiltinClass::Edgeless => g.edge_count() == 0,
            BuiltinClass::Cluster => is_cluster(g),
            BuiltinClass::Cograph => build_cotree(g).is_ok(),
            BuiltinClass::Threshold => is_threshold(g),
        }
    }
}

impl FromStr for BuiltinClass {
    type Err = RecognitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BuiltinClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| RecognitionError::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for BuiltinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn is_cluster(g: &Graph) -> bool {
    g.components()
        .iter()
        .all(|comp| comp.iter().all(|&v| g.degree(v) + 1 == comp.len()))
}

/// Peels isolated or dominating vertices until nothing is left.
pub fn is_threshold(g: &Graph) -> bool {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut remaining = n;
    while remaining > 0 {
        let Some(v) = (0..n).find(|&v| alive[v] && (degree[v] == 0 || degree[v] + 1 == remaining)) else {
            return false;
        };
        alive[v] = false;
        remaining -= 1;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    true
}

/// Labeled variants of one pattern size, as upper-triangle adjacency masks.
#[derive(Debug, Clone)]
struct SizeTable {
    size: usize,
    /// `prefixes[j]` holds the masks of every labeled `j`-vertex induced
    /// subgraph of a pattern of this size; `prefixes[size]` are full matches.
    prefixes: Vec<HashSet<u64>>,
}

/// Bit index of the pair `(i, j)`, `i < j`, in column-major upper-triangle order.
#[inline]
fn pair_bit(i: usize, j: usize) -> u32 {
    (j * (j - 1) / 2 + i) as u32
}

fn labeled_masks(pattern: &Graph, tables: &mut [HashSet<u64>]) {
    let d = pattern.n();
    let mut chosen = Vec::with_capacity(d);
    let mut used = vec![false; d];
    fn rec(pattern: &Graph, chosen: &mut Vec<usize>, used: &mut [bool], mask: u64, tables: &mut [HashSet<u64>]) {
        tables[chosen.len()].insert(mask);
        if chosen.len() == pattern.n() {
            return;
        }
        let j = chosen.len();
        for w in 0..pattern.n() {
            if used[w] {
                continue;
            }
            let mut next = mask;
            for (i, &u) in chosen.iter().enumerate() {
                if pattern.has_edge(u, w) {
                    next |= 1 << pair_bit(i, j);
                }
            }
            used[w] = true;
            chosen.push(w);
            rec(pattern, chosen, used, next, tables);
            chosen.pop();
            used[w] = false;
        }
    }
    rec(pattern, &mut chosen, &mut used, 0, tables);
}

/// A finite list of forbidden induced subgraphs `H_1..H_l`.
#[derive(Debug, Clone)]
pub struct ForbiddenFamily {
    name: String,
    patterns: Vec<Graph>,
    max_size: usize,
    builtin: Option<BuiltinClass>,
    tables: Vec<SizeTable>,
}

impl ForbiddenFamily {
    pub fn new(name: impl Into<String>, patterns: Vec<Graph>) -> Result<Self, RecognitionError> {
        if patterns.is_empty() {
            return Err(RecognitionError::NoPatterns);
        }
        for (index, p) in patterns.iter().enumerate() {
            if p.n() == 0 {
                return Err(RecognitionError::EmptyPattern(index));
            }
            if p.n() > MAX_PATTERN_SIZE {
                return Err(RecognitionError::PatternTooLarge { index, size: p.n() });
            }
        }
        let mut sizes: Vec<usize> = patterns.iter().map(Graph::n).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let tables = sizes
            .iter()
            .map(|&size| {
                let mut prefixes = vec![HashSet::new(); size + 1];
                for p in patterns.iter().filter(|p| p.n() == size) {
                    labeled_masks(p, &mut prefixes);
                }
                SizeTable { size, prefixes }
            })
            .collect();
        Ok(ForbiddenFamily {
            name: name.into(),
            max_size: *sizes.last().expect("non-empty"),
            patterns,
            builtin: None,
            tables,
        })
    }

    pub fn builtin(class: BuiltinClass) -> Self {
        let mut fam = Self::new(class.name(), class.patterns()).expect("builtin patterns are valid");
        fam.builtin = Some(class);
        fam
    }

    /// One graph6 pattern per non-blank line; `#` starts a comment line.
    pub fn from_graph6_lines(name: impl Into<String>, text: &str) -> Result<Self, RecognitionError> {
        let mut patterns = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let g = parse_graph6(line).map_err(|source| RecognitionError::BadPattern { line: idx + 1, source })?;
            patterns.push(g);
        }
        Self::new(name, patterns)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn patterns(&self) -> &[Graph] {
        &self.patterns
    }

    /// Largest pattern size `d`.
    pub fn max_pattern_size(&self) -> usize {
        self.max_size
    }

    pub fn builtin_class(&self) -> Option<BuiltinClass> {
        self.builtin
    }

    /// Visits occurrences in scan order until `visit` returns `false`.
    pub(crate) fn scan<F>(&self, g: &Graph, mut visit: F)
    where
        F: FnMut(&[usize]) -> bool,
    {
        let mut tuple = Vec::with_capacity(self.max_size);
        for table in &self.tables {
            if !scan_size(g, table, &mut tuple, 0, &mut visit) {
                return;
            }
        }
    }
}

/// Returns `false` once the visitor asked to stop.
fn scan_size<F>(g: &Graph, table: &SizeTable, tuple: &mut Vec<usize>, mask: u64, visit: &mut F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    let j = tuple.len();
    if j == table.size {
        return visit(tuple);
    }
    let start = tuple.last().map_or(0, |&v| v + 1);
    let need = table.size - j;
    if g.n() < need || start > g.n() - need {
        return true;
    }
    for v in start..=g.n() - need {
        let mut next = mask;
        for (i, &u) in tuple.iter().enumerate() {
            if g.has_edge(u, v) {
                next |= 1 << pair_bit(i, j);
            }
        }
        if !table.prefixes[j + 1].contains(&next) {
            continue;
        }
        tuple.push(v);
        let go_on = scan_size(g, table, tuple, next, visit);
        tuple.pop();
        if !go_on {
            return false;
        }
    }
    true
}

pub fn builtin_family(name: &str) -> Result<ForbiddenFamily, RecognitionError> {
    name.parse().map(ForbiddenFamily::builtin)
}

/// First vertex subset inducing a forbidden pattern, in scan order.
pub fn find_forbidden_occurrence(g: &Graph, fam: &ForbiddenFamily) -> Option<Vec<usize>> {
    let mut found = None;
    fam.scan(g, |tuple| {
        found = Some(tuple.to_vec());
        false
    });
    found
}

/// Every occurrence, in scan order.
pub fn all_forbidden_occurrences(g: &Graph, fam: &ForbiddenFamily) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fam.scan(g, |tuple| {
        out.push(tuple.to_vec());
        true
    });
    out
}

/// Membership, using the dedicated recognizer for builtin classes.
pub fn is_member(g: &Graph, fam: &ForbiddenFamily) -> bool {
    match fam.builtin {
        Some(class) => class.contains(g),
        None => find_forbidden_occurrence(g, fam).is_none(),
    }
}

/// Membership by the plain pattern scan, whatever the family.
pub fn is_member_by_scan(g: &Graph, fam: &ForbiddenFamily) -> bool {
    find_forbidden_occurrence(g, fam).is_none()
}
