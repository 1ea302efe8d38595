use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("missing `p cnf <vars> <clauses>` header")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: literal {literal} outside variables 1..={vars}")]
    LiteralOutOfRange { line: usize, literal: i64, vars: usize },
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCount { declared: usize, found: usize },
}

/// Clauses over variables `1..=vars`; literal `-v` is the negation of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfInstance {
    vars: usize,
    clauses: Vec<Vec<i64>>,
    k: usize,
}

impl CnfInstance {
    pub fn new(vars: usize, clauses: Vec<Vec<i64>>, k: usize) -> Result<Self, CnfError> {
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(CnfError::EmptyClause(i));
            }
            if let Some(&literal) = clause.iter().find(|l| l.unsigned_abs() as usize > vars || **l == 0) {
                return Err(CnfError::LiteralOutOfRange { line: 0, literal, vars });
            }
        }
        Ok(CnfInstance { vars, clauses, k })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn clauses(&self) -> &[Vec<i64>] {
        &self.clauses
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest clause width.
    pub fn q(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// DIMACS CNF: `c` comments, one `p cnf V C` header, then zero-terminated
/// clauses that may span lines. A `%` line ends the clause section.
pub fn parse_dimacs_cnf(text: &str, k: usize) -> Result<CnfInstance, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        let malformed = |reason: &str| CnfError::Malformed {
            line: line_no,
            reason: reason.to_string(),
        };
        if line.starts_with('p') {
            if header.is_some() {
                return Err(malformed("second header"));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 4 || fields[1] != "cnf" {
                return Err(malformed("expected `p cnf <vars> <clauses>`"));
            }
            let vars = fields[2].parse().map_err(|_| malformed("bad variable count"))?;
            let count = fields[3].parse().map_err(|_| malformed("bad clause count"))?;
            header = Some((vars, count));
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(CnfError::MissingHeader);
        };
        for token in line.split_whitespace() {
            let literal: i64 = token.parse().map_err(|_| malformed("literal is not an integer"))?;
            if literal == 0 {
                if current.is_empty() {
                    return Err(CnfError::EmptyClause(clauses.len()));
                }
                clauses.push(std::mem::take(&mut current));
            } else if literal.unsigned_abs() as usize > vars {
                return Err(CnfError::LiteralOutOfRange {
                    line: line_no,
                    literal,
                    vars,
                });
            } else {
                current.push(literal);
            }
        }
    }
    let (vars, declared) = header.ok_or(CnfError::MissingHeader)?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != declared {
        return Err(CnfError::ClauseCount {
            declared,
            found: clauses.len(),
        });
    }
    CnfInstance::new(vars, clauses, k)
}

/// Whether setting exactly `true_vars` (1-based) true satisfies every clause.
pub fn evaluate(inst: &CnfInstance, true_vars: &[usize]) -> bool {
    let mut value = vec![false; inst.vars + 1];
    for &v in true_vars {
        value[v] = true;
    }
    inst.clauses
        .iter()
        .all(|c| c.iter().any(|&l| value[l.unsigned_abs() as usize] == (l > 0)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatSearch {
    /// Sorted true variables, if a weight-`k` assignment exists.
    pub assignment: Option<Vec<usize>>,
    /// Search-tree nodes; at most `sum_{i<=k} q^i`.
    pub nodes: usize,
}

struct Search<'a> {
    inst: &'a CnfInstance,
    value: Vec<bool>,
    chosen: Vec<usize>,
    nodes: usize,
}

impl Search<'_> {
    fn first_falsified(&self) -> Option<&[i64]> {
        self.inst
            .clauses
            .iter()
            .find(|c| c.iter().all(|&l| self.value[l.unsigned_abs() as usize] != (l > 0)))
            .map(Vec::as_slice)
    }

    fn run(&mut self) -> bool {
        self.nodes += 1;
        let Some(clause) = self.first_falsified() else {
            return true;
        };
        if self.chosen.len() == self.inst.k {
            return false;
        }
        // Negative literals are falsified by variables already set true;
        // variables are never unset, so only positive literals can help.
        let mut branch: Vec<usize> = clause.iter().filter(|&&l| l > 0).map(|&l| l as usize).collect();
        branch.sort_unstable();
        branch.dedup();
        for v in branch {
            self.value[v] = true;
            self.chosen.push(v);
            if self.run() {
                return true;
            }
            self.chosen.pop();
            self.value[v] = false;
        }
        false
    }
}

pub fn weighted_qcnf_search(inst: &CnfInstance) -> SatSearch {
    let mut search = Search {
        inst,
        value: vec![false; inst.vars + 1],
        chosen: Vec::new(),
        nodes: 0,
    };
    let found = search.run();
    let assignment = found.then(|| {
        let mut t = search.chosen.clone();
        t.sort_unstable();
        t
    });
    SatSearch {
        assignment,
        nodes: search.nodes,
    }
}

/// A set of at most `k` variables whose truth (all others false) satisfies
/// the formula.
pub fn weighted_qcnf_sat(inst: &CnfInstance) -> Option<Vec<usize>> {
    weighted_qcnf_search(inst).assignment
}
