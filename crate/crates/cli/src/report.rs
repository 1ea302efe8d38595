//! JSON reports, one object per run on standard output.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Isomorphic,
    NonIsomorphic,
    DistanceExceeded,
}

#[derive(Debug, Serialize)]
pub struct Witness {
    pub verified: bool,
    /// `mapping[i]` is the image of vertex `i`; only with `--certificate`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mapping: Option<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct ParamEcho {
    pub kind: String,
    pub k: usize,
}

#[derive(Debug, Default, Serialize)]
pub struct Counts {
    pub deletion_distance: Option<usize>,
    pub first_deletion_sets: usize,
    pub candidate_deletion_sets: usize,
    pub bijections_tried: usize,
}

#[derive(Debug, Serialize)]
pub struct Exceeded {
    pub first: bool,
    pub second: bool,
}

#[derive(Debug, Serialize)]
pub struct OracleCheck {
    pub agrees: bool,
}

/// Invariant: `witness` is present exactly when the verdict is isomorphic.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub param: Option<ParamEcho>,
    pub vertices: [usize; 2],
    pub counts: Counts,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fast_reject: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance_exceeded: Option<Exceeded>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_check: Option<OracleCheck>,
    pub wall_time_ms: f64,
}

pub fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("reports serialize"));
}
