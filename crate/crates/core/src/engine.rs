//! Isomorphism for graphs within deletion distance `k` of a base class.
//!
//! Fix a minimum deletion set `S` of the first graph. For every deletion set
//! `S_i` of the same size in the second graph and every isomorphism
//! `φ: G1[S] → G2[S_i]`, color the remainders by their neighborhoods in the
//! anchor (read through `φ`) and ask a colored-isomorphism backend for the
//! base class whether the remainders match. Any success, combined with `φ`,
//! is an isomorphism of the inputs; if all candidates fail there is none.

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::backends::{Backend, BackendError};
use crate::deletion::{enumerate_deletion_sets, enumerate_minimal_vertex_covers, enumerate_twin_covers, DeletionSet};
use crate::graph::{verify_colored_isomorphism, ColoredGraph, Graph, IsoResult, VertexBijection};
use crate::recognition::ForbiddenFamily;

#[derive(Debug, Clone)]
pub enum ParamKind {
    VertexCover,
    TwinCover,
    DistanceToClique,
    DistanceToClass(ForbiddenFamily),
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamKind::VertexCover => f.write_str("vertex-cover"),
            ParamKind::TwinCover => f.write_str("twin-cover"),
            ParamKind::DistanceToClique => f.write_str("distance-to-clique"),
            ParamKind::DistanceToClass(fam) => write!(f, "distance-to-{}", fam.name()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Parameterization {
    pub kind: ParamKind,
    pub k: usize,
}

impl Parameterization {
    pub fn new(kind: ParamKind, k: usize) -> Self {
        Parameterization { kind, k }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    /// The promise failed: at least one input is farther than `k` from the class.
    #[error("deletion distance exceeds k = {k} (first graph: {first}, second graph: {second})")]
    DistanceExceeded { k: usize, first: bool, second: bool },
    #[error("no colored-isomorphism backend covers the remainder of the {0} graph")]
    NoBackend(&'static str),
    #[error("anchor coloring has no key for neighborhood {0:?}")]
    MissingAnchorKey(Vec<usize>),
    #[error("backend failure: {0}")]
    Backend(#[from] BackendError),
    #[error("internal error: produced witness does not verify")]
    WitnessRejected,
}

#[derive(Debug, Clone, Default)]
pub struct EngineOptions {
    /// Sequential candidate order, reproducible witnesses.
    pub deterministic: bool,
    /// Re-check every witness before returning it.
    pub verify_witness: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FastReject {
    VertexCount,
    EdgeCount,
    ColorCounts,
    DeletionDistance,
}

#[derive(Debug, Clone, Default)]
pub struct EngineStats {
    /// Size `s` of the anchor deletion set.
    pub deletion_distance: Option<usize>,
    /// Minimal deletion sets found for the first graph.
    pub first_sets: usize,
    /// Deletion sets of size `s` in the second graph (the `S_i`).
    pub candidate_sets: usize,
    /// Anchor isomorphisms `φ` handed to the backend.
    pub bijections_tried: usize,
    pub fast_reject: Option<FastReject>,
}

#[derive(Debug, Clone)]
pub struct Decision {
    pub result: IsoResult,
    pub stats: EngineStats,
}

/// How the remainder after deletion is matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendChoice {
    Fixed(Backend),
    /// Pick per candidate from the remainders themselves.
    Probe,
}

/// Anchor-neighborhood color: the positions `p` with `anchor[p] ∈ N(u)`.
type AnchorKey = (u32, Vec<usize>);

fn anchor_keys(cg: &ColoredGraph, anchor: &[usize], remainder: &[usize]) -> Vec<AnchorKey> {
    let g = cg.graph();
    remainder
        .iter()
        .map(|&u| {
            let positions = anchor
                .iter()
                .enumerate()
                .filter(|&(_, &a)| g.has_edge(u, a))
                .map(|(p, _)| p)
                .collect();
            (cg.color(u), positions)
        })
        .collect()
}

/// Colors `g \ anchor` by neighborhood in the anchor. Neighborhoods are given
/// as sorted positions into `anchor`, so two graphs whose anchors are listed
/// in corresponding order (the second one ordered by `φ`) share one key map.
/// Returns the colored remainder and its map back into `g`.
pub fn anchor_color(
    g: &Graph,
    anchor: &[usize],
    key: &HashMap<Vec<usize>, u32>,
) -> Result<(ColoredGraph, Vec<usize>), IsoError> {
    let (rest, map) = g.remove_vertices(anchor);
    let cg = ColoredGraph::uncolored(g.clone());
    let colors = anchor_keys(&cg, anchor, &map)
        .into_iter()
        .map(|(_, positions)| {
            key.get(&positions)
                .copied()
                .ok_or(IsoError::MissingAnchorKey(positions))
        })
        .collect::<Result<Vec<u32>, _>>()?;
    let colored = ColoredGraph::new(rest, colors).expect("one color per remaining vertex");
    Ok((colored, map))
}

/// Every isomorphism `G1[a] → G2[b]` (colors included), as position maps.
fn anchor_isomorphisms(cg1: &ColoredGraph, a: &[usize], cg2: &ColoredGraph, b: &[usize]) -> Vec<Vec<usize>> {
    fn extend(
        cg1: &ColoredGraph,
        a: &[usize],
        cg2: &ColoredGraph,
        b: &[usize],
        phi: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let p = phi.len();
        if p == a.len() {
            out.push(phi.clone());
            return;
        }
        for q in 0..b.len() {
            if used[q] || cg1.color(a[p]) != cg2.color(b[q]) {
                continue;
            }
            let consistent = phi
                .iter()
                .enumerate()
                .all(|(pp, &qq)| cg1.graph().has_edge(a[p], a[pp]) == cg2.graph().has_edge(b[q], b[qq]));
            if !consistent {
                continue;
            }
            used[q] = true;
            phi.push(q);
            extend(cg1, a, cg2, b, phi, used, out);
            phi.pop();
            used[q] = false;
        }
    }
    let mut out = Vec::new();
    if a.len() == b.len() {
        extend(cg1, a, cg2, b, &mut Vec::new(), &mut vec![false; b.len()], &mut out);
    }
    out
}

struct Remainder {
    anchor: Vec<usize>,
    map: Vec<usize>,
    graph: Graph,
}

impl Remainder {
    fn new(g: &Graph, anchor: &[usize]) -> Self {
        let (graph, map) = g.remove_vertices(anchor);
        Remainder {
            anchor: anchor.to_vec(),
            map,
            graph,
        }
    }
}

fn try_candidate(
    cg1: &ColoredGraph,
    first: &Remainder,
    cg2: &ColoredGraph,
    second: &Remainder,
    phi: &[usize],
    backend: BackendChoice,
) -> Result<Option<VertexBijection>, IsoError> {
    // List the second anchor in φ-order so positions line up.
    let ordered: Vec<usize> = phi.iter().map(|&q| second.anchor[q]).collect();
    let keys1 = anchor_keys(cg1, &first.anchor, &first.map);
    let keys2 = anchor_keys(cg2, &ordered, &second.map);
    let mut ids: HashMap<&AnchorKey, u32> = HashMap::new();
    for key in keys1.iter().chain(&keys2) {
        let next = ids.len() as u32;
        ids.entry(key).or_insert(next);
    }
    let colored = |g: &Graph, keys: &[AnchorKey]| {
        ColoredGraph::new(g.clone(), keys.iter().map(|k| ids[k]).collect()).expect("colors cover the remainder")
    };
    let r1 = colored(&first.graph, &keys1);
    let r2 = colored(&second.graph, &keys2);

    let backend = match backend {
        BackendChoice::Fixed(b) => b,
        BackendChoice::Probe => {
            let b1 = Backend::narrowest_for(r1.graph()).ok_or(IsoError::NoBackend("first"))?;
            let b2 = Backend::narrowest_for(r2.graph()).ok_or(IsoError::NoBackend("second"))?;
            b1.widen(b2)
        }
    };
    let IsoResult::Isomorphic(inner) = backend.solve(&r1, &r2)? else {
        return Ok(None);
    };
    let mut full = vec![usize::MAX; cg1.n()];
    for (p, &q) in phi.iter().enumerate() {
        full[first.anchor[p]] = second.anchor[q];
    }
    for (u, &v) in inner.as_slice().iter().enumerate() {
        full[first.map[u]] = second.map[v];
    }
    Ok(Some(VertexBijection::new(full)))
}

/// Tries every `(S_i, φ)` pair for a fixed anchor `S` of the first graph.
/// `targets` should be the second graph's deletion sets of size `|S|`.
pub fn match_anchored(
    cg1: &ColoredGraph,
    cg2: &ColoredGraph,
    anchor: &[usize],
    targets: &[DeletionSet],
    backend: BackendChoice,
    opts: &EngineOptions,
) -> Result<(IsoResult, usize), IsoError> {
    let first = Remainder::new(cg1.graph(), anchor);
    let seconds: Vec<Remainder> = targets
        .iter()
        .filter(|t| t.len() == anchor.len())
        .map(|t| Remainder::new(cg2.graph(), t.vertices()))
        .collect();
    let candidates: Vec<(usize, Vec<usize>)> = seconds
        .iter()
        .enumerate()
        .flat_map(|(i, r)| {
            anchor_isomorphisms(cg1, anchor, cg2, &r.anchor)
                .into_iter()
                .map(move |phi| (i, phi))
        })
        .collect();

    let tried = AtomicUsize::new(0);
    let attempt = |(i, phi): &(usize, Vec<usize>)| {
        tried.fetch_add(1, Ordering::Relaxed);
        try_candidate(cg1, &first, cg2, &seconds[*i], phi, backend).transpose()
    };
    let found = if opts.deterministic {
        candidates.iter().find_map(attempt)
    } else {
        candidates.par_iter().find_map_any(attempt)
    };
    let result = match found.transpose()? {
        Some(f) => {
            if opts.verify_witness && !verify_colored_isomorphism(cg1, cg2, &f) {
                return Err(IsoError::WitnessRejected);
            }
            IsoResult::Isomorphic(f)
        }
        None => IsoResult::NonIsomorphic,
    };
    Ok((result, tried.into_inner()))
}

/// Deletion sets for one graph under a parameterization, smallest first.
/// For distance to clique pass the complement.
pub fn deletion_sets_for(kind: &ParamKind, g: &Graph, k: usize) -> Vec<DeletionSet> {
    match kind {
        ParamKind::VertexCover | ParamKind::DistanceToClique => enumerate_minimal_vertex_covers(g, k),
        ParamKind::TwinCover => enumerate_twin_covers(g, k),
        ParamKind::DistanceToClass(fam) => enumerate_deletion_sets(g, fam, k),
    }
}

fn backend_for(kind: &ParamKind) -> BackendChoice {
    match kind {
        ParamKind::VertexCover | ParamKind::DistanceToClique => BackendChoice::Fixed(Backend::Independent),
        ParamKind::TwinCover => BackendChoice::Fixed(Backend::Cluster),
        ParamKind::DistanceToClass(fam) => match fam.builtin_class() {
            Some(class) => BackendChoice::Fixed(Backend::for_class(class)),
            None => BackendChoice::Probe,
        },
    }
}

fn color_counts(cg: &ColoredGraph) -> Vec<u32> {
    let mut c = cg.colors().to_vec();
    c.sort_unstable();
    c
}

/// Full pipeline on colored inputs (colors drawn from one shared palette).
pub fn decide_colored(
    cg1: &ColoredGraph,
    cg2: &ColoredGraph,
    param: &Parameterization,
    opts: &EngineOptions,
) -> Result<Decision, IsoError> {
    let mut stats = EngineStats::default();
    let reject = |stats: &mut EngineStats, why| {
        stats.fast_reject = Some(why);
        Ok(Decision {
            result: IsoResult::NonIsomorphic,
            stats: stats.clone(),
        })
    };
    if cg1.n() != cg2.n() {
        return reject(&mut stats, FastReject::VertexCount);
    }
    if cg1.graph().edge_count() != cg2.graph().edge_count() {
        return reject(&mut stats, FastReject::EdgeCount);
    }

    // Isomorphisms commute with complementation, so distance to clique runs
    // the vertex-cover pipeline on the complements and keeps the witness.
    let complemented;
    let (w1, w2) = if matches!(param.kind, ParamKind::DistanceToClique) {
        complemented = (
            ColoredGraph::new(cg1.graph().complement(), cg1.colors().to_vec()).expect("same size"),
            ColoredGraph::new(cg2.graph().complement(), cg2.colors().to_vec()).expect("same size"),
        );
        (&complemented.0, &complemented.1)
    } else {
        (cg1, cg2)
    };

    let sets1 = deletion_sets_for(&param.kind, w1.graph(), param.k);
    let sets2 = deletion_sets_for(&param.kind, w2.graph(), param.k);
    if sets1.is_empty() || sets2.is_empty() {
        return Err(IsoError::DistanceExceeded {
            k: param.k,
            first: sets1.is_empty(),
            second: sets2.is_empty(),
        });
    }
    if color_counts(cg1) != color_counts(cg2) {
        return reject(&mut stats, FastReject::ColorCounts);
    }
    let anchor = &sets1[0];
    stats.deletion_distance = Some(anchor.len());
    stats.first_sets = sets1.len();
    if sets2[0].len() != anchor.len() {
        return reject(&mut stats, FastReject::DeletionDistance);
    }
    let targets: Vec<DeletionSet> = sets2.into_iter().filter(|s| s.len() == anchor.len()).collect();
    stats.candidate_sets = targets.len();

    let (result, tried) = match_anchored(w1, w2, anchor.vertices(), &targets, backend_for(&param.kind), opts)?;
    stats.bijections_tried = tried;
    if let IsoResult::Isomorphic(f) = &result {
        if opts.verify_witness && !verify_colored_isomorphism(cg1, cg2, f) {
            return Err(IsoError::WitnessRejected);
        }
    }
    Ok(Decision { result, stats })
}

pub fn decide_with(
    g1: &Graph,
    g2: &Graph,
    param: &Parameterization,
    opts: &EngineOptions,
) -> Result<Decision, IsoError> {
    decide_colored(
        &ColoredGraph::uncolored(g1.clone()),
        &ColoredGraph::uncolored(g2.clone()),
        param,
        opts,
    )
}

/// Library entry point: the verdict, or `DistanceExceeded` when the promise fails.
pub fn decide(g1: &Graph, g2: &Graph, param: &Parameterization) -> Result<IsoResult, IsoError> {
    decide_with(g1, g2, param, &EngineOptions::default()).map(|d| d.result)
}

pub fn gi_distance_to_class(g1: &Graph, g2: &Graph, fam: &ForbiddenFamily, k: usize) -> Result<IsoResult, IsoError> {
    decide(
        g1,
        g2,
        &Parameterization::new(ParamKind::DistanceToClass(fam.clone()), k),
    )
}

pub fn gi_vertex_cover(g1: &Graph, g2: &Graph, k: usize) -> Result<IsoResult, IsoError> {
    decide(g1, g2, &Parameterization::new(ParamKind::VertexCover, k))
}

pub fn gi_twin_cover(g1: &Graph, g2: &Graph, k: usize) -> Result<IsoResult, IsoError> {
    decide(g1, g2, &Parameterization::new(ParamKind::TwinCover, k))
}

pub fn gi_distance_to_clique(g1: &Graph, g2: &Graph, k: usize) -> Result<IsoResult, IsoError> {
    decide(g1, g2, &Parameterization::new(ParamKind::DistanceToClique, k))
}
