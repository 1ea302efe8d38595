use super::{sort_sets, DeletionSet, DeletionTarget};
use crate::graph::Graph;

/// High-degree / low-degree split of a vertex-cover instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelDecomposition {
    /// Degree above `k`: in every cover of size at most `k`.
    pub high: Vec<usize>,
    /// Degree at most `k` with a neighbor outside `high`.
    pub low: Vec<usize>,
    pub k: usize,
}

impl KernelDecomposition {
    /// `b = |V_H|`.
    pub fn forced(&self) -> usize {
        self.high.len()
    }

    /// Cover budget left for `G[V_L]`.
    pub fn budget(&self) -> usize {
        self.k - self.high.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BussKernel {
    Decomposed(KernelDecomposition),
    /// The graph has no vertex cover of size at most `k`.
    Reject,
}

impl BussKernel {
    pub fn is_reject(&self) -> bool {
        matches!(self, BussKernel::Reject)
    }

    pub fn decomposition(&self) -> Option<&KernelDecomposition> {
        match self {
            BussKernel::Decomposed(d) => Some(d),
            BussKernel::Reject => None,
        }
    }
}

pub fn buss_kernel(g: &Graph, k: usize) -> BussKernel {
    let high: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > k).collect();
    if high.len() > k {
        return BussKernel::Reject;
    }
    let mut is_high = vec![false; g.n()];
    for &v in &high {
        is_high[v] = true;
    }
    let low: Vec<usize> = (0..g.n())
        .filter(|&v| !is_high[v] && g.neighbors(v).iter().any(|&w| !is_high[w]))
        .collect();
    let b = high.len();
    // G[V_L] has no isolated vertex and maximum degree <= k, so a cover of
    // size k - b reaches at most (k - b)(k + 1) vertices.
    if low.len() > (k - b) * (k + 1) {
        return BussKernel::Reject;
    }
    BussKernel::Decomposed(KernelDecomposition { high, low, k })
}

pub fn is_vertex_cover(g: &Graph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    g.edges().all(|(u, v)| inside[u] || inside[v])
}

/// A vertex of a cover is redundant when all its neighbors are covered too.
fn is_minimal_cover(g: &Graph, inside: &[bool], set: &[usize]) -> bool {
    set.iter().all(|&v| g.neighbors(v).iter().any(|&w| !inside[w]))
}

/// Extends `chosen` by subsets of `candidates[from..]` (at most `budget` more)
/// and reports every combination accepted by `covers`.
fn scan_subsets(
    candidates: &[usize],
    from: usize,
    budget: usize,
    chosen: &mut Vec<usize>,
    covers: &dyn Fn(&[usize]) -> bool,
    out: &mut Vec<Vec<usize>>,
) {
    if covers(chosen) {
        // supersets of a cover are never minimal
        out.push(chosen.clone());
        return;
    }
    if budget == 0 {
        return;
    }
    for i in from..candidates.len() {
        chosen.push(candidates[i]);
        scan_subsets(candidates, i + 1, budget - 1, chosen, covers, out);
        chosen.pop();
    }
}

/// Every minimal vertex cover of size at most `k`, by size then
/// lexicographically: `V_H` plus each subset of `V_L` that covers `G[V_L]`
/// within the remaining budget.
pub fn enumerate_minimal_vertex_covers(g: &Graph, k: usize) -> Vec<DeletionSet> {
    covers_with_target(g, k, DeletionTarget::VertexCover)
}

fn covers_with_target(g: &Graph, k: usize, target: DeletionTarget) -> Vec<DeletionSet> {
    let BussKernel::Decomposed(kernel) = buss_kernel(g, k) else {
        return Vec::new();
    };
    let (low_graph, low_map) = g.induced_subgraph(&kernel.low).expect("kernel vertices are in range");
    let low_edges: Vec<(usize, usize)> = low_graph.edges().collect();
    let covers = |chosen: &[usize]| {
        let mut inside = vec![false; low_graph.n()];
        for &v in chosen {
            inside[v] = true;
        }
        low_edges.iter().all(|&(u, v)| inside[u] || inside[v])
    };
    let candidates: Vec<usize> = (0..low_graph.n()).collect();
    let mut low_covers = Vec::new();
    scan_subsets(
        &candidates,
        0,
        kernel.budget(),
        &mut Vec::new(),
        &covers,
        &mut low_covers,
    );

    let mut result: Vec<Vec<usize>> = low_covers
        .into_iter()
        .filter_map(|low_cover| {
            let mut set = kernel.high.clone();
            set.extend(low_cover.iter().map(|&v| low_map[v]));
            set.sort_unstable();
            let mut inside = vec![false; g.n()];
            for &v in &set {
                inside[v] = true;
            }
            is_minimal_cover(g, &inside, &set).then_some(set)
        })
        .collect();
    sort_sets(&mut result);
    result
        .into_iter()
        .map(|s| DeletionSet::new(s, target.clone()))
        .collect()
}

/// Edges joining twins, as `(u, v)` with `u < v`.
pub fn twin_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .filter(|&(u, v)| g.are_twins(u, v).expect("edge endpoints are distinct"))
        .collect()
}

/// Minimal twin-covers of size at most `k`: minimal vertex covers of the
/// graph left after deleting every twin edge.
pub fn enumerate_twin_covers(g: &Graph, k: usize) -> Vec<DeletionSet> {
    let reduced = g.without_edges(&twin_edges(g));
    covers_with_target(&reduced, k, DeletionTarget::TwinCover)
}
