//! Brute-force reference implementations. Slow on purpose: pruning is
//! limited to degrees and colors so correctness is easy to audit.

use std::collections::HashSet;

use crate::deletion::{DeletionSet, DeletionTarget};
use crate::graph::{ColoredGraph, Graph, IsoResult, VertexBijection};
use crate::recognition::{is_member_by_scan, ForbiddenFamily};

pub fn brute_force_gi(g1: &Graph, g2: &Graph) -> IsoResult {
    brute_force_colored_gi(
        &ColoredGraph::uncolored(g1.clone()),
        &ColoredGraph::uncolored(g2.clone()),
    )
}

pub fn brute_force_colored_gi(a: &ColoredGraph, b: &ColoredGraph) -> IsoResult {
    let (g, h) = (a.graph(), b.graph());
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return IsoResult::NonIsomorphic;
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    if extend(a, b, 0, &mut map, &mut used) {
        IsoResult::Isomorphic(VertexBijection::new(map))
    } else {
        IsoResult::NonIsomorphic
    }
}

fn extend(a: &ColoredGraph, b: &ColoredGraph, u: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    let (g, h) = (a.graph(), b.graph());
    if u == g.n() {
        return true;
    }
    for v in 0..h.n() {
        if used[v] || a.color(u) != b.color(v) || g.degree(u) != h.degree(v) {
            continue;
        }
        if (0..u).any(|w| g.has_edge(u, w) != h.has_edge(v, map[w])) {
            continue;
        }
        map[u] = v;
        used[v] = true;
        if extend(a, b, u + 1, map, used) {
            return true;
        }
        used[v] = false;
    }
    map[u] = usize::MAX;
    false
}

/// All inclusion-minimal deletion sets of size at most `k`, found by testing
/// every subset with the pattern scan.
pub fn brute_force_deletion_sets(g: &Graph, fam: &ForbiddenFamily, k: usize) -> Vec<DeletionSet> {
    let members = subsets_up_to(g.n(), k)
        .into_iter()
        .filter(|s| is_member_by_scan(&g.remove_vertices(s).0, fam));
    let target = DeletionTarget::Family(fam.name().to_string());
    minimal_sets(members.collect())
        .into_iter()
        .map(|s| DeletionSet::new(s, target.clone()))
        .collect()
}

/// Smallest deletion distance to the class, if at most `limit`.
pub fn brute_force_distance(g: &Graph, fam: &ForbiddenFamily, limit: usize) -> Option<usize> {
    subsets_up_to(g.n(), limit)
        .into_iter()
        .find(|s| is_member_by_scan(&g.remove_vertices(s).0, fam))
        .map(|s| s.len())
}

/// Subsets of `0..n` with at most `k` elements, by size then lexicographically.
pub fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn grow(n: usize, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            grow(n, size, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 0..=k.min(n) {
        grow(n, size, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Keeps the sets with no proper subset in the input. Input order is kept,
/// so sets arriving by size then lexicographically stay sorted.
pub fn minimal_sets(sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for s in sets {
        let covered = kept
            .iter()
            .any(|t| t.len() < s.len() && t.iter().all(|v| s.contains(v)));
        if !covered {
            kept.push(s);
        }
    }
    kept.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    kept
}

/// Canonical form for small graphs: the smallest adjacency bitmask over all
/// vertex orders sorted by degree. Exhaustive, so only for `n <= 8`.
pub fn small_canonical_form(g: &Graph) -> (usize, u64) {
    let n = g.n();
    assert!(n <= 8, "canonical form is brute force");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| g.degree(v));
    let mut best = u64::MAX;
    permute_within_degree_classes(g, &mut order, 0, &mut best);
    (n, best)
}

fn permute_within_degree_classes(g: &Graph, order: &mut [usize], i: usize, best: &mut u64) {
    if i == order.len() {
        let mut mask = 0u64;
        let mut bit = 0;
        for b in 1..order.len() {
            for a in 0..b {
                if g.has_edge(order[a], order[b]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(mask);
        return;
    }
    for j in i..order.len() {
        if g.degree(order[j]) != g.degree(order[i]) {
            break;
        }
        order.swap(i, j);
        permute_within_degree_classes(g, order, i + 1, best);
        order.swap(i, j);
    }
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// built by adding a vertex with every neighborhood to each class on `n-1`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (size - 1)) {
                let mut edges: Vec<(usize, usize)> = g.edges().collect();
                edges.extend((0..size - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, size - 1)));
                let h = Graph::from_edges(size, edges).expect("valid by construction");
                if seen.insert(small_canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::verify_isomorphism;
    use crate::recognition::builtin_family;

    #[test]
    fn gi_examples() {
        let c6 = Graph::cycle(6);
        let r = brute_force_gi(&c6, &c6);
        assert!(verify_isomorphism(&c6, &c6, r.witness().unwrap()));
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(brute_force_gi(&c6, &two_k3), IsoResult::NonIsomorphic);
        assert_eq!(
            brute_force_gi(&Graph::complete(3), &Graph::path(3)),
            IsoResult::NonIsomorphic
        );
    }

    #[test]
    fn colored_examples() {
        let k2 = Graph::complete(2);
        let ab = ColoredGraph::new(k2.clone(), vec![0, 1]).unwrap();
        assert!(brute_force_colored_gi(&ab, &ab).is_isomorphic());
        let aa = ColoredGraph::new(k2, vec![0, 0]).unwrap();
        assert_eq!(brute_force_colored_gi(&ab, &aa), IsoResult::NonIsomorphic);
        let xyx = ColoredGraph::new(Graph::path(3), vec![0, 1, 0]).unwrap();
        let xxy = ColoredGraph::new(Graph::path(3), vec![0, 0, 1]).unwrap();
        assert_eq!(brute_force_colored_gi(&xyx, &xxy), IsoResult::NonIsomorphic);
    }

    #[test]
    fn deletion_examples() {
        let cograph = builtin_family("cograph").unwrap();
        let sets: Vec<Vec<usize>> = brute_force_deletion_sets(&Graph::path(4), &cograph, 1)
            .iter()
            .map(|s| s.vertices().to_vec())
            .collect();
        assert_eq!(sets, vec![vec![0], vec![1], vec![2], vec![3]]);
        let member = brute_force_deletion_sets(&Graph::cycle(4), &cograph, 2);
        assert_eq!(member.len(), 1);
        assert!(member[0].is_empty());
        assert!(brute_force_deletion_sets(&Graph::cycle(5), &cograph, 1).is_empty());
        assert_eq!(brute_force_distance(&Graph::cycle(5), &cograph, 3), Some(2));
    }

    #[test]
    fn graph_counts() {
        // numbers of unlabeled graphs on 0..=6 vertices
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = Graph::path(5).disjoint_union(&Graph::complete(2));
        let h = g.relabel(&VertexBijection::new(vec![6, 2, 4, 0, 1, 3, 5]));
        assert_eq!(small_canonical_form(&g), small_canonical_form(&h));
        assert_ne!(
            small_canonical_form(&Graph::cycle(6)),
            small_canonical_form(&Graph::path(6))
        );
    }
}
