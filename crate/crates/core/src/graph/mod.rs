//! Simple undirected graphs, vertex colorings and isomorphism witnesses.
//!
//! Vertices are always `0..n`. Every derived graph (induced subgraph,
//! complement, relabeling) is built through the same constructor, so the
//! adjacency lists stay sorted, symmetric and loop-free.

mod dimacs;
mod graph6;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use thiserror::Error;

pub use dimacs::{parse_dimacs, DimacsError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("twin test needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("expected {expected} colors, got {got}")]
    ColorLength { expected: usize, got: usize },
}

/// Undirected simple graph on `0..n` stored as sorted neighbor lists.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: usize,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates raw adjacency lists. Callers guarantee symmetry
    /// and the absence of loops.
    fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph { adj, edges: twice / 2 }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|list| list.iter().map(|&w| w + offset).collect()));
        Graph {
            adj,
            edges: self.edges + other.edges,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    /// `G[S]`. The returned map sends each new index to its vertex in `self`;
    /// it is sorted, so relative vertex order is preserved.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let n = self.n();
        if let Some(&bad) = vertices.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n });
        }
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        Ok((self.induced_sorted(&keep), keep))
    }

    /// `G \ S`, with the map from new indices back to `self`.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            if v < gone.len() {
                gone[v] = true;
            }
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        (self.induced_sorted(&keep), keep)
    }

    fn induced_sorted(&self, keep: &[usize]) -> Graph {
        const ABSENT: usize = usize::MAX;
        let mut index = vec![ABSENT; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != ABSENT).then_some(index[w]))
                    .collect()
            })
            .collect();
        Self::from_raw_adjacency(adj)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut row = Vec::with_capacity(n.saturating_sub(1 + self.degree(u)));
                let mut it = self.adj[u].iter().peekable();
                for v in 0..n {
                    if it.peek() == Some(&&v) {
                        it.next();
                    } else if v != u {
                        row.push(v);
                    }
                }
                row
            })
            .collect();
        Self::from_raw_adjacency(adj)
    }

    /// `N(u) \ {v} = N(v) \ {u}`: true for adjacent and non-adjacent twins.
    pub fn are_twins(&self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        let a = self.adj[u].iter().filter(|&&w| w != v);
        let b = self.adj[v].iter().filter(|&&w| w != u);
        Ok(a.eq(b))
    }

    /// The graph with vertex `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &VertexBijection) -> Graph {
        assert_eq!(perm.len(), self.n(), "relabeling must cover every vertex");
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&w| perm[w]).collect();
        }
        Self::from_raw_adjacency(adj)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components of the complement, computed without materializing it.
    pub fn complement_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut unvisited: Vec<usize> = (0..n).collect();
        let mut mark = vec![false; n];
        let mut out = Vec::new();
        while let Some(root) = unvisited.first().copied() {
            unvisited.swap_remove(0);
            let mut comp = vec![root];
            let mut queue = vec![root];
            while let Some(v) = queue.pop() {
                for &w in &self.adj[v] {
                    mark[w] = true;
                }
                // Unvisited vertices not adjacent to v are its complement-neighbors.
                let (reached, rest): (Vec<usize>, Vec<usize>) = unvisited.iter().partition(|&&w| !mark[w]);
                for &w in &self.adj[v] {
                    mark[w] = false;
                }
                unvisited = rest;
                comp.extend_from_slice(&reached);
                queue.extend(reached);
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort_unstable_by_key(|c| c[0]);
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// The graph obtained by deleting the given edges (pairs in either order).
    pub(crate) fn without_edges(&self, drop: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in drop {
            adj[u].retain(|&w| w != v);
            adj[v].retain(|&w| w != u);
        }
        Self::from_raw_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Maps vertex `i` of a source graph to `self[i]` in a target graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexBijection(Vec<usize>);

impl VertexBijection {
    pub fn new(images: Vec<usize>) -> Self {
        VertexBijection(images)
    }

    pub fn identity(n: usize) -> Self {
        VertexBijection((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// True iff this is a bijection onto `0..target_n`.
    pub fn is_bijection_onto(&self, target_n: usize) -> bool {
        if self.0.len() != target_n {
            return false;
        }
        let mut hit = vec![false; target_n];
        for &t in &self.0 {
            if t >= target_n || std::mem::replace(&mut hit[t], true) {
                return false;
            }
        }
        true
    }

    /// Panics unless `self` is a bijection onto `0..len`.
    pub fn inverse(&self) -> VertexBijection {
        let mut inv = vec![usize::MAX; self.0.len()];
        for (i, &t) in self.0.iter().enumerate() {
            inv[t] = i;
        }
        VertexBijection(inv)
    }
}

impl std::ops::Index<usize> for VertexBijection {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

/// Outcome of an isomorphism test. A witness maps the first graph onto the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoResult {
    Isomorphic(VertexBijection),
    NonIsomorphic,
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }

    pub fn witness(&self) -> Option<&VertexBijection> {
        match self {
            IsoResult::Isomorphic(f) => Some(f),
            IsoResult::NonIsomorphic => None,
        }
    }
}

/// Interns arbitrary color labels as dense ids `0..c` in first-seen order.
///
/// Two colored graphs are comparable only when their colors come from the same
/// palette, so a pair of inputs should share one.
#[derive(Debug, Clone)]
pub struct Palette<L> {
    ids: HashMap<L, u32>,
}

impl<L: Hash + Eq + Clone> Palette<L> {
    pub fn new() -> Self {
        Palette { ids: HashMap::new() }
    }

    pub fn id(&mut self, label: &L) -> u32 {
        let next = self.ids.len() as u32;
        *self.ids.entry(label.clone()).or_insert(next)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }
}

impl<L: Hash + Eq + Clone> Default for Palette<L> {
    fn default() -> Self {
        Self::new()
    }
}

/// A graph with one (not necessarily proper) color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    graph: Graph,
    colors: Vec<u32>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, colors: Vec<u32>) -> Result<Self, GraphError> {
        if colors.len() != graph.n() {
            return Err(GraphError::ColorLength {
                expected: graph.n(),
                got: colors.len(),
            });
        }
        Ok(ColoredGraph { graph, colors })
    }

    /// Every vertex gets color 0.
    pub fn uncolored(graph: Graph) -> Self {
        let colors = vec![0; graph.n()];
        ColoredGraph { graph, colors }
    }

    /// Colors taken from arbitrary labels through a shared palette.
    pub fn with_labels<L: Hash + Eq + Clone>(
        graph: Graph,
        labels: &[L],
        palette: &mut Palette<L>,
    ) -> Result<Self, GraphError> {
        let colors = labels.iter().map(|l| palette.id(l)).collect();
        Self::new(graph, colors)
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    #[inline]
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Restriction to `keep` (sorted, deduplicated).
    pub fn induced(&self, keep: &[usize]) -> Result<(ColoredGraph, Vec<usize>), GraphError> {
        let (graph, map) = self.graph.induced_subgraph(keep)?;
        let colors = map.iter().map(|&v| self.colors[v]).collect();
        Ok((ColoredGraph { graph, colors }, map))
    }

    pub fn relabel(&self, perm: &VertexBijection) -> ColoredGraph {
        let graph = self.graph.relabel(perm);
        let mut colors = vec![0; self.colors.len()];
        for (v, &c) in self.colors.iter().enumerate() {
            colors[perm[v]] = c;
        }
        ColoredGraph { graph, colors }
    }
}

/// True iff `f` is a bijection `V(g) -> V(h)` preserving adjacency and
/// non-adjacency.
pub fn verify_isomorphism(g: &Graph, h: &Graph, f: &VertexBijection) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || !f.is_bijection_onto(h.n()) {
        return false;
    }
    // With equal edge counts, mapping every edge onto an edge is enough.
    g.edges().all(|(u, v)| h.has_edge(f[u], f[v]))
}

pub fn verify_colored_isomorphism(a: &ColoredGraph, b: &ColoredGraph, f: &VertexBijection) -> bool {
    verify_isomorphism(&a.graph, &b.graph, f) && (0..a.n()).all(|v| a.color(v) == b.color(f[v]))
}
