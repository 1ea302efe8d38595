//! Cotrees by recursive connectivity / co-connectivity splitting, and
//! canonical codes for colored cographs.

use std::cmp::Ordering;

use thiserror::Error;

use crate::graph::{ColoredGraph, Graph, IsoResult, VertexBijection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a cograph: the vertices {module:?} induce a connected and co-connected subgraph")]
pub struct NotCograph {
    /// Original ids of the offending vertex set (it contains an induced P4).
    pub module: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(usize),
    /// Disjoint union of the children.
    Union(Vec<CotreeNode>),
    /// Complete join of the children.
    Join(Vec<CotreeNode>),
}

impl CotreeNode {
    fn leaves_into(&self, out: &mut Vec<usize>) {
        match self {
            CotreeNode::Leaf(v) => out.push(*v),
            CotreeNode::Union(ch) | CotreeNode::Join(ch) => ch.iter().for_each(|c| c.leaves_into(out)),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.leaves_into(&mut out);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotree {
    /// `None` for the graph without vertices.
    root: Option<CotreeNode>,
    n: usize,
}

impl Cotree {
    pub fn root(&self) -> Option<&CotreeNode> {
        self.root.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Rebuilds the graph: two leaves are adjacent iff their lowest common
    /// ancestor is a join node.
    pub fn to_graph(&self) -> Graph {
        fn collect(node: &CotreeNode, edges: &mut Vec<(usize, usize)>) -> Vec<usize> {
            match node {
                CotreeNode::Leaf(v) => vec![*v],
                CotreeNode::Union(ch) => ch.iter().flat_map(|c| collect(c, edges)).collect(),
                CotreeNode::Join(ch) => {
                    let groups: Vec<Vec<usize>> = ch.iter().map(|c| collect(c, edges)).collect();
                    for (i, a) in groups.iter().enumerate() {
                        for b in &groups[i + 1..] {
                            edges.extend(a.iter().flat_map(|&u| b.iter().map(move |&v| (u, v))));
                        }
                    }
                    groups.concat()
                }
            }
        }
        let mut edges = Vec::new();
        if let Some(root) = &self.root {
            collect(root, &mut edges);
        }
        Graph::from_edges(self.n, edges).expect("cotree leaves are distinct vertices")
    }
}

/// Splits on components, then on co-components; a part that is neither
/// disconnected nor co-disconnected contains an induced P4.
pub fn build_cotree(g: &Graph) -> Result<Cotree, NotCograph> {
    let n = g.n();
    if n == 0 {
        return Ok(Cotree { root: None, n });
    }
    let ids: Vec<usize> = (0..n).collect();
    let root = build(g, &ids)?;
    Ok(Cotree { root: Some(root), n })
}

fn build(g: &Graph, ids: &[usize]) -> Result<CotreeNode, NotCograph> {
    if g.n() == 1 {
        return Ok(CotreeNode::Leaf(ids[0]));
    }
    // children ordered by size, then smallest vertex
    let split = |mut parts: Vec<Vec<usize>>| -> Result<Vec<CotreeNode>, NotCograph> {
        parts.sort_by_key(|p| (p.len(), p[0]));
        parts
            .iter()
            .map(|part| {
                let (sub, map) = g.induced_subgraph(part).expect("part of the vertex set");
                let sub_ids: Vec<usize> = map.iter().map(|&v| ids[v]).collect();
                build(&sub, &sub_ids)
            })
            .collect()
    };
    let comps = g.components();
    if comps.len() > 1 {
        return split(comps).map(CotreeNode::Union);
    }
    let cocomps = g.complement_components();
    if cocomps.len() > 1 {
        return split(cocomps).map(CotreeNode::Join);
    }
    Err(NotCograph { module: ids.to_vec() })
}

const LEAF: u8 = b'L';
const UNION: u8 = b'U';
const JOIN: u8 = b'J';
const EMPTY: u8 = b'E';

/// Prefix-free serialization of a colored cotree with canonically sorted
/// children. Equal codes mean colored-isomorphic cographs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// A cotree node annotated with its code; children sorted by code.
struct Coded {
    code: Vec<u8>,
    leaf: Option<usize>,
    children: Vec<Coded>,
}

fn encode(node: &CotreeNode, colors: &[u32]) -> Coded {
    match node {
        CotreeNode::Leaf(v) => {
            let mut code = vec![LEAF];
            code.extend_from_slice(&colors[*v].to_be_bytes());
            Coded {
                code,
                leaf: Some(*v),
                children: Vec::new(),
            }
        }
        CotreeNode::Union(ch) | CotreeNode::Join(ch) => {
            let tag = if matches!(node, CotreeNode::Union(_)) {
                UNION
            } else {
                JOIN
            };
            let mut children: Vec<Coded> = ch.iter().map(|c| encode(c, colors)).collect();
            children.sort_by(|a, b| a.code.cmp(&b.code));
            let mut code = Vec::with_capacity(5 + children.iter().map(|c| c.code.len()).sum::<usize>());
            code.push(tag);
            code.extend_from_slice(&(children.len() as u32).to_be_bytes());
            for c in &children {
                code.extend_from_slice(&c.code);
            }
            Coded {
                code,
                leaf: None,
                children,
            }
        }
    }
}

pub fn canonical_code(tree: &Cotree, colors: &[u32]) -> CanonicalCode {
    match &tree.root {
        None => CanonicalCode(vec![EMPTY]),
        Some(root) => CanonicalCode(encode(root, colors).code),
    }
}

/// Pairs up equal-code subtrees; both trees must have the same code.
fn align(a: &Coded, b: &Coded, map: &mut [usize]) {
    debug_assert_eq!(a.code.cmp(&b.code), Ordering::Equal);
    match (a.leaf, b.leaf) {
        (Some(u), Some(v)) => map[u] = v,
        _ => {
            for (x, y) in a.children.iter().zip(&b.children) {
                align(x, y, map);
            }
        }
    }
}

pub fn colored_gi_cograph(a: &ColoredGraph, b: &ColoredGraph) -> Result<IsoResult, NotCograph> {
    let ta = build_cotree(a.graph())?;
    let tb = build_cotree(b.graph())?;
    if a.n() != b.n() {
        return Ok(IsoResult::NonIsomorphic);
    }
    let (Some(ra), Some(rb)) = (&ta.root, &tb.root) else {
        return Ok(IsoResult::Isomorphic(VertexBijection::identity(0)));
    };
    let ca = encode(ra, a.colors());
    let cb = encode(rb, b.colors());
    if ca.code != cb.code {
        return Ok(IsoResult::NonIsomorphic);
    }
    let mut map = vec![usize::MAX; a.n()];
    align(&ca, &cb, &mut map);
    Ok(IsoResult::Isomorphic(VertexBijection::new(map)))
}
