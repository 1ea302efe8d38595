//! Colored isomorphism for edgeless graphs and cluster graphs by counting
//! vertex (resp. clique) types.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{ColoredGraph, IsoResult, VertexBijection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("expected an edgeless graph, found edge {0:?}")]
    NotEdgeless((usize, usize)),
    #[error("the component of vertex {0} is not a clique")]
    NotCluster(usize),
}

/// Multiplicity of each type key.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TypeCensus<K: Ord>(BTreeMap<K, usize>);

impl<K: Ord> TypeCensus<K> {
    pub fn count(&self, key: &K) -> usize {
        self.0.get(key).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, usize)> {
        self.0.iter().map(|(k, &c)| (k, c))
    }
}

impl<K: Ord> FromIterator<K> for TypeCensus<K> {
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut map = BTreeMap::new();
        for key in iter {
            *map.entry(key).or_insert(0) += 1;
        }
        TypeCensus(map)
    }
}

/// Vertices of each color, in index order.
fn buckets<K: Ord + Clone>(keys: impl Iterator<Item = (K, usize)>) -> BTreeMap<K, Vec<usize>> {
    let mut out: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for (k, v) in keys {
        out.entry(k).or_default().push(v);
    }
    out
}

pub fn independent_census(cg: &ColoredGraph) -> Result<TypeCensus<u32>, CensusError> {
    if let Some(e) = cg.graph().edges().next() {
        return Err(CensusError::NotEdgeless(e));
    }
    Ok(cg.colors().iter().copied().collect())
}

pub fn colored_gi_independent(a: &ColoredGraph, b: &ColoredGraph) -> Result<IsoResult, CensusError> {
    if independent_census(a)? != independent_census(b)? {
        return Ok(IsoResult::NonIsomorphic);
    }
    let ba = buckets(a.colors().iter().copied().zip(0..));
    let bb = buckets(b.colors().iter().copied().zip(0..));
    let mut map = vec![0; a.n()];
    for (color, us) in &ba {
        for (&u, &v) in us.iter().zip(&bb[color]) {
            map[u] = v;
        }
    }
    Ok(IsoResult::Isomorphic(VertexBijection::new(map)))
}

/// Sorted member colors, then members sorted by (color, index).
type Clique = (Vec<u32>, Vec<usize>);

fn cliques(cg: &ColoredGraph) -> Result<Vec<Clique>, CensusError> {
    let g = cg.graph();
    g.components()
        .into_iter()
        .map(|mut comp| {
            if let Some(&v) = comp.iter().find(|&&v| g.degree(v) + 1 != comp.len()) {
                return Err(CensusError::NotCluster(v));
            }
            comp.sort_by_key(|&v| (cg.color(v), v));
            let key = comp.iter().map(|&v| cg.color(v)).collect();
            Ok((key, comp))
        })
        .collect()
}

/// Census keyed by the sorted color multiset of each clique.
pub fn cluster_census(cg: &ColoredGraph) -> Result<TypeCensus<Vec<u32>>, CensusError> {
    Ok(cliques(cg)?.into_iter().map(|(key, _)| key).collect())
}

pub fn colored_gi_cluster(a: &ColoredGraph, b: &ColoredGraph) -> Result<IsoResult, CensusError> {
    let ca = cliques(a)?;
    let cb = cliques(b)?;
    if a.n() != b.n() {
        return Ok(IsoResult::NonIsomorphic);
    }
    let census =
        |cs: &[(Vec<u32>, Vec<usize>)]| -> TypeCensus<Vec<u32>> { cs.iter().map(|(k, _)| k.clone()).collect() };
    if census(&ca) != census(&cb) {
        return Ok(IsoResult::NonIsomorphic);
    }
    let ba = buckets(ca.iter().map(|(k, _)| k.clone()).zip(0..));
    let bb = buckets(cb.iter().map(|(k, _)| k.clone()).zip(0..));
    let mut map = vec![0; a.n()];
    for (key, ias) in &ba {
        for (&ia, &ib) in ias.iter().zip(&bb[key]) {
            // Same key, so sorting by color lines the members up.
            for (&u, &v) in ca[ia].1.iter().zip(&cb[ib].1) {
                map[u] = v;
            }
        }
    }
    Ok(IsoResult::Isomorphic(VertexBijection::new(map)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify_colored_isomorphism, Graph, Palette};

    fn colored(g: Graph, labels: &[char], palette: &mut Palette<char>) -> ColoredGraph {
        ColoredGraph::with_labels(g, labels, palette).unwrap()
    }

    #[test]
    fn independent_examples() {
        let mut p = Palette::new();
        let x = colored(Graph::empty(3), &['a', 'a', 'b'], &mut p);
        let census = independent_census(&x).unwrap();
        assert_eq!((census.count(&0), census.count(&1), census.total()), (2, 1, 3));
        assert!(independent_census(&ColoredGraph::uncolored(Graph::empty(0)))
            .unwrap()
            .is_empty());
        let all_a = colored(Graph::empty(4), &['a'; 4], &mut p);
        assert_eq!(independent_census(&all_a).unwrap().count(&0), 4);

        let y = colored(Graph::empty(3), &['b', 'a', 'a'], &mut p);
        let f = colored_gi_independent(&x, &y).unwrap();
        assert!(verify_colored_isomorphism(&x, &y, f.witness().unwrap()));

        let aa = colored(Graph::empty(2), &['a', 'a'], &mut p);
        let ab = colored(Graph::empty(2), &['a', 'b'], &mut p);
        assert_eq!(colored_gi_independent(&aa, &ab).unwrap(), IsoResult::NonIsomorphic);

        let e = ColoredGraph::uncolored(Graph::empty(0));
        assert_eq!(
            colored_gi_independent(&e, &e).unwrap(),
            IsoResult::Isomorphic(VertexBijection::identity(0))
        );
        assert_eq!(
            colored_gi_independent(&ColoredGraph::uncolored(Graph::path(2)), &e),
            Err(CensusError::NotEdgeless((0, 1)))
        );
    }

    #[test]
    fn cluster_examples() {
        let mut p = Palette::new();
        let two_triangles = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let x = colored(two_triangles, &['a', 'a', 'a', 'a', 'b', 'a'], &mut p);
        let census = cluster_census(&x).unwrap();
        assert_eq!(census.count(&vec![0, 0, 0]), 1);
        assert_eq!(census.count(&vec![0, 0, 1]), 1);

        let k1k1 = colored(Graph::empty(2), &['a', 'a'], &mut p);
        assert_eq!(cluster_census(&k1k1).unwrap().count(&vec![0]), 2);

        assert_eq!(
            cluster_census(&ColoredGraph::uncolored(Graph::cycle(4))),
            Err(CensusError::NotCluster(0))
        );
    }

    #[test]
    fn cluster_gi_examples() {
        let k3k1 = ColoredGraph::uncolored(Graph::complete(3).disjoint_union(&Graph::complete(1)));
        let k1k3 = ColoredGraph::uncolored(Graph::complete(1).disjoint_union(&Graph::complete(3)));
        let f = colored_gi_cluster(&k3k1, &k1k3).unwrap();
        assert!(verify_colored_isomorphism(&k3k1, &k1k3, f.witness().unwrap()));

        let k3 = ColoredGraph::uncolored(Graph::complete(3));
        let k2k1 = ColoredGraph::uncolored(Graph::complete(2).disjoint_union(&Graph::complete(1)));
        assert_eq!(colored_gi_cluster(&k3, &k2k1).unwrap(), IsoResult::NonIsomorphic);

        let k2k2 = ColoredGraph::uncolored(Graph::complete(2).disjoint_union(&Graph::complete(2)));
        let k4 = ColoredGraph::uncolored(Graph::complete(4));
        assert_eq!(colored_gi_cluster(&k2k2, &k4).unwrap(), IsoResult::NonIsomorphic);

        let mut p = Palette::new();
        let a = colored(
            Graph::complete(2).disjoint_union(&Graph::complete(2)),
            &['x', 'y', 'y', 'y'],
            &mut p,
        );
        let b = colored(
            Graph::complete(2).disjoint_union(&Graph::complete(2)),
            &['y', 'y', 'y', 'x'],
            &mut p,
        );
        let f = colored_gi_cluster(&a, &b).unwrap();
        assert!(verify_colored_isomorphism(&a, &b, f.witness().unwrap()));
    }
}
