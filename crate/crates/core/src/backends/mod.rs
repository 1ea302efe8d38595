//! Colored graph isomorphism on the base classes the engine delegates to.

pub mod census;
pub mod cotree;

use thiserror::Error;

use crate::graph::{ColoredGraph, Graph, IsoResult};
use crate::recognition::{is_cluster, BuiltinClass};

pub use census::{
    cluster_census, colored_gi_cluster, colored_gi_independent, independent_census, CensusError, TypeCensus,
};
pub use cotree::{build_cotree, canonical_code, colored_gi_cograph, CanonicalCode, Cotree, CotreeNode, NotCograph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BackendError {
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    NotCograph(#[from] NotCograph),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    /// Type census over edgeless graphs.
    Independent,
    /// Clique census over disjoint unions of cliques.
    Cluster,
    /// Cotree canonical codes.
    Cograph,
}

impl Backend {
    pub fn for_class(class: BuiltinClass) -> Backend {
        match class {
            BuiltinClass::Edgeless => Backend::Independent,
            BuiltinClass::Cluster => Backend::Cluster,
            // threshold graphs are cographs
            BuiltinClass::Cograph | BuiltinClass::Threshold => Backend::Cograph,
        }
    }

    /// The cheapest backend able to handle `g`, if any.
    pub fn narrowest_for(g: &Graph) -> Option<Backend> {
        if g.edge_count() == 0 {
            Some(Backend::Independent)
        } else if is_cluster(g) {
            Some(Backend::Cluster)
        } else if build_cotree(g).is_ok() {
            Some(Backend::Cograph)
        } else {
            None
        }
    }

    /// Every class a backend accepts contains the classes of the narrower ones.
    pub fn widen(self, other: Backend) -> Backend {
        use Backend::*;
        match (self, other) {
            (Cograph, _) | (_, Cograph) => Cograph,
            (Cluster, _) | (_, Cluster) => Cluster,
            _ => Independent,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Backend::Independent => "independent",
            Backend::Cluster => "cluster",
            Backend::Cograph => "cograph",
        }
    }

    pub fn solve(self, a: &ColoredGraph, b: &ColoredGraph) -> Result<IsoResult, BackendError> {
        Ok(match self {
            Backend::Independent => colored_gi_independent(a, b)?,
            Backend::Cluster => colored_gi_cluster(a, b)?,
            Backend::Cograph => colored_gi_cograph(a, b)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn narrowest_backend() {
        assert_eq!(Backend::narrowest_for(&Graph::empty(3)), Some(Backend::Independent));
        assert_eq!(Backend::narrowest_for(&Graph::complete(3)), Some(Backend::Cluster));
        assert_eq!(Backend::narrowest_for(&Graph::cycle(4)), Some(Backend::Cograph));
        assert_eq!(Backend::narrowest_for(&Graph::path(4)), None);
        assert_eq!(Backend::Independent.widen(Backend::Cluster), Backend::Cluster);
        assert_eq!(Backend::Cograph.widen(Backend::Independent), Backend::Cograph);
    }
}
