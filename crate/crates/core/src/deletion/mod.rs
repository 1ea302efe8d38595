//! Vertex-deletion sets: the bounded search tree for forbidden-pattern
//! classes, the high-degree kernel for vertex cover, and twin-covers.

mod search_tree;
mod vertex_cover;

use std::fmt;

pub use search_tree::{
    enumerate_deletion_sets, enumerate_occurrences, follow_branch_string, minimum_deletion_set, search_deletion_sets,
    BranchString, DeletionSearch, OccurrenceList,
};
pub use vertex_cover::{
    buss_kernel, enumerate_minimal_vertex_covers, enumerate_twin_covers, is_vertex_cover, twin_edges, BussKernel,
    KernelDecomposition,
};

/// What a deletion set certifies once removed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DeletionTarget {
    /// Membership in the class of the named forbidden family.
    Family(String),
    VertexCover,
    TwinCover,
}

impl fmt::Display for DeletionTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeletionTarget::Family(name) => f.write_str(name),
            DeletionTarget::VertexCover => f.write_str("vertex-cover"),
            DeletionTarget::TwinCover => f.write_str("twin-cover"),
        }
    }
}

/// A sorted, duplicate-free vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DeletionSet {
    vertices: Vec<usize>,
    target: DeletionTarget,
}

impl DeletionSet {
    pub fn new(mut vertices: Vec<usize>, target: DeletionTarget) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        DeletionSet { vertices, target }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn target(&self) -> &DeletionTarget {
        &self.target
    }
}

/// Renders as `{0,2}`.
impl fmt::Display for DeletionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Output order for every enumeration here: by size, then lexicographically.
pub(crate) fn sort_sets(sets: &mut [Vec<usize>]) {
    sets.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}
