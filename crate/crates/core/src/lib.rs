//! Graph isomorphism for graphs a few vertex deletions away from a simple
//! class (edgeless, cluster, cograph, threshold, or any class given by
//! finitely many forbidden induced subgraphs).
//!
//! The pipeline: find deletion sets ([`deletion`]), enumerate anchor
//! bijections and color the remainders ([`engine`]), then solve colored
//! isomorphism on the base class ([`backends`]). [`oracle`] holds brute-force
//! references and [`games`] two further bounded search trees.

pub mod backends;
pub mod deletion;
pub mod engine;
pub mod games;
pub mod graph;
pub mod oracle;
pub mod recognition;

pub use engine::{decide, decide_colored, decide_with, EngineOptions, IsoError, ParamKind, Parameterization};
pub use graph::{
    parse_dimacs, parse_graph6, to_graph6, verify_colored_isomorphism, verify_isomorphism, ColoredGraph, Graph,
    GraphError, IsoResult, Palette, VertexBijection,
};
pub use recognition::{builtin_family, BuiltinClass, ForbiddenFamily};
