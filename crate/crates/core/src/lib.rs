//! Exact treewidth and pathwidth, parameterized by vertex cover size.
//!
//! The solvers work on the graph extended by a universal vertex and a vertex
//! cover `C` of it; dynamic programming runs over three-partitions of `C`.
//! Every solver returns the width of the original graph together with a
//! witness decomposition that [`validate`] accepts at exactly that width.

pub mod complement;
pub mod convolution;
pub mod cover;
pub mod decomposition;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pathwidth;
pub mod states;
pub mod treewidth;
pub mod treewidth_fast;

mod space;

pub use complement::{
    pathwidth_cvc, pathwidth_cvc_capped, pathwidth_cvc_with, rooted_pw_table, CvcError, RootedPwTable, MAX_COMPLEMENT_COVER,
};
pub use convolution::{convolve, mobius, zeta, ConvolutionError, SetFunction};
pub use cover::{is_vertex_cover, minimum_vertex_cover, Cover, CoverError};
pub use decomposition::{
    make_nice, trace_of_node, validate, Decomposition, DecompositionError, DecompositionKind, NiceDecomposition,
    NiceKind, NiceNode, Trace, Violation,
};
pub use graph::{Graph, GraphError, InducedSubgraph, VertexId, VertexSet};
pub use io::{emit_gr, emit_td, parse_cover, parse_gr, parse_td, ParseError, ParseErrorKind, TdDocument};
pub use oracle::{enumerate_small_graphs, pathwidth_exact, treewidth_exact, OracleError, MAX_ORACLE_N};
pub use pathwidth::pathwidth_vc;
pub use states::{
    boundary_sets_pw, boundary_sets_tw, enumerate_valid_triples, is_valid_triple, locpw, loctw, pw_ops, side_count_l,
    tw_lower_ops, tw_upper_ops, BoundarySets, CoverGraph, CoverMask, OpTag, Quintuple, StateError, ValidTriple,
};
pub use treewidth::{join_values_4k, treewidth_vc_4k};
pub use treewidth_fast::{treewidth_vc_3k, treewidth_vc_3k_layers, LayeredRun};

/// Outcome of a width computation on the original (unextended) graph.
#[derive(Debug, Clone)]
pub struct Solution {
    /// Treewidth or pathwidth; −1 for the graph without vertices.
    pub width: i32,
    pub witness: Decomposition,
    pub stats: SolveStats,
}

/// Counters reported by the solvers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Size of the vertex cover of the input graph (without the universal vertex).
    pub cover_size: usize,
    pub valid_triples: usize,
    /// DP states with a finite value.
    pub states: usize,
    /// Allocated table cells.
    pub table_entries: usize,
    /// Join layers computed (layered treewidth solver only).
    pub layers: usize,
    /// Subset-function cells processed by the join layers: `Σ_X 2^(components
    /// of C ∖ X)` per join layer, summed over the layers run.
    pub join_cells: u64,
}

/// Errors shared by the cover-parameterized solvers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error("vertex cover of size {k} exceeds the limit of {limit}")]
    CoverTooLarge { k: usize, limit: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

/// Largest cover (without the universal vertex) the bitmask solvers accept.
pub const MAX_COVER: usize = 30;

pub(crate) struct Prepared {
    pub cg: CoverGraph,
    /// Id of the added universal vertex (the original vertex count).
    pub univ: VertexId,
}

/// Extends `g` by a universal vertex and indexes the cover plus that vertex,
/// which becomes the last cover index.
pub(crate) fn prepare(g: &Graph, cover: Option<&Cover>) -> Result<Prepared, SolveError> {
    let cover = match cover {
        Some(c) => Cover::new(g, c.vertices.clone())?,
        None => minimum_vertex_cover(g),
    };
    if cover.k() > MAX_COVER {
        return Err(SolveError::CoverTooLarge { k: cover.k(), limit: MAX_COVER });
    }
    let (g2, univ) = g.add_universal_vertex();
    let mut c2 = VertexSet::from_vertices(g2.n(), cover.vertices.iter());
    c2.insert(univ);
    let cg = CoverGraph::new(&g2, &c2).map_err(|e| SolveError::Internal(e.to_string()))?;
    Ok(Prepared { cg, univ })
}

/// Checks the witness against `g` before handing it out.
pub(crate) fn finish(g: &Graph, width: i32, witness: Decomposition, stats: SolveStats) -> Result<Solution, SolveError> {
    match validate(g, &witness) {
        Ok(w) if w == width => Ok(Solution { width, witness, stats }),
        Ok(w) => Err(SolveError::Internal(format!("witness has width {w}, expected {width}"))),
        Err(v) => Err(SolveError::Internal(format!("invalid witness: {}", v[0]))),
    }
}
