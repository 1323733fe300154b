//! Partition-connectivity toolkit for intersecting supermodular set
//! functions on small multigraphs and hypergraphs.
//!
//! Everything here is exact and exhaustive at desk scale: vertex sets are
//! 64-bit masks and the searches are bounded by [`Config`].

pub mod config;
pub mod decompose;
pub mod error;
pub mod extract;
pub mod graph;
pub mod orient;
pub mod partitions;
pub mod setfn;
pub mod sparse;
pub mod theta;
pub mod trim;
pub mod vertex_set;

pub use config::Config;
pub use decompose::{
    decompose_pc, half_degree_pc, hyper_bounded, max_family_oracle, max_sparse_family, pack_trees_pc,
    witness_partition, Decomposition, Leftover, SparseFamily,
};
pub use error::{Error, Result};
pub use extract::{
    ceiling_target, check_main_condition, check_tough_extract, extract_bounded, lex_min_excess, min_excess_basis,
    min_theta_extension, preset_eta, structure_witness, total_excess, ConditionVariant, ConditionVerdict, DegreeTarget,
    Preset, PresetMode, WitnessMode,
};
pub use graph::{
    boundary_count, cross_edges, induced_edge_count, local_rank, sigma, EdgeSubset, EdgeSystem, Host, Hyperedge,
    Hypergraph, MultiGraph, Orientation, Partition,
};
pub use orient::{
    arc_deficiency, extract_via_orientation, is_arc_connected, min_arc_subdigraph, orient_arc_connected, orient_decompose,
    OrientedDecomposition,
};
pub use partitions::{bell, enumerate_partitions};
pub use setfn::{validate, Properties, PropertyReport, SetFunction, Verdict};
pub use sparse::{
    basis_size, bases_containing, e_star, enumerate_bases, is_sparse, max_sparse, min_pc_subgraph, Bases, MinPcSubgraph,
};
pub use theta::{
    find_violating_partition, is_pc, pc_components, theta, theta_oracle, theta_restricted, theta_without,
    ComponentDecomposition,
};
pub use trim::{trim_arc, trim_pc, trim_sparse};
pub use vertex_set::VertexSet;
