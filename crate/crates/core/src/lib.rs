//! Exact and constructive optimal proper-connection recoloring for small
//! graphs.
//!
//! Starting from a connected graph in which every edge carries the base
//! color, the library finds recolorings that make the graph properly
//! connected (a path between every vertex pair alternating colors along the
//! way) while minimizing the number of recolored edges plus the number of
//! new colors used.

pub mod analysis;
pub mod construct;
pub mod error;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod plan;
pub mod reference;
pub mod verify;

pub use analysis::{
    all_max_independent_sets, all_minimum_alpha_subgraphs, alpha_minimal_reduce, analyze,
    components_after_center_removal, independence_number, matching_number, max_independent_set,
    min_max_degree_spanning_tree, minimum_alpha_subgraph, unique_max_degree, AnalysisLimits,
    StructureReport, DEFAULT_VERTEX_CAP, EXACT_TREE_CAP,
};
pub use construct::{
    alpha2_plan, alpha3_plan, baseline_plan, conjecture_probe, construct_plan,
    exception_matching, exception_tree_plan, general_plan, outside_neighbors_covered,
    proper_tree_edge_coloring, ProbeReport, ProbeStatus,
};
pub use error::{Error, Result};
pub use generate::{generate, parse_family_spec, Family};
pub use graph::{EdgeColoring, Graph, BASE_COLOR, MAX_VERTICES};
pub use oracle::{
    batch_formula_check, default_budget, exact_pc_opt, tree_pc_opt, BatchReport, FormulaFamily,
    FormulaRow, SolveResult, SolveStatus,
};
pub use plan::{ColoringPlan, ConstructionTrace, RecoloredEdge};
pub use verify::{
    exists_pc_path, is_proper_path, is_properly_connected, recoloring_size, verify, PathWitness,
    VerifyReport,
};
