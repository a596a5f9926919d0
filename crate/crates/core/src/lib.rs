//! Complete forcing sets of graphs with perfect matchings: enumeration,
//! ordering-driven construction, exact solving, and closed-form bounds.
//!
//! A forcing set of a perfect matching M is a subset of M contained in no
//! other perfect matching; a complete forcing set is an edge set whose
//! restriction to every perfect matching forces it. This crate computes
//! forcing numbers f(M), the maximum forcing number F(G), constructed and
//! exact complete forcing numbers cf(G), and a registry of upper and lower
//! bounds, all over small to desk-scale graphs with exhaustive exact methods
//! guarded by explicit caps.

pub mod bounds;
pub mod construct;
pub mod error;
pub mod fixtures;
pub mod forcing;
pub mod graph;
pub mod hitting;
pub mod matchings;
pub mod set;

pub use bounds::{
    automorphisms, bound_cyclomatic, bound_deg_via_spectral, bound_degeneracy, bound_e_minus_delta,
    bound_max_degree, bound_outerplanar, bound_planar_spectral, bound_spectral, bound_sqrt_2m_n,
    cnk_lower, degeneracy_bound_comparison_grid, edge_orbits, full_report, is_edge_transitive,
    lower_bound_edge_transitive, lower_bound_matching_family, lower_bound_regular_bipartite,
    qn_bounds, spectral_radius, tree_product_bound, yu_rho_lower_bound, BoundEntry, BoundFlags,
    BoundKind, BoundReport, ClampedBound, AUT_GUARD, DEFAULT_TOL,
};
pub use construct::{
    algorithm_a, best_construction, exact_cf, is_complete_forcing_set_definitional,
    is_complete_forcing_set_frames, order_degeneracy, order_min_avg_two_degree, order_w_set, Caps,
    CfMethod, CfResult, ConstructionStep, ConstructionTrace, Strategy, W_SET_GUARD,
};
pub use error::ComputeError;
pub use forcing::{forcing_number, is_forcing_set, max_forcing_number, ForcingCertificate};
pub use graph::{
    avg_two_degree, boundary, cartesian_product, connectivity, cyclomatic, degeneracy,
    degree_stats, distance_matrix, gen_complete, gen_complete_multipartite, gen_cycle,
    gen_hypercube, gen_path, gen_wheel, induced_delete, two_degree, Graph, GraphError,
    InducedSubgraph,
};
pub use hitting::minimum_hitting_set;
pub use matchings::{
    count_pms_containing, enumerate_nice_cycles, enumerate_perfect_matchings, has_perfect_matching,
    is_nice_cycle, symmetric_difference_cycles, Matching, NiceCycle, PmCount,
};
pub use set::{EdgeSet, IndexSet, NotAPermutation, VertexOrdering, VertexSet};
