//! Exact solvers, bounds, and constructions for d-biclique covers of finite
//! simple graphs at desk scale.
//!
//! A *biclique* of a graph is a complete bipartite subgraph, given by the
//! two sides of its bipartition; it need not be induced. A *d-biclique
//! cover* is a multiset of bicliques such that every edge lies in at least
//! `d` of them, repeats counted, and `bc_d(G)` is the minimum size of such a
//! cover. This crate computes `bc_d` exactly (branch and bound over maximal
//! bicliques), computes the fractional relaxation `bc*` exactly (rational
//! simplex with dual certificates), evaluates the counting and logarithmic
//! lower bounds, and builds explicit covers for cycles, hypercubes, complete
//! graphs, lexicographic products, joins, and Mycielski graphs.
//!
//! Start from [`graph::Family`] and [`graph::Graph`] to build inputs, then:
//!
//! * [`ilp::bc_exact`] — exact cover number with a verified witness;
//! * [`lp::bc_fractional`] — exact `bc*` with a dual certificate;
//! * [`enumerate::max_biclique_edges`] / [`enumerate::trivial_lower_bound`];
//! * [`bounds::log_bound`], [`bounds::find_tight_d`], [`bounds::bc_via_beta`];
//! * [`constructions`] — cover builders for the structured families;
//! * [`report::bounds_report`] — everything above in one table row.
//!
//! The `examples/` directory has one runnable program per capability, and
//! the `bcover` binary exposes the same operations on files.

pub mod biclique;
pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod enumerate;
pub mod graph;
pub mod ilp;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod lp;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod simplex;

pub use biclique::{
    is_biclique, is_good_cover, verify_cover, Biclique, CoverMultiset, CoverageProfile,
    GoodOrientation,
};
pub use bounds::{bc_via_beta, find_tight_d, log_bound, LogBoundRecord, TightDepth};
pub use enumerate::{enumerate_maximal_bicliques, max_biclique_edges, trivial_lower_bound};
pub use graph::{
    join, lexicographic_product, mycielski, Coloring, Family, Graph, VertexLabel, VertexLabeling,
};
pub use ilp::{bc_exact, IlpResult, SolveError, SolveLimits, SolveStatus};
pub use invariants::{
    chromatic_number, is_bipartite, is_c4_free, is_edge_transitive, max_matching, min_vertex_cover,
};
pub use lp::{bc_fractional, LpResult};
pub use rational::Rat;
