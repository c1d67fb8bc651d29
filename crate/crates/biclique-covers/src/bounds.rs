//! Derived bounds tying the exact, fractional, and counting views together:
//! the logarithmic lower bound on the fractional optimum, the search for a
//! depth at which the fractional optimum is attained exactly on
//! edge-transitive graphs, and the closed form for C4-free graphs with
//! matching cover and matching numbers.

use crate::enumerate::max_biclique_edges;
use crate::graph::Graph;
use crate::ilp::{bc_exact, IlpResult, SolveError, SolveLimits, SolveStatus};
use crate::invariants::{
    is_c4_free, is_edge_transitive, max_matching, min_vertex_cover, InvariantError,
};
use crate::lp::bc_fractional_with_limits;
use crate::rational::{rat_to_f64, rat_u64, Rat};

/// The only floating-point tolerance in the crate, fixed and recorded in
/// every record that uses it.
pub const LOG_BOUND_TOLERANCE: f64 = 1e-9;

/// Comparison record for `bc / (1 + ln B)` against the fractional optimum.
#[derive(Clone, Debug)]
pub struct LogBoundRecord {
    /// Exact 1-cover number.
    pub bc: u64,
    /// Maximum biclique edge count `B`.
    pub max_biclique_edges: u64,
    /// `bc / (1 + ln B)`, evaluated in floating point.
    pub bound: f64,
    /// Exact fractional optimum.
    pub bc_star: Rat,
    pub tolerance: f64,
    /// Whether `bc_star >= bound - tolerance`.
    pub holds: bool,
}

impl LogBoundRecord {
    /// Checks the depth-scaled variant `d * bc / (1 + ln B) <= bc_d`.
    pub fn check_depth(&self, depth: u64, bc_d: u64) -> bool {
        depth as f64 * self.bound <= bc_d as f64 + self.tolerance
    }
}

pub fn log_bound(g: &Graph, limits: &SolveLimits) -> Result<LogBoundRecord, SolveError> {
    let one_cover = bc_exact(g, 1, limits)?;
    if one_cover.status != SolveStatus::Optimal {
        return Err(SolveError::GuardExceeded);
    }
    let bc_star = bc_fractional_with_limits(g, limits)?.value;
    let (b, _) = max_biclique_edges(g)?;
    let bound = one_cover.value as f64 / (1.0 + (b as f64).ln());
    let holds = rat_to_f64(&bc_star) >= bound - LOG_BOUND_TOLERANCE;
    Ok(LogBoundRecord {
        bc: one_cover.value,
        max_biclique_edges: b,
        bound,
        bc_star,
        tolerance: LOG_BOUND_TOLERANCE,
        holds,
    })
}

/// A depth witnessing that the fractional optimum is attained.
#[derive(Clone, Debug)]
pub struct TightDepth {
    pub depth: u64,
    pub result: IlpResult,
    /// Spot check at twice the depth, when it fit inside the budget.
    pub doubled: Option<IlpResult>,
}

/// Searches `1..=d_max` for the smallest depth with `bc_d = d * bc_star`
/// exactly. Requires an edge-transitive input. `None` means no verdict
/// within the budget, never that no such depth exists.
pub fn find_tight_d(
    g: &Graph,
    d_max: u64,
    limits: &SolveLimits,
) -> Result<Option<TightDepth>, SolveError> {
    if !is_edge_transitive(g)? {
        return Err(SolveError::NotEdgeTransitive);
    }
    let bc_star = bc_fractional_with_limits(g, limits)?.value;
    for depth in 1..=d_max {
        let result = bc_exact(g, depth as usize, limits)?;
        if result.status != SolveStatus::Optimal {
            return Ok(None);
        }
        if rat_u64(result.value) == rat_u64(depth) * &bc_star {
            let doubled = if 2 * depth <= d_max {
                let r2 = bc_exact(g, 2 * depth as usize, limits)?;
                if r2.status == SolveStatus::Optimal {
                    assert_eq!(
                        rat_u64(r2.value),
                        rat_u64(2 * depth) * &bc_star,
                        "attained ratio must persist at double depth"
                    );
                    Some(r2)
                } else {
                    None
                }
            } else {
                None
            };
            return Ok(Some(TightDepth {
                depth,
                result,
                doubled,
            }));
        }
    }
    Ok(None)
}

/// `d * beta(g)` when the closed form applies (C4-free and the vertex cover
/// and matching numbers agree), `None` when the hypothesis fails.
pub fn bc_via_beta(g: &Graph, depth: usize) -> Result<Option<u64>, InvariantError> {
    if !is_c4_free(g) {
        return Ok(None);
    }
    let (beta, _) = min_vertex_cover(g)?;
    let (alpha, _) = max_matching(g)?;
    if beta != alpha {
        return Ok(None);
    }
    Ok(Some(depth as u64 * beta as u64))
}
