//! Exact `d`-biclique cover numbers by branch and bound over the multicover
//! integer program
//!
//! ```text
//! minimize   sum_i x_i
//! subject to sum_{i : e in B_i} x_i >= d   for every edge e
//!            0 <= x_i <= d, integer
//! ```
//!
//! with one variable per maximal biclique. Both reductions preserve the
//! optimum: any biclique grows into a maximal one covering a superset of
//! edges, and a single variable contributes at most `d` useful units to any
//! constraint.
//!
//! Nodes are bounded by the exact rational LP relaxation and a cheap
//! counting bound; branching follows the fractional variable closest to a
//! half-integer. The initial incumbent is `d` copies of a greedy 1-cover.
//! The search is deterministic.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::biclique::{verify_cover, Biclique, CoverMultiset};
use crate::enumerate::{enumerate_maximal_bicliques_with_guard, EngineError, ENUMERATION_GUARD};
use crate::graph::Graph;
use crate::invariants::InvariantError;
use crate::rational::{ceil_to_u64, rat_u64, Rat};
use crate::simplex::{solve_covering_lp, LpOutcome};

use num_traits::{Signed, ToPrimitive};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("graph is not edge-transitive")]
    NotEdgeTransitive,
    #[error("solve guard exceeded before a provably optimal value was found")]
    GuardExceeded,
}

/// Configurable guards for a solve. Exceeding them never yields a silently
/// wrong value: the result is flagged as non-optimal instead.
#[derive(Clone, Debug)]
pub struct SolveLimits {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
    pub enumeration_guard: usize,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits {
            max_nodes: 1_000_000,
            time_limit: None,
            enumeration_guard: ENUMERATION_GUARD,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    GuardExceeded,
}

#[derive(Clone, Debug)]
pub struct IlpResult {
    pub value: u64,
    pub witness: CoverMultiset,
    pub nodes_explored: u64,
    pub status: SolveStatus,
}

struct Instance {
    /// Covering rows (edge indices) per maximal biclique.
    cols: Vec<Vec<usize>>,
    bicliques: Vec<Biclique>,
    m: usize,
    depth: u64,
}

struct Node {
    lower: Vec<u64>,
    upper: Vec<u64>,
}

/// Minimum size of a `d`-biclique cover of `g`, with a verified witness.
pub fn bc_exact(g: &Graph, depth: usize, limits: &SolveLimits) -> Result<IlpResult, SolveError> {
    if depth == 0 {
        return Err(EngineError::ZeroDepth.into());
    }
    if g.edge_count() == 0 {
        return Err(EngineError::EmptyEdgeSet.into());
    }
    let bicliques = enumerate_maximal_bicliques_with_guard(g, limits.enumeration_guard)?;
    let edges = g.edges();
    let cols: Vec<Vec<usize>> = bicliques
        .iter()
        .map(|b| {
            edges
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| b.contains_edge(u, v))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let inst = Instance {
        cols,
        bicliques,
        m: edges.len(),
        depth: depth as u64,
    };

    let (mut best_mults, mut best_value) = greedy_incumbent(&inst);
    let nv = inst.cols.len();
    let start = Instant::now();
    let mut nodes_explored: u64 = 0;
    let mut status = SolveStatus::Optimal;

    let mut stack = vec![Node {
        lower: vec![0; nv],
        upper: vec![inst.depth; nv],
    }];
    while let Some(node) = stack.pop() {
        nodes_explored += 1;
        if nodes_explored > limits.max_nodes
            || limits.time_limit.is_some_and(|t| start.elapsed() > t)
        {
            status = SolveStatus::GuardExceeded;
            break;
        }

        let base: u64 = node.lower.iter().sum();
        if base >= best_value {
            continue;
        }
        // Residual requirements after the forced lower bounds.
        let mut residual = vec![inst.depth as i64; inst.m];
        for j in 0..nv {
            if node.lower[j] > 0 {
                for &e in &inst.cols[j] {
                    residual[e] -= node.lower[j] as i64;
                }
            }
        }
        let deficient: Vec<usize> = (0..inst.m).filter(|&e| residual[e] > 0).collect();
        if deficient.is_empty() {
            // The lower bounds alone are a cover.
            best_value = base;
            best_mults = node.lower.clone();
            continue;
        }
        let row_of: Vec<usize> = {
            let mut map = vec![usize::MAX; inst.m];
            for (i, &e) in deficient.iter().enumerate() {
                map[e] = i;
            }
            map
        };
        let active: Vec<usize> = (0..nv)
            .filter(|&j| {
                node.upper[j] > node.lower[j]
                    && inst.cols[j].iter().any(|&e| row_of[e] != usize::MAX)
            })
            .collect();
        let lp_cols: Vec<Vec<usize>> = active
            .iter()
            .map(|&j| {
                inst.cols[j]
                    .iter()
                    .filter(|&&e| row_of[e] != usize::MAX)
                    .map(|&e| row_of[e])
                    .collect()
            })
            .collect();
        // Feasibility: every deficient row needs an active variable.
        let mut hit = vec![false; deficient.len()];
        for col in &lp_cols {
            for &r in col {
                hit[r] = true;
            }
        }
        if hit.iter().any(|&h| !h) {
            continue;
        }

        let rhs: Vec<u64> = deficient.iter().map(|&e| residual[e] as u64).collect();
        let max_rhs = *rhs.iter().max().unwrap();
        // Counting bound: each unit of any variable covers at most its
        // number of deficient rows.
        let total_residual: u64 = rhs.iter().sum();
        let best_unit = lp_cols.iter().map(Vec::len).max().unwrap() as u64;
        if base + total_residual.div_ceil(best_unit) >= best_value {
            continue;
        }

        // Caps at or above the largest residual never bind an LP optimum.
        let uppers: Vec<Option<u64>> = active
            .iter()
            .map(|&j| {
                let cap = node.upper[j] - node.lower[j];
                (cap < max_rhs).then_some(cap)
            })
            .collect();
        let sol = match solve_covering_lp(&lp_cols, &rhs, &uppers) {
            LpOutcome::Infeasible => continue,
            LpOutcome::Optimal(sol) => sol,
        };
        let relaxation = rat_u64(base) + &sol.value;
        if ceil_to_u64(&relaxation) >= best_value {
            continue;
        }

        // Integral relaxations close the node.
        if sol.x.iter().all(|v| v.is_integer()) {
            let extra: u64 = sol
                .x
                .iter()
                .map(|v| v.to_integer().to_u64().expect("small count"))
                .sum();
            if base + extra < best_value {
                best_value = base + extra;
                let mut mults = node.lower.clone();
                for (k, &j) in active.iter().enumerate() {
                    mults[j] += sol.x[k].to_integer().to_u64().expect("small count");
                }
                best_mults = mults;
            }
            continue;
        }

        // Branch on the fractional variable closest to a half-integer.
        let mut pick: Option<(usize, Rat)> = None;
        for (k, v) in sol.x.iter().enumerate() {
            if v.is_integer() {
                continue;
            }
            let frac = v - v.floor();
            let dist = (frac - crate::rational::rat_frac(1, 2)).abs();
            if pick.as_ref().is_none_or(|(_, d0)| dist < *d0) {
                pick = Some((k, dist));
            }
        }
        let (k, _) = pick.expect("non-integral solution has a fractional entry");
        let j = active[k];
        let value_at_j = rat_u64(node.lower[j]) + &sol.x[k];
        let floor_j = value_at_j
            .floor()
            .to_integer()
            .to_u64()
            .expect("small count");

        let mut down = Node {
            lower: node.lower.clone(),
            upper: node.upper.clone(),
        };
        down.upper[j] = floor_j;
        let mut up = node;
        up.lower[j] = floor_j + 1;
        stack.push(down);
        stack.push(up);
    }

    let witness = cover_from_mults(&inst, &best_mults, depth);
    let check = verify_cover(g, &witness).expect("witness vertices are in range");
    assert!(check.pass, "incumbent cover must verify");
    assert_eq!(witness.size(), best_value, "witness size equals value");
    Ok(IlpResult {
        value: best_value,
        witness,
        nodes_explored,
        status,
    })
}

fn cover_from_mults(inst: &Instance, mults: &[u64], depth: usize) -> CoverMultiset {
    let entries: Vec<(Biclique, usize)> = mults
        .iter()
        .enumerate()
        .filter(|&(_, &m)| m > 0)
        .map(|(j, &m)| (inst.bicliques[j].clone(), m as usize))
        .collect();
    CoverMultiset::new(depth, entries).expect("positive multiplicities")
}

/// `depth` copies of a greedy 1-cover: repeatedly take the maximal biclique
/// covering the most still-uncovered edges, ties broken by canonical order.
fn greedy_incumbent(inst: &Instance) -> (Vec<u64>, u64) {
    let mut covered = vec![false; inst.m];
    let mut picks: Vec<usize> = Vec::new();
    let mut remaining = inst.m;
    while remaining > 0 {
        let mut best: Option<(usize, usize)> = None;
        for (j, col) in inst.cols.iter().enumerate() {
            let gain = col.iter().filter(|&&e| !covered[e]).count();
            if gain > 0 && best.is_none_or(|(_, bg)| gain > bg) {
                best = Some((j, gain));
            }
        }
        let (j, _) = best.expect("every edge lies in some maximal biclique");
        picks.push(j);
        for &e in &inst.cols[j] {
            if !covered[e] {
                covered[e] = true;
                remaining -= 1;
            }
        }
    }
    let mut mults = vec![0u64; inst.cols.len()];
    for j in picks {
        mults[j] += inst.depth;
    }
    let value = mults.iter().sum();
    (mults, value)
}
