//! The fractional biclique cover number: the exact optimum of the covering
//! LP over maximal bicliques, with a feasible dual certificate.

use crate::biclique::Biclique;
use crate::enumerate::{enumerate_maximal_bicliques_with_guard, EngineError};
use crate::graph::Graph;
use crate::ilp::{SolveError, SolveLimits};
use crate::rational::{format_rat, Rat};
use crate::simplex::{solve_covering_lp, LpOutcome};

use num_traits::Zero;

/// An optimal fractional cover together with its certificate.
#[derive(Clone, Debug)]
pub struct LpResult {
    pub value: Rat,
    /// Nonzero optimal weights on maximal bicliques.
    pub weights: Vec<(Biclique, Rat)>,
    /// Optimal dual edge weights: nonnegative, summing to at most 1 over
    /// every maximal biclique, with total equal to `value`.
    pub dual: Vec<((usize, usize), Rat)>,
}

pub fn bc_fractional(g: &Graph) -> Result<LpResult, SolveError> {
    bc_fractional_with_limits(g, &SolveLimits::default())
}

pub fn bc_fractional_with_limits(g: &Graph, limits: &SolveLimits) -> Result<LpResult, SolveError> {
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
    let rhs = vec![1u64; edges.len()];
    let uppers = vec![None; cols.len()];
    let sol = match solve_covering_lp(&cols, &rhs, &uppers) {
        // Every edge lies in some maximal biclique, so the LP is feasible.
        LpOutcome::Infeasible => unreachable!("covering LP over maximal bicliques is feasible"),
        LpOutcome::Optimal(sol) => sol,
    };
    let weights = bicliques
        .into_iter()
        .zip(&sol.x)
        .filter(|(_, w)| !w.is_zero())
        .map(|(b, w)| (b, w.clone()))
        .collect();
    let dual = edges.into_iter().zip(sol.y).collect();
    Ok(LpResult {
        value: sol.value,
        weights,
        dual,
    })
}

/// Writes the `d`-multicover program for `g` in LP text format, one variable
/// per maximal biclique in canonical order, for cross-checking with outside
/// solvers.
pub fn write_lp_text(g: &Graph, depth: usize, limits: &SolveLimits) -> Result<String, SolveError> {
    if depth == 0 {
        return Err(EngineError::ZeroDepth.into());
    }
    let bicliques = enumerate_maximal_bicliques_with_guard(g, limits.enumeration_guard)?;
    let mut out = String::new();
    out.push_str("\\ biclique multicover program\n");
    for (j, b) in bicliques.iter().enumerate() {
        out.push_str(&format!(
            "\\ x{j} = biclique {} | {}\n",
            join_ids(b.x()),
            join_ids(b.y())
        ));
    }
    out.push_str("Minimize\n obj:");
    for j in 0..bicliques.len() {
        out.push_str(&format!(" {}x{j}", if j == 0 { "" } else { "+ " }));
    }
    out.push_str("\nSubject To\n");
    for (u, v) in g.edges() {
        let terms: Vec<String> = bicliques
            .iter()
            .enumerate()
            .filter(|(_, b)| b.contains_edge(u, v))
            .map(|(j, _)| format!("x{j}"))
            .collect();
        out.push_str(&format!(" e{u}_{v}: {} >= {depth}\n", terms.join(" + ")));
    }
    out.push_str("Bounds\n");
    for j in 0..bicliques.len() {
        out.push_str(&format!(" 0 <= x{j} <= {depth}\n"));
    }
    out.push_str("General\n");
    for j in 0..bicliques.len() {
        out.push_str(&format!(" x{j}\n"));
    }
    out.push_str("End\n");
    Ok(out)
}

fn join_ids(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders an `LpResult` value for reports.
pub fn format_lp_value(r: &LpResult) -> String {
    format_rat(&r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::rational::{rat_frac, rat_u64};
    use num_traits::Signed;

    #[test]
    fn k4_and_k5_fractional_values() {
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(bc_fractional(&k4).unwrap().value, rat_frac(3, 2));
        let k5 = Family::Complete(5).build().unwrap();
        assert_eq!(bc_fractional(&k5).unwrap().value, rat_frac(5, 3));
    }

    #[test]
    fn petersen_fractional_value() {
        let pet = Family::Petersen.build().unwrap();
        assert_eq!(bc_fractional(&pet).unwrap().value, rat_u64(5));
    }

    #[test]
    fn single_edge() {
        let k2 = Family::Complete(2).build().unwrap();
        assert_eq!(bc_fractional(&k2).unwrap().value, rat_u64(1));
    }

    #[test]
    fn dual_is_a_certificate() {
        let c5 = Family::Cycle(5).build().unwrap();
        let r = bc_fractional(&c5).unwrap();
        assert_eq!(r.value, rat_frac(5, 2));
        let total: Rat = r.dual.iter().map(|(_, y)| y.clone()).sum();
        assert_eq!(total, r.value);
        assert!(r.dual.iter().all(|(_, y)| !y.is_negative()));
        // Primal weights cover every edge to weight >= 1.
        for (u, v) in c5.edges() {
            let w: Rat = r
                .weights
                .iter()
                .filter(|(b, _)| b.contains_edge(u, v))
                .map(|(_, w)| w.clone())
                .sum();
            assert!(w >= rat_u64(1));
        }
    }

    #[test]
    fn lp_text_dump_shape() {
        let k3 = Family::Complete(3).build().unwrap();
        let text = write_lp_text(&k3, 2, &SolveLimits::default()).unwrap();
        assert!(text.contains("Minimize"));
        assert!(text.contains(">= 2"));
        assert!(text.contains("End"));
    }
}
