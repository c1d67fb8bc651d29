//! Maximal biclique enumeration and the quantities derived from it.
//!
//! A maximal biclique is a pair `(X, Y)` where each side equals the common
//! neighborhood of the other: `X = ∩_{y∈Y} N(y)` and `Y = ∩_{x∈X} N(x)`.
//! (Common neighborhoods never meet the set itself in a loopless graph, so
//! no explicit set difference is needed.) These pairs are exactly the closed
//! pairs of the Galois connection induced by adjacency, which gives a simple
//! complete enumeration: close each single-vertex seed, then repeatedly add
//! one outside vertex to a closed side and re-close, deduplicating closed
//! sides along the way. Every biclique of the graph extends to a closed
//! pair, so every biclique is dominated by some listed maximal one.

use std::collections::{BTreeSet, HashSet, VecDeque};

use thiserror::Error;

use crate::biclique::Biclique;
use crate::graph::{Graph, VertexSet};

pub const ENUMERATION_GUARD: usize = 32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("size guard exceeded: enumeration allows at most {guard} vertices, graph has {n}")]
    GuardExceeded { guard: usize, n: usize },
    #[error("operation requires at least one edge")]
    EmptyEdgeSet,
    #[error("depth must be at least 1")]
    ZeroDepth,
}

/// Intersection of the neighborhoods of all members of `s`. Empty `s` gives
/// the full vertex set.
fn common_neighborhood(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut acc = VertexSet::full(g.n());
    for v in s.iter() {
        acc.intersect_with(g.neighbors(v));
    }
    acc
}

/// All maximal bicliques of `g`, canonically oriented, sorted, deduplicated.
pub fn enumerate_maximal_bicliques(g: &Graph) -> Result<Vec<Biclique>, EngineError> {
    enumerate_maximal_bicliques_with_guard(g, ENUMERATION_GUARD)
}

pub fn enumerate_maximal_bicliques_with_guard(
    g: &Graph,
    guard: usize,
) -> Result<Vec<Biclique>, EngineError> {
    if g.n() > guard {
        return Err(EngineError::GuardExceeded { guard, n: g.n() });
    }
    if g.edge_count() == 0 {
        return Err(EngineError::EmptyEdgeSet);
    }
    let mut visited: HashSet<VertexSet> = HashSet::new();
    let mut queue: VecDeque<VertexSet> = VecDeque::new();
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            continue;
        }
        // Close {v}: the side containing v in the closure of that seed.
        let side = common_neighborhood(g, g.neighbors(v));
        if visited.insert(side.clone()) {
            queue.push_back(side);
        }
    }
    let mut out: BTreeSet<Biclique> = BTreeSet::new();
    while let Some(side) = queue.pop_front() {
        let partner = common_neighborhood(g, &side);
        debug_assert!(!partner.is_empty());
        out.insert(Biclique::from_sets(&side, &partner).expect("closed pair is a biclique"));
        for v in 0..g.n() {
            if side.contains(v) {
                continue;
            }
            let mut grown = side.clone();
            grown.insert(v);
            let new_partner = common_neighborhood(g, &grown);
            if new_partner.is_empty() {
                continue;
            }
            let closed = common_neighborhood(g, &new_partner);
            if visited.insert(closed.clone()) {
                queue.push_back(closed);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// `B(g)`: the maximum `|X| * |Y|` over the bicliques of `g`, together with
/// a maximal biclique attaining it (the canonically smallest one on ties).
pub fn max_biclique_edges(g: &Graph) -> Result<(u64, Biclique), EngineError> {
    let all = enumerate_maximal_bicliques(g)?;
    let mut best: Option<(u64, Biclique)> = None;
    for b in all {
        let units = b.edge_units();
        match &best {
            Some((bu, _)) if *bu >= units => {}
            _ => best = Some((units, b)),
        }
    }
    Ok(best.expect("at least one edge implies at least one biclique"))
}

/// The counting lower bound `ceil(d * |E(g)| / B(g))`. Any `d`-cover must
/// supply `d * |E|` coverage units and each biclique supplies at most `B`.
pub fn trivial_lower_bound(g: &Graph, depth: usize) -> Result<u64, EngineError> {
    if depth == 0 {
        return Err(EngineError::ZeroDepth);
    }
    let (b, _) = max_biclique_edges(g)?;
    let needed = depth as u64 * g.edge_count() as u64;
    Ok(needed.div_ceil(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::oracle;

    #[test]
    fn k3_has_three_maximal_stars() {
        let k3 = Family::Complete(3).build().unwrap();
        let got = enumerate_maximal_bicliques(&k3).unwrap();
        assert_eq!(got.len(), 3);
        for b in &got {
            assert_eq!(b.edge_units(), 2);
        }
        // Exhaustive cross-check against all bicliques on 3 vertices.
        assert_eq!(got, oracle::maximal_bicliques_brute(&k3));
    }

    #[test]
    fn c4_has_exactly_one() {
        let c4 = Family::Cycle(4).build().unwrap();
        let got = enumerate_maximal_bicliques(&c4).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0], Biclique::new(vec![0, 2], vec![1, 3]).unwrap());
    }

    #[test]
    fn q5_counts_stars_and_squares() {
        let q5 = Family::Hypercube(5).build().unwrap();
        let got = enumerate_maximal_bicliques(&q5).unwrap();
        let stars = got.iter().filter(|b| b.edge_units() == 5).count();
        let squares = got.iter().filter(|b| b.edge_units() == 4).count();
        assert_eq!((stars, squares, got.len()), (32, 80, 112));
        // Independent structural count: a square per pair at distance two.
        let mut pairs = 0;
        for u in 0..32 {
            for v in u + 1..32 {
                let common = q5.neighbors(u).intersection(q5.neighbors(v)).len();
                assert!(common == 0 || common == 2 || q5.has_edge(u, v));
                if common == 2 && !q5.has_edge(u, v) {
                    pairs += 1;
                }
            }
        }
        assert_eq!(pairs, 160);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for g in [
            Family::Path(5).build().unwrap(),
            Family::Cycle(6).build().unwrap(),
            Family::Complete(5).build().unwrap(),
            Family::CompleteMultipartite(vec![2, 3]).build().unwrap(),
            Family::Hypercube(2).build().unwrap(),
        ] {
            assert_eq!(
                enumerate_maximal_bicliques(&g).unwrap(),
                oracle::maximal_bicliques_brute(&g)
            );
        }
    }

    #[test]
    fn b_values() {
        let k5 = Family::Complete(5).build().unwrap();
        assert_eq!(max_biclique_edges(&k5).unwrap().0, 6);
        let q5 = Family::Hypercube(5).build().unwrap();
        assert_eq!(max_biclique_edges(&q5).unwrap().0, 5);
        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(max_biclique_edges(&c5).unwrap().0, 2);
        let pet = Family::Petersen.build().unwrap();
        assert_eq!(max_biclique_edges(&pet).unwrap().0, 3);
    }

    #[test]
    fn trivial_bound_values() {
        let q5 = Family::Hypercube(5).build().unwrap();
        assert_eq!(trivial_lower_bound(&q5, 1).unwrap(), 16);
        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(trivial_lower_bound(&c5, 1).unwrap(), 3);
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(trivial_lower_bound(&k4, 2).unwrap(), 3);
        assert_eq!(
            trivial_lower_bound(&Family::Empty(3).build().unwrap(), 1),
            Err(EngineError::EmptyEdgeSet)
        );
    }

    #[test]
    fn guard_applies() {
        let g = Family::Cycle(33).build().unwrap();
        assert!(matches!(
            enumerate_maximal_bicliques(&g),
            Err(EngineError::GuardExceeded { .. })
        ));
        let q5 = Family::Hypercube(5).build().unwrap();
        assert_eq!(q5.n(), 32);
        assert!(enumerate_maximal_bicliques(&q5).is_ok());
    }

    #[test]
    fn edgeless_graphs_are_rejected() {
        let e3 = Family::Empty(3).build().unwrap();
        assert_eq!(
            enumerate_maximal_bicliques(&e3),
            Err(EngineError::EmptyEdgeSet)
        );
        assert!(matches!(
            max_biclique_edges(&e3),
            Err(EngineError::EmptyEdgeSet)
        ));
    }
}
