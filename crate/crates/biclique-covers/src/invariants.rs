//! Exact graph invariants computed by backtracking with size guards.
//!
//! Everything here is meant for desk-scale instances; the guards reject
//! graphs large enough that the exponential searches would stall.

use thiserror::Error;

use crate::graph::{Coloring, Graph, VertexSet};

pub const CHROMATIC_GUARD: usize = 16;
pub const COVER_MATCHING_GUARD: usize = 24;
pub const EDGE_TRANSITIVITY_GUARD: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("size guard exceeded: {op} allows at most {guard} vertices, graph has {n}")]
    GuardExceeded {
        op: &'static str,
        guard: usize,
        n: usize,
    },
    #[error("operation requires at least one edge")]
    EmptyEdgeSet,
}

/// Exact chromatic number with a witness coloring (colors `1..=k`).
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring), InvariantError> {
    chromatic_number_with_guard(g, CHROMATIC_GUARD)
}

pub fn chromatic_number_with_guard(
    g: &Graph,
    guard: usize,
) -> Result<(usize, Coloring), InvariantError> {
    if g.n() > guard {
        return Err(InvariantError::GuardExceeded {
            op: "chromatic_number",
            guard,
            n: g.n(),
        });
    }
    for k in 1..=g.n().max(1) {
        let mut colors = vec![0usize; g.n()];
        if color_rec(g, k, 0, &mut colors) {
            return Ok((k, Coloring::new(colors, k).expect("witness is in range")));
        }
    }
    unreachable!("every graph on n vertices is n-colorable")
}

fn color_rec(g: &Graph, k: usize, v: usize, colors: &mut Vec<usize>) -> bool {
    if v == g.n() {
        return true;
    }
    let max_used = colors[..v].iter().copied().max().unwrap_or(0);
    // Trying color max_used+1 is enough to break color symmetry.
    for c in 1..=(max_used + 1).min(k) {
        if g.neighbors(v).iter().any(|w| colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if color_rec(g, k, v + 1, colors) {
            return true;
        }
        colors[v] = 0;
    }
    false
}

/// Exact minimum vertex cover with witness, by branching on an uncovered edge.
pub fn min_vertex_cover(g: &Graph) -> Result<(usize, Vec<usize>), InvariantError> {
    min_vertex_cover_with_guard(g, COVER_MATCHING_GUARD)
}

pub fn min_vertex_cover_with_guard(
    g: &Graph,
    guard: usize,
) -> Result<(usize, Vec<usize>), InvariantError> {
    if g.n() > guard {
        return Err(InvariantError::GuardExceeded {
            op: "min_vertex_cover",
            guard,
            n: g.n(),
        });
    }
    let mut best: Vec<usize> = (0..g.n()).collect();
    let mut chosen = Vec::new();
    let mut removed = VertexSet::empty(g.n());
    vc_branch(g, &mut chosen, &mut removed, &mut best);
    best.sort_unstable();
    Ok((best.len(), best))
}

fn vc_branch(g: &Graph, chosen: &mut Vec<usize>, removed: &mut VertexSet, best: &mut Vec<usize>) {
    if chosen.len() >= best.len() {
        return;
    }
    // First edge with both endpoints still present.
    let mut pick = None;
    'outer: for u in 0..g.n() {
        if removed.contains(u) {
            continue;
        }
        for v in g.neighbors(u).iter() {
            if v > u && !removed.contains(v) {
                pick = Some((u, v));
                break 'outer;
            }
        }
    }
    let Some((u, v)) = pick else {
        *best = chosen.clone();
        return;
    };
    for w in [u, v] {
        chosen.push(w);
        removed.insert(w);
        vc_branch(g, chosen, removed, best);
        removed.remove(w);
        chosen.pop();
    }
}

/// Exact maximum matching with witness, by branching over the lowest
/// unmatched vertex.
pub fn max_matching(g: &Graph) -> Result<(usize, Vec<(usize, usize)>), InvariantError> {
    max_matching_with_guard(g, COVER_MATCHING_GUARD)
}

pub fn max_matching_with_guard(
    g: &Graph,
    guard: usize,
) -> Result<(usize, Vec<(usize, usize)>), InvariantError> {
    if g.n() > guard {
        return Err(InvariantError::GuardExceeded {
            op: "max_matching",
            guard,
            n: g.n(),
        });
    }
    let mut best = Vec::new();
    let mut current = Vec::new();
    let mut used = VertexSet::empty(g.n());
    matching_branch(g, 0, &mut current, &mut used, &mut best);
    best.sort_unstable();
    Ok((best.len(), best))
}

fn matching_branch(
    g: &Graph,
    from: usize,
    current: &mut Vec<(usize, usize)>,
    used: &mut VertexSet,
    best: &mut Vec<(usize, usize)>,
) {
    // Upper bound: every remaining vertex contributes at most half an edge.
    let free = (from..g.n()).filter(|&v| !used.contains(v)).count();
    if current.len() + free / 2 <= best.len() {
        return;
    }
    let mut v = from;
    while v < g.n() && used.contains(v) {
        v += 1;
    }
    if v == g.n() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    used.insert(v);
    for w in g.neighbors(v).iter() {
        if w > v && !used.contains(w) {
            used.insert(w);
            current.push((v, w));
            matching_branch(g, v + 1, current, used, best);
            current.pop();
            used.remove(w);
        }
    }
    // Leave v unmatched.
    matching_branch(g, v + 1, current, used, best);
    used.remove(v);
}

/// True iff no two distinct vertices share two or more common neighbors,
/// which is equivalent to containing no 4-cycle subgraph.
pub fn is_c4_free(g: &Graph) -> bool {
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.neighbors(u).intersection(g.neighbors(v)).len() >= 2 {
                return false;
            }
        }
    }
    true
}

/// BFS two-coloring; returns the bipartition if one exists.
pub fn is_bipartite(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut side = vec![usize::MAX; g.n()];
    for start in 0..g.n() {
        if side[start] != usize::MAX {
            continue;
        }
        side[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v).iter() {
                if side[w] == usize::MAX {
                    side[w] = side[v] ^ 1;
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    let left = (0..g.n()).filter(|&v| side[v] == 0).collect();
    let right = (0..g.n()).filter(|&v| side[v] == 1).collect();
    Some((left, right))
}

/// Decides edge-transitivity: the orbit of a fixed base edge under the
/// automorphism group must contain every edge. For each target edge the
/// search looks for one automorphism mapping the base edge onto it (in
/// either orientation), extending a partial vertex map by backtracking with
/// degree pruning.
pub fn is_edge_transitive(g: &Graph) -> Result<bool, InvariantError> {
    is_edge_transitive_with_guard(g, EDGE_TRANSITIVITY_GUARD)
}

pub fn is_edge_transitive_with_guard(g: &Graph, guard: usize) -> Result<bool, InvariantError> {
    if g.n() > guard {
        return Err(InvariantError::GuardExceeded {
            op: "is_edge_transitive",
            guard,
            n: g.n(),
        });
    }
    let edges = g.edges();
    if edges.is_empty() {
        return Err(InvariantError::EmptyEdgeSet);
    }
    let (a, b) = edges[0];
    for &(c, d) in &edges[1..] {
        if !exists_automorphism_seeded(g, &[(a, c), (b, d)])
            && !exists_automorphism_seeded(g, &[(a, d), (b, c)])
        {
            return Ok(false);
        }
    }
    Ok(true)
}

fn exists_automorphism_seeded(g: &Graph, seed: &[(usize, usize)]) -> bool {
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut inv = vec![usize::MAX; n];
    for &(v, img) in seed {
        if g.degree(v) != g.degree(img) {
            return false;
        }
        if map[v] != usize::MAX || inv[img] != usize::MAX {
            if map[v] != img || inv[img] != v {
                return false;
            }
            continue;
        }
        map[v] = img;
        inv[img] = v;
    }
    // Consistency of the seed itself.
    for &(v, _) in seed {
        for &(w, _) in seed {
            if v != w && g.has_edge(v, w) != g.has_edge(map[v], map[w]) {
                return false;
            }
        }
    }
    automorphism_extend(g, &mut map, &mut inv)
}

fn automorphism_extend(g: &Graph, map: &mut Vec<usize>, inv: &mut Vec<usize>) -> bool {
    let n = g.n();
    let Some(v) = (0..n).find(|&v| map[v] == usize::MAX) else {
        return true;
    };
    for img in 0..n {
        if inv[img] != usize::MAX || g.degree(v) != g.degree(img) {
            continue;
        }
        let ok = (0..n)
            .all(|w| map[w] == usize::MAX || w == v || g.has_edge(v, w) == g.has_edge(img, map[w]));
        if !ok {
            continue;
        }
        map[v] = img;
        inv[img] = v;
        if automorphism_extend(g, map, inv) {
            return true;
        }
        map[v] = usize::MAX;
        inv[img] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn chromatic_basics() {
        let k5 = Family::Complete(5).build().unwrap();
        let (chi, witness) = chromatic_number(&k5).unwrap();
        assert_eq!(chi, 5);
        assert!(witness.is_proper_for(&k5));

        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(chromatic_number(&c5).unwrap().0, 3);

        let e7 = Family::Complete(7).build().unwrap().complement();
        assert_eq!(chromatic_number(&e7).unwrap().0, 1);
    }

    #[test]
    fn chromatic_witness_is_minimum() {
        // The Grötzsch graph is a classical chi = 4 instance.
        let (grotzsch, _) = crate::graph::mycielski(&Family::Cycle(5).build().unwrap());
        assert_eq!(chromatic_number(&grotzsch).unwrap().0, 4);
    }

    #[test]
    fn chromatic_guard() {
        let g = Family::Empty(17).build().unwrap();
        assert!(matches!(
            chromatic_number(&g),
            Err(InvariantError::GuardExceeded { .. })
        ));
    }

    #[test]
    fn vertex_cover_values() {
        let p4 = Family::Path(4).build().unwrap();
        let (beta, witness) = min_vertex_cover(&p4).unwrap();
        assert_eq!(beta, 2);
        assert!(p4
            .edges()
            .iter()
            .all(|&(u, v)| witness.contains(&u) || witness.contains(&v)));

        let k6 = Family::Complete(6).build().unwrap();
        assert_eq!(min_vertex_cover(&k6).unwrap().0, 5);
        let e5 = Family::Empty(5).build().unwrap();
        assert_eq!(min_vertex_cover(&e5).unwrap().0, 0);
        let pet = Family::Petersen.build().unwrap();
        assert_eq!(min_vertex_cover(&pet).unwrap().0, 6);
    }

    #[test]
    fn matching_values() {
        let p4 = Family::Path(4).build().unwrap();
        assert_eq!(max_matching(&p4).unwrap().0, 2);
        let c5 = Family::Cycle(5).build().unwrap();
        assert_eq!(max_matching(&c5).unwrap().0, 2);
        let k4 = Family::Complete(4).build().unwrap();
        let (alpha, witness) = max_matching(&k4).unwrap();
        assert_eq!(alpha, 2);
        // Witness edges are pairwise disjoint.
        let mut seen = std::collections::HashSet::new();
        for (u, v) in witness {
            assert!(seen.insert(u) && seen.insert(v));
        }
    }

    #[test]
    fn konig_on_bipartite_samples() {
        for g in [
            Family::Path(7).build().unwrap(),
            Family::Cycle(8).build().unwrap(),
            Family::Hypercube(3).build().unwrap(),
            Family::CompleteMultipartite(vec![3, 4]).build().unwrap(),
        ] {
            assert!(is_bipartite(&g).is_some());
            assert_eq!(min_vertex_cover(&g).unwrap().0, max_matching(&g).unwrap().0);
        }
    }

    #[test]
    fn c4_freeness() {
        assert!(!is_c4_free(&Family::Cycle(4).build().unwrap()));
        assert!(is_c4_free(&Family::Petersen.build().unwrap()));
        assert!(is_c4_free(&Family::Path(9).build().unwrap()));
        assert!(!is_c4_free(&Family::Hypercube(2).build().unwrap()));
    }

    #[test]
    fn bipartite_detects() {
        let q4 = Family::Hypercube(4).build().unwrap();
        let (left, right) = is_bipartite(&q4).unwrap();
        assert_eq!(left.len() + right.len(), 16);
        for v in left {
            assert_eq!((v as u32).count_ones() % 2, 0);
        }
        assert!(is_bipartite(&Family::Cycle(5).build().unwrap()).is_none());
        let e3 = Family::Empty(3).build().unwrap();
        assert_eq!(is_bipartite(&e3).unwrap(), (vec![0, 1, 2], vec![]));
    }

    #[test]
    fn edge_transitivity() {
        assert!(is_edge_transitive(&Family::Cycle(6).build().unwrap()).unwrap());
        assert!(is_edge_transitive(&Family::Petersen.build().unwrap()).unwrap());
        assert!(is_edge_transitive(&Family::Hypercube(3).build().unwrap()).unwrap());
        assert!(is_edge_transitive(&Family::Complete(5).build().unwrap()).unwrap());
        // The middle edge of a path lies in its own orbit.
        assert!(!is_edge_transitive(&Family::Path(4).build().unwrap()).unwrap());
        assert_eq!(
            is_edge_transitive(&Family::Empty(3).build().unwrap()),
            Err(InvariantError::EmptyEdgeSet)
        );
        let big = Family::Complete(13).build().unwrap();
        assert!(matches!(
            is_edge_transitive(&big),
            Err(InvariantError::GuardExceeded { .. })
        ));
    }
}
