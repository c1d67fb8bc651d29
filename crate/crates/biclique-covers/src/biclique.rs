//! Bicliques, cover multisets, coverage profiles, and the good-cover
//! orientation search.
//!
//! A biclique here is a complete bipartite subgraph given by its bipartition
//! `(X, Y)`; it need not be induced, so the host graph may contain edges
//! inside `X` or inside `Y`. A `d`-cover is a multiset of bicliques putting
//! every host edge in at least `d` of them, repeats counted.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub const GOOD_COVER_GUARD: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("biclique side is empty")]
    EmptySide,
    #[error("biclique sides overlap at vertex {0}")]
    OverlappingSides(usize),
    #[error("biclique touches vertex {vertex} outside a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("cover depths differ: {0} vs {1}")]
    DepthMismatch(usize, usize),
    #[error("cover does not verify at depth {depth}: {reason}")]
    InvalidCover { depth: usize, reason: String },
    #[error("orientation guard exceeded: cover size {size} > {guard}")]
    GuardExceeded { size: usize, guard: usize },
    #[error("orientation does not match the cover: {0}")]
    BadOrientation(String),
    #[error("projected biclique has overlapping sides (entry {0})")]
    ProjectionOverlap(usize),
    #[error("{0}")]
    InvalidParameter(String),
}

/// An ordered bipartition `(X, Y)`, stored canonically: both sides sorted,
/// and the lexicographically smaller side first. Canonical storage makes
/// covers compare and serialize bit-exactly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Biclique {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl Biclique {
    pub fn new(mut x: Vec<usize>, mut y: Vec<usize>) -> Result<Biclique, CoverError> {
        if x.is_empty() || y.is_empty() {
            return Err(CoverError::EmptySide);
        }
        x.sort_unstable();
        x.dedup();
        y.sort_unstable();
        y.dedup();
        if let Some(&v) = x.iter().find(|v| y.binary_search(v).is_ok()) {
            return Err(CoverError::OverlappingSides(v));
        }
        if y < x {
            std::mem::swap(&mut x, &mut y);
        }
        Ok(Biclique { x, y })
    }

    pub fn from_sets(x: &VertexSet, y: &VertexSet) -> Result<Biclique, CoverError> {
        Biclique::new(x.to_vec(), y.to_vec())
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    /// Number of edges of the biclique itself: `|X| * |Y|`.
    pub fn edge_units(&self) -> u64 {
        self.x.len() as u64 * self.y.len() as u64
    }

    pub fn max_vertex(&self) -> usize {
        *self.x.last().unwrap().max(self.y.last().unwrap())
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        (self.x.binary_search(&u).is_ok() && self.y.binary_search(&v).is_ok())
            || (self.x.binary_search(&v).is_ok() && self.y.binary_search(&u).is_ok())
    }

    /// True iff every cross pair is an edge of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.max_vertex() < g.n()
            && self
                .x
                .iter()
                .all(|&u| self.y.iter().all(|&v| g.has_edge(u, v)))
    }
}

impl fmt::Debug for Biclique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}|{:?})", self.x, self.y)
    }
}

/// Checks the raw biclique condition for two vertex lists against a host.
pub fn is_biclique(g: &Graph, x: &[usize], y: &[usize]) -> bool {
    match Biclique::new(x.to_vec(), y.to_vec()) {
        Ok(b) => b.is_valid_in(g),
        Err(_) => false,
    }
}

/// A multiset of bicliques with a target depth. Entries are kept in
/// canonical order with equal bicliques merged, so equal multisets are
/// structurally equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverMultiset {
    depth: usize,
    entries: Vec<(Biclique, usize)>,
}

impl CoverMultiset {
    pub fn new(depth: usize, entries: Vec<(Biclique, usize)>) -> Result<CoverMultiset, CoverError> {
        if entries.iter().any(|&(_, m)| m == 0) {
            return Err(CoverError::ZeroMultiplicity);
        }
        let mut c = CoverMultiset { depth, entries };
        c.canonicalize();
        Ok(c)
    }

    pub fn empty(depth: usize) -> CoverMultiset {
        CoverMultiset {
            depth,
            entries: Vec::new(),
        }
    }

    fn canonicalize(&mut self) {
        self.entries.sort();
        let mut merged: Vec<(Biclique, usize)> = Vec::with_capacity(self.entries.len());
        for (b, m) in self.entries.drain(..) {
            match merged.last_mut() {
                Some((last, lm)) if *last == b => *lm += m,
                _ => merged.push((b, m)),
            }
        }
        self.entries = merged;
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn entries(&self) -> &[(Biclique, usize)] {
        &self.entries
    }

    /// Total size counting multiplicities.
    pub fn size(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m as u64).sum()
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    /// Every copy as its own element, in canonical entry order.
    pub fn copies(&self) -> impl Iterator<Item = &Biclique> + '_ {
        self.entries
            .iter()
            .flat_map(|(b, m)| std::iter::repeat_n(b, *m))
    }
}

/// Per-edge coverage counts over the full edge set of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageProfile {
    counts: BTreeMap<(usize, usize), usize>,
}

impl CoverageProfile {
    pub fn counts(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.counts
    }

    pub fn min_coverage(&self) -> Option<usize> {
        self.counts.values().copied().min()
    }

    pub fn deficient_edges(&self, depth: usize) -> Vec<(usize, usize)> {
        self.counts
            .iter()
            .filter(|&(_, &c)| c < depth)
            .map(|(&e, _)| e)
            .collect()
    }
}

/// Outcome of checking a cover against a host graph.
#[derive(Clone, Debug)]
pub struct Verification {
    pub profile: CoverageProfile,
    pub pass: bool,
    /// Entries that are not valid bicliques of the host, by entry index.
    pub invalid_entries: Vec<usize>,
}

/// Computes the coverage profile of `cover` on `g` and checks that every
/// entry is a valid biclique and every edge is covered at least `depth`
/// times. Out-of-range vertices are a hard error; everything else is
/// reported in the result.
pub fn verify_cover(g: &Graph, cover: &CoverMultiset) -> Result<Verification, CoverError> {
    let mut counts: BTreeMap<(usize, usize), usize> =
        g.edges().into_iter().map(|e| (e, 0)).collect();
    let mut invalid_entries = Vec::new();
    for (idx, (b, mult)) in cover.entries().iter().enumerate() {
        if b.max_vertex() >= g.n() {
            return Err(CoverError::VertexOutOfRange {
                vertex: b.max_vertex(),
                n: g.n(),
            });
        }
        if !b.is_valid_in(g) {
            invalid_entries.push(idx);
        }
        for &u in b.x() {
            for &v in b.y() {
                if let Some(c) = counts.get_mut(&(u.min(v), u.max(v))) {
                    *c += mult;
                }
            }
        }
    }
    let profile = CoverageProfile { counts };
    let pass = invalid_entries.is_empty() && profile.counts.values().all(|&c| c >= cover.depth());
    Ok(Verification {
        profile,
        pass,
        invalid_entries,
    })
}

/// A side labeling for a cover: entry `i` has `x_first[i]` copies taking the
/// stored `X` side as the chosen side, and the remaining copies taking the
/// stored `Y` side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodOrientation {
    pub x_first: Vec<usize>,
}

impl GoodOrientation {
    /// Accumulated per-vertex counts of chosen sides under this orientation.
    pub fn vertex_counts(&self, n: usize, cover: &CoverMultiset) -> Result<Vec<usize>, CoverError> {
        if self.x_first.len() != cover.entry_count() {
            return Err(CoverError::BadOrientation(format!(
                "orientation has {} entries, cover has {}",
                self.x_first.len(),
                cover.entry_count()
            )));
        }
        let mut counts = vec![0usize; n];
        for ((b, mult), &xf) in cover.entries().iter().zip(&self.x_first) {
            if xf > *mult {
                return Err(CoverError::BadOrientation(format!(
                    "orientation count {xf} exceeds multiplicity {mult}"
                )));
            }
            for &v in b.x() {
                if v < n {
                    counts[v] += xf;
                }
            }
            for &v in b.y() {
                if v < n {
                    counts[v] += mult - xf;
                }
            }
        }
        Ok(counts)
    }
}

/// Searches for an orientation of a verified cover under which every vertex
/// of `g` appears at least `depth` times among the chosen sides. Every copy
/// gets a side: adding chosen sides never decreases the counts, so taking
/// the whole cover is without loss.
pub fn is_good_cover(
    g: &Graph,
    cover: &CoverMultiset,
) -> Result<Option<GoodOrientation>, CoverError> {
    is_good_cover_with_guard(g, cover, GOOD_COVER_GUARD)
}

pub fn is_good_cover_with_guard(
    g: &Graph,
    cover: &CoverMultiset,
    guard: usize,
) -> Result<Option<GoodOrientation>, CoverError> {
    let size = cover.size() as usize;
    if size > guard {
        return Err(CoverError::GuardExceeded { size, guard });
    }
    let verification = verify_cover(g, cover)?;
    if !verification.pass {
        return Err(CoverError::InvalidCover {
            depth: cover.depth(),
            reason: "good-cover check requires a verified cover".into(),
        });
    }
    let n = g.n();
    let d = cover.depth();
    let entries = cover.entries();
    // suffix_max[i][v]: most that entries i.. can still add to vertex v.
    let mut suffix_max = vec![vec![0usize; n]; entries.len() + 1];
    for i in (0..entries.len()).rev() {
        let (b, mult) = &entries[i];
        suffix_max[i] = suffix_max[i + 1].clone();
        for &v in b.x().iter().chain(b.y()) {
            suffix_max[i][v] += mult;
        }
    }
    let mut counts = vec![0usize; n];
    let mut chosen = Vec::with_capacity(entries.len());
    if orient_search(entries, 0, d, &mut counts, &suffix_max, &mut chosen) {
        Ok(Some(GoodOrientation { x_first: chosen }))
    } else {
        Ok(None)
    }
}

fn orient_search(
    entries: &[(Biclique, usize)],
    i: usize,
    d: usize,
    counts: &mut Vec<usize>,
    suffix_max: &[Vec<usize>],
    chosen: &mut Vec<usize>,
) -> bool {
    if counts
        .iter()
        .zip(&suffix_max[i])
        .any(|(&c, &rest)| c + rest < d)
    {
        return false;
    }
    if i == entries.len() {
        return counts.iter().all(|&c| c >= d);
    }
    let (b, mult) = &entries[i];
    for xf in (0..=*mult).rev() {
        for &v in b.x() {
            counts[v] += xf;
        }
        for &v in b.y() {
            counts[v] += mult - xf;
        }
        chosen.push(xf);
        if orient_search(entries, i + 1, d, counts, suffix_max, chosen) {
            return true;
        }
        chosen.pop();
        for &v in b.x() {
            counts[v] -= xf;
        }
        for &v in b.y() {
            counts[v] -= mult - xf;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn star(center: usize, leaves: &[usize]) -> Biclique {
        Biclique::new(vec![center], leaves.to_vec()).unwrap()
    }

    #[test]
    fn biclique_canonical_form() {
        let b1 = Biclique::new(vec![2, 0], vec![1, 3]).unwrap();
        let b2 = Biclique::new(vec![3, 1], vec![0, 2]).unwrap();
        assert_eq!(b1, b2);
        assert_eq!(b1.x(), &[0, 2]);
        assert!(Biclique::new(vec![], vec![1]).is_err());
        assert!(matches!(
            Biclique::new(vec![0, 1], vec![1, 2]),
            Err(CoverError::OverlappingSides(1))
        ));
    }

    #[test]
    fn is_biclique_examples() {
        let k4 = Family::Complete(4).build().unwrap();
        assert!(is_biclique(&k4, &[0], &[1, 2, 3]));
        let c5 = Family::Cycle(5).build().unwrap();
        assert!(is_biclique(&c5, &[0, 2], &[1]));
        assert!(!is_biclique(&c5, &[0], &[2]));
    }

    #[test]
    fn verify_cover_pass_and_fail() {
        let c4 = Family::Cycle(4).build().unwrap();
        for d in 1..=3 {
            let cover =
                CoverMultiset::new(d, vec![(Biclique::new(vec![0, 2], vec![1, 3]).unwrap(), d)])
                    .unwrap();
            let v = verify_cover(&c4, &cover).unwrap();
            assert!(v.pass);
            assert!(v.profile.counts().values().all(|&c| c == d));
        }

        let k3 = Family::Complete(3).build().unwrap();
        let partial = CoverMultiset::new(1, vec![(star(0, &[1, 2]), 1)]).unwrap();
        let v = verify_cover(&k3, &partial).unwrap();
        assert!(!v.pass);
        assert_eq!(v.profile.deficient_edges(1), vec![(1, 2)]);

        // Empty cover at depth 0 is vacuously fine.
        let v = verify_cover(&k3, &CoverMultiset::empty(0)).unwrap();
        assert!(v.pass);
    }

    #[test]
    fn verify_cover_rejects_foreign_vertices() {
        let k3 = Family::Complete(3).build().unwrap();
        let cover = CoverMultiset::new(1, vec![(star(0, &[9]), 1)]).unwrap();
        assert!(matches!(
            verify_cover(&k3, &cover),
            Err(CoverError::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn verify_cover_flags_invalid_entries() {
        let c5 = Family::Cycle(5).build().unwrap();
        let entry = Biclique::new(vec![0], vec![2]).unwrap();
        let cover = CoverMultiset::new(0, vec![(entry, 1)]).unwrap();
        let v = verify_cover(&c5, &cover).unwrap();
        assert!(!v.pass);
        assert_eq!(v.invalid_entries, vec![0]);
    }

    #[test]
    fn good_cover_c6_all_stars() {
        let c6 = Family::Cycle(6).build().unwrap();
        let stars: Vec<_> = (0..6)
            .map(|c| (star(c, &[(c + 5) % 6, (c + 1) % 6]), 1))
            .collect();
        let cover = CoverMultiset::new(2, stars).unwrap();
        let orientation = is_good_cover(&c6, &cover).unwrap().expect("good");
        let counts = orientation.vertex_counts(6, &cover).unwrap();
        assert!(counts.iter().all(|&c| c >= 2));
    }

    #[test]
    fn good_cover_alternate_stars_fails() {
        let c6 = Family::Cycle(6).build().unwrap();
        let stars: Vec<_> = [0, 2, 4]
            .iter()
            .map(|&c| (star(c, &[(c + 5) % 6, (c + 1) % 6]), 1))
            .collect();
        let cover = CoverMultiset::new(1, stars).unwrap();
        assert_eq!(is_good_cover(&c6, &cover).unwrap(), None);
    }

    #[test]
    fn good_cover_single_edge_fails() {
        let k2 = Family::Complete(2).build().unwrap();
        let cover = CoverMultiset::new(1, vec![(star(0, &[1]), 1)]).unwrap();
        assert_eq!(is_good_cover(&k2, &cover).unwrap(), None);
    }

    #[test]
    fn good_cover_requires_verified_input() {
        let c6 = Family::Cycle(6).build().unwrap();
        let cover = CoverMultiset::new(3, vec![(star(0, &[1, 5]), 1)]).unwrap();
        assert!(matches!(
            is_good_cover(&c6, &cover),
            Err(CoverError::InvalidCover { .. })
        ));
    }

    #[test]
    fn good_cover_guard() {
        let c6 = Family::Cycle(6).build().unwrap();
        let stars: Vec<_> = (0..6)
            .map(|c| (star(c, &[(c + 5) % 6, (c + 1) % 6]), 5))
            .collect();
        let cover = CoverMultiset::new(2, stars).unwrap();
        assert!(matches!(
            is_good_cover(&c6, &cover),
            Err(CoverError::GuardExceeded {
                size: 30,
                guard: 24
            })
        ));
        assert!(is_good_cover_with_guard(&c6, &cover, 30).unwrap().is_some());
    }

    #[test]
    fn multiset_merges_and_counts() {
        let b = star(0, &[1, 2]);
        let cover = CoverMultiset::new(1, vec![(b.clone(), 2), (star(1, &[0]), 1), (b.clone(), 1)])
            .unwrap();
        assert_eq!(cover.entry_count(), 2);
        assert_eq!(cover.size(), 4);
        assert_eq!(cover.copies().count(), 4);
    }
}
