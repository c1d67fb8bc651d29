//! Brute-force reference implementations for cross-checking the real
//! algorithms on tiny graphs. Nothing here is called from the solver paths;
//! the point is that these routines share no code with what they check.

use std::collections::HashMap;

use crate::biclique::Biclique;
use crate::graph::Graph;

/// Every biclique of `g`, by scanning all assignments of vertices to
/// side X, side Y, or neither. Exponential; keep `n` small.
pub fn all_bicliques(g: &Graph) -> Vec<Biclique> {
    let n = g.n();
    assert!(n <= 12, "all_bicliques is a 3^n scan");
    let mut out = std::collections::BTreeSet::new();
    let total = 3usize.pow(n as u32);
    'outer: for code in 0..total {
        let mut c = code;
        let mut x = Vec::new();
        let mut y = Vec::new();
        for v in 0..n {
            match c % 3 {
                1 => x.push(v),
                2 => y.push(v),
                _ => {}
            }
            c /= 3;
        }
        if x.is_empty() || y.is_empty() {
            continue;
        }
        for &u in &x {
            for &w in &y {
                if !g.has_edge(u, w) {
                    continue 'outer;
                }
            }
        }
        out.insert(Biclique::new(x, y).unwrap());
    }
    out.into_iter().collect()
}

fn dominates(big: &Biclique, small: &Biclique) -> bool {
    let sub = |a: &[usize], b: &[usize]| a.iter().all(|v| b.contains(v));
    (sub(small.x(), big.x()) && sub(small.y(), big.y()))
        || (sub(small.x(), big.y()) && sub(small.y(), big.x()))
}

/// Maximal bicliques obtained by filtering the full list for domination.
pub fn maximal_bicliques_brute(g: &Graph) -> Vec<Biclique> {
    let all = all_bicliques(g);
    all.iter()
        .filter(|b| !all.iter().any(|other| *b != other && dominates(other, b)))
        .cloned()
        .collect()
}

/// True iff `small` is contained in some member of `list`, componentwise up
/// to a swap of sides.
pub fn dominated_by_any(small: &Biclique, list: &[Biclique]) -> bool {
    list.iter().any(|big| dominates(big, small))
}

/// Minimum size of a multiset of bicliques (all bicliques allowed, repeats
/// allowed) covering every edge of `g` at least `depth` times. Memoized
/// exhaustive search over deficiency states.
pub fn min_multicover_size(g: &Graph, depth: usize) -> u64 {
    let edges = g.edges();
    if edges.is_empty() {
        return 0;
    }
    let bicliques = all_bicliques(g);
    // Which edges each biclique covers, as index lists.
    let covers: Vec<Vec<usize>> = bicliques
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
    let mut memo: HashMap<Vec<u8>, u64> = HashMap::new();
    let start = vec![depth as u8; edges.len()];
    search(&covers, &mut memo, start)
}

fn search(covers: &[Vec<usize>], memo: &mut HashMap<Vec<u8>, u64>, state: Vec<u8>) -> u64 {
    let Some(target) = state.iter().position(|&c| c > 0) else {
        return 0;
    };
    if let Some(&v) = memo.get(&state) {
        return v;
    }
    let mut best = u64::MAX;
    for cover in covers {
        if !cover.contains(&target) {
            continue;
        }
        let mut next = state.clone();
        for &e in cover {
            next[e] = next[e].saturating_sub(1);
        }
        best = best.min(1 + search(covers, memo, next));
    }
    memo.insert(state, best);
    best
}

/// Minimum vertex cover size by scanning all vertex subsets.
pub fn min_vertex_cover_brute(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    let edges = g.edges();
    let mut best = n;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        if edges
            .iter()
            .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
        {
            best = size;
        }
    }
    best
}

/// Maximum matching size by scanning all edge subsets.
pub fn max_matching_brute(g: &Graph) -> usize {
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 20);
    let mut best = 0;
    'outer: for mask in 0u32..(1 << m) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut seen = 0u64;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            if seen >> u & 1 == 1 || seen >> v & 1 == 1 {
                continue 'outer;
            }
            seen |= (1 << u) | (1 << v);
        }
        best = size;
    }
    best
}

/// True iff `g` contains a 4-cycle subgraph, by scanning vertex 4-subsets.
pub fn has_c4_brute(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    // Three ways to arrange four vertices in a cycle.
                    let cycles = [
                        [(a, b), (b, c), (c, d), (d, a)],
                        [(a, b), (b, d), (d, c), (c, a)],
                        [(a, c), (c, b), (b, d), (d, a)],
                    ];
                    if cycles
                        .iter()
                        .any(|cyc| cyc.iter().all(|&(u, v)| g.has_edge(u, v)))
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Deterministic splittable RNG used by the randomized tests; keeping it
/// here avoids an external dependency and pins the exact sample streams.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        self.next_u64() % bound
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    /// Random graph where each pair is an edge with probability num/den.
    pub fn gnp(&mut self, n: usize, num: u64, den: u64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.chance(num, den) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }
}
