//! Finite simple graphs on dense vertex indices `0..n`, the generator
//! families used throughout the crate, and the graph operators (complement,
//! join, lexicographic product, Mycielski).
//!
//! Vertex indexing conventions for the operators are fixed so that covers
//! built against an operator output are reproducible bit-exactly:
//!
//! * `lexicographic_product(g, h)`: vertex `(x, y)` has index `x * h.n() + y`.
//! * `mycielski(g)`: original `v` keeps index `v`, its twin is `n + v`, and
//!   the root is `2n`.
//! * `join(parts)`: parts occupy consecutive index ranges in input order.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A set of vertices stored as a bit vector. Universe size is fixed at
/// construction; all binary operations require equal universes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> Self {
        let mut s = Self::empty(n);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple undirected graph. Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        let m = rows.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok(Graph { n, rows, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut rows = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = VertexSet::full(self.n);
            row.remove(v);
            row.difference_with(&self.rows[v]);
            rows.push(row);
        }
        let m = self.n * self.n.saturating_sub(1) / 2 - self.m;
        Graph { n: self.n, rows, m }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.m,
            self.edges()
        )
    }
}

/// The graph families provided by the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Complete(usize),
    Path(usize),
    Hypercube(u32),
    CompleteMultipartite(Vec<usize>),
    Petersen,
    Empty(usize),
}

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            Family::Cycle(n) => {
                if *n < 3 {
                    return Err(GraphError::InvalidParameter(format!(
                        "cycle needs n >= 3, got {n}"
                    )));
                }
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(*n, &edges)
            }
            Family::Complete(n) => {
                if *n == 0 {
                    return Err(GraphError::InvalidParameter("complete needs n >= 1".into()));
                }
                let mut edges = Vec::new();
                for u in 0..*n {
                    for v in u + 1..*n {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(*n, &edges)
            }
            Family::Path(n) => {
                if *n == 0 {
                    return Err(GraphError::InvalidParameter("path needs n >= 1".into()));
                }
                let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
                Graph::from_edges(*n, &edges)
            }
            Family::Hypercube(k) => {
                if *k == 0 {
                    return Err(GraphError::InvalidParameter(
                        "hypercube needs k >= 1".into(),
                    ));
                }
                if *k > 16 {
                    return Err(GraphError::InvalidParameter(format!(
                        "hypercube dimension {k} too large"
                    )));
                }
                let n = 1usize << k;
                let mut edges = Vec::new();
                for v in 0..n {
                    for bit in 0..*k {
                        let w = v ^ (1 << bit);
                        if w > v {
                            edges.push((v, w));
                        }
                    }
                }
                Graph::from_edges(n, &edges)
            }
            Family::CompleteMultipartite(parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    return Err(GraphError::InvalidParameter(
                        "multipartite needs nonempty positive part sizes".into(),
                    ));
                }
                let empties: Vec<Graph> = parts
                    .iter()
                    .map(|&p| Family::Empty(p).build())
                    .collect::<Result<_, _>>()?;
                Ok(join(&empties)?.0)
            }
            Family::Petersen => {
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                    edges.push((i, 5 + i));
                }
                Graph::from_edges(10, &edges)
            }
            Family::Empty(n) => {
                if *n == 0 {
                    return Err(GraphError::InvalidParameter("empty needs n >= 1".into()));
                }
                Graph::from_edges(*n, &[])
            }
        }
    }
}

/// Role of a vertex in an operator output, recorded so covers can be lifted
/// back and forth between a graph and its product or Mycielski construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexLabel {
    /// Vertex `(x, y)` of a lexicographic product.
    Product { left: usize, right: usize },
    /// Copy of an original vertex.
    Original(usize),
    /// Twin of an original vertex.
    Twin(usize),
    /// The Mycielski root.
    Root,
}

#[derive(Clone, Debug)]
pub struct VertexLabeling {
    labels: Vec<VertexLabel>,
}

impl VertexLabeling {
    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Join of the given graphs: disjoint union plus every edge between distinct
/// parts. Also returns the vertex range of each operand.
pub fn join(parts: &[Graph]) -> Result<(Graph, Vec<Range<usize>>), GraphError> {
    if parts.is_empty() {
        return Err(GraphError::InvalidParameter("join needs >= 1 part".into()));
    }
    let n: usize = parts.iter().map(Graph::n).sum();
    let mut edges = Vec::new();
    let mut ranges = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for g in parts {
        for (u, v) in g.edges() {
            edges.push((offset + u, offset + v));
        }
        ranges.push(offset..offset + g.n());
        offset += g.n();
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for u in ranges[i].clone() {
                for v in ranges[j].clone() {
                    edges.push((u, v));
                }
            }
        }
    }
    Ok((Graph::from_edges(n, &edges)?, ranges))
}

/// Lexicographic product: `(x1, y1) ~ (x2, y2)` iff `x1 x2` is an edge of
/// `g`, or `x1 = x2` and `y1 y2` is an edge of `h`.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<(Graph, VertexLabeling), GraphError> {
    if g.n() == 0 || h.n() == 0 {
        return Err(GraphError::InvalidParameter(
            "lexicographic product needs nonempty vertex sets".into(),
        ));
    }
    let hn = h.n();
    let n = g.n() * hn;
    let mut edges = Vec::new();
    for (x1, x2) in g.edges() {
        for y1 in 0..hn {
            for y2 in 0..hn {
                edges.push((x1 * hn + y1, x2 * hn + y2));
            }
        }
    }
    for x in 0..g.n() {
        for (y1, y2) in h.edges() {
            edges.push((x * hn + y1, x * hn + y2));
        }
    }
    let labels = (0..n)
        .map(|v| VertexLabel::Product {
            left: v / hn,
            right: v % hn,
        })
        .collect();
    Ok((Graph::from_edges(n, &edges)?, VertexLabeling { labels }))
}

/// Mycielski construction: each vertex `y` gains a twin `y'` adjacent to
/// `N(y)`, and a root `u` is joined to every twin.
pub fn mycielski(g: &Graph) -> (Graph, VertexLabeling) {
    let n = g.n();
    let mut edges = Vec::new();
    for (x, y) in g.edges() {
        edges.push((x, y));
        edges.push((x, n + y));
        edges.push((y, n + x));
    }
    for y in 0..n {
        edges.push((n + y, 2 * n));
    }
    let mut labels: Vec<VertexLabel> = (0..n).map(VertexLabel::Original).collect();
    labels.extend((0..n).map(VertexLabel::Twin));
    labels.push(VertexLabel::Root);
    let graph = Graph::from_edges(2 * n + 1, &edges).expect("mycielski edges are in range");
    (graph, VertexLabeling { labels })
}

/// A proper vertex coloring with colors `1..=k`.
#[derive(Clone, Debug)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Coloring, GraphError> {
        if colors.iter().any(|&c| c == 0 || c > k) {
            return Err(GraphError::InvalidParameter(format!(
                "colors must lie in 1..={k}"
            )));
        }
        Ok(Coloring { colors, k })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn color_count(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Vertices of each nonempty color class, in color order.
    pub fn classes(&self) -> Vec<(usize, Vec<usize>)> {
        let mut out = Vec::new();
        for c in 1..=self.k {
            let class: Vec<usize> = (0..self.colors.len())
                .filter(|&v| self.colors[v] == c)
                .collect();
            if !class.is_empty() {
                out.push((c, class));
            }
        }
        out
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && g.edges()
                .into_iter()
                .all(|(u, v)| self.colors[u] != self.colors[v])
    }
}
