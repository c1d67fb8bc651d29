//! Graph isomorphism by backtracking with degree-sequence pruning. Only
//! intended for the small instances used in cross-checks.

use crate::graph::Graph;

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut inv = vec![usize::MAX; h.n()];
    extend(g, h, 0, &mut map, &mut inv)
}

fn extend(g: &Graph, h: &Graph, v: usize, map: &mut Vec<usize>, inv: &mut Vec<usize>) -> bool {
    if v == g.n() {
        return true;
    }
    for img in 0..h.n() {
        if inv[img] != usize::MAX || g.degree(v) != h.degree(img) {
            continue;
        }
        let ok = (0..v).all(|w| g.has_edge(v, w) == h.has_edge(img, map[w]));
        if !ok {
            continue;
        }
        map[v] = img;
        inv[img] = v;
        if extend(g, h, v + 1, map, inv) {
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
    use crate::graph::{mycielski, Family, Graph};

    #[test]
    fn c5_is_self_complementary() {
        let c5 = Family::Cycle(5).build().unwrap();
        assert!(are_isomorphic(&c5, &c5.complement()));
    }

    #[test]
    fn mycielski_of_k2_is_c5() {
        let k2 = Family::Complete(2).build().unwrap();
        let (m, _) = mycielski(&k2);
        assert_eq!((m.n(), m.edge_count()), (5, 5));
        assert!(are_isomorphic(&m, &Family::Cycle(5).build().unwrap()));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let p4 = Family::Path(4).build().unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&p4, &star));
        let c6 = Family::Cycle(6).build().unwrap();
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles));
    }
}
