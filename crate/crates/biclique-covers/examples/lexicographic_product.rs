//! Lifting covers through the lexicographic product: a cover of `G[H]` of
//! size at most `bc_d(G) + bc_d(H) * chi(complement of G)`.
//!
//! Run with: `cargo run --release --example lexicographic_product`

use biclique_covers::biclique::CoverMultiset;
use biclique_covers::constructions::cover_lexicographic;
use biclique_covers::{
    bc_exact, chromatic_number, lexicographic_product, verify_cover, Family, Graph, SolveLimits,
};

fn optimal_cover(g: &Graph, d: usize, limits: &SolveLimits) -> CoverMultiset {
    if g.edge_count() == 0 {
        return CoverMultiset::empty(d);
    }
    bc_exact(g, d, limits).unwrap().witness
}

fn main() {
    let limits = SolveLimits::default();
    let cases: Vec<(&str, Graph, &str, Graph)> = vec![
        (
            "complete 2",
            Family::Complete(2).build().unwrap(),
            "complete 2",
            Family::Complete(2).build().unwrap(),
        ),
        (
            "complete 3",
            Family::Complete(3).build().unwrap(),
            "empty 2",
            Family::Empty(2).build().unwrap(),
        ),
        (
            "cycle 5",
            Family::Cycle(5).build().unwrap(),
            "path 3",
            Family::Path(3).build().unwrap(),
        ),
        (
            "path 4",
            Family::Path(4).build().unwrap(),
            "cycle 4",
            Family::Cycle(4).build().unwrap(),
        ),
    ];
    for d in [1usize, 2] {
        println!("d = {d}");
        println!("G\tH\t|V(G[H])|\t|E(G[H])|\tcover\tbound\tverified");
        for (gname, g, hname, h) in &cases {
            let cover_g = optimal_cover(g, d, &limits);
            let cover_h = optimal_cover(h, d, &limits);
            let (chi, coloring) = chromatic_number(&g.complement()).unwrap();
            let lifted = cover_lexicographic(g, &cover_g, h, &cover_h, &coloring).unwrap();
            let (product, _) = lexicographic_product(g, h).unwrap();
            let ok = verify_cover(&product, &lifted).unwrap().pass;
            let bound = cover_g.size() + cover_h.size() * chi as u64;
            println!(
                "{gname}\t{hname}\t{}\t{}\t{}\t{bound}\t{ok}",
                product.n(),
                product.edge_count(),
                lifted.size()
            );
            assert!(ok && lifted.size() <= bound);
        }
        println!();
    }
}
