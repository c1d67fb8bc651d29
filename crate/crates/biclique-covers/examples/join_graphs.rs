//! Covers of joins: the parts' covers merge round-by-round and a cover of
//! the complete graph on the part indices handles all cross edges. Complete
//! multipartite graphs collapse to the complete graph on their parts.
//!
//! Run with: `cargo run --release --example join_graphs`

use biclique_covers::biclique::CoverMultiset;
use biclique_covers::constructions::{cover_complete_katona, cover_join};
use biclique_covers::{bc_exact, join, verify_cover, Family, Graph, SolveLimits};

fn main() {
    let limits = SolveLimits::default();

    // A complete 3-partite graph costs exactly as much as a triangle.
    let k222 = Family::CompleteMultipartite(vec![2, 2, 2]).build().unwrap();
    let k3 = Family::Complete(3).build().unwrap();
    let a = bc_exact(&k222, 1, &limits).unwrap().value;
    let b = bc_exact(&k3, 1, &limits).unwrap().value;
    println!("bc_1(multipartite 2,2,2) = {a}, bc_1(complete 3) = {b}");
    assert_eq!(a, b);

    // Build that optimum constructively: empty part covers plus the binary
    // cover of the index triangle.
    let empty = CoverMultiset::empty(1);
    let kk = cover_complete_katona(3).unwrap();
    let merged = cover_join(&[2, 2, 2], &[&empty, &empty, &empty], &kk).unwrap();
    assert!(verify_cover(&k222, &merged).unwrap().pass);
    println!(
        "constructive cover of the multipartite graph: size {}\n",
        merged.size()
    );

    // General joins: max part cover size + index cover size.
    println!("parts\td\tjoin_size\tcover\tbound");
    let part_lists: Vec<Vec<Graph>> = vec![
        vec![
            Family::Cycle(5).build().unwrap(),
            Family::Cycle(5).build().unwrap(),
        ],
        vec![
            Family::Path(3).build().unwrap(),
            Family::Complete(3).build().unwrap(),
            Family::Empty(2).build().unwrap(),
        ],
    ];
    for parts in &part_lists {
        for d in [1usize, 2] {
            let covers: Vec<CoverMultiset> = parts
                .iter()
                .map(|g| {
                    if g.edge_count() == 0 {
                        CoverMultiset::empty(d)
                    } else {
                        bc_exact(g, d, &limits).unwrap().witness
                    }
                })
                .collect();
            let kk = Family::Complete(parts.len()).build().unwrap();
            let kk_cover = bc_exact(&kk, d, &limits).unwrap().witness;
            let sizes: Vec<usize> = parts.iter().map(Graph::n).collect();
            let refs: Vec<&CoverMultiset> = covers.iter().collect();
            let merged = cover_join(&sizes, &refs, &kk_cover).unwrap();
            let (joined, _) = join(parts).unwrap();
            assert!(verify_cover(&joined, &merged).unwrap().pass);
            let bound = covers.iter().map(CoverMultiset::size).max().unwrap() + kk_cover.size();
            println!(
                "{}\t{d}\t({}, {})\t{}\t{bound}",
                parts.len(),
                joined.n(),
                joined.edge_count(),
                merged.size()
            );
        }
    }
}
