//! On edge-transitive graphs the fractional optimum equals `|E| / B`, and
//! some integer depth attains it exactly. This scans small depths for the
//! first one that does.
//!
//! Run with: `cargo run --release --example edge_transitive_tight_depth`

use biclique_covers::bounds::find_tight_d;
use biclique_covers::rational::{format_rat, rat_frac};
use biclique_covers::{
    bc_fractional, is_edge_transitive, max_biclique_edges, Family, Graph, SolveLimits,
};

fn main() {
    let limits = SolveLimits::default();
    let samples: Vec<(&str, Graph)> = vec![
        ("cycle 5", Family::Cycle(5).build().unwrap()),
        ("cycle 6", Family::Cycle(6).build().unwrap()),
        ("complete 4", Family::Complete(4).build().unwrap()),
        ("complete 5", Family::Complete(5).build().unwrap()),
        ("hypercube 3", Family::Hypercube(3).build().unwrap()),
        ("petersen", Family::Petersen.build().unwrap()),
    ];
    println!("graph\t|E|\tB\tbc_star\ttight_d\tbc_at_d");
    for (name, g) in &samples {
        assert!(is_edge_transitive(g).unwrap());
        let star = bc_fractional(g).unwrap().value;
        let (b, _) = max_biclique_edges(g).unwrap();
        assert_eq!(star, rat_frac(g.edge_count() as i64, b as i64));
        match find_tight_d(g, 6, &limits).unwrap() {
            Some(t) => println!(
                "{name}\t{}\t{b}\t{}\t{}\t{}",
                g.edge_count(),
                format_rat(&star),
                t.depth,
                t.result.value
            ),
            None => println!(
                "{name}\t{}\t{b}\t{}\tunknown within budget\t-",
                g.edge_count(),
                format_rat(&star)
            ),
        }
    }
}
