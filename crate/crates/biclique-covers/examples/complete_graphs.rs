//! Covering complete graphs: the exact 1-cover number is `ceil(log2 n)`,
//! attained by splitting the vertices on each bit of their binary labels.
//!
//! Run with: `cargo run --release --example complete_graphs`

use biclique_covers::constructions::cover_complete_katona;
use biclique_covers::{bc_exact, verify_cover, Family, SolveLimits};

fn main() {
    let limits = SolveLimits::default();
    println!("n\tceil_log2\texact_bc1\tbinary_cover\tverified");
    for n in 2..=8usize {
        let g = Family::Complete(n).build().unwrap();
        let exact = bc_exact(&g, 1, &limits).unwrap().value;
        let cover = cover_complete_katona(n).unwrap();
        let ok = verify_cover(&g, &cover).unwrap().pass;
        let log = (usize::BITS - (n - 1).leading_zeros()) as u64;
        println!("{n}\t{log}\t{exact}\t{}\t{ok}", cover.size());
    }

    let cover = cover_complete_katona(8).unwrap();
    println!("\nthe three splits for n = 8:");
    for (b, _) in cover.entries() {
        println!("  {:?} | {:?}", b.x(), b.y());
    }
}
