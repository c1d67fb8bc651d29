//! Exact d-biclique cover numbers of cycles against the closed four-case
//! formula, with the matching star-based constructions.
//!
//! Run with: `cargo run --release --example cycle_formula`

use biclique_covers::constructions::{cover_cycle, cycle_cover_size};
use biclique_covers::{bc_exact, verify_cover, Family, SolveLimits};

fn main() {
    let limits = SolveLimits::default();
    println!("n\td\tformula\texact\tconstruction\tverified");
    for n in 3..=9usize {
        let g = Family::Cycle(n).build().unwrap();
        for d in 1..=4usize {
            let formula = cycle_cover_size(n as u64, d as u64);
            let exact = bc_exact(&g, d, &limits).unwrap().value;
            let cover = cover_cycle(n, d).unwrap();
            let ok = verify_cover(&g, &cover).unwrap().pass;
            println!("{n}\t{d}\t{formula}\t{exact}\t{}\t{ok}", cover.size());
            assert_eq!(formula, exact);
            assert_eq!(formula, cover.size());
        }
    }
    println!("\nall 28 cycle values match the formula");
}
