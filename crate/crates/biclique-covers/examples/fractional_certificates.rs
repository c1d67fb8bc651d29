//! Exact fractional cover numbers with dual certificates. For complete
//! graphs the value has a closed form: 2(n-1)/n for even n, 2n/(n+1) for
//! odd n.
//!
//! Run with: `cargo run --release --example fractional_certificates`

use biclique_covers::enumerate_maximal_bicliques;
use biclique_covers::lp::bc_fractional;
use biclique_covers::rational::{format_rat, rat_frac, rat_u64, Rat};
use biclique_covers::Family;

fn main() {
    println!("n\tbc_star\tclosed_form\tdual_total\tmax_load");
    for n in 2..=8usize {
        let g = Family::Complete(n).build().unwrap();
        let r = bc_fractional(&g).unwrap();
        let closed = if n % 2 == 0 {
            rat_frac(2 * (n as i64 - 1), n as i64)
        } else {
            rat_frac(2 * n as i64, n as i64 + 1)
        };
        assert_eq!(r.value, closed);
        // The dual certificate: nonnegative edge weights that total the
        // optimum while loading no biclique above 1.
        let total: Rat = r.dual.iter().map(|(_, y)| y.clone()).sum();
        let max_load = enumerate_maximal_bicliques(&g)
            .unwrap()
            .iter()
            .map(|b| {
                r.dual
                    .iter()
                    .filter(|((u, v), _)| b.contains_edge(*u, *v))
                    .map(|(_, y)| y.clone())
                    .sum::<Rat>()
            })
            .max()
            .unwrap();
        assert_eq!(total, r.value);
        assert!(max_load <= rat_u64(1));
        println!(
            "{n}\t{}\t{}\t{}\t{}",
            format_rat(&r.value),
            format_rat(&closed),
            format_rat(&total),
            format_rat(&max_load)
        );
    }

    let pet = Family::Petersen.build().unwrap();
    let r = bc_fractional(&pet).unwrap();
    println!("\npetersen: bc_star = {}", format_rat(&r.value));
    println!("positive weights on {} bicliques:", r.weights.len());
    for (b, w) in &r.weights {
        println!("  {:?}|{:?}  weight {}", b.x(), b.y(), format_rat(w));
    }
}
