//! One-row bound reports: counting lower bound, exact fractional value,
//! logarithmic bound, construction upper bound when a family is recognized,
//! and the exact value (closed by the sandwich when the bounds meet).
//!
//! Run with: `cargo run --release --example bounds_table`

use biclique_covers::report::{bounds_report, BoundsReport};
use biclique_covers::{Family, Graph, SolveLimits};

fn main() {
    let limits = SolveLimits::default();
    let rows: Vec<(&str, Graph, usize)> = vec![
        ("cycle 5", Family::Cycle(5).build().unwrap(), 1),
        ("cycle 7", Family::Cycle(7).build().unwrap(), 3),
        ("complete 6", Family::Complete(6).build().unwrap(), 1),
        ("hypercube 5", Family::Hypercube(5).build().unwrap(), 2),
        ("petersen", Family::Petersen.build().unwrap(), 2),
        (
            "grotzsch",
            biclique_covers::mycielski(&Family::Cycle(5).build().unwrap()).0,
            2,
        ),
    ];
    println!("{}", BoundsReport::tsv_header());
    for (name, g, d) in rows {
        let report = bounds_report(&g, name, d, &limits).unwrap();
        println!("{}", report.tsv_row());
        if let Some(upper) = report.construction_upper {
            assert!(report.exact <= upper);
        }
        assert!(report.trivial_lower <= report.fractional_lower);
        assert!(report.fractional_lower <= report.exact);
    }
}
