//! Covers across the Mycielski construction, in both directions: lifting a
//! cover of `G` to `M(G)` (with and without a good orientation), and
//! projecting a cover of `M(G)` back down to a double-depth cover of `G`.
//!
//! Run with: `cargo run --release --example mycielski_covers`

use biclique_covers::biclique::is_good_cover;
use biclique_covers::constructions::{
    cover_mycielski, cycle_cover_size, good_cover_cycle, mycielski_lower_extract,
};
use biclique_covers::{bc_exact, mycielski, verify_cover, Family, SolveLimits};

fn main() {
    let limits = SolveLimits::default();
    let c5 = Family::Cycle(5).build().unwrap();
    let (mc5, labeling) = mycielski(&c5);
    println!(
        "mycielski of cycle 5: {} vertices, {} edges",
        mc5.n(),
        mc5.edge_count()
    );

    // Exact value at depth 2.
    let r = bc_exact(&mc5, 2, &limits).unwrap();
    println!(
        "bc_2(M(C5)) = {} ({} nodes explored)",
        r.value, r.nodes_explored
    );

    // The good-orientation lift attains it: all five stars at half depth,
    // leaves chosen everywhere, absorbing the root star.
    let (cover, orientation) = good_cover_cycle(5, 2).unwrap();
    assert!(is_good_cover(&c5, &cover).unwrap().is_some());
    let lifted = cover_mycielski(&c5, &cover, Some(&orientation)).unwrap();
    assert!(verify_cover(&mc5, &lifted).unwrap().pass);
    println!(
        "good lift: size {} (matches the exact value)",
        lifted.size()
    );

    // Without an orientation the lift pays an extra d for the root star.
    let plain = cover_mycielski(&c5, &cover, None).unwrap();
    assert!(verify_cover(&mc5, &plain).unwrap().pass);
    println!(
        "plain lift: size {} = 2 * {} + 2",
        plain.size(),
        cover.size()
    );

    // Projecting the optimal cover back down doubles the depth.
    let extracted = mycielski_lower_extract(&mc5, &labeling, &r.witness).unwrap();
    assert!(verify_cover(&c5, &extracted).unwrap().pass);
    println!(
        "projected: a verified {}-cover of C5 of size {} (bc_4(C5) = {})",
        extracted.depth(),
        extracted.size(),
        cycle_cover_size(5, 4)
    );
}
