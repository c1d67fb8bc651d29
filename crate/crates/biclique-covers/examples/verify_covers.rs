//! Cover verification, coverage profiles, and the good-cover orientation
//! search, including the text formats used by the `bcover` binary.
//!
//! Run with: `cargo run --release --example verify_covers`

use biclique_covers::biclique::{is_good_cover, verify_cover, Biclique, CoverMultiset};
use biclique_covers::io::{parse_cover, write_cover};
use biclique_covers::Family;

fn main() {
    let c6 = Family::Cycle(6).build().unwrap();

    // All six stars, once each: a 2-cover of the hexagon.
    let stars: Vec<(Biclique, usize)> = (0..6)
        .map(|c| {
            (
                Biclique::new(vec![c], vec![(c + 5) % 6, (c + 1) % 6]).unwrap(),
                1,
            )
        })
        .collect();
    let cover = CoverMultiset::new(2, stars).unwrap();
    let v = verify_cover(&c6, &cover).unwrap();
    println!(
        "all-stars cover of cycle 6 at depth 2: pass={} min_coverage={}",
        v.pass,
        v.profile.min_coverage().unwrap()
    );

    // It is good: orient every star toward its leaf pair.
    let orientation = is_good_cover(&c6, &cover).unwrap().expect("good");
    let counts = orientation.vertex_counts(6, &cover).unwrap();
    println!("good orientation found; per-vertex chosen-side counts: {counts:?}");

    // Down at depth 1, three alternating stars cover but cannot be good.
    let alternating: Vec<(Biclique, usize)> = [0usize, 2, 4]
        .iter()
        .map(|&c| {
            (
                Biclique::new(vec![c], vec![(c + 5) % 6, (c + 1) % 6]).unwrap(),
                1,
            )
        })
        .collect();
    let sparse = CoverMultiset::new(1, alternating).unwrap();
    assert!(verify_cover(&c6, &sparse).unwrap().pass);
    assert!(is_good_cover(&c6, &sparse).unwrap().is_none());
    println!("alternating 1-cover verifies but admits no good orientation");

    // The text format round-trips byte-exactly.
    let text = write_cover(&cover);
    println!("\ncover file:\n{text}");
    let parsed = parse_cover(&text).unwrap();
    assert_eq!(parsed, cover);
    assert_eq!(write_cover(&parsed), text);

    // Deleting an entry makes verification fail and names the hole.
    let mut entries: Vec<(Biclique, usize)> = cover.entries().to_vec();
    entries.pop();
    let tampered = CoverMultiset::new(2, entries).unwrap();
    let v = verify_cover(&c6, &tampered).unwrap();
    println!(
        "tampered cover: pass={} deficient_edges={:?}",
        v.pass,
        v.profile.deficient_edges(2)
    );
}
