//! Exact short-vector enumeration: root counts for the definite catalog
//! lattices, and the rootlessness of the Leech lattice.
//!
//! Run with `cargo run --example root_counts`.

use borcherds_audit::catalog;

fn main() {
    for name in ["A1", "D4", "E8", "D20"] {
        let l = &catalog::get_lattice(name).unwrap().lattice;
        let pairs = l.short_vectors(2).unwrap();
        println!("{name}: {} roots", 2 * pairs.len());
    }

    // the Leech lattice has minimal norm 4: no roots at all
    let leech = &catalog::get_lattice("Leech").unwrap().lattice;
    let started = std::time::Instant::now();
    let roots = leech.short_vectors(2).unwrap();
    println!(
        "Leech: {} roots (checked exhaustively in {:?}); minimal norm {}",
        2 * roots.len(),
        started.elapsed(),
        catalog::get_lattice("Leech").unwrap().expected.min_norm.unwrap()
    );

    // first few norm-4 pairs of D4, in canonical order
    let d4 = &catalog::get_lattice("D4").unwrap().lattice;
    let norm4 = d4.short_vectors(4).unwrap();
    println!("D4 has {} sign pairs of norm 4; first three:", norm4.len());
    for v in norm4.iter().take(3) {
        let coords: Vec<String> = v.coords().iter().map(ToString::to_string).collect();
        println!("  [{}]", coords.join(", "));
    }
}
