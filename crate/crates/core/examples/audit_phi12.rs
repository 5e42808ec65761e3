//! End-to-end audit of the weight-12 product on 2U + Leech, and of the same
//! principal part misplaced on 2U + D20, where the rank bound rejects it.
//!
//! Run with `cargo run --example audit_phi12`.

use borcherds_audit::audit::CandidateProduct;
use borcherds_audit::catalog;
use borcherds_audit::io;
use borcherds_audit::lattice::LatticeVector;
use borcherds_audit::rational::{rat_int, Int};

fn main() {
    let phi12 = catalog::get_form("Phi12").unwrap();
    let report = phi12.candidate.audit().unwrap();
    println!("{}", io::audit_report_to_text(&report, phi12.k_name));
    println!();

    // the same data puts a candidate of singular weight 10 on 2U + D20;
    // every local check passes, but no such form exists at l = 22
    let k = catalog::get_lattice("U+D20").unwrap().lattice.clone();
    let misplaced = CandidateProduct::new(
        k,
        rat_int(10),
        vec![(LatticeVector::zero(22), rat_int(1), Int::from(1))],
        None,
    )
    .unwrap();
    let report = misplaced.audit().unwrap();
    println!("{}", io::audit_report_to_text(&report, "U+D20"));
    println!();

    // the reflective-but-heavier product on the same lattice passes,
    // because it does not claim the singular weight
    let psi24 = catalog::get_form("Psi24").unwrap();
    let report = psi24.candidate.audit().unwrap();
    println!("{}", io::audit_report_to_text(&report, psi24.k_name));
}
