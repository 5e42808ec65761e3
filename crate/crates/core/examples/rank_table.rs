//! The existence table for singular-weight special forms on O(l,2), and the
//! weight/multiplicity bookkeeping that rules out the l = 22 case.
//!
//! Run with `cargo run --example rank_table`.

use borcherds_audit::audit::{bookkeeping_feasible, rank_verdict, singular_weight};
use borcherds_audit::rational::rat_int;

fn main() {
    println!(" l   singular weight   verdict");
    for l in 3..=30 {
        println!(
            "{l:>2}   {:>15}   {}",
            singular_weight(l).unwrap().to_string(),
            rank_verdict(l).unwrap()
        );
    }
    println!();

    // at l = 22 a singular-weight form would have weight 10 and simple
    // zeros, while the unique reflective comparison form has weight 24 and
    // a divisor class of multiplicity 8. Equating divisors of F^a and the
    // d-th power forces 10 a = 24 d with 8 d <= a:
    match bookkeeping_feasible(&rat_int(10), &rat_int(24), 8).unwrap() {
        None => println!("10 a = 24 d with 8 d <= a: no positive integer solution"),
        Some((a, d)) => println!("unexpected witness a = {a}, d = {d}"),
    }

    // relaxing the multiplicity bound makes it feasible again
    match bookkeeping_feasible(&rat_int(10), &rat_int(24), 2).unwrap() {
        Some((a, d)) => println!("10 a = 24 d with 2 d <= a: minimal witness a = {a}, d = {d}"),
        None => println!("unexpectedly infeasible"),
    }
}
