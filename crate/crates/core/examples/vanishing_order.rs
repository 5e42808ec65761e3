//! Vanishing orders along quadratic divisors and the simple-zero property:
//! a nonzero singular series vanishing along v^perp always vanishes to
//! order exactly one and picks up a sign under the reflection in v. A
//! non-singular control series shows the hypothesis is sharp.
//!
//! Run with `cargo run --example vanishing_order`.

use borcherds_audit::catalog;
use borcherds_audit::lattice::LatticeVector;
use borcherds_audit::rational::rat_int;
use borcherds_audit::series::{FourierSeries, TubeDomain};

fn main() {
    let dom = TubeDomain::new(catalog::hyperbolic_plane().direct_sum(&catalog::a1())).unwrap();
    let v = LatticeVector::from_ints(&[0, 0, 1]); // norm 2 > 0

    // lambda isotropic with (lambda, v) != 0
    let lambda = LatticeVector::from_ints(&[1, -1, 1]);
    let qlam = FourierSeries::monomial(lambda.clone(), rat_int(1));
    println!(
        "lambda = (1,-1,1): norm {}, pairing with v: {}",
        dom.lattice().norm(&lambda).unwrap(),
        dom.lattice().bilinear(&lambda, &v).unwrap()
    );

    // a bare monomial does not vanish along v^perp
    println!("order of q^lambda along v^perp: {}", dom.order_along(&qlam, &v).unwrap());

    // antisymmetrize: f = q^lambda - q^(sigma_v lambda) vanishes, and the
    // fibers over the projection away from v show why the order is one
    let f = qlam.sub(&dom.apply_reflection(&qlam, &v).unwrap());
    let decomposition = dom.fiber_decompose(&f, &v).unwrap();
    for (mu, entries) in decomposition.fibers() {
        let mu_str: Vec<String> = mu.coords().iter().map(ToString::to_string).collect();
        println!("fiber mu = [{}]: entries (t, c) = {:?}", mu_str.join(", "),
            entries.iter().map(|(t, c)| (t.to_string(), c.to_string())).collect::<Vec<_>>());
    }
    println!("order of the antisymmetrization: {}", dom.order_along(&f, &v).unwrap());
    println!("anti-invariant: {}", dom.is_anti_invariant(&f, &v).unwrap());

    let w = dom.simple_zero_witness(&f, &v).unwrap();
    println!(
        "witness: singular {}, order {}, anti-invariant {} -> {}",
        w.singular,
        w.order,
        w.anti_invariant,
        if w.pass { "pass" } else { "FAIL" }
    );

    // control: a non-singular series can vanish to order two. Take
    // q^lambda + q^(sigma_v lambda) - 2 q^mu with lambda of norm 4 and mu
    // its projection: the fiber sums vanish at k = 0, 1 but not at k = 2.
    let heavy = LatticeVector::from_ints(&[1, 1, 1]);
    let mu = LatticeVector::from_ints(&[1, 1, 0]);
    let control = FourierSeries::monomial(heavy.clone(), rat_int(1))
        .add(&dom.apply_reflection(&FourierSeries::monomial(heavy, rat_int(1)), &v).unwrap())
        .add(&FourierSeries::monomial(mu, rat_int(-2)));
    let w = dom.simple_zero_witness(&control, &v).unwrap();
    println!(
        "control: singular {}, order {} -> the simple-zero property needs singularity",
        w.singular, w.order
    );
}
