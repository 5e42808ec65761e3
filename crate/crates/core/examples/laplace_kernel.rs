//! The normalized Laplace operator on formal Fourier series annihilates
//! exactly the series supported on isotropic vectors.
//!
//! Run with `cargo run --example laplace_kernel`.

use borcherds_audit::catalog;
use borcherds_audit::lattice::LatticeVector;
use borcherds_audit::rational::rat_int;
use borcherds_audit::series::{FourierSeries, TubeDomain};

fn main() {
    // Lorentzian lattice U + A1 of signature (2, 1)
    let dom = TubeDomain::new(catalog::hyperbolic_plane().direct_sum(&catalog::a1())).unwrap();

    let isotropic = LatticeVector::from_ints(&[1, -1, 1]); // norm 2ab + 2c^2 = 0
    let root = LatticeVector::from_ints(&[0, 0, 1]); // norm 2
    let heavy = LatticeVector::from_ints(&[1, 2, 1]); // norm 6

    println!("q^lambda is an eigenvector: Delta~ q^lambda = (lambda,lambda) q^lambda");
    for lambda in [&isotropic, &root, &heavy] {
        let f = FourierSeries::monomial(lambda.clone(), rat_int(1));
        let image = dom.laplace_normalized(&f).unwrap();
        println!(
            "  lambda = {:?} of norm {}: image coefficient {}",
            lambda.coords().iter().map(ToString::to_string).collect::<Vec<_>>(),
            dom.lattice().norm(lambda).unwrap(),
            image.coefficient(lambda)
        );
    }

    // a series supported on norm-zero vectors is annihilated ..
    let singular = FourierSeries::from_terms(vec![
        (isotropic.clone(), rat_int(3)),
        (LatticeVector::from_ints(&[-1, 1, 1]), rat_int(7)),
        (LatticeVector::from_ints(&[1, -4, 2]), rat_int(-5)),
    ]);

    println!(
        "singular series ({} terms): annihilated = {}, is_singular = {}",
        singular.support_size(),
        dom.laplace_normalized(&singular).unwrap().is_zero(),
        dom.is_singular(&singular).unwrap()
    );

    // .. while any nonzero-norm term survives
    let mixed = singular.add(&FourierSeries::monomial(root, rat_int(1)));
    println!(
        "after adding a norm-2 term: annihilated = {}, is_singular = {}",
        dom.laplace_normalized(&mixed).unwrap().is_zero(),
        dom.is_singular(&mixed).unwrap()
    );
}
