//! Tour of the exact lattice algebra: signatures, duals, discriminant
//! groups, reflections and the norm ideal generator.
//!
//! Run with `cargo run --example lattice_tour`.

use borcherds_audit::catalog;
use borcherds_audit::lattice::{GramLattice, LatticeVector};
use borcherds_audit::rational::rat;

fn main() {
    let u = catalog::hyperbolic_plane();
    let a1 = catalog::a1();

    println!("U = hyperbolic plane, Gram {:?}", u.gram());
    println!("  signature {:?}, det {}, even: {}", u.signature(), u.det(), u.is_even());

    // direct sums add signatures; rescaling preserves them
    let lorentz = u.direct_sum(&a1);
    println!("U + A1: rank {}, signature {:?}", lorentz.rank(), lorentz.signature());
    println!("U(2): Gram {:?}, signature {:?}", u.rescale(2).unwrap().gram(), u.rescale(2).unwrap().signature());

    // dual vectors and the discriminant group A1'/A1 = Z/2
    let half = LatticeVector::new(vec![rat(1, 2)]);
    println!(
        "A1: (1/2) in dual: {}, (1/3) in dual: {}",
        a1.is_in_dual(&half).unwrap(),
        a1.is_in_dual(&LatticeVector::new(vec![rat(1, 3)])).unwrap()
    );
    let disc = a1.discriminant_group();
    println!("A1'/A1: invariant factors {:?}, order {}", disc.invariant_factors, disc.order());

    let d4 = catalog::d_lattice(4);
    let disc = d4.discriminant_group();
    println!("D4'/D4: invariant factors {:?} (order {})", disc.invariant_factors, disc.order());

    // reflections: sigma_lambda(v) = v - (2 (lambda,v)/(lambda,lambda)) lambda
    let root = LatticeVector::from_ints(&[1, 1]);
    let sigma = u.reflection_matrix(&root).unwrap();
    println!(
        "reflection of U in (1,1): [[{}, {}], [{}, {}]] (integral: {})",
        sigma[(0, 0)], sigma[(0, 1)], sigma[(1, 0)], sigma[(1, 1)],
        u.is_integral_reflection(&root).unwrap()
    );
    // a norm-1 dual vector of A1(2) also reflects integrally
    let a1_2 = a1.rescale(2).unwrap();
    println!(
        "A1(2), lambda = (1/2) of norm {}: integral reflection: {}",
        a1_2.norm(&half).unwrap(),
        a1_2.is_integral_reflection(&half).unwrap()
    );

    // the norm ideal generator m_K = gcd of v^2/2 over the lattice
    for name in ["U", "A1", "A1(2)", "U+Leech", "U+D20"] {
        let l = &catalog::get_lattice(name).unwrap().lattice;
        println!("m_K({name}) = {}", l.norm_ideal_generator().unwrap());
    }

    // custom lattices come from plain Gram matrices
    let custom = GramLattice::new(vec![vec![2, 1], vec![1, -2]]).unwrap();
    println!(
        "custom Gram [[2,1],[1,-2]]: signature {:?}, det {}",
        custom.signature(),
        custom.det()
    );
}
