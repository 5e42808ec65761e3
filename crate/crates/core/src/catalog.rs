//! Built-in lattices and known product records used by tests, examples and
//! the command line.
//!
//! Every registered lattice carries its expected invariants (signature,
//! determinant, evenness, minimal norm where known) and is checked against
//! them when the registry is first built. The Leech Gram matrix is shipped
//! as a literal in a basis of minimal vectors; its construction from the
//! binary Golay code is replayed and compared against the literal in the
//! test suite.

use std::sync::OnceLock;

use num::One;

use crate::audit::CandidateProduct;
use crate::error::{Error, Result};
use crate::lattice::{GramLattice, LatticeVector};
use crate::rational::{rat, rat_int, Int, Rat};

/// A catalog lattice together with the invariants it is checked against.
#[derive(Clone, Debug)]
pub struct NamedLattice {
    pub name: &'static str,
    pub description: &'static str,
    pub lattice: GramLattice,
    pub expected: Expected,
}

/// Expected invariants of a catalog lattice.
#[derive(Clone, Debug)]
pub struct Expected {
    pub signature: (usize, usize),
    pub det: i64,
    pub even: bool,
    /// Minimal norm for positive definite entries, where known. The witness
    /// (a diagonal entry of this value) is checked at registration; that no
    /// shorter vector exists is enumeration work done in the test suite.
    pub min_norm: Option<i64>,
}

/// A known product: its home lattice `M = U + K`, weight, divisor shape and
/// principal part, packaged as a ready-to-audit candidate.
#[derive(Clone, Debug)]
pub struct KnownForm {
    pub name: &'static str,
    /// Catalog name of the home lattice `M = U + K`.
    pub home: &'static str,
    /// Catalog name of the Lorentzian component `K`.
    pub k_name: &'static str,
    pub weight: Rat,
    /// Divisor shape: (norm of the class representatives, whether they are
    /// proper dual vectors rather than lattice vectors, multiplicity).
    pub divisor_summary: Vec<(Rat, bool, Int)>,
    pub candidate: CandidateProduct,
}

/// The even unimodular plane `U`, Gram `[[0, 1], [1, 0]]`.
pub fn hyperbolic_plane() -> GramLattice {
    GramLattice::new(vec![vec![0, 1], vec![1, 0]]).expect("hyperbolic plane")
}

/// Root lattice `A1`, Gram `[[2]]`.
pub fn a1() -> GramLattice {
    GramLattice::new(vec![vec![2]]).expect("A1")
}

/// Root lattice `D_n` (`n >= 3`) in the simple-root basis: a chain of
/// `n - 1` nodes with the last root attached to the third-from-last.
pub fn d_lattice(n: usize) -> GramLattice {
    assert!(n >= 3, "D_n needs n >= 3");
    let mut gram = vec![vec![0i64; n]; n];
    for i in 0..n {
        gram[i][i] = 2;
    }
    for i in 0..n.saturating_sub(2) {
        gram[i][i + 1] = -1;
        gram[i + 1][i] = -1;
    }
    gram[n - 3][n - 1] = -1;
    gram[n - 1][n - 3] = -1;
    GramLattice::new(gram).expect("D_n Gram")
}

/// Root lattice `E8` (Cartan matrix; chain 1-3-4-5-6-7-8 with 2 at node 4).
pub fn e8() -> GramLattice {
    GramLattice::new(vec![
        vec![2, 0, -1, 0, 0, 0, 0, 0],
        vec![0, 2, 0, -1, 0, 0, 0, 0],
        vec![-1, 0, 2, -1, 0, 0, 0, 0],
        vec![0, -1, -1, 2, -1, 0, 0, 0],
        vec![0, 0, 0, -1, 2, -1, 0, 0],
        vec![0, 0, 0, 0, -1, 2, -1, 0],
        vec![0, 0, 0, 0, 0, -1, 2, -1],
        vec![0, 0, 0, 0, 0, 0, -1, 2],
    ])
    .expect("E8 Gram")
}

/// The Leech lattice in a basis of minimal vectors.
///
/// Obtained from the congruence description over the binary Golay code
/// (doubled codewords, the sum-divisible-by-8 sublattice of 4Z^24 and the
/// odd vector (-3, 1, .., 1), all scaled by 1/sqrt(8)) followed by an exact
/// LLL reduction. The test suite replays that construction and checks this
/// literal against it entry by entry.
pub fn leech() -> GramLattice {
    GramLattice::new(LEECH_GRAM.iter().map(|r| r.to_vec()).collect()).expect("Leech Gram")
}

pub(crate) const LEECH_GRAM: [[i64; 24]; 24] = [
    [4, 2, 2, -2, 2, 2, -1, -2, 1, -1, 2, -2, -2, -2, 1, 1, -2, -1, -2, -1, -2, 1, -2, -1],
    [2, 4, 0, 0, 1, 2, -1, 0, 2, -2, 2, 0, 0, -2, 2, 2, -1, -2, -2, -2, -1, -1, -2, 0],
    [2, 0, 4, 0, 2, 1, 1, -1, -1, -1, 0, -1, -1, 0, -1, -1, -2, -1, 0, -1, -1, 2, -1, -2],
    [-2, 0, 0, 4, 0, 0, 2, 2, 0, 0, 0, 2, 1, 1, 0, -1, 1, -1, 0, 0, 0, 0, 1, 1],
    [2, 1, 2, 0, 4, 0, -1, -2, 0, 0, 0, 0, 0, -1, 1, 1, -1, -2, -1, -2, -2, 0, 0, -1],
    [2, 2, 1, 0, 0, 4, 1, 0, 2, -2, 2, 0, -2, -2, 0, 1, -2, 0, -2, 0, 0, 0, -1, -1],
    [-1, -1, 1, 2, -1, 1, 4, 2, -1, 0, 0, 0, -1, 0, -2, -1, -1, 1, 0, 1, 0, 1, 1, -1],
    [-2, 0, -1, 2, -2, 0, 2, 4, -1, -1, 0, 1, 1, 1, 0, -1, 0, 1, 0, 1, 1, -1, 1, 0],
    [1, 2, -1, 0, 0, 2, -1, -1, 4, 0, 2, 0, -1, -1, 1, 1, 0, -1, -2, -1, 0, 0, -1, 1],
    [-1, -2, -1, 0, 0, -2, 0, -1, 0, 4, 0, -1, 0, 1, 0, -1, 2, 1, 0, 0, -1, 1, 1, 1],
    [2, 2, 0, 0, 0, 2, 0, 0, 2, 0, 4, -1, -2, -1, 2, 0, 0, 0, -2, 0, -2, 1, -2, 0],
    [-2, 0, -1, 2, 0, 0, 0, 1, 0, -1, -1, 4, 2, 1, 0, 1, 1, -1, 1, 0, 1, -2, 1, 1],
    [-2, 0, -1, 1, 0, -2, -1, 1, -1, 0, -2, 2, 4, 1, 0, 0, 1, -1, 1, -1, 1, -2, 1, 1],
    [-2, -2, 0, 1, -1, -2, 0, 1, -1, 1, -1, 1, 1, 4, 0, -2, 2, 0, 2, 0, 1, 1, 0, 1],
    [1, 2, -1, 0, 1, 0, -2, 0, 1, 0, 2, 0, 0, 0, 4, 1, 1, -1, -1, -1, -1, -1, -1, 1],
    [1, 2, -1, -1, 1, 1, -1, -1, 1, -1, 0, 1, 0, -2, 1, 4, -1, -1, -1, -1, 0, -2, 0, 0],
    [-2, -1, -2, 1, -1, -2, -1, 0, 0, 2, 0, 1, 1, 2, 1, -1, 4, 0, 1, 0, 0, 0, 0, 2],
    [-1, -2, -1, -1, -2, 0, 1, 1, -1, 1, 0, -1, -1, 0, -1, -1, 0, 4, 0, 2, 1, 0, 1, -1],
    [-2, -2, 0, 0, -1, -2, 0, 0, -2, 0, -2, 1, 1, 2, -1, -1, 1, 0, 4, 1, 1, 0, 0, 0],
    [-1, -2, -1, 0, -2, 0, 1, 1, -1, 0, 0, 0, -1, 0, -1, -1, 0, 2, 1, 4, 1, 0, 1, 0],
    [-2, -1, -1, 0, -2, 0, 0, 1, 0, -1, -2, 1, 1, 1, -1, 0, 0, 1, 1, 1, 4, -1, 1, 0],
    [1, -1, 2, 0, 0, 0, 1, -1, 0, 1, 1, -2, -2, 1, -1, -2, 0, 0, 0, 0, -1, 4, -1, 0],
    [-2, -2, -1, 1, 0, -1, 1, 1, -1, 1, -2, 1, 1, 0, -1, 0, 0, 1, 0, 1, 1, -1, 4, 0],
    [-1, 0, -2, 1, -1, -1, -1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 2, -1, 0, 0, 0, 0, 0, 4],
];

fn build_registry() -> Vec<NamedLattice> {
    let u = hyperbolic_plane();
    let mut reg = vec![
        NamedLattice {
            name: "U",
            description: "even unimodular plane of signature (1,1)",
            lattice: u.clone(),
            expected: Expected { signature: (1, 1), det: -1, even: true, min_norm: None },
        },
        NamedLattice {
            name: "U(2)",
            description: "hyperbolic plane rescaled by 2",
            lattice: u.rescale(2).expect("U(2)"),
            expected: Expected { signature: (1, 1), det: -4, even: true, min_norm: None },
        },
        NamedLattice {
            name: "A1",
            description: "root lattice A1, Gram [[2]]",
            lattice: a1(),
            expected: Expected { signature: (1, 0), det: 2, even: true, min_norm: Some(2) },
        },
        NamedLattice {
            name: "A1(2)",
            description: "A1 rescaled by 2, Gram [[4]]",
            lattice: a1().rescale(2).expect("A1(2)"),
            expected: Expected { signature: (1, 0), det: 4, even: true, min_norm: Some(4) },
        },
        NamedLattice {
            name: "D4",
            description: "root lattice D4 (24 roots)",
            lattice: d_lattice(4),
            expected: Expected { signature: (4, 0), det: 4, even: true, min_norm: Some(2) },
        },
        NamedLattice {
            name: "E8",
            description: "root lattice E8, even unimodular of rank 8 (240 roots)",
            lattice: e8(),
            expected: Expected { signature: (8, 0), det: 1, even: true, min_norm: Some(2) },
        },
        NamedLattice {
            name: "D20",
            description: "root lattice D20",
            lattice: d_lattice(20),
            expected: Expected { signature: (20, 0), det: 4, even: true, min_norm: Some(2) },
        },
        NamedLattice {
            name: "Leech",
            description: "Leech lattice: even unimodular of rank 24 without roots",
            lattice: leech(),
            expected: Expected { signature: (24, 0), det: 1, even: true, min_norm: Some(4) },
        },
    ];
    let leech = reg[7].lattice.clone();
    let d20 = reg[6].lattice.clone();
    reg.push(NamedLattice {
        name: "U+Leech",
        description: "Lorentzian rank 26: the K component of 2U+Leech",
        lattice: u.direct_sum(&leech),
        expected: Expected { signature: (25, 1), det: -1, even: true, min_norm: None },
    });
    reg.push(NamedLattice {
        name: "U+D20",
        description: "Lorentzian rank 22: the K component of 2U+D20",
        lattice: u.direct_sum(&d20),
        expected: Expected { signature: (21, 1), det: -4, even: true, min_norm: None },
    });
    reg.push(NamedLattice {
        name: "2U+Leech",
        description: "even unimodular of signature (26,2)",
        lattice: u.direct_sum(&u).direct_sum(&leech),
        expected: Expected { signature: (26, 2), det: 1, even: true, min_norm: None },
    });
    reg.push(NamedLattice {
        name: "2U+D20",
        description: "even lattice of signature (22,2) and determinant 4",
        lattice: u.direct_sum(&u).direct_sum(&d20),
        expected: Expected { signature: (22, 2), det: 4, even: true, min_norm: None },
    });

    for entry in &reg {
        let l = &entry.lattice;
        assert_eq!(l.signature(), entry.expected.signature, "{}: signature", entry.name);
        assert_eq!(l.det(), Int::from(entry.expected.det), "{}: determinant", entry.name);
        assert_eq!(l.is_even(), entry.expected.even, "{}: parity", entry.name);
        if let Some(min) = entry.expected.min_norm {
            let witness = (0..l.rank()).map(|i| l.gram()[i][i]).min().unwrap();
            assert_eq!(witness, min, "{}: minimal-norm witness on the diagonal", entry.name);
        }
    }
    reg
}

fn registry() -> &'static [NamedLattice] {
    static REGISTRY: OnceLock<Vec<NamedLattice>> = OnceLock::new();
    REGISTRY.get_or_init(build_registry)
}

/// Names of all registered lattices, in registry order.
pub fn lattice_names() -> Vec<&'static str> {
    registry().iter().map(|e| e.name).collect()
}

/// Look up a catalog lattice by name.
pub fn get_lattice(name: &str) -> Result<&'static NamedLattice> {
    registry()
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

fn build_forms() -> Vec<KnownForm> {
    let u_leech = get_lattice("U+Leech").expect("registry").lattice.clone();
    let zero26 = LatticeVector::zero(26);
    let phi12 = CandidateProduct::new(
        u_leech,
        rat_int(12),
        vec![(zero26, rat_int(1), Int::one())],
        Some(Int::from(24)),
    )
    .expect("Phi12 candidate");

    let u_d20 = get_lattice("U+D20").expect("registry").lattice.clone();
    // the norm-1 coset of D20'/D20 ("vector" class): in the simple-root
    // basis, e_1 = a_1 + .. + a_18 + (a_19 + a_20)/2
    let mut coords = vec![rat_int(0), rat_int(0)];
    coords.extend(std::iter::repeat_n(rat_int(1), 18));
    coords.push(rat(1, 2));
    coords.push(rat(1, 2));
    let vector_class = LatticeVector::new(coords);
    let zero22 = LatticeVector::zero(22);
    let psi24 = CandidateProduct::new(
        u_d20,
        rat_int(24),
        vec![
            (zero22, rat_int(1), Int::one()),
            (vector_class, rat(1, 2), Int::from(8)),
        ],
        None,
    )
    .expect("Psi24 candidate");

    vec![
        KnownForm {
            name: "Phi12",
            home: "2U+Leech",
            k_name: "U+Leech",
            weight: rat_int(12),
            divisor_summary: vec![(rat_int(2), false, Int::one())],
            candidate: phi12,
        },
        KnownForm {
            name: "Psi24",
            home: "2U+D20",
            k_name: "U+D20",
            weight: rat_int(24),
            divisor_summary: vec![
                (rat_int(1), true, Int::from(8)),
                (rat_int(2), false, Int::one()),
            ],
            candidate: psi24,
        },
    ]
}

fn forms() -> &'static [KnownForm] {
    static FORMS: OnceLock<Vec<KnownForm>> = OnceLock::new();
    FORMS.get_or_init(build_forms)
}

/// Names of all registered product records.
pub fn form_names() -> Vec<&'static str> {
    forms().iter().map(|f| f.name).collect()
}

/// Look up a known product record by name (`Phi12`, `Psi24`).
pub fn get_form(name: &str) -> Result<&'static KnownForm> {
    forms()
        .iter()
        .find(|f| f.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}
