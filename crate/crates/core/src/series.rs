//! Finitely supported formal Fourier series on a tube domain over a
//! Lorentzian lattice.
//!
//! A [`FourierSeries`] is a finite map `lambda -> c(lambda)` standing for
//! `sum c(lambda) q^lambda` with `q^lambda = e^(2 pi i (lambda, Z))`. The
//! operations mirror what is exactly decidable about such series:
//!
//! - the normalized Laplace operator `q^lambda -> (lambda, lambda) q^lambda`
//!   (the transcendental factor of the holomorphic Laplace operator is
//!   dropped, so kernels and eigenvalues are exact rational statements);
//! - pullback along lattice isometries;
//! - decomposition into fibers over the orthogonal complement of a
//!   positive-norm vector, the exact vanishing order along that divisor, and
//!   anti-invariance under the associated reflection.
//!
//! All certificates are statements about the represented finite series
//! (truncation semantics): no convergence or evaluation questions arise.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{GramLattice, LatticeVector};
use crate::matrix::QMat;
use crate::rational::Rat;

/// A tube domain datum: a Lorentzian lattice of signature `(n-1, 1)`.
#[derive(Clone, Debug)]
pub struct TubeDomain {
    lattice: GramLattice,
}

/// Finitely supported map from rational lattice vectors to nonzero rational
/// coefficients. Zero coefficients are never stored; keys are exact reduced
/// rationals, so equal vectors collide as required.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FourierSeries {
    terms: BTreeMap<LatticeVector, Rat>,
}

impl FourierSeries {
    pub fn zero() -> Self {
        FourierSeries::default()
    }

    /// The single term `c * q^lambda` (empty when `c = 0`).
    pub fn monomial(lambda: LatticeVector, c: Rat) -> Self {
        let mut f = FourierSeries::zero();
        f.add_term(lambda, c);
        f
    }

    /// Collect terms, merging duplicate exponents and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (LatticeVector, Rat)>) -> Self {
        let mut f = FourierSeries::zero();
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    /// Add `c * q^lambda` into the series, keeping the support minimal.
    pub fn add_term(&mut self, lambda: LatticeVector, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LatticeVector, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &LatticeVector) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &FourierSeries) -> FourierSeries {
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FourierSeries) -> FourierSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FourierSeries {
        FourierSeries {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, a: &Rat) -> FourierSeries {
        if a.is_zero() {
            return FourierSeries::zero();
        }
        FourierSeries {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * a)).collect(),
        }
    }
}

/// Fibers of a series over the projection away from a positive-norm vector
/// `v`: each supported `lambda` is filed under
/// `mu = lambda - ((lambda, v)/(v, v)) v` with datum `t = (lambda, v)`.
#[derive(Clone, Debug)]
pub struct FiberDecomposition {
    v: LatticeVector,
    v_norm: Rat,
    fibers: BTreeMap<LatticeVector, Vec<(Rat, Rat)>>,
}

impl FiberDecomposition {
    pub fn v(&self) -> &LatticeVector {
        &self.v
    }

    /// Fibers in lexicographic order of the projection key `mu`; each fiber
    /// lists `(t, c)` pairs sorted by `t`.
    pub fn fibers(&self) -> impl Iterator<Item = (&LatticeVector, &[(Rat, Rat)])> {
        self.fibers.iter().map(|(mu, entries)| (mu, entries.as_slice()))
    }

    /// Rebuild the original series from the fibers:
    /// `lambda = mu + (t / (v, v)) v`.
    pub fn reassemble(&self) -> FourierSeries {
        let mut f = FourierSeries::zero();
        for (mu, entries) in &self.fibers {
            for (t, c) in entries {
                let lambda = mu.add(&self.v.scale(&(t / &self.v_norm)));
                f.add_term(lambda, c.clone());
            }
        }
        f
    }
}

/// Exact vanishing order of a finite series along a quadratic divisor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum VanishingOrder {
    Finite(usize),
    /// Only the zero series vanishes to infinite order.
    Infinite,
}

impl VanishingOrder {
    pub fn is_positive(&self) -> bool {
        !matches!(self, VanishingOrder::Finite(0))
    }
}

impl std::fmt::Display for VanishingOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VanishingOrder::Finite(k) => write!(f, "{k}"),
            VanishingOrder::Infinite => write!(f, "infinity"),
        }
    }
}

/// Result of the simple-zero test for one series along one divisor.
///
/// `pass` reports the implication checked on this instance: a nonzero
/// singular series that vanishes along `v` must vanish to order exactly one
/// and be anti-invariant under the reflection in `v`. Non-singular or
/// non-vanishing series pass vacuously, with all fields still reported.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub singular: bool,
    #[serde(serialize_with = "serialize_order")]
    pub order: VanishingOrder,
    pub anti_invariant: bool,
    pub pass: bool,
}

fn serialize_order<S: serde::Serializer>(
    order: &VanishingOrder,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match order {
        VanishingOrder::Finite(k) => s.serialize_u64(*k as u64),
        VanishingOrder::Infinite => s.serialize_str("infinity"),
    }
}

fn pow_usize(t: &Rat, k: usize) -> Rat {
    let mut p = Rat::one();
    for _ in 0..k {
        p *= t;
    }
    p
}

impl TubeDomain {
    /// Wrap a Lorentzian lattice; rejects any other signature.
    pub fn new(lattice: GramLattice) -> Result<Self> {
        let (p, q) = lattice.signature();
        if q != 1 {
            return Err(Error::input(format!(
                "tube domain requires signature (n-1, 1), got ({p}, {q})"
            )));
        }
        Ok(TubeDomain { lattice })
    }

    pub fn lattice(&self) -> &GramLattice {
        &self.lattice
    }

    fn check_dims(&self, f: &FourierSeries) -> Result<()> {
        let n = self.lattice.rank();
        for (lambda, _) in f.terms() {
            if lambda.dim() != n {
                return Err(Error::input(format!(
                    "series vector of dim {} on a rank-{n} lattice",
                    lambda.dim()
                )));
            }
        }
        Ok(())
    }

    /// Normalized Laplace operator: `q^lambda -> (lambda, lambda) q^lambda`.
    ///
    /// The holomorphic Laplace operator multiplies each term by
    /// `-2 pi^2 (lambda, lambda)`; the nonzero constant is dropped so the
    /// kernel statement stays exact.
    pub fn laplace_normalized(&self, f: &FourierSeries) -> Result<FourierSeries> {
        self.check_dims(f)?;
        let mut out = FourierSeries::zero();
        for (lambda, c) in f.terms() {
            let norm = self.lattice.norm(lambda)?;
            out.add_term(lambda.clone(), c * &norm);
        }
        Ok(out)
    }

    /// True iff every supported vector has norm zero (the support condition
    /// characterizing singular-weight expansions).
    pub fn is_singular(&self, f: &FourierSeries) -> Result<bool> {
        self.check_dims(f)?;
        for (lambda, _) in f.terms() {
            if !self.lattice.norm(lambda)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pullback `F|g` with `(F|g)(Z) = F(gZ)`: the coefficient of `lambda`
    /// in `F|g` is `c(g lambda)`. Requires `g` orthogonal for the lattice.
    pub fn apply_isometry(&self, f: &FourierSeries, g: &QMat) -> Result<FourierSeries> {
        self.check_dims(f)?;
        if !self.lattice.is_isometry(g) {
            return Err(Error::input("matrix is not an isometry of the lattice"));
        }
        // orthogonality gives g^-1 = G^-1 g^T G without elimination
        let gram = self.lattice.gram_qmat();
        let g_inv = gram
            .inverse()
            .expect("nondegenerate Gram matrix")
            .mul(&g.transpose())
            .mul(&gram);
        let mut out = FourierSeries::zero();
        for (lambda, c) in f.terms() {
            let image = LatticeVector::new(g_inv.mul_vec(lambda.coords()));
            out.add_term(image, c.clone());
        }
        Ok(out)
    }

    /// Pullback along the reflection in `v` (norm nonzero).
    pub fn apply_reflection(&self, f: &FourierSeries, v: &LatticeVector) -> Result<FourierSeries> {
        let sigma = self.lattice.reflection_matrix(v)?;
        self.apply_isometry(f, &sigma)
    }

    /// File each supported `lambda` under its projection `mu` away from `v`
    /// (requires `(v, v) > 0`).
    pub fn fiber_decompose(&self, f: &FourierSeries, v: &LatticeVector) -> Result<FiberDecomposition> {
        self.check_dims(f)?;
        let v_norm = self.lattice.norm(v)?;
        if !v_norm.is_positive() {
            return Err(Error::domain("fiber decomposition requires (v, v) > 0"));
        }
        let mut fibers: BTreeMap<LatticeVector, Vec<(Rat, Rat)>> = BTreeMap::new();
        for (lambda, c) in f.terms() {
            let t = self.lattice.bilinear(lambda, v)?;
            let mu = lambda.sub(&v.scale(&(&t / &v_norm)));
            fibers.entry(mu).or_default().push((t, c.clone()));
        }
        for entries in fibers.values_mut() {
            entries.sort();
        }
        Ok(FiberDecomposition { v: v.clone(), v_norm, fibers })
    }

    /// Exact vanishing order of `f` along the divisor `v^perp`: the least
    /// `k` such that some fiber has a nonzero `k`-th power sum
    /// `sum c t^k` (the `z_1^k` Taylor coefficient with its nonzero constant
    /// dropped). Infinite only for the zero series.
    pub fn order_along(&self, f: &FourierSeries, v: &LatticeVector) -> Result<VanishingOrder> {
        let decomposition = self.fiber_decompose(f, v)?;
        if f.is_zero() {
            return Ok(VanishingOrder::Infinite);
        }
        // Within a fiber all t are distinct, so a fiber of size r cannot have
        // all power sums k = 0..r-1 vanish (Vandermonde); the cap terminates
        // the search provably.
        let cap = decomposition.fibers.values().map(Vec::len).max().unwrap_or(0);
        for k in 0..cap {
            for entries in decomposition.fibers.values() {
                let sum: Rat = entries.iter().map(|(t, c)| c * pow_usize(t, k)).sum();
                if !sum.is_zero() {
                    return Ok(VanishingOrder::Finite(k));
                }
            }
        }
        unreachable!("a nonzero fiber has a nonzero power sum below its size")
    }

    /// True iff `F|sigma_v = -F` exactly. Requires `(v, v) != 0`.
    pub fn is_anti_invariant(&self, f: &FourierSeries, v: &LatticeVector) -> Result<bool> {
        let pulled = self.apply_reflection(f, v)?;
        Ok(pulled == f.neg())
    }

    /// Check the simple-zero property of `f` along `v` (with `(v, v) > 0`):
    /// if `f` is nonzero, singular and vanishes along `v`, it must vanish to
    /// order exactly one and be anti-invariant under the reflection in `v`.
    pub fn simple_zero_witness(&self, f: &FourierSeries, v: &LatticeVector) -> Result<WitnessReport> {
        let order = self.order_along(f, v)?;
        let singular = self.is_singular(f)?;
        let anti_invariant = self.is_anti_invariant(f, v)?;
        let hypothesis = singular && order.is_positive() && !f.is_zero();
        let pass = !hypothesis || (order == VanishingOrder::Finite(1) && anti_invariant);
        Ok(WitnessReport { singular, order, anti_invariant, pass })
    }
}
