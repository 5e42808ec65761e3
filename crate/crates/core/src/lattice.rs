//! Exact algebra of integral lattices given by Gram matrices.
//!
//! A [`GramLattice`] is a free Z-module of finite rank with a nondegenerate
//! integral symmetric bilinear form, represented by its Gram matrix in a fixed
//! basis. Vectors of the lattice, its dual and the ambient rational space are
//! [`LatticeVector`]s: rational coordinate tuples in that basis.
//!
//! Everything here is exact. Signatures come from rational congruence
//! diagonalization, discriminant groups from Smith normal form, short vectors
//! from a Fincke-Pohst style enumeration with exact square-root bounds.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{det_int, smith_normal_form, QMat};
use crate::rational::{ceil_minus_sqrt, floor_plus_sqrt, gcd_int, Int, Rat};

/// An integral lattice of positive rank with nondegenerate symmetric Gram
/// matrix. Degenerate forms are rejected at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramLattice {
    gram: Vec<Vec<i64>>,
}

/// A vector with rational coordinates in the basis of an associated lattice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    coords: Vec<Rat>,
}

impl LatticeVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        LatticeVector { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        LatticeVector::new(coords.iter().map(|&c| crate::rational::rat_int(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector::new(vec![Rat::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// True iff every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.denom().is_one())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        assert_eq!(self.dim(), other.dim());
        LatticeVector::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, other: &LatticeVector) -> LatticeVector {
        assert_eq!(self.dim(), other.dim());
        LatticeVector::new(
            self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn neg(&self) -> LatticeVector {
        LatticeVector::new(self.coords.iter().map(|a| -a.clone()).collect())
    }

    pub fn scale(&self, c: &Rat) -> LatticeVector {
        LatticeVector::new(self.coords.iter().map(|a| a * c).collect())
    }

    /// Representative of the sign pair `{v, -v}` whose first nonzero
    /// coordinate is positive.
    pub fn canonical_sign(&self) -> LatticeVector {
        match self.coords.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Concatenate coordinates (vector of a direct sum).
    pub fn concat(&self, other: &LatticeVector) -> LatticeVector {
        let mut coords = self.coords.clone();
        coords.extend_from_slice(&other.coords);
        LatticeVector::new(coords)
    }
}

impl GramLattice {
    /// Build a lattice from an integer Gram matrix.
    ///
    /// Rejects empty, non-square, non-symmetric and degenerate input.
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if n == 0 {
            return Err(Error::input("lattice rank must be positive"));
        }
        if gram.iter().any(|row| row.len() != n) {
            return Err(Error::input("Gram matrix must be square"));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::input(format!(
                        "Gram matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let l = GramLattice { gram };
        if l.det().is_zero() {
            return Err(Error::input("degenerate Gram matrix (determinant zero)"));
        }
        Ok(l)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_int(&self) -> Vec<Vec<Int>> {
        self.gram
            .iter()
            .map(|row| row.iter().map(|&x| Int::from(x)).collect())
            .collect()
    }

    pub fn gram_qmat(&self) -> QMat {
        QMat::from_fn(self.rank(), self.rank(), |i, j| {
            Rat::from_integer(Int::from(self.gram[i][j]))
        })
    }

    /// Exact determinant of the Gram matrix.
    pub fn det(&self) -> Int {
        det_int(&self.gram_int())
    }

    /// The bilinear form `(x, y) = x^T G y`, exactly.
    pub fn bilinear(&self, x: &LatticeVector, y: &LatticeVector) -> Result<Rat> {
        let n = self.rank();
        if x.dim() != n || y.dim() != n {
            return Err(Error::input(format!(
                "dimension mismatch: lattice rank {n}, vectors of dim {} and {}",
                x.dim(),
                y.dim()
            )));
        }
        let mut acc = Rat::zero();
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            let mut row = Rat::zero();
            for j in 0..n {
                if self.gram[i][j] != 0 && !y.coords[j].is_zero() {
                    row += &y.coords[j] * Rat::from_integer(Int::from(self.gram[i][j]));
                }
            }
            acc += &x.coords[i] * row;
        }
        Ok(acc)
    }

    /// The quadratic value `(v, v)`.
    pub fn norm(&self, v: &LatticeVector) -> Result<Rat> {
        self.bilinear(v, v)
    }

    /// True iff every diagonal Gram entry is even.
    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[i][i] % 2 == 0)
    }

    /// True iff `v` pairs integrally with every basis vector, i.e. `v` lies
    /// in the dual lattice.
    pub fn is_in_dual(&self, v: &LatticeVector) -> Result<bool> {
        let n = self.rank();
        if v.dim() != n {
            return Err(Error::input("dimension mismatch in dual membership test"));
        }
        for i in 0..n {
            let mut p = Rat::zero();
            for j in 0..n {
                if self.gram[i][j] != 0 {
                    p += &v.coords[j] * Rat::from_integer(Int::from(self.gram[i][j]));
                }
            }
            if !p.denom().is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Signature `(p, q)`: counts of positive and negative diagonal entries
    /// after exact congruence diagonalization. `p + q = rank` always, since
    /// the form is nondegenerate.
    pub fn signature(&self) -> (usize, usize) {
        let n = self.rank();
        let mut a = self.gram_qmat();
        let (mut pos, mut neg) = (0usize, 0usize);
        for k in 0..n {
            if a[(k, k)].is_zero() {
                if let Some(i) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                    sym_swap(&mut a, k, i);
                } else {
                    // all trailing diagonal entries vanish; a nonzero
                    // off-diagonal pair must exist (nondegeneracy), and
                    // adding row+column j onto i makes a_ii = 2 a_ij != 0
                    let (i, j) = find_off_diagonal(&a, k)
                        .expect("nondegenerate form has a nonzero trailing entry");
                    sym_add(&mut a, i, j);
                    sym_swap(&mut a, k, i);
                }
            }
            let pivot = a[(k, k)].clone();
            for i in k + 1..n {
                if !a[(i, k)].is_zero() {
                    let f = &a[(i, k)] / &pivot;
                    sym_sub_multiple(&mut a, i, k, &f);
                }
            }
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        (pos, neg)
    }

    /// Smith normal form data of the dual quotient `L'/L`.
    pub fn discriminant_group(&self) -> DiscriminantData {
        self.dual_quotient().discriminant_data()
    }

    /// Structured access to `L'/L` with canonical coset representatives.
    pub fn dual_quotient(&self) -> DualQuotient {
        let snf = smith_normal_form(&self.gram_int());
        DualQuotient { gram: self.gram_int(), snf }
    }

    /// Same module with the form multiplied by `d > 0`.
    pub fn rescale(&self, d: i64) -> Result<GramLattice> {
        if d <= 0 {
            return Err(Error::input(format!("rescale factor must be positive, got {d}")));
        }
        let gram = self
            .gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| {
                        x.checked_mul(d)
                            .ok_or_else(|| Error::input("Gram entry overflow in rescale"))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        GramLattice::new(gram)
    }

    /// Orthogonal direct sum (block-diagonal Gram).
    pub fn direct_sum(&self, other: &GramLattice) -> GramLattice {
        let (n, m) = (self.rank(), other.rank());
        let mut gram = vec![vec![0i64; n + m]; n + m];
        for i in 0..n {
            gram[i][..n].copy_from_slice(&self.gram[i]);
        }
        for i in 0..m {
            gram[n + i][n..].copy_from_slice(&other.gram[i]);
        }
        GramLattice { gram }
    }

    /// Matrix of the reflection `v -> v - (2 (lam, v) / (lam, lam)) lam` in
    /// the lattice basis. Requires `(lam, lam) != 0`.
    pub fn reflection_matrix(&self, lam: &LatticeVector) -> Result<QMat> {
        let n = self.rank();
        if lam.dim() != n {
            return Err(Error::input("dimension mismatch in reflection"));
        }
        let norm = self.norm(lam)?;
        if norm.is_zero() {
            return Err(Error::domain("reflection in a norm-zero vector"));
        }
        // (lam, e_j) is the j-th entry of G * lam
        let pairings: Vec<Rat> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| &lam.coords[i] * Rat::from_integer(Int::from(self.gram[i][j])))
                    .sum()
            })
            .collect();
        let two = Rat::from_integer(Int::from(2));
        Ok(QMat::from_fn(n, n, |i, j| {
            let mut x = if i == j { Rat::one() } else { Rat::zero() };
            x -= &two * &pairings[j] / &norm * &lam.coords[i];
            x
        }))
    }

    /// True iff the reflection in `lam` maps the lattice to itself, i.e. its
    /// matrix is integral.
    pub fn is_integral_reflection(&self, lam: &LatticeVector) -> Result<bool> {
        Ok(self.reflection_matrix(lam)?.is_integral())
    }

    /// True iff `g^T G g = G` exactly.
    pub fn is_isometry(&self, g: &QMat) -> bool {
        let n = self.rank();
        if g.n_rows() != n || g.n_cols() != n {
            return false;
        }
        g.transpose().mul(&self.gram_qmat()).mul(g) == self.gram_qmat()
    }

    /// All lattice vectors of norm exactly `t > 0`, one representative per
    /// sign pair (first nonzero coordinate positive), in lexicographic order.
    ///
    /// Requires a positive definite form; enumeration is exact throughout
    /// (rational LDL decomposition with integer square-root bounds).
    pub fn short_vectors(&self, t: i64) -> Result<Vec<LatticeVector>> {
        if t <= 0 {
            return Err(Error::input(format!("target norm must be positive, got {t}")));
        }
        let n = self.rank();
        if self.signature() != (n, 0) {
            return Err(Error::domain(
                "short vector enumeration requires a positive definite lattice",
            ));
        }
        let (d, l) = self.ldl();
        let target = Rat::from_integer(Int::from(t));

        // depth-first over coordinates n-1, n-2, .., 0 with exact interval
        // bounds at each level
        let mut coords = vec![Int::zero(); n];
        let mut found: Vec<LatticeVector> = Vec::new();
        self.enumerate_level(n, &d, &l, &target, &mut coords, &mut found)?;

        let mut reps: Vec<LatticeVector> =
            found.into_iter().map(|v| v.canonical_sign()).collect();
        reps.sort();
        reps.dedup();
        Ok(reps)
    }

    /// Positive generator of the ideal generated by `v^2 / 2` for `v` in an
    /// even lattice: the gcd of the diagonal halves and the off-diagonal
    /// entries of the Gram matrix.
    pub fn norm_ideal_generator(&self) -> Result<Int> {
        if !self.is_even() {
            return Err(Error::domain("norm ideal generator requires an even lattice"));
        }
        let n = self.rank();
        let mut g = Int::zero();
        for i in 0..n {
            g = gcd_int(&g, &Int::from(self.gram[i][i] / 2));
            for j in i + 1..n {
                g = gcd_int(&g, &Int::from(self.gram[i][j]));
            }
        }
        debug_assert!(!g.is_zero(), "nondegenerate even lattice has nonzero norm ideal");
        Ok(g)
    }

    /// Rational LDL data for a positive definite Gram matrix: pivots `d_i`
    /// and unit upper-triangular coefficients `l[i][j]` (j > i) with
    /// `Q(x) = sum_i d_i (x_i + sum_{j>i} l[i][j] x_j)^2`.
    fn ldl(&self) -> (Vec<Rat>, Vec<Vec<Rat>>) {
        let n = self.rank();
        let mut a = self.gram_qmat();
        let mut d = vec![Rat::zero(); n];
        let mut l = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            d[i] = a[(i, i)].clone();
            for j in i + 1..n {
                l[i][j] = &a[(i, j)] / &d[i];
            }
            for r in i + 1..n {
                for s in r..n {
                    let t = &l[i][r] * &a[(i, s)];
                    a[(r, s)] = &a[(r, s)] - &t;
                    if r != s {
                        a[(s, r)] = a[(r, s)].clone();
                    }
                }
            }
        }
        (d, l)
    }

    fn enumerate_level(
        &self,
        level: usize,
        d: &[Rat],
        l: &[Vec<Rat>],
        budget: &Rat,
        coords: &mut Vec<Int>,
        found: &mut Vec<LatticeVector>,
    ) -> Result<()> {
        if level == 0 {
            if budget.is_zero() {
                let v = LatticeVector::new(
                    coords.iter().map(|c| Rat::from_integer(c.clone())).collect(),
                );
                if !v.is_zero() {
                    found.push(v);
                }
            }
            return Ok(());
        }
        let i = level - 1;
        // center of the admissible interval for x_i given the outer choices
        let center: Rat = -(i + 1..coords.len())
            .map(|j| &l[i][j] * Rat::from_integer(coords[j].clone()))
            .sum::<Rat>();
        let radius_sq = budget / &d[i];
        let lo = ceil_minus_sqrt(&center, &radius_sq)?;
        let hi = floor_plus_sqrt(&center, &radius_sq)?;
        let mut x = lo;
        while x <= hi {
            coords[i] = x.clone();
            let offs = Rat::from_integer(x.clone()) - &center;
            let spent = &d[i] * &offs * &offs;
            let rest = budget - &spent;
            if !rest.is_negative() {
                self.enumerate_level(level - 1, d, l, &rest, coords, found)?;
            }
            x += 1u32;
        }
        coords[i] = Int::zero();
        Ok(())
    }
}

/// Invariant factors and generators of the discriminant group `L'/L`.
#[derive(Clone, Debug)]
pub struct DiscriminantData {
    /// Nontrivial invariant factors `d_1 | d_2 | ..` (unit factors dropped).
    pub invariant_factors: Vec<Int>,
    /// Dual vectors generating the corresponding cyclic factors.
    pub generators: Vec<LatticeVector>,
}

impl DiscriminantData {
    /// Order of the group, the product of the invariant factors.
    pub fn order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

/// The quotient `L'/L` with a fixed Smith basis, supporting canonical coset
/// reduction. Canonical representatives have coordinates in `[0, 1)` with
/// respect to the Smith generator basis.
#[derive(Clone, Debug)]
pub struct DualQuotient {
    gram: Vec<Vec<Int>>,
    snf: crate::matrix::Snf,
}

impl DualQuotient {
    fn rank(&self) -> usize {
        self.gram.len()
    }

    /// Invariant factors and generators, units dropped.
    pub fn discriminant_data(&self) -> DiscriminantData {
        let n = self.rank();
        let mut invariant_factors = Vec::new();
        let mut generators = Vec::new();
        for i in 0..n {
            let d = &self.snf.diag[i];
            if d.is_one() {
                continue;
            }
            invariant_factors.push(d.clone());
            generators.push(LatticeVector::new(
                (0..n).map(|r| Rat::new(self.snf.v[r][i].clone(), d.clone())).collect(),
            ));
        }
        DiscriminantData { invariant_factors, generators }
    }

    /// Canonical representative of `z + L` for `z` in the dual lattice.
    pub fn reduce(&self, z: &LatticeVector) -> Result<LatticeVector> {
        let n = self.rank();
        if z.dim() != n {
            return Err(Error::input("dimension mismatch in coset reduction"));
        }
        // w = G z must be integral exactly when z lies in the dual
        let mut w = Vec::with_capacity(n);
        for i in 0..n {
            let p: Rat = (0..n)
                .map(|j| &z.coords()[j] * Rat::from_integer(self.gram[i][j].clone()))
                .sum();
            if !p.denom().is_one() {
                return Err(Error::input("vector does not lie in the dual lattice"));
            }
            w.push(p.to_integer());
        }
        // Smith coordinates b = U w, reduced mod the invariant factors
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            let b: Int = (0..n).map(|j| &self.snf.u[i][j] * &w[j]).sum();
            let d = &self.snf.diag[i];
            let a = num::Integer::mod_floor(&b, d);
            if a.is_zero() {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                *slot += Rat::new(&a * &self.snf.v[r][i], d.clone());
            }
        }
        Ok(LatticeVector::new(out))
    }

    /// Group order `|L'/L| = |det G|`.
    pub fn order(&self) -> Int {
        self.snf.diag.iter().product::<Int>().abs()
    }
}

fn sym_swap(a: &mut QMat, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.n_rows();
    for c in 0..n {
        let (x, y) = (a[(i, c)].clone(), a[(j, c)].clone());
        a[(i, c)] = y;
        a[(j, c)] = x;
    }
    for r in 0..n {
        let (x, y) = (a[(r, i)].clone(), a[(r, j)].clone());
        a[(r, i)] = y;
        a[(r, j)] = x;
    }
}

/// `row_i += row_j` and `col_i += col_j`.
fn sym_add(a: &mut QMat, i: usize, j: usize) {
    let n = a.n_rows();
    for c in 0..n {
        let t = a[(j, c)].clone();
        a[(i, c)] = &a[(i, c)] + &t;
    }
    for r in 0..n {
        let t = a[(r, j)].clone();
        a[(r, i)] = &a[(r, i)] + &t;
    }
}

/// `row_i -= f * row_k` and `col_i -= f * col_k`.
fn sym_sub_multiple(a: &mut QMat, i: usize, k: usize, f: &Rat) {
    let n = a.n_rows();
    for c in 0..n {
        let t = f * &a[(k, c)];
        a[(i, c)] = &a[(i, c)] - &t;
    }
    for r in 0..n {
        let t = f * &a[(r, k)];
        a[(r, i)] = &a[(r, i)] - &t;
    }
}

/// Position of a nonzero off-diagonal entry in the trailing block at `k`.
fn find_off_diagonal(a: &QMat, k: usize) -> Option<(usize, usize)> {
    let n = a.n_rows();
    for i in k..n {
        for j in i + 1..n {
            if !a[(i, j)].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}
