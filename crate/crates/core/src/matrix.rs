//! Exact dense linear algebra over the rationals and the integers.
//!
//! Just enough machinery for the lattice computations in this crate:
//! - [`QMat`]: rational matrices with multiplication, transpose, inverse;
//! - [`det_int`]: fraction-free (Bareiss) integer determinants;
//! - [`smith_normal_form`]: Smith normal form with both transform matrices.
//!
//! Matrices here are small (rank at most a few dozen), so the algorithms are
//! the plain textbook ones with arbitrary-precision entries.

use num::{One, Signed, Zero};

use crate::rational::{Int, Rat};

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    n_rows: usize,
    n_cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    /// Zero matrix of the given shape.
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        QMat { n_rows, n_cols, data: vec![Rat::zero(); n_rows * n_cols] }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Build from a function of the index pair.
    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = QMat::zeros(n_rows, n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from nested rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n_cols), "ragged rows");
        QMat { n_rows, n_cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.n_cols, self.n_rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.n_rows == self.n_cols
            && (0..self.n_rows)
                .all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Matrix product. Panics on shape mismatch.
    pub fn mul(&self, rhs: &QMat) -> QMat {
        assert_eq!(self.n_cols, rhs.n_rows, "shape mismatch in matrix product");
        QMat::from_fn(self.n_rows, rhs.n_cols, |i, j| {
            (0..self.n_cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.n_cols, v.len(), "shape mismatch in matrix-vector product");
        (0..self.n_rows)
            .map(|i| (0..self.n_cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.n_rows, self.n_cols, "inverse of a non-square matrix");
        let n = self.n_rows;
        let mut a = self.clone();
        let mut inv = QMat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &p;
                inv[(col, j)] = &inv[(col, j)] / &p;
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for j in 0..n {
                        let t = &a[(col, j)] * &f;
                        a[(r, j)] = &a[(r, j)] - &t;
                        let t = &inv[(col, j)] * &f;
                        inv[(r, j)] = &inv[(r, j)] - &t;
                    }
                }
            }
        }
        Some(inv)
    }

    /// True iff every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.denom().is_one())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n_cols {
            self.data.swap(a * self.n_cols + j, b * self.n_cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.n_cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.n_cols + j]
    }
}

/// Determinant of a square integer matrix by Bareiss' fraction-free
/// elimination. All intermediate values are exact integers (minors).
pub fn det_int(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return Int::one();
    }
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Int::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // divides exactly (Bareiss identity)
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Smith normal form `u * a * v = d` of a square integer matrix.
#[derive(Clone, Debug)]
pub struct Snf {
    /// Left unimodular transform.
    pub u: Vec<Vec<Int>>,
    /// Diagonal of the normal form (nonnegative, each dividing the next).
    pub diag: Vec<Int>,
    /// Right unimodular transform.
    pub v: Vec<Vec<Int>>,
}

/// Compute the Smith normal form of a square integer matrix, keeping both
/// unimodular transforms. Diagonal entries come out nonnegative with
/// `diag[i] | diag[i+1]`.
pub fn smith_normal_form(m: &[Vec<Int>]) -> Snf {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "smith normal form of a non-square matrix");
    let mut d: Vec<Vec<Int>> = m.to_vec();
    let mut u = ident_int(n);
    let mut v = ident_int(n);

    for k in 0..n {
        'outer: loop {
            let Some((pi, pj)) = min_nonzero(&d, k) else {
                break; // remaining block is zero
            };
            swap_rows(&mut d, &mut u, k, pi);
            swap_cols(&mut d, &mut v, k, pj);
            if d[k][k].is_negative() {
                negate_row(&mut d, &mut u, k);
            }
            // clear column k below the pivot
            let mut dirty = false;
            for i in k + 1..n {
                if !d[i][k].is_zero() {
                    let q = div_nearest(&d[i][k], &d[k][k]);
                    row_sub(&mut d, &mut u, i, k, &q);
                    if !d[i][k].is_zero() {
                        dirty = true;
                    }
                }
            }
            // clear row k right of the pivot
            for j in k + 1..n {
                if !d[k][j].is_zero() {
                    let q = div_nearest(&d[k][j], &d[k][k]);
                    col_sub(&mut d, &mut v, j, k, &q);
                    if !d[k][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue; // leftover remainders become the next pivot
            }
            // enforce divisibility of the trailing block by the pivot
            for i in k + 1..n {
                for j in k + 1..n {
                    if !(&d[i][j] % &d[k][k]).is_zero() {
                        let one = Int::one();
                        row_sub(&mut d, &mut u, k, i, &-one);
                        continue 'outer;
                    }
                }
            }
            break;
        }
    }
    Snf { u, diag: (0..n).map(|i| d[i][i].clone()).collect(), v }
}

fn ident_int(n: usize) -> Vec<Vec<Int>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect()
}

/// Position of the entry of least nonzero absolute value in the trailing
/// block starting at `(k, k)`.
fn min_nonzero(d: &[Vec<Int>], k: usize) -> Option<(usize, usize)> {
    let n = d.len();
    let mut best: Option<(usize, usize)> = None;
    for i in k..n {
        for j in k..n {
            if !d[i][j].is_zero()
                && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
            {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Quotient rounded to nearest, so remainders shrink below `|b| / 2`.
fn div_nearest(a: &Int, b: &Int) -> Int {
    let (q, r) = num::Integer::div_mod_floor(a, b);
    if Rat::new(r, b.abs()) > Rat::new(Int::one(), Int::from(2)) {
        q + 1
    } else {
        q
    }
}

fn swap_rows(d: &mut [Vec<Int>], u: &mut [Vec<Int>], a: usize, b: usize) {
    if a != b {
        d.swap(a, b);
        u.swap(a, b);
    }
}

fn swap_cols(d: &mut [Vec<Int>], v: &mut [Vec<Int>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in d.iter_mut() {
        row.swap(a, b);
    }
    for row in v.iter_mut() {
        row.swap(a, b);
    }
}

fn negate_row(d: &mut [Vec<Int>], u: &mut [Vec<Int>], i: usize) {
    for x in &mut d[i] {
        *x = -std::mem::take(x);
    }
    for x in &mut u[i] {
        *x = -std::mem::take(x);
    }
}

/// `row_i -= q * row_k` on `d`, mirrored on `u`.
fn row_sub(d: &mut [Vec<Int>], u: &mut [Vec<Int>], i: usize, k: usize, q: &Int) {
    let n = d[0].len();
    for j in 0..n {
        let t = q * &d[k][j];
        d[i][j] -= t;
        let t = q * &u[k][j];
        u[i][j] -= t;
    }
}

/// `col_j -= q * col_k` on `d`, mirrored on `v`.
fn col_sub(d: &mut [Vec<Int>], v: &mut [Vec<Int>], j: usize, k: usize, q: &Int) {
    for row in d.iter_mut() {
        let t = q * &row[k];
        row[j] -= t;
    }
    for row in v.iter_mut() {
        let t = q * &row[k];
        row[j] -= t;
    }
}

/// Integer matrix product (helper for tests and transforms).
pub fn mul_int(a: &[Vec<Int>], b: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let (n, m) = (a.len(), b[0].len());
    let inner = b.len();
    assert!(a.iter().all(|r| r.len() == inner), "shape mismatch");
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn int_mat(rows: &[&[i64]]) -> Vec<Vec<Int>> {
        rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det_int(&int_mat(&[&[2]])), Int::from(2));
        assert_eq!(det_int(&int_mat(&[&[0, 1], &[1, 0]])), Int::from(-1));
        assert_eq!(det_int(&int_mat(&[&[2, -1], &[-1, 2]])), Int::from(3));
        assert_eq!(det_int(&int_mat(&[&[1, 2], &[2, 4]])), Int::from(0));
        // 3x3 with a zero pivot forcing a swap
        assert_eq!(det_int(&int_mat(&[&[0, 1, 2], &[1, 0, 3], &[4, 5, 6]])), Int::from(16));
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMat::from_rows(vec![
            vec![rat_int(2), rat_int(1)],
            vec![rat_int(1), rat_int(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), QMat::identity(2));
        assert_eq!(inv.mul(&m), QMat::identity(2));

        let singular = QMat::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(2), rat_int(4)],
        ]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn snf_diagonal_and_transforms() {
        // worked example with invariant factors 1, 3, 21, 0 dropped/kept:
        let m = int_mat(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        let snf = smith_normal_form(&m);
        // u * m * v equals diag
        let prod = mul_int(&mul_int(&snf.u, &m), &snf.v);
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { snf.diag[i].clone() } else { Int::zero() };
                assert_eq!(prod[i][j], expect, "at ({i},{j})");
            }
        }
        // divisibility chain and unimodular transforms
        for i in 0..3 {
            if !snf.diag[i].is_zero() {
                assert!((&snf.diag[i + 1] % &snf.diag[i]).is_zero());
            }
        }
        assert_eq!(det_int(&snf.u).abs(), Int::one());
        assert_eq!(det_int(&snf.v).abs(), Int::one());
        assert_eq!(snf.diag[..3].to_vec(), vec![Int::from(1), Int::from(3), Int::from(21)]);
    }

    #[test]
    fn snf_of_d4_gram() {
        let d4 = int_mat(&[
            &[2, -1, 0, 0],
            &[-1, 2, -1, -1],
            &[0, -1, 2, 0],
            &[0, -1, 0, 2],
        ]);
        let snf = smith_normal_form(&d4);
        assert_eq!(
            snf.diag,
            vec![Int::from(1), Int::from(1), Int::from(2), Int::from(2)]
        );
    }

    mod properties {
        use super::*;
        use num::Signed;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn snf_decomposition_holds(
                (n, vals) in (1usize..=4).prop_flat_map(|n| {
                    (Just(n), proptest::collection::vec(-9i64..=9, n * n))
                })
            ) {
                let m: Vec<Vec<Int>> = (0..n)
                    .map(|i| (0..n).map(|j| Int::from(vals[i * n + j])).collect())
                    .collect();
                let snf = smith_normal_form(&m);
                // u m v is the diagonal, nonnegative, with the divisibility chain
                let prod = mul_int(&mul_int(&snf.u, &m), &snf.v);
                for i in 0..n {
                    for j in 0..n {
                        let expect = if i == j { snf.diag[i].clone() } else { Int::zero() };
                        prop_assert_eq!(&prod[i][j], &expect);
                    }
                    prop_assert!(!snf.diag[i].is_negative());
                    if i + 1 < n && !snf.diag[i].is_zero() {
                        prop_assert!((&snf.diag[i + 1] % &snf.diag[i]).is_zero());
                    }
                }
                prop_assert_eq!(det_int(&snf.u).abs(), Int::one());
                prop_assert_eq!(det_int(&snf.v).abs(), Int::one());
                // the product of the diagonal recovers |det|
                let d: Int = snf.diag.iter().product();
                prop_assert_eq!(d, det_int(&m).abs());
            }
        }
    }
}
