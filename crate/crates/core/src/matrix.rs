//! Dense integer matrices, Smith normal form, and lattice helpers.
//!
//! Everything in the crate that asks "is this element zero", "what is the
//! kernel" or "are these groups isomorphic" ends up here.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer used throughout.
pub type Int = BigInt;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn ints(vs: &[i64]) -> Vec<Int> {
    vs.iter().map(|&v| Int::from(v)).collect()
}

pub fn zeros(n: usize) -> Vec<Int> {
    vec![Int::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Int> {
    let mut v = zeros(n);
    v[i] = Int::one();
    v
}

pub fn vec_add(a: &[Int], b: &[Int]) -> Vec<Int> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(a: &[Int], s: &Int) -> Vec<Int> {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(a: &[Int]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn diagonal(rows: usize, cols: usize, diag: &[Int]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Int>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r);
        }
        IntMatrix { rows: nrows, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| ints(r)).collect())
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_cols(rows: usize, cols: Vec<Vec<Int>>) -> Self {
        let ncols = cols.len();
        let mut m = Self::zeros(rows, ncols);
        for (j, c) in cols.into_iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix column");
            for (i, v) in c.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "matrix/vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Int::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += &self[(i, j)] * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, s: &Int) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i);
                r.extend(other.row(i));
                r
            })
            .collect();
        IntMatrix::from_rows(self.cols + other.cols, rows)
    }

    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Kronecker product; index `(i, j)` of the result's rows is `i * other.rows + j`.
    pub fn kron(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + j, k * other.cols + l)] = a * &other[(j, l)];
                    }
                }
            }
        }
        out
    }

    /// Keeps the listed columns, in order.
    pub fn select_cols(&self, idx: &[usize]) -> IntMatrix {
        Self::from_cols(self.rows, idx.iter().map(|&j| self.col(j)).collect())
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        Self::from_rows(self.cols, idx.iter().map(|&i| self.row(i)).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row_i += q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: &Int) {
        for c in 0..self.cols {
            let v = &self.data[j * self.cols + c] * q;
            self.data[i * self.cols + c] += v;
        }
    }

    /// col_i += q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: &Int) {
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + j] * q;
            self.data[r * self.cols + i] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -&self.data[i * self.cols + c];
            self.data[i * self.cols + c] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntMatrix {
    /// `[[a,b],[c,d]]`, row-major. An empty matrix prints as `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of [`smith_normal_form`]: `u * m * v == d` with `u`, `v` unimodular.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub d: IntMatrix,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub diag: Vec<Int>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

/// Smith normal form with both transforms and their inverses.
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (r, c) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut v_inv = IntMatrix::identity(c);
    let mut diag = Vec::new();

    let row_swap = |d: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, a: usize, b: usize| {
        d.swap_rows(a, b);
        u.swap_rows(a, b);
        ui.swap_cols(a, b);
    };
    let col_swap = |d: &mut IntMatrix, v: &mut IntMatrix, vi: &mut IntMatrix, a: usize, b: usize| {
        d.swap_cols(a, b);
        v.swap_cols(a, b);
        vi.swap_rows(a, b);
    };
    // row_i += q row_j
    let row_add = |d: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, i: usize, j: usize, q: &Int| {
        d.add_row(i, j, q);
        u.add_row(i, j, q);
        ui.add_col(j, i, &-q);
    };
    // col_i += q col_j
    let col_add = |d: &mut IntMatrix, v: &mut IntMatrix, vi: &mut IntMatrix, i: usize, j: usize, q: &Int| {
        d.add_col(i, j, q);
        v.add_col(i, j, q);
        vi.add_row(j, i, &-q);
    };

    for t in 0..r.min(c) {
        loop {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = &d[(i, j)];
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, u_inv, v, v_inv, d, diag);
            };
            row_swap(&mut d, &mut u, &mut u_inv, t, pi);
            col_swap(&mut d, &mut v, &mut v_inv, t, pj);

            let mut clean = true;
            for i in t + 1..r {
                if !d[(i, t)].is_zero() {
                    let q = &d[(i, t)] / &d[(t, t)];
                    row_add(&mut d, &mut u, &mut u_inv, i, t, &-q);
                    if !d[(i, t)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                if !d[(t, j)].is_zero() {
                    let q = &d[(t, j)] / &d[(t, t)];
                    col_add(&mut d, &mut v, &mut v_inv, j, t, &-q);
                    if !d[(t, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // pivot must divide the remaining block
            let p = d[(t, t)].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !d[(i, j)].is_multiple_of(&p)));
            if let Some(i) = bad {
                row_add(&mut d, &mut u, &mut u_inv, t, i, &Int::one());
                continue;
            }
            break;
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        diag.push(d[(t, t)].clone());
    }
    finish(u, u_inv, v, v_inv, d, diag)
}

fn finish(u: IntMatrix, u_inv: IntMatrix, v: IntMatrix, v_inv: IntMatrix, d: IntMatrix, diag: Vec<Int>) -> Smith {
    Smith { u, u_inv, v, v_inv, d, diag }
}

/// Columns form a basis of `{x : m x = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(m);
    let idx: Vec<usize> = (s.rank()..m.cols).collect();
    s.v.select_cols(&idx)
}

/// Columns form a basis of the lattice spanned by the columns of `g`.
pub fn lattice_basis(g: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(g);
    let cols = s.diag.iter().enumerate().map(|(i, di)| vec_scale(&s.u_inv.col(i), di)).collect();
    IntMatrix::from_cols(g.rows, cols)
}

/// Some integer solution of `m x = b`, if one exists.
pub fn solve(m: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    solve_with(&smith_normal_form(m), m.cols, b)
}

/// Solves `m x = b` given a precomputed Smith form of `m` (with `cols` columns).
pub fn solve_with(s: &Smith, cols: usize, b: &[Int]) -> Option<Vec<Int>> {
    let ub = s.u.apply(b);
    let mut z = zeros(cols);
    for (i, x) in ub.iter().enumerate() {
        if i < s.rank() {
            let (q, rem) = x.div_rem(&s.diag[i]);
            if !rem.is_zero() {
                return None;
            }
            z[i] = q;
        } else if !x.is_zero() {
            return None;
        }
    }
    Some(s.v.apply(&z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(m.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        for w in s.diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn identity_is_its_own_normal_form() {
        let s = smith_normal_form(&IntMatrix::identity(2));
        assert_eq!(s.d, IntMatrix::identity(2));
    }

    #[test]
    fn coprime_diagonal_collapses_to_lcm() {
        let s = smith_normal_form(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diag, ints(&[1, 6]));
    }

    #[test]
    fn degenerate_shapes() {
        check_snf(&IntMatrix::zeros(0, 3));
        check_snf(&IntMatrix::zeros(3, 0));
        check_snf(&IntMatrix::zeros(2, 2));
        check_snf(&IntMatrix::from_i64(&[&[0, 4, 6], &[0, 6, 9]]));
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntMatrix::from_i64(&[&[2, 4, 6]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        assert_eq!(solve(&m, &ints(&[3])), None);
        let x = solve(&m, &ints(&[10])).unwrap();
        assert_eq!(m.apply(&x), ints(&[10]));
    }

    #[test]
    fn lattice_basis_spans_same_lattice() {
        let g = IntMatrix::from_i64(&[&[2, 4, 0], &[0, 6, 3]]);
        let b = lattice_basis(&g);
        assert_eq!(b.cols(), 2);
        for c in g.col_vecs() {
            assert!(solve(&b, &c).is_some());
        }
        for c in b.col_vecs() {
            assert!(solve(&g, &c).is_some());
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = IntMatrix> {
            (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
                proptest::collection::vec(-9i64..10, r * c).prop_map(move |v| {
                    IntMatrix::from_rows(c, v.chunks(c).map(ints).collect())
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(1000))]
            #[test]
            fn snf_multiplies_back(m in small_matrix()) {
                check_snf(&m);
            }
        }
    }
}
