//! Dense exact linear algebra over F_p.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// All rows must have the same length; `cols` is needed for the empty case.
    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul_vec(&self, f: &PrimeField, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|r| dot(f, self.row(r), v)).collect())
    }

    pub fn mul(&self, f: &PrimeField, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// In-place reduced row echelon form with the leftmost-pivot rule.
    /// Returns the pivot column of each nonzero row, in row order.
    pub fn rref(&mut self, f: &PrimeField) -> Vec<usize> {
        let p = f.p() as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in c..cols {
                let v = f.mul(self.get(r, j), inv);
                self.set(r, j, v);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for other in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let factor = other[c];
                if factor == 0 {
                    continue;
                }
                let neg = p - factor as u64;
                for j in c..cols {
                    other[j] = ((other[j] as u64 + neg * pivot_row[j] as u64) % p) as Scalar;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &PrimeField) -> usize {
        self.clone().rref(f).len()
    }
}

pub fn dot(f: &PrimeField, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let p = f.p() as u64;
    let mut acc: u64 = 0;
    for (x, y) in a.iter().zip(b) {
        acc = (acc + *x as u64 * *y as u64) % p;
    }
    acc as Scalar
}

/// Basis of the right kernel, itself in reduced row echelon form.
pub fn kernel_basis(f: &PrimeField, m: &Matrix) -> Vec<Vec<Scalar>> {
    let mut r = m.clone();
    let pivots = r.rref(f);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0; m.cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r.get(row, free));
        }
        basis.push(v);
    }
    if basis.is_empty() {
        return basis;
    }
    let mut k = Matrix::from_rows(m.cols, &basis).expect("uniform rows");
    let n = k.rref(f).len();
    k.row_vecs().into_iter().take(n).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Solution(Vec<Scalar>),
    Inconsistent,
}

/// Solves `M x = b`, free variables set to zero.
pub fn solve_or_witness(f: &PrimeField, m: &Matrix, b: &[Scalar]) -> Result<SolveOutcome> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch { expected: m.rows, found: b.len() });
    }
    let mut aug = Matrix::zeros(m.rows, m.cols + 1);
    for r in 0..m.rows {
        for c in 0..m.cols {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, m.cols, b[r]);
    }
    let pivots = aug.rref(f);
    if pivots.last() == Some(&m.cols) {
        return Ok(SolveOutcome::Inconsistent);
    }
    let mut x = vec![0; m.cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.get(row, m.cols);
    }
    Ok(SolveOutcome::Solution(x))
}

/// Inverse of a square matrix.
pub fn invert(f: &PrimeField, m: &Matrix) -> Result<Matrix> {
    let n = m.rows;
    if m.cols != n {
        return Err(Error::DimensionMismatch { expected: n, found: m.cols });
    }
    let mut aug = Matrix::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c));
        }
        aug.set(r, n + r, 1);
    }
    let pivots = aug.rref(f);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    let mut inv = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, aug.get(r, n + c));
        }
    }
    Ok(inv)
}

/// Incrementally built, fully reduced row echelon basis of a row space.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Echelon { field, cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Remainder of `v` after subtracting its projection on the current rows.
    pub fn reduce(&self, v: &mut [Scalar]) {
        let p = self.field.p() as u64;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            let neg = p - c as u64;
            for j in 0..self.cols {
                if row[j] != 0 {
                    v[j] = ((v[j] as u64 + neg * row[j] as u64) % p) as Scalar;
                }
            }
        }
    }

    /// Coordinates of `v` on the stored rows, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&pc| v[pc]).collect();
        let mut w = v.to_vec();
        self.reduce(&mut w);
        if w.iter().any(|&x| x != 0) {
            None
        } else {
            Some(coords)
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(v[pc]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        let p = f.p() as u64;
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c == 0 {
                continue;
            }
            let neg = p - c as u64;
            for j in 0..self.cols {
                if v[j] != 0 {
                    row[j] = ((row[j] as u64 + neg * v[j] as u64) % p) as Scalar;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }
}
