//! Dense matrices over GF(q) with deterministic row reduction.
//!
//! Vectors are coordinate rows throughout the crate; a matrix acting as a
//! linear map sends the row `v` to `v * M` (row i of `M` is the image of
//! the i-th basis vector).

use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FieldMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        FieldMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row slices, reducing every entry mod q.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut m = Self::zero(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, field.reduce(x));
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.field.modulus();
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = Self::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = self.field.add(*a, b);
        }
        out
    }

    pub fn sub(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(other.data.iter()) {
            *a = self.field.sub(*a, b);
        }
        out
    }

    pub fn scale(&self, c: u64) -> FieldMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.mul(*a, c);
        }
        out
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let q = self.field.modulus();
        let mut out = Self::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow.iter()) {
                    *d = (*d + a * b) % q;
                }
            }
        }
        out
    }

    /// Row vector times matrix: the image of `v` under the map with row i
    /// the image of basis vector i.
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let q = self.field.modulus();
        let mut out = vec![0u64; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(i).iter()) {
                *o = (*o + c * m) % q;
            }
        }
        out
    }

    pub fn trace(&self) -> u64 {
        assert_eq!(self.rows, self.cols);
        let mut t = 0u64;
        for i in 0..self.rows {
            t = self.field.add(t, self.get(i, i));
        }
        t
    }

    pub fn pow(&self, mut e: u64) -> FieldMatrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduced row-echelon form and rank. Deterministic: columns scanned
    /// left to right, pivot rows normalized to 1, pivot columns cleared.
    pub fn rref(&self) -> (FieldMatrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    pub fn rref_in_place(&mut self) -> usize {
        let f = self.field;
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row >= self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if src != pivot_row {
                for j in 0..self.cols {
                    let a = self.get(src, j);
                    let b = self.get(pivot_row, j);
                    self.set(src, j, b);
                    self.set(pivot_row, j, a);
                }
            }
            let inv = f.inv(self.get(pivot_row, col));
            for j in col..self.cols {
                let v = f.mul(self.get(pivot_row, j), inv);
                self.set(pivot_row, j, v);
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let c = self.get(r, col);
                if c == 0 {
                    continue;
                }
                for j in col..self.cols {
                    let v = f.sub(self.get(r, j), f.mul(c, self.get(pivot_row, j)));
                    self.set(r, j, v);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Inverse by Gauss-Jordan on [M | I].
    pub fn inverse(&self) -> Result<FieldMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = FieldMatrix::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let rank = aug.rref_in_place();
        if rank < n || (0..n).any(|i| (0..n).any(|j| aug.get(i, j) != u64::from(i == j))) {
            return Err(Error::Singular);
        }
        let mut inv = FieldMatrix::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(inv)
    }
}

/// Incremental linear-dependence detection with combination tracking.
///
/// Vectors are inserted one at a time; the first dependent insertion
/// returns the coefficients expressing it over the earlier ones.
pub struct DependenceTracker {
    field: PrimeField,
    len: usize,
    // (reduced row with leading 1, expression over inserted vectors)
    rows: Vec<(Vec<u64>, Vec<u64>)>,
    inserted: usize,
}

pub enum Insertion {
    Independent,
    /// `v_new = sum(coeffs[i] * v_i)` over previously inserted vectors.
    Dependent(Vec<u64>),
}

impl DependenceTracker {
    pub fn new(field: PrimeField, len: usize) -> Self {
        DependenceTracker {
            field,
            len,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, v: &[u64]) -> Insertion {
        assert_eq!(v.len(), self.len);
        let f = self.field;
        let mut rem: Vec<u64> = v.iter().map(|&x| f.reduce(x)).collect();
        let mut expr = vec![0u64; self.inserted + 1];
        expr[self.inserted] = 1;
        for (row, rexpr) in &self.rows {
            let pivot = row.iter().position(|&x| x != 0).unwrap();
            let c = rem[pivot];
            if c == 0 {
                continue;
            }
            for (r, &x) in rem.iter_mut().zip(row.iter()) {
                *r = f.sub(*r, f.mul(c, x));
            }
            for (e, &x) in expr.iter_mut().zip(rexpr.iter()) {
                *e = f.sub(*e, f.mul(c, x));
            }
        }
        self.inserted += 1;
        if rem.iter().all(|&x| x == 0) {
            // v + sum(expr[i] v_i) = 0 over i < inserted-1
            let coeffs = expr[..self.inserted - 1]
                .iter()
                .map(|&c| f.neg(c))
                .collect();
            self.inserted -= 1; // dependent vectors are not stored
            return Insertion::Dependent(coeffs);
        }
        let pivot = rem.iter().position(|&x| x != 0).unwrap();
        let inv = f.inv(rem[pivot]);
        for r in rem.iter_mut() {
            *r = f.mul(*r, inv);
        }
        let mut padded = expr;
        for e in padded.iter_mut() {
            *e = f.mul(*e, inv);
        }
        for (row, rexpr) in self.rows.iter_mut() {
            rexpr.resize(self.inserted, 0);
            let c = row[pivot];
            if c == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(rem.iter()) {
                *x = f.sub(*x, f.mul(c, y));
            }
            for (x, &y) in rexpr.iter_mut().zip(padded.iter()) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        self.rows.push((rem, padded));
        Insertion::Independent
    }
}
