//! Subspaces of GF(q)^d held as canonical reduced row-echelon bases.
//!
//! Canonical bases make equality of subspaces equality of representations,
//! so filtration chains and adapted bases are deterministic.

use crate::field::PrimeField;
use crate::matrix::FieldMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: FieldMatrix, // RREF, no zero rows
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: FieldMatrix::zero(field, 0, ambient),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: FieldMatrix::identity(field, ambient),
        }
    }

    pub fn from_rows(field: PrimeField, ambient: usize, rows: &[Vec<u64>]) -> Self {
        let m = FieldMatrix::from_rows(field, ambient, rows);
        let (r, rank) = m.rref();
        let kept: Vec<Vec<u64>> = (0..rank).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis: FieldMatrix::from_rows(field, ambient, &kept),
        }
    }

    /// Right null space `{v : M v^T = 0}` as a subspace of GF(q)^cols.
    pub fn kernel(m: &FieldMatrix) -> Self {
        let f = m.field();
        let cols = m.cols();
        let (r, rank) = m.rref();
        let mut pivots = Vec::with_capacity(rank);
        for i in 0..rank {
            let p = (0..cols).find(|&j| r.get(i, j) != 0).unwrap();
            pivots.push(p);
        }
        let mut rows = Vec::new();
        for free in 0..cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            rows.push(v);
        }
        Subspace::from_rows(f, cols, &rows)
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &FieldMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[u64]> + '_ {
        (0..self.dim()).map(|i| self.basis.row(i))
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                (0..self.ambient)
                    .find(|&j| self.basis.get(i, j) != 0)
                    .unwrap()
            })
            .collect()
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field();
        let mut rem: Vec<u64> = v.iter().map(|&x| f.reduce(x)).collect();
        for (row, &p) in self.basis_rows().zip(self.pivots().iter()) {
            let c = rem[p];
            if c == 0 {
                continue;
            }
            for (r, &x) in rem.iter_mut().zip(row.iter()) {
                *r = f.sub(*r, f.mul(c, x));
            }
        }
        rem
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let rows: Vec<Vec<u64>> = self
            .basis_rows()
            .chain(other.basis_rows())
            .map(|r| r.to_vec())
            .collect();
        Subspace::from_rows(self.field(), self.ambient, &rows)
    }

    /// Inserts a vector, re-canonicalizing; returns true if the dimension grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        if self.contains(v) {
            return false;
        }
        let mut rows: Vec<Vec<u64>> = self.basis_rows().map(|r| r.to_vec()).collect();
        rows.push(v.to_vec());
        *self = Subspace::from_rows(self.field(), self.ambient, &rows);
        true
    }

    /// Vectors vanishing under every functional row of `self`
    /// (the annihilator under the evaluation pairing).
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient);
        }
        Subspace::kernel(&self.basis)
    }
}
