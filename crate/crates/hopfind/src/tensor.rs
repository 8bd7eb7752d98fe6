//! Dense rank-3 tensors over GF(q), the carrier for structure constants.

use crate::field::PrimeField;

/// `c[i][j][k]` stored row-major; all entries reduced mod q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    field: PrimeField,
    dims: (usize, usize, usize),
    data: Vec<u64>,
}

impl Tensor3 {
    pub fn zero(field: PrimeField, d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 {
            field,
            dims: (d1, d2, d3),
            data: vec![0; d1 * d2 * d3],
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(i * self.dims.1 + j) * self.dims.2 + k]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: u64) {
        self.data[(i * self.dims.1 + j) * self.dims.2 + k] = v % self.field.modulus();
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: u64) {
        let idx = (i * self.dims.1 + j) * self.dims.2 + k;
        self.data[idx] = (self.data[idx] + v) % self.field.modulus();
    }

    /// The fiber `c[i][j][.]` as a slice of length `dims.2`.
    #[inline]
    pub fn fiber(&self, i: usize, j: usize) -> &[u64] {
        let start = (i * self.dims.1 + j) * self.dims.2;
        &self.data[start..start + self.dims.2]
    }

    /// Nonzero entries in lexicographic index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize, u64)> + '_ {
        let (d1, d2, d3) = self.dims;
        (0..d1).flat_map(move |i| {
            (0..d2).flat_map(move |j| {
                (0..d3).filter_map(move |k| {
                    let v = self.get(i, j, k);
                    (v != 0).then_some((i, j, k, v))
                })
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn indexing_and_nonzero_order() {
        let f = PrimeField::new(3).unwrap();
        let mut t = Tensor3::zero(f, 2, 2, 2);
        t.set(1, 0, 1, 2);
        t.set(0, 1, 0, 5); // reduces to 2
        assert_eq!(t.get(0, 1, 0), 2);
        assert_eq!(t.fiber(1, 0), &[0, 2]);
        let nz: Vec<_> = t.nonzero().collect();
        assert_eq!(nz, vec![(0, 1, 0, 2), (1, 0, 1, 2)]);
    }
}
