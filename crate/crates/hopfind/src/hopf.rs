//! The Hopf algebra carrier and its canonical constructions.
//!
//! A `HopfAlgebra` stores the full structure-constant data of
//! (H, m, u, Delta, eps, S) on a fixed basis:
//!
//! * `mult[i][j][k]`  - coefficient of e_k in e_i * e_j
//! * `unit`           - coordinates of 1_H
//! * `comult[k][i][j]`- coefficient of e_i (x) e_j in Delta(e_k)
//! * `counit`         - the functional eps on the basis
//! * `antipode`       - row i holds the coordinates of S(e_i)
//!
//! Vectors are coordinate rows; linear maps (including `Endomorphism`)
//! act on the right, so "apply f then g" composes as the matrix product
//! F * G. Elements of H (x) H are rows of length d^2 with (i, j) at
//! position i*d + j.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::FieldMatrix;
use crate::subspace::Subspace;
use crate::tensor::Tensor3;

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    field: PrimeField,
    dim: usize,
    labels: Vec<String>,
    mult: Tensor3,
    unit: Vec<u64>,
    comult: Tensor3,
    counit: Vec<u64>,
    antipode: FieldMatrix,
}

/// Equality is equality of structure constants on the nose; labels are
/// presentation only.
impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}
impl Eq for HopfAlgebra {}

impl HopfAlgebra {
    /// Checks dimensional consistency and the global dimension cap; the
    /// Hopf axioms themselves are checked by [`HopfAlgebra::validate`].
    pub fn new(
        field: PrimeField,
        labels: Vec<String>,
        mult: Tensor3,
        unit: Vec<u64>,
        comult: Tensor3,
        counit: Vec<u64>,
        antipode: FieldMatrix,
    ) -> Result<Self> {
        let dim = labels.len();
        let cap = crate::dim_cap();
        if dim > cap {
            return Err(Error::DimCap { dim, cap });
        }
        if dim == 0 {
            return Err(Error::DimMismatch("dimension must be positive".into()));
        }
        if mult.dims() != (dim, dim, dim) {
            return Err(Error::DimMismatch(format!(
                "mult tensor dims {:?}",
                mult.dims()
            )));
        }
        if comult.dims() != (dim, dim, dim) {
            return Err(Error::DimMismatch(format!(
                "comult tensor dims {:?}",
                comult.dims()
            )));
        }
        if unit.len() != dim || counit.len() != dim {
            return Err(Error::DimMismatch("unit/counit length".into()));
        }
        if antipode.rows() != dim || antipode.cols() != dim {
            return Err(Error::DimMismatch("antipode matrix shape".into()));
        }
        if mult.field() != field || comult.field() != field || antipode.field() != field {
            return Err(Error::FieldMismatch(
                field.modulus(),
                mult.field().modulus(),
            ));
        }
        let unit = unit.iter().map(|&c| field.reduce(c)).collect();
        let counit = counit.iter().map(|&c| field.reduce(c)).collect();
        Ok(HopfAlgebra {
            field,
            dim,
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn comult(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn counit(&self) -> &[u64] {
        &self.counit
    }

    pub fn antipode(&self) -> &FieldMatrix {
        &self.antipode
    }

    /// Product of two elements given by coordinate rows.
    pub fn product(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        let q = self.field.modulus();
        let mut out = vec![0u64; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let c = a * b % q;
                for (o, &m) in out.iter_mut().zip(self.mult.fiber(i, j).iter()) {
                    *o = (*o + c * m) % q;
                }
            }
        }
        out
    }

    /// Delta(x) as a row of length d^2 with (i, j) at position i*d + j.
    pub fn comult_of(&self, x: &[u64]) -> Vec<u64> {
        let d = self.dim;
        let q = self.field.modulus();
        let mut out = vec![0u64; d * d];
        for (k, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for i in 0..d {
                let fiber = self.comult.fiber(k, i);
                let dst = &mut out[i * d..(i + 1) * d];
                for (o, &m) in dst.iter_mut().zip(fiber.iter()) {
                    *o = (*o + c * m) % q;
                }
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[u64]) -> u64 {
        let f = self.field;
        x.iter()
            .zip(self.counit.iter())
            .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }

    pub fn antipode_of(&self, x: &[u64]) -> Vec<u64> {
        self.antipode.apply_row(x)
    }

    /// Product of two elements of H (x) H given as rows of length d^2.
    pub fn product_in_square(&self, z: &[u64], w: &[u64]) -> Vec<u64> {
        let d = self.dim;
        let q = self.field.modulus();
        let mut out = vec![0u64; d * d];
        for (zi, &a) in z.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let (za, zb) = (zi / d, zi % d);
            for (wi, &b) in w.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let (wa, wb) = (wi / d, wi % d);
                let c = a * b % q;
                let left = self.mult.fiber(za, wa);
                let right = self.mult.fiber(zb, wb);
                for (s, &ls) in left.iter().enumerate() {
                    if ls == 0 {
                        continue;
                    }
                    let cc = c * ls % q;
                    let dst = &mut out[s * d..(s + 1) * d];
                    for (o, &rs) in dst.iter_mut().zip(right.iter()) {
                        *o = (*o + cc * rs) % q;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.dim];
        v[i] = 1;
        v
    }

    /// Left multiplication by `z` as a row-convention matrix.
    pub fn left_mult_matrix(&self, z: &[u64]) -> FieldMatrix {
        let mut m = FieldMatrix::zero(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.product(z, &self.basis_vector(j));
            for (k, &c) in col.iter().enumerate() {
                m.set(j, k, c);
            }
        }
        m
    }

    pub fn identity_endo(&self) -> Endomorphism {
        Endomorphism::new(FieldMatrix::identity(self.field, self.dim))
    }

    /// u composed with eps: the unit of the convolution algebra End(H).
    pub fn unit_counit_endo(&self) -> Endomorphism {
        let mut m = FieldMatrix::zero(self.field, self.dim, self.dim);
        for i in 0..self.dim {
            for (j, &u) in self.unit.iter().enumerate() {
                m.set(i, j, self.field.mul(self.counit[i], u));
            }
        }
        Endomorphism::new(m)
    }

    pub fn antipode_endo(&self) -> Endomorphism {
        Endomorphism::new(self.antipode.clone())
    }

    /// Convolution product (f * g)(h) = f(h_(1)) g(h_(2)).
    pub fn convolve(&self, f: &Endomorphism, g: &Endomorphism) -> Endomorphism {
        assert_eq!(f.dim(), self.dim);
        assert_eq!(g.dim(), self.dim);
        let d = self.dim;
        let q = self.field.modulus();
        let mut out = FieldMatrix::zero(self.field, d, d);
        for k in 0..d {
            let mut row = vec![0u64; d];
            for i in 0..d {
                let fiber = self.comult.fiber(k, i);
                let fi = f.matrix().row(i);
                for (j, &c) in fiber.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let gj = g.matrix().row(j);
                    let prod = self.product(fi, gj);
                    for (o, &v) in row.iter_mut().zip(prod.iter()) {
                        *o = (*o + c * v) % q;
                    }
                }
            }
            for (j, &v) in row.iter().enumerate() {
                out.set(k, j, v);
            }
        }
        Endomorphism::new(out)
    }

    /// Convolution inverse via the minimal polynomial of `f` in the
    /// convolution algebra; errors when the constant term vanishes.
    pub fn convolution_inverse(&self, f: &Endomorphism) -> Result<Endomorphism> {
        let phi = self.convolution_min_poly(f);
        let a0 = phi.constant_term();
        if a0 == 0 {
            return Err(Error::NotConvolutionInvertible);
        }
        // phi(f) = 0 => f * (-1/a0)(a_m f^{m-1} + ... + a_1) = id_conv
        let field = self.field;
        let scale = field.neg(field.inv(a0));
        let deg = phi.degree().unwrap();
        let mut acc = FieldMatrix::zero(field, self.dim, self.dim);
        let mut power = self.unit_counit_endo();
        for i in 1..=deg {
            if i > 1 {
                power = self.convolve(&power, f);
            }
            let c = field.mul(phi.coeff(i), scale);
            acc = acc.add(&power.matrix().scale(c));
        }
        Ok(Endomorphism::new(acc))
    }

    /// Minimal polynomial of `f` as an element of (End(H), *).
    pub fn convolution_min_poly(&self, f: &Endomorphism) -> crate::poly::Poly {
        use crate::matrix::{DependenceTracker, Insertion};
        let d = self.dim;
        let mut tracker = DependenceTracker::new(self.field, d * d);
        let mut power = self.unit_counit_endo();
        loop {
            let flat: Vec<u64> = (0..d)
                .flat_map(|i| power.matrix().row(i).to_vec())
                .collect();
            match tracker.insert(&flat) {
                Insertion::Independent => power = self.convolve(&power, f),
                Insertion::Dependent(combo) => {
                    let k = combo.len();
                    let mut coeffs = vec![0u64; k + 1];
                    for (i, &c) in combo.iter().enumerate() {
                        coeffs[i] = self.field.neg(c);
                    }
                    coeffs[k] = 1;
                    return crate::poly::Poly::new(self.field, coeffs);
                }
            }
        }
    }

    /// n-th convolution power by square-and-multiply; negative powers use
    /// the convolution inverse.
    pub fn convolution_power(&self, f: &Endomorphism, n: i64) -> Result<Endomorphism> {
        if n == 0 {
            return Ok(self.unit_counit_endo());
        }
        let base = if n < 0 {
            self.convolution_inverse(f)?
        } else {
            f.clone()
        };
        let mut e = n.unsigned_abs();
        let mut acc = self.unit_counit_endo();
        let mut pw = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.convolve(&acc, &pw);
            }
            e >>= 1;
            if e > 0 {
                pw = self.convolve(&pw, &pw);
            }
        }
        Ok(acc)
    }

    // ---- canonical constructions ----

    /// The dual Hopf algebra on the dual basis: pure index gymnastics.
    pub fn dual(&self) -> HopfAlgebra {
        let d = self.dim;
        let mut mult = Tensor3::zero(self.field, d, d, d);
        let mut comult = Tensor3::zero(self.field, d, d, d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    mult.set(i, j, k, self.comult.get(k, i, j));
                    comult.set(k, i, j, self.mult.get(i, j, k));
                }
            }
        }
        let labels = self.labels.iter().map(|l| format!("{l}*")).collect();
        HopfAlgebra {
            field: self.field,
            dim: d,
            labels,
            mult,
            unit: self.counit.clone(),
            comult,
            counit: self.unit.clone(),
            antipode: self.antipode.transpose(),
        }
    }

    /// Tensor product Hopf algebra on the basis e_i (x) f_j in
    /// lexicographic order.
    pub fn tensor(&self, other: &HopfAlgebra) -> Result<HopfAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.modulus(),
                other.field.modulus(),
            ));
        }
        let (da, db) = (self.dim, other.dim);
        let d = da * db;
        let cap = crate::dim_cap();
        if d > cap {
            return Err(Error::DimCap { dim: d, cap });
        }
        let f = self.field;
        let idx = |i: usize, j: usize| i * db + j;
        let mut mult = Tensor3::zero(f, d, d, d);
        for (i1, j1, k1, c1) in self.mult.nonzero() {
            for (i2, j2, k2, c2) in other.mult.nonzero() {
                mult.add_at(idx(i1, i2), idx(j1, j2), idx(k1, k2), f.mul(c1, c2));
            }
        }
        let mut comult = Tensor3::zero(f, d, d, d);
        for (k1, i1, j1, c1) in self.comult.nonzero() {
            for (k2, i2, j2, c2) in other.comult.nonzero() {
                comult.add_at(idx(k1, k2), idx(i1, i2), idx(j1, j2), f.mul(c1, c2));
            }
        }
        let mut unit = vec![0u64; d];
        let mut counit = vec![0u64; d];
        for i in 0..da {
            for j in 0..db {
                unit[idx(i, j)] = f.mul(self.unit[i], other.unit[j]);
                counit[idx(i, j)] = f.mul(self.counit[i], other.counit[j]);
            }
        }
        let mut antipode = FieldMatrix::zero(f, d, d);
        for i in 0..da {
            for j in 0..db {
                for k in 0..da {
                    let a = self.antipode.get(i, k);
                    if a == 0 {
                        continue;
                    }
                    for l in 0..db {
                        let b = other.antipode.get(j, l);
                        if b != 0 {
                            antipode.set(idx(i, j), idx(k, l), f.mul(a, b));
                        }
                    }
                }
            }
        }
        let labels = (0..da)
            .flat_map(|i| (0..db).map(move |j| format!("{}(x){}", self.labels[i], other.labels[j])))
            .collect();
        HopfAlgebra::new(f, labels, mult, unit, comult, counit, antipode)
    }

    /// Opposite algebra H^op: reversed multiplication, antipode S^{-1}.
    pub fn opposite(&self) -> Result<HopfAlgebra> {
        let d = self.dim;
        let mut mult = Tensor3::zero(self.field, d, d, d);
        for (i, j, k, c) in self.mult.nonzero() {
            mult.set(j, i, k, c);
        }
        let antipode = self.antipode.inverse().map_err(|_| Error::Singular)?;
        Ok(HopfAlgebra {
            field: self.field,
            dim: d,
            labels: self.labels.clone(),
            mult,
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode,
        })
    }

    /// Opposite coalgebra H^cop: swapped comultiplication legs, antipode S^{-1}.
    pub fn co_opposite(&self) -> Result<HopfAlgebra> {
        let d = self.dim;
        let mut comult = Tensor3::zero(self.field, d, d, d);
        for (k, i, j, c) in self.comult.nonzero() {
            comult.set(k, j, i, c);
        }
        let antipode = self.antipode.inverse().map_err(|_| Error::Singular)?;
        Ok(HopfAlgebra {
            field: self.field,
            dim: d,
            labels: self.labels.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult,
            counit: self.counit.clone(),
            antipode,
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.mult
            .nonzero()
            .all(|(i, j, k, c)| self.mult.get(j, i, k) == c)
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult
            .nonzero()
            .all(|(k, i, j, c)| self.comult.get(k, j, i) == c)
    }

    // ---- subspace predicates ----

    pub fn subspace_is_subalgebra(&self, v: &Subspace) -> bool {
        assert_eq!(v.ambient(), self.dim);
        for a in v.basis_rows() {
            for b in v.basis_rows() {
                if !v.contains(&self.product(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn subspace_is_ideal(&self, v: &Subspace) -> bool {
        assert_eq!(v.ambient(), self.dim);
        for a in v.basis_rows() {
            for i in 0..self.dim {
                let e = self.basis_vector(i);
                if !v.contains(&self.product(a, &e)) || !v.contains(&self.product(&e, a)) {
                    return false;
                }
            }
        }
        true
    }

    /// Two-sided coideal: Delta(V) in V(x)H + H(x)V and eps(V) = 0.
    pub fn subspace_is_coideal_two_sided(&self, v: &Subspace) -> bool {
        assert_eq!(v.ambient(), self.dim);
        if v.basis_rows().any(|r| self.counit_of(r) != 0) {
            return false;
        }
        let d = self.dim;
        let mut spanning: Vec<Vec<u64>> = Vec::new();
        for b in v.basis_rows() {
            for i in 0..d {
                // b (x) e_i
                let mut row = vec![0u64; d * d];
                for (a, &c) in b.iter().enumerate() {
                    row[a * d + i] = c;
                }
                spanning.push(row);
                // e_i (x) b
                let mut row = vec![0u64; d * d];
                for (a, &c) in b.iter().enumerate() {
                    row[i * d + a] = c;
                }
                spanning.push(row);
            }
        }
        let w = Subspace::from_rows(self.field, d * d, &spanning);
        v.basis_rows().all(|b| w.contains(&self.comult_of(b)))
    }

    /// Stability of V under the row-convention matrix M.
    pub fn subspace_is_stable_under(&self, m: &FieldMatrix, v: &Subspace) -> bool {
        v.basis_rows().all(|b| v.contains(&m.apply_row(b)))
    }

    pub fn subspace_is_hopf_ideal(&self, v: &Subspace) -> bool {
        self.subspace_is_ideal(v)
            && self.subspace_is_coideal_two_sided(v)
            && self.subspace_is_stable_under(&self.antipode, v)
    }

    /// Subcoalgebra test: Delta(V) in V (x) V.
    pub fn subspace_is_subcoalgebra(&self, v: &Subspace) -> bool {
        let d = self.dim;
        let mut spanning: Vec<Vec<u64>> = Vec::new();
        for a in v.basis_rows() {
            for b in v.basis_rows() {
                let mut row = vec![0u64; d * d];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        row[i * d + j] = self.field.mul(x, y);
                    }
                }
                spanning.push(row);
            }
        }
        let w = Subspace::from_rows(self.field, d * d, &spanning);
        v.basis_rows().all(|b| w.contains(&self.comult_of(b)))
    }

    // ---- axiom validation ----

    /// Exhaustive check of all Hopf axioms; the report names the first
    /// violating index tuple per axiom.
    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();
        let d = self.dim;
        let f = self.field;

        // associativity: (e_i e_j) e_k = e_i (e_j e_k)
        'assoc: for i in 0..d {
            for j in 0..d {
                let ij = self.product(&self.basis_vector(i), &self.basis_vector(j));
                for k in 0..d {
                    let ek = self.basis_vector(k);
                    let lhs = self.product(&ij, &ek);
                    let jk = self.product(&self.basis_vector(j), &ek);
                    let rhs = self.product(&self.basis_vector(i), &jk);
                    if lhs != rhs {
                        failures.push(AxiomFailure::new(Axiom::Associativity, vec![i, j, k]));
                        break 'assoc;
                    }
                }
            }
        }

        // unit law
        'unit: for j in 0..d {
            let e = self.basis_vector(j);
            if self.product(&self.unit, &e) != e || self.product(&e, &self.unit) != e {
                failures.push(AxiomFailure::new(Axiom::UnitLaw, vec![j]));
                break 'unit;
            }
        }

        // coassociativity: compare coefficient of e_a (x) e_b (x) e_c in
        // (Delta (x) id) Delta(e_k) and (id (x) Delta) Delta(e_k)
        'coassoc: for k in 0..d {
            let dk = self.comult_of(&self.basis_vector(k));
            // left: expand first leg
            let mut lhs = vec![0u64; d * d * d];
            let mut rhs = vec![0u64; d * d * d];
            for (t, &c) in dk.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (x, y) = (t / d, t % d);
                for a in 0..d {
                    for (b, &cc) in self.comult.fiber(x, a).iter().enumerate() {
                        if cc != 0 {
                            let idx = (a * d + b) * d + y;
                            lhs[idx] = f.add(lhs[idx], f.mul(c, cc));
                        }
                    }
                }
                for b in 0..d {
                    for (cidx, &cc) in self.comult.fiber(y, b).iter().enumerate() {
                        if cc != 0 {
                            let idx = (x * d + b) * d + cidx;
                            rhs[idx] = f.add(rhs[idx], f.mul(c, cc));
                        }
                    }
                }
            }
            if lhs != rhs {
                let pos = lhs
                    .iter()
                    .zip(rhs.iter())
                    .position(|(a, b)| a != b)
                    .unwrap();
                failures.push(AxiomFailure::new(
                    Axiom::Coassociativity,
                    vec![k, pos / (d * d), (pos / d) % d, pos % d],
                ));
                break 'coassoc;
            }
        }

        // counit law: (eps (x) id) Delta = id = (id (x) eps) Delta
        'counit: for k in 0..d {
            let dk = self.comult_of(&self.basis_vector(k));
            let mut left = vec![0u64; d];
            let mut right = vec![0u64; d];
            for (t, &c) in dk.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (x, y) = (t / d, t % d);
                left[y] = f.add(left[y], f.mul(c, self.counit[x]));
                right[x] = f.add(right[x], f.mul(c, self.counit[y]));
            }
            if left != self.basis_vector(k) || right != self.basis_vector(k) {
                failures.push(AxiomFailure::new(Axiom::CounitLaw, vec![k]));
                break 'counit;
            }
        }

        // bialgebra: Delta and eps are algebra maps, on basis pairs and
        // on the unit
        let unit_sq = {
            let mut v = vec![0u64; d * d];
            for (i, &a) in self.unit.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &b) in self.unit.iter().enumerate() {
                    v[i * d + j] = f.mul(a, b);
                }
            }
            v
        };
        if self.comult_of(&self.unit) != unit_sq {
            failures.push(AxiomFailure::new(Axiom::BialgebraUnit, vec![]));
        }
        if self.counit_of(&self.unit) != 1 {
            failures.push(AxiomFailure::new(Axiom::BialgebraCounit, vec![]));
        } else {
            'epsmult: for i in 0..d {
                for j in 0..d {
                    let prod = self.product(&self.basis_vector(i), &self.basis_vector(j));
                    let lhs = self.counit_of(&prod);
                    let rhs = f.mul(self.counit[i], self.counit[j]);
                    if lhs != rhs {
                        failures.push(AxiomFailure::new(Axiom::BialgebraCounit, vec![i, j]));
                        break 'epsmult;
                    }
                }
            }
        }
        'bialg: for i in 0..d {
            let di = self.comult_of(&self.basis_vector(i));
            for j in 0..d {
                let dj = self.comult_of(&self.basis_vector(j));
                let prod = self.product(&self.basis_vector(i), &self.basis_vector(j));
                let lhs = self.comult_of(&prod);
                let rhs = self.product_in_square(&di, &dj);
                if lhs != rhs {
                    failures.push(AxiomFailure::new(Axiom::BialgebraMult, vec![i, j]));
                    break 'bialg;
                }
            }
        }

        // antipode: m(S (x) id)Delta = u eps = m(id (x) S)Delta
        'antipode: for k in 0..d {
            let dk = self.comult_of(&self.basis_vector(k));
            let mut left = vec![0u64; d];
            let mut right = vec![0u64; d];
            for (t, &c) in dk.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (x, y) = (t / d, t % d);
                let sx = self.antipode.row(x);
                let ey = self.basis_vector(y);
                let l = self.product(sx, &ey);
                for (o, &v) in left.iter_mut().zip(l.iter()) {
                    *o = f.add(*o, f.mul(c, v));
                }
                let ex = self.basis_vector(x);
                let sy = self.antipode.row(y);
                let r = self.product(&ex, sy);
                for (o, &v) in right.iter_mut().zip(r.iter()) {
                    *o = f.add(*o, f.mul(c, v));
                }
            }
            let target: Vec<u64> = self
                .unit
                .iter()
                .map(|&u| f.mul(self.counit[k], u))
                .collect();
            if left != target || right != target {
                failures.push(AxiomFailure::new(Axiom::Antipode, vec![k]));
                break 'antipode;
            }
        }

        ValidationReport { failures }
    }
}

/// A linear endomorphism of H as a row-convention matrix: row i is the
/// image of e_i, composition "f then g" is F * G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Endomorphism {
    matrix: FieldMatrix,
}

impl Endomorphism {
    pub fn new(matrix: FieldMatrix) -> Self {
        assert_eq!(matrix.rows(), matrix.cols());
        Endomorphism { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        self.matrix.apply_row(v)
    }

    /// Composition self-then-other.
    pub fn then(&self, other: &Endomorphism) -> Endomorphism {
        Endomorphism::new(self.matrix.mul(&other.matrix))
    }

    pub fn trace(&self) -> u64 {
        self.matrix.trace()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Associativity,
    UnitLaw,
    Coassociativity,
    CounitLaw,
    BialgebraMult,
    BialgebraUnit,
    BialgebraCounit,
    Antipode,
}

impl fmt::Display for Axiom {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Associativity => "associativity",
            Axiom::UnitLaw => "unit law",
            Axiom::Coassociativity => "coassociativity",
            Axiom::CounitLaw => "counit law",
            Axiom::BialgebraMult => "bialgebra (comultiplication is an algebra map)",
            Axiom::BialgebraUnit => "bialgebra (unit is grouplike)",
            Axiom::BialgebraCounit => "bialgebra (counit is an algebra map)",
            Axiom::Antipode => "antipode axiom",
        };
        write!(out, "{name}")
    }
}

#[derive(Clone, Debug)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub indices: Vec<usize>,
}

impl AxiomFailure {
    fn new(axiom: Axiom, indices: Vec<usize>) -> Self {
        AxiomFailure { axiom, indices }
    }
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            write!(out, "{}", self.axiom)
        } else {
            write!(out, "{} at basis indices {:?}", self.axiom, self.indices)
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(out, "all Hopf axioms hold")
        } else {
            let lines: Vec<String> = self.failures.iter().map(|f| f.to_string()).collect();
            write!(out, "{}", lines.join("; "))
        }
    }
}
