//! Constructors producing validated Hopf algebras from higher-level data:
//! finite groups (Cayley tables), the truncated-polynomial algebras H(delta),
//! and restricted enveloping algebras built by PBW straightening.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::hopf::HopfAlgebra;
use crate::matrix::FieldMatrix;
use crate::tensor::Tensor3;

/// A finite group as a Cayley table: `table[i][j]` is the index of g_i g_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
}

impl GroupTable {
    /// Checks the identity law, associativity on all triples, and that
    /// every row and column is a permutation.
    pub fn new(order: usize, identity: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGroupTable("order must be positive".into()));
        }
        if identity >= order || table.len() != order {
            return Err(Error::InvalidGroupTable("shape mismatch".into()));
        }
        for row in &table {
            if row.len() != order || row.iter().any(|&x| x >= order) {
                return Err(Error::InvalidGroupTable("entry out of range".into()));
            }
        }
        let g = GroupTable {
            order,
            identity,
            table,
        };
        for i in 0..order {
            if g.mul(i, identity) != i || g.mul(identity, i) != i {
                return Err(Error::InvalidGroupTable(format!(
                    "identity law fails at {i}"
                )));
            }
        }
        for i in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for j in 0..order {
                seen_row[g.mul(i, j)] = true;
                seen_col[g.mul(j, i)] = true;
            }
            if seen_row.iter().any(|&s| !s) || seen_col.iter().any(|&s| !s) {
                return Err(Error::InvalidGroupTable(format!(
                    "row or column {i} is not a permutation"
                )));
            }
        }
        for i in 0..order {
            for j in 0..order {
                for k in 0..order {
                    if g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k)) {
                        return Err(Error::InvalidGroupTable(format!(
                            "associativity fails at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.order)
            .find(|&j| self.mul(i, j) == self.identity)
            .unwrap()
    }

    /// g_i raised to an integer power, negative exponents via the inverse.
    pub fn power(&self, i: usize, n: i64) -> usize {
        let base = if n < 0 { self.inverse(i) } else { i };
        let mut acc = self.identity;
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let table = (0..n)
            .map(|i| (0..n).map(|j| (i + j) % n).collect())
            .collect();
        GroupTable {
            order: n,
            identity: 0,
            table,
        }
    }

    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let idx = |i: usize, j: usize| i * nb + j;
        let mut table = vec![vec![0usize; n]; n];
        for i1 in 0..na {
            for j1 in 0..nb {
                for i2 in 0..na {
                    for j2 in 0..nb {
                        table[idx(i1, j1)][idx(i2, j2)] = idx(a.mul(i1, i2), b.mul(j1, j2));
                    }
                }
            }
        }
        GroupTable {
            order: n,
            identity: idx(a.identity, b.identity),
            table,
        }
    }
}

/// Group algebra kG: basis the group elements, Delta(g) = g (x) g,
/// eps(g) = 1, S(g) = g^{-1}.
pub fn group_algebra(group: &GroupTable, p: u64) -> Result<HopfAlgebra> {
    let field = PrimeField::new(p)?;
    let n = group.order();
    let mut mult = Tensor3::zero(field, n, n, n);
    let mut comult = Tensor3::zero(field, n, n, n);
    let mut antipode = FieldMatrix::zero(field, n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set(i, j, group.mul(i, j), 1);
        }
        comult.set(i, i, i, 1);
        antipode.set(i, group.inverse(i), 1);
    }
    let mut unit = vec![0u64; n];
    unit[group.identity()] = 1;
    let counit = vec![1u64; n];
    let labels = (0..n)
        .map(|i| {
            if i == group.identity() {
                "1".into()
            } else {
                format!("g{i}")
            }
        })
        .collect();
    let h = HopfAlgebra::new(field, labels, mult, unit, comult, counit, antipode)?;
    let report = h.validate();
    if !report.is_valid() {
        return Err(Error::ConstructionInvalid(report.to_string()));
    }
    Ok(h)
}

/// Function algebra k^G, realized as the dual of kG on the basis of
/// indicator functions.
pub fn function_algebra(group: &GroupTable, p: u64) -> Result<HopfAlgebra> {
    Ok(group_algebra(group, p)?.dual())
}

/// H(delta) = k\[x\]/(x^p - delta x) with x primitive and S(x) = -x.
pub fn h_delta(p: u64, delta: u64) -> Result<HopfAlgebra> {
    if delta > 1 {
        return Err(Error::Document(format!(
            "delta must be 0 or 1, got {delta}"
        )));
    }
    let field = PrimeField::new(p)?;
    let n = p as usize;
    let mut mult = Tensor3::zero(field, n, n, n);
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                mult.set(i, j, i + j, 1);
            } else {
                // x^p = delta x, and i + j <= 2p - 2 keeps one rewrite enough
                mult.set(i, j, i + j - n + 1, delta);
            }
        }
    }
    // Delta(x^k) expands binomially since x is primitive
    let binom = pascal_mod(field, n - 1);
    let mut comult = Tensor3::zero(field, n, n, n);
    for (k, row) in binom.iter().enumerate() {
        for (j, &b) in row.iter().enumerate() {
            comult.set(k, j, k - j, b);
        }
    }
    let mut unit = vec![0u64; n];
    unit[0] = 1;
    let mut counit = vec![0u64; n];
    counit[0] = 1;
    // S(x^k) = (-x)^k
    let mut antipode = FieldMatrix::zero(field, n, n);
    for k in 0..n {
        antipode.set(k, k, field.pow(field.neg(1), k as u64));
    }
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    let h = HopfAlgebra::new(field, labels, mult, unit, comult, counit, antipode)?;
    let report = h.validate();
    if !report.is_valid() {
        return Err(Error::ConstructionInvalid(report.to_string()));
    }
    Ok(h)
}

fn pascal_mod(field: PrimeField, up_to: usize) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = vec![vec![1]];
    for n in 1..=up_to {
        let prev = &rows[n - 1];
        let mut row = vec![1u64; n + 1];
        for j in 1..n {
            row[j] = field.add(prev[j - 1], prev[j]);
        }
        rows.push(row);
    }
    rows
}

/// A restricted Lie algebra over GF(p) given by bracket structure
/// constants and the p-operation on basis elements.
#[derive(Clone, Debug)]
pub struct RestrictedLie {
    field: PrimeField,
    dim: usize,
    bracket: Tensor3,  // [e_i, e_j] = sum_k bracket[i][j][k] e_k
    pmap: FieldMatrix, // e_i^{[p]} = sum_k pmap[i][k] e_k
}

impl RestrictedLie {
    /// Checks antisymmetry, the Jacobi identity on all basis triples, and
    /// restrictedness \[e_i^{\[p\]}, e_j\] = (ad e_i)^p (e_j) on basis pairs.
    pub fn new(field: PrimeField, bracket: Tensor3, pmap: FieldMatrix) -> Result<Self> {
        let dim = pmap.rows();
        if bracket.dims() != (dim, dim, dim) || pmap.cols() != dim {
            return Err(Error::InvalidLieData("shape mismatch".into()));
        }
        if bracket.field() != field || pmap.field() != field {
            return Err(Error::FieldMismatch(
                field.modulus(),
                bracket.field().modulus(),
            ));
        }
        let lie = RestrictedLie {
            field,
            dim,
            bracket,
            pmap,
        };
        for i in 0..dim {
            for k in 0..dim {
                if lie.bracket.get(i, i, k) != 0 {
                    return Err(Error::InvalidLieData(format!("[e{i}, e{i}] != 0")));
                }
            }
            for j in 0..dim {
                for k in 0..dim {
                    if lie.bracket.get(i, j, k) != field.neg(lie.bracket.get(j, i, k)) {
                        return Err(Error::InvalidLieData(format!(
                            "antisymmetry fails at ({i}, {j})"
                        )));
                    }
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut acc = vec![0u64; dim];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = lie.bracket_of(&lie.basis_vec(a), &lie.basis_vec(b));
                        let outer = lie.bracket_of(&inner, &lie.basis_vec(c));
                        for (o, &v) in acc.iter_mut().zip(outer.iter()) {
                            *o = field.add(*o, v);
                        }
                    }
                    if acc.iter().any(|&v| v != 0) {
                        return Err(Error::InvalidLieData(format!(
                            "Jacobi identity fails at ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        let p = field.modulus();
        for i in 0..dim {
            // ad e_i as a row-convention matrix
            let mut ad = FieldMatrix::zero(field, dim, dim);
            for j in 0..dim {
                for (k, &c) in lie.bracket.fiber(i, j).iter().enumerate() {
                    ad.set(j, k, c);
                }
            }
            let ad_p = ad.pow(p);
            for j in 0..dim {
                let lhs = lie.bracket_of(&lie.pmap_row(i), &lie.basis_vec(j));
                let rhs = ad_p.apply_row(&lie.basis_vec(j));
                if lhs != rhs {
                    return Err(Error::InvalidLieData(format!(
                        "restrictedness fails: [e{i}^[p], e{j}] != (ad e{i})^p e{j}"
                    )));
                }
            }
        }
        Ok(lie)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket(&self) -> &Tensor3 {
        &self.bracket
    }

    pub fn pmap(&self) -> &FieldMatrix {
        &self.pmap
    }

    fn basis_vec(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.dim];
        v[i] = 1;
        v
    }

    fn pmap_row(&self, i: usize) -> Vec<u64> {
        self.pmap.row(i).to_vec()
    }

    fn bracket_of(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut out = vec![0u64; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let c = f.mul(a, b);
                for (o, &m) in out.iter_mut().zip(self.bracket.fiber(i, j).iter()) {
                    *o = f.add(*o, f.mul(c, m));
                }
            }
        }
        out
    }

    /// Abelian restricted Lie algebra with a prescribed p-operation matrix.
    pub fn abelian(field: PrimeField, dim: usize, pmap: FieldMatrix) -> Result<Self> {
        Self::new(field, Tensor3::zero(field, dim, dim, dim), pmap)
    }

    /// Heisenberg restricted Lie algebra: [x, y] = z, z central, all
    /// p-operations zero.
    pub fn heisenberg(p: u64) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let mut bracket = Tensor3::zero(field, 3, 3, 3);
        bracket.set(0, 1, 2, 1);
        bracket.set(1, 0, 2, field.neg(1));
        Self::new(field, bracket, FieldMatrix::zero(field, 3, 3))
    }
}

const REWRITE_STEP_CAP: u64 = 10_000_000;

/// Noncommutative words in generator letters with GF(p) coefficients,
/// straightened by the rewriting rules
///
///   e_j e_i -> e_i e_j + [e_j, e_i]   (j > i)
///   e_i^p   -> e_i^{[p]}
///
/// Termination: the first rule keeps the degree and lowers the inversion
/// count, the bracket and p-map terms strictly lower the degree.
fn straighten(
    lie: &RestrictedLie,
    word: Vec<u8>,
    steps: &mut u64,
) -> Result<BTreeMap<Vec<u8>, u64>> {
    let f = lie.field;
    let p = f.modulus() as usize;
    let mut normal: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
    let mut pending: Vec<(Vec<u8>, u64)> = vec![(word, 1)];
    while let Some((w, coeff)) = pending.pop() {
        if coeff == 0 {
            continue;
        }
        *steps += 1;
        if *steps > REWRITE_STEP_CAP {
            return Err(Error::RewriteCap);
        }
        // locate the leftmost violation
        let mut violation = None;
        for t in 0..w.len() {
            if t + 1 < w.len() && w[t] > w[t + 1] {
                violation = Some((t, true));
                break;
            }
            if t + p <= w.len() && w[t..t + p].iter().all(|&l| l == w[t]) {
                violation = Some((t, false));
                break;
            }
        }
        match violation {
            None => {
                let e = normal.entry(w).or_insert(0);
                *e = f.add(*e, coeff);
                if *e == 0 {
                    // keep the map sparse
                }
            }
            Some((t, swap)) => {
                if swap {
                    let (hi, lo) = (w[t] as usize, w[t + 1] as usize);
                    let mut swapped = w.clone();
                    swapped.swap(t, t + 1);
                    pending.push((swapped, coeff));
                    for (k, &c) in lie.bracket.fiber(hi, lo).iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let mut shorter = Vec::with_capacity(w.len() - 1);
                        shorter.extend_from_slice(&w[..t]);
                        shorter.push(k as u8);
                        shorter.extend_from_slice(&w[t + 2..]);
                        pending.push((shorter, f.mul(coeff, c)));
                    }
                } else {
                    let letter = w[t] as usize;
                    for (k, &c) in lie.pmap_row(letter).iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        let mut shorter = Vec::with_capacity(w.len() - p + 1);
                        shorter.extend_from_slice(&w[..t]);
                        shorter.push(k as u8);
                        shorter.extend_from_slice(&w[t + p..]);
                        pending.push((shorter, f.mul(coeff, c)));
                    }
                }
            }
        }
    }
    normal.retain(|_, &mut c| c != 0);
    Ok(normal)
}

/// Restricted universal enveloping algebra u(g) on the PBW basis of
/// monomials e_1^{a_1} ... e_d^{a_d} with 0 <= a_i < p.
///
/// Multiplication comes from the straightening rewriting system; the
/// comultiplication makes every generator primitive and is computed by
/// multiplying the Delta(e_i) factors inside H (x) H once the product is
/// known. The final axiom validation is the well-definedness certificate
/// for the rewriting.
pub fn restricted_enveloping(lie: &RestrictedLie) -> Result<HopfAlgebra> {
    let field = lie.field;
    let p = field.modulus() as usize;
    let d = lie.dim;
    let cap = crate::dim_cap();
    let requested = (p as u128).pow(d as u32);
    if requested > cap as u128 {
        return Err(Error::DimCap {
            dim: requested.min(usize::MAX as u128) as usize,
            cap,
        });
    }
    let dim = requested as usize;

    // exponent vector <-> basis index, little-endian in powers of p
    let index_of =
        |exps: &[usize]| -> usize { exps.iter().rev().fold(0usize, |acc, &a| acc * p + a) };
    let exps_of = |mut idx: usize| -> Vec<usize> {
        (0..d)
            .map(|_| {
                let a = idx % p;
                idx /= p;
                a
            })
            .collect()
    };
    let word_of = |exps: &[usize]| -> Vec<u8> {
        let mut w = Vec::new();
        for (i, &a) in exps.iter().enumerate() {
            w.extend(std::iter::repeat_n(i as u8, a));
        }
        w
    };

    let mut steps = 0u64;
    let mut mult = Tensor3::zero(field, dim, dim, dim);
    for alpha in 0..dim {
        let wa = word_of(&exps_of(alpha));
        for beta in 0..dim {
            let mut word = wa.clone();
            word.extend_from_slice(&word_of(&exps_of(beta)));
            for (w, c) in straighten(lie, word, &mut steps)? {
                let mut exps = vec![0usize; d];
                for &l in &w {
                    exps[l as usize] += 1;
                }
                debug_assert!(exps.iter().all(|&a| a < p));
                mult.add_at(alpha, beta, index_of(&exps), c);
            }
        }
    }

    let mut unit = vec![0u64; dim];
    unit[0] = 1;
    let mut counit = vec![0u64; dim];
    counit[0] = 1;

    // Delta(e^alpha) = prod_i (e_i (x) 1 + 1 (x) e_i)^{a_i} in H (x) H
    let square_product = |mult: &Tensor3, z: &[u64], w: &[u64]| -> Vec<u64> {
        let q = field.modulus();
        let mut out = vec![0u64; dim * dim];
        for (zi, &a) in z.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let (za, zb) = (zi / dim, zi % dim);
            for (wi, &b) in w.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let (wa, wb) = (wi / dim, wi % dim);
                let c = a * b % q;
                for (s, &ls) in mult.fiber(za, wa).iter().enumerate() {
                    if ls == 0 {
                        continue;
                    }
                    let cc = c * ls % q;
                    let dst = &mut out[s * dim..(s + 1) * dim];
                    for (o, &rs) in dst.iter_mut().zip(mult.fiber(zb, wb).iter()) {
                        *o = (*o + cc * rs) % q;
                    }
                }
            }
        }
        out
    };
    let mut comult = Tensor3::zero(field, dim, dim, dim);
    for alpha in 0..dim {
        let exps = exps_of(alpha);
        let mut acc = vec![0u64; dim * dim];
        acc[0] = 1; // 1 (x) 1
        for (i, &a) in exps.iter().enumerate() {
            let gen = index_of(&(0..d).map(|t| usize::from(t == i)).collect::<Vec<_>>());
            let mut primitive = vec![0u64; dim * dim];
            primitive[gen * dim] = 1; // e_i (x) 1
            primitive[gen] = 1; // 1 (x) e_i
            for _ in 0..a {
                acc = square_product(&mult, &acc, &primitive);
            }
        }
        for (t, &c) in acc.iter().enumerate() {
            if c != 0 {
                comult.set(alpha, t / dim, t % dim, c);
            }
        }
    }

    // S(e_{i1} ... e_{ik}) = (-1)^k e_{ik} ... e_{i1}, then straighten
    let mut antipode = FieldMatrix::zero(field, dim, dim);
    for alpha in 0..dim {
        let mut w = word_of(&exps_of(alpha));
        let sign = field.pow(field.neg(1), w.len() as u64);
        w.reverse();
        for (nw, c) in straighten(lie, w, &mut steps)? {
            let mut exps = vec![0usize; d];
            for &l in &nw {
                exps[l as usize] += 1;
            }
            let k = index_of(&exps);
            antipode.set(
                alpha,
                k,
                field.add(antipode.get(alpha, k), field.mul(sign, c)),
            );
        }
    }

    let labels = (0..dim)
        .map(|idx| {
            let exps = exps_of(idx);
            let parts: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{a}", i + 1)
                    }
                })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        })
        .collect();

    let h = HopfAlgebra::new(field, labels, mult, unit, comult, counit, antipode)?;
    let report = h.validate();
    if !report.is_valid() {
        return Err(Error::ConstructionInvalid(report.to_string()));
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables_validate() {
        for n in [1, 2, 3, 4, 9] {
            let g = GroupTable::cyclic(n);
            let checked = GroupTable::new(n, 0, g.table().to_vec()).unwrap();
            assert_eq!(checked, g);
        }
    }

    #[test]
    fn bad_tables_rejected() {
        // constant table: rows are not permutations
        let t = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(
            GroupTable::new(2, 0, t),
            Err(Error::InvalidGroupTable(_))
        ));
        // wrong identity
        let c2 = GroupTable::cyclic(2);
        assert!(GroupTable::new(2, 1, c2.table().to_vec()).is_err());
    }

    #[test]
    fn group_algebra_c2_valid() {
        let h = group_algebra(&GroupTable::cyclic(2), 2).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.validate().is_valid());
        assert!(h.is_cocommutative());
    }

    #[test]
    fn group_algebra_c9_dim() {
        let h = group_algebra(&GroupTable::cyclic(9), 3).unwrap();
        assert_eq!(h.dim(), 9);
        assert!(h.is_commutative());
    }

    #[test]
    fn function_algebra_pointwise() {
        // dual of kC_3: indicator functions multiply pointwise
        let h = function_algebra(&GroupTable::cyclic(3), 3).unwrap();
        assert!(h.validate().is_valid());
        assert!(h.is_commutative());
        for i in 0..3 {
            for j in 0..3 {
                let prod = h.product(&h.basis_vector(i), &h.basis_vector(j));
                let expected = if i == j {
                    h.basis_vector(i)
                } else {
                    vec![0, 0, 0]
                };
                assert_eq!(prod, expected);
            }
        }
    }

    #[test]
    fn h_delta_truncation_rules() {
        let h0 = h_delta(3, 0).unwrap();
        // x * x^2 = x^3 = 0
        let x = h0.basis_vector(1);
        let x2 = h0.basis_vector(2);
        assert_eq!(h0.product(&x, &x2), vec![0, 0, 0]);

        let h1 = h_delta(3, 1).unwrap();
        // x * x^2 = x^3 = x
        let x = h1.basis_vector(1);
        let x2 = h1.basis_vector(2);
        assert_eq!(h1.product(&x, &x2), vec![0, 1, 0]);
    }

    #[test]
    fn h_delta_p2_comult_of_square() {
        // Delta(x^2) = x^2 (x) 1 + 1 (x) x^2 over GF(2): cross terms vanish
        for delta in [0, 1] {
            let h = h_delta(2, delta).unwrap();
            let dx2 = h.comult_of(&h.basis_vector(1));
            // basis 1, x; Delta(x) = x(x)1 + 1(x)x
            assert_eq!(dx2, vec![0, 1, 1, 0]);
        }
    }

    #[test]
    fn enveloping_rank_one_matches_h_delta() {
        let f = PrimeField::new(3).unwrap();
        let zero = RestrictedLie::abelian(f, 1, FieldMatrix::zero(f, 1, 1)).unwrap();
        let u0 = restricted_enveloping(&zero).unwrap();
        assert_eq!(u0, h_delta(3, 0).unwrap());

        let ident = RestrictedLie::abelian(f, 1, FieldMatrix::identity(f, 1)).unwrap();
        let u1 = restricted_enveloping(&ident).unwrap();
        assert_eq!(u1, h_delta(3, 1).unwrap());
    }

    #[test]
    fn enveloping_heisenberg_p2() {
        let lie = RestrictedLie::heisenberg(2).unwrap();
        let h = restricted_enveloping(&lie).unwrap();
        assert_eq!(h.dim(), 8);
        assert!(!h.is_commutative());
        assert!(h.is_cocommutative());
        // xy - yx = z
        let x = h.basis_vector(1);
        let y = h.basis_vector(2);
        let z = h.basis_vector(4);
        let f = h.field();
        let xy = h.product(&x, &y);
        let yx = h.product(&y, &x);
        let comm: Vec<u64> = xy
            .iter()
            .zip(yx.iter())
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        assert_eq!(comm, z);
    }

    #[test]
    fn enveloping_rejects_bad_lie_data() {
        let f = PrimeField::new(2).unwrap();
        // bracket [x, y] = x is not antisymmetric if we also set [y, x] = x
        let mut bracket = Tensor3::zero(f, 2, 2, 2);
        bracket.set(0, 1, 0, 1);
        bracket.set(1, 0, 0, 1);
        assert!(matches!(
            RestrictedLie::new(f, bracket, FieldMatrix::zero(f, 2, 2)),
            Err(Error::InvalidLieData(_))
        ));
    }

    #[test]
    fn enveloping_primitive_space_dimension() {
        // kernel of h -> Delta(h) - h(x)1 - 1(x)h has dimension d
        let lie = RestrictedLie::heisenberg(2).unwrap();
        let h = restricted_enveloping(&lie).unwrap();
        let d = h.dim();
        let f = h.field();
        let mut rows = Vec::new();
        for k in 0..d {
            let mut row = h.comult_of(&h.basis_vector(k));
            row[k * d] = f.sub(row[k * d], 1);
            row[k] = f.sub(row[k], 1);
            rows.push(row);
        }
        // primitives = kernel of the matrix with row k the defect of e_k
        let m = crate::matrix::FieldMatrix::from_rows(f, d * d, &rows).transpose();
        let prim = crate::subspace::Subspace::kernel(&m);
        assert_eq!(prim.dim(), 3);
        for g in [1usize, 2, 4] {
            assert!(prim.contains(&h.basis_vector(g)));
        }
    }
}
