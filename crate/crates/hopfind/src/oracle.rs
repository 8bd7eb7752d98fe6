//! Brute-force reference implementations used only for cross-validation.
//! Deliberately slow and simple, and deliberately sharing no code path
//! with the fast implementations they check.

use std::collections::BTreeMap;

use crate::construct::GroupTable;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::subspace::Subspace;

const SWEEDLER_CAP: i64 = 8;
const RADICAL_CAP: u64 = 1 << 16;
const GROUPLIKE_CAP: u64 = 1 << 20;

/// h^{\[m\]} expanded literally: iterate Delta to |m| tensor legs, apply S
/// to every leg when m < 0, multiply the legs left to right.
pub fn sweedler_bruteforce(h: &HopfAlgebra, x: &[u64], m: i64) -> Result<Vec<u64>> {
    if m.abs() > SWEEDLER_CAP {
        return Err(Error::SweedlerRange {
            m,
            cap: SWEEDLER_CAP,
        });
    }
    let d = h.dim();
    let f = h.field();
    if m == 0 {
        let e = h.counit_of(x);
        return Ok(h.unit().iter().map(|&u| f.mul(e, u)).collect());
    }
    let legs = m.unsigned_abs() as usize;
    // tuples of basis indices with coefficients
    let mut terms: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for (k, &c) in x.iter().enumerate() {
        if c != 0 {
            terms.insert(vec![k], c);
        }
    }
    for _ in 1..legs {
        let mut next: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for (tuple, coeff) in terms {
            let last = *tuple.last().unwrap();
            for i in 0..d {
                for (j, &c) in h.comult().fiber(last, i).iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let mut t = tuple.clone();
                    *t.last_mut().unwrap() = i;
                    t.push(j);
                    let e = next.entry(t).or_insert(0);
                    *e = f.add(*e, f.mul(coeff, c));
                }
            }
        }
        next.retain(|_, &mut c| c != 0);
        terms = next;
    }
    let mut out = vec![0u64; d];
    for (tuple, coeff) in terms {
        let mut acc: Option<Vec<u64>> = None;
        for &leg in &tuple {
            let factor = if m < 0 {
                h.antipode().row(leg).to_vec()
            } else {
                h.basis_vector(leg)
            };
            acc = Some(match acc {
                None => factor,
                Some(prev) => h.product(&prev, &factor),
            });
        }
        for (o, &v) in out.iter_mut().zip(acc.unwrap().iter()) {
            *o = f.add(*o, f.mul(coeff, v));
        }
    }
    Ok(out)
}

fn enumerate_vectors(p: u64, dim: usize, cap: u64) -> Result<Vec<Vec<u64>>> {
    let mut total: u64 = 1;
    for _ in 0..dim {
        total = total
            .checked_mul(p)
            .filter(|&t| t <= cap)
            .ok_or_else(|| Error::EnumerationCap(format!("{p}^{dim} exceeds {cap}")))?;
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut v = vec![0u64; dim];
    loop {
        out.push(v.clone());
        let mut i = 0;
        loop {
            if i == dim {
                return Ok(out);
            }
            v[i] += 1;
            if v[i] < p {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

/// The radical by definition: all x whose generated two-sided ideal is
/// nilpotent, found by enumerating every element of the algebra.
pub fn radical_enumeration(h: &HopfAlgebra) -> Result<Subspace> {
    let p = h.field().modulus();
    let d = h.dim();
    let vectors = enumerate_vectors(p, d, RADICAL_CAP)?;
    let mut members: Vec<Vec<u64>> = Vec::new();
    // nilpotency answers keyed by the ideal's canonical basis bytes
    let mut nilpotent_cache: BTreeMap<Vec<u64>, bool> = BTreeMap::new();
    for x in vectors {
        if x.iter().all(|&c| c == 0) {
            members.push(x);
            continue;
        }
        // two-sided ideal generated by x, as a subspace closure
        let mut ideal = Subspace::from_rows(h.field(), d, std::slice::from_ref(&x));
        let mut queue: Vec<Vec<u64>> = vec![x.clone()];
        while let Some(v) = queue.pop() {
            for i in 0..d {
                let e = h.basis_vector(i);
                for w in [h.product(&v, &e), h.product(&e, &v)] {
                    if ideal.insert(&w) {
                        queue.push(w);
                    }
                }
            }
        }
        let key: Vec<u64> = ideal.basis_rows().flat_map(|r| r.to_vec()).collect();
        let nilpotent = *nilpotent_cache.entry(key).or_insert_with(|| {
            let mut power = ideal.clone();
            for _ in 0..d {
                if power.is_zero() {
                    break;
                }
                let rows: Vec<Vec<u64>> = power
                    .basis_rows()
                    .flat_map(|u| ideal.basis_rows().map(move |v| (u, v)))
                    .map(|(u, v)| h.product(u, v))
                    .collect();
                power = Subspace::from_rows(h.field(), d, &rows);
            }
            power.is_zero()
        });
        if nilpotent {
            members.push(x);
        }
    }
    let span = Subspace::from_rows(h.field(), d, &members);
    let expected = (p as u128).pow(span.dim() as u32);
    if members.len() as u128 != expected {
        return Err(Error::Internal(format!(
            "radical member set of size {} is not a linear subspace",
            members.len()
        )));
    }
    Ok(span)
}

/// All grouplike elements (Delta(v) = v (x) v, eps(v) = 1) by exhaustive
/// enumeration, together with the group table they induce.
pub fn grouplike_enumeration(h: &HopfAlgebra) -> Result<(Vec<Vec<u64>>, GroupTable)> {
    let p = h.field().modulus();
    let d = h.dim();
    let f = h.field();
    let vectors = enumerate_vectors(p, d, GROUPLIKE_CAP)?;
    let mut grouplikes = Vec::new();
    for v in vectors {
        if h.counit_of(&v) != 1 {
            continue;
        }
        let dv = h.comult_of(&v);
        let mut outer = vec![0u64; d * d];
        for (i, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                outer[i * d + j] = f.mul(a, b);
            }
        }
        if dv == outer {
            grouplikes.push(v);
        }
    }
    let n = grouplikes.len();
    let identity = grouplikes
        .iter()
        .position(|v| v == h.unit())
        .ok_or_else(|| Error::Internal("unit is not among the grouplikes".into()))?;
    let mut table = vec![vec![0usize; n]; n];
    for (i, a) in grouplikes.iter().enumerate() {
        for (j, b) in grouplikes.iter().enumerate() {
            let prod = h.product(a, b);
            table[i][j] = grouplikes
                .iter()
                .position(|g| *g == prod)
                .ok_or_else(|| Error::Internal("grouplikes not closed under product".into()))?;
        }
    }
    let table = GroupTable::new(n, identity, table)
        .map_err(|e| Error::Internal(format!("grouplikes do not form a group: {e}")))?;
    Ok((grouplikes, table))
}

/// nu_n of a group algebra by literal counting: #{g : g^n = 1} mod p.
pub fn group_indicator_count(table: &GroupTable, n: i64, p: u64) -> u64 {
    let mut count = 0u64;
    for g in 0..table.order() {
        if table.power(g, n) == table.identity() {
            count += 1;
        }
    }
    count % p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{function_algebra, group_algebra, h_delta, GroupTable};

    #[test]
    fn sweedler_bruteforce_base_cases() {
        let h = group_algebra(&GroupTable::cyclic(3), 3).unwrap();
        let g = h.basis_vector(1);
        assert_eq!(sweedler_bruteforce(&h, &g, 1).unwrap(), g);
        // grouplike cube: g^3 = 1
        assert_eq!(sweedler_bruteforce(&h, &g, 3).unwrap(), h.basis_vector(0));
        assert!(matches!(
            sweedler_bruteforce(&h, &g, 9),
            Err(Error::SweedlerRange { .. })
        ));
    }

    #[test]
    fn sweedler_bruteforce_primitive_square_vanishes_mod_2() {
        let h = h_delta(2, 0).unwrap();
        let x = h.basis_vector(1);
        // x^[2] = x*1 + 1*x = 2x = 0
        assert_eq!(sweedler_bruteforce(&h, &x, 2).unwrap(), vec![0, 0]);
    }

    #[test]
    fn radical_enumeration_examples() {
        // GF(2)[t]/(t^2), presented as H(0) at p = 2
        let h = h_delta(2, 0).unwrap();
        let j = radical_enumeration(&h).unwrap();
        assert_eq!(j.dim(), 1);
        assert!(j.contains(&[0, 1]));

        let semisimple = function_algebra(&GroupTable::cyclic(3), 3).unwrap();
        assert_eq!(radical_enumeration(&semisimple).unwrap().dim(), 0);

        let v4 = GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2));
        let kg = group_algebra(&v4, 2).unwrap();
        let j = radical_enumeration(&kg).unwrap();
        assert_eq!(j.dim(), 3); // augmentation ideal
    }

    #[test]
    fn grouplike_enumeration_examples() {
        let kg = group_algebra(&GroupTable::cyclic(4), 2).unwrap();
        let (gl, table) = grouplike_enumeration(&kg).unwrap();
        assert_eq!(gl.len(), 4);
        assert_eq!(table.order(), 4);

        let h = h_delta(3, 0).unwrap();
        let (gl, _) = grouplike_enumeration(&h).unwrap();
        assert_eq!(gl, vec![vec![1, 0, 0]]);

        // characters of kC_2 over GF(2): only the counit survives since
        // x^2 = 1 forces x = 1
        let fc2 = function_algebra(&GroupTable::cyclic(2), 2).unwrap();
        let (gl, table) = grouplike_enumeration(&fc2).unwrap();
        assert_eq!(gl, vec![vec![1, 1]]);
        assert_eq!(table.order(), 1);
    }

    #[test]
    fn group_counts() {
        let c4 = GroupTable::cyclic(4);
        assert_eq!(group_indicator_count(&c4, 2, 2), 0); // {1, g^2}
        assert_eq!(group_indicator_count(&c4, 1, 2), 1);
        assert_eq!(group_indicator_count(&c4, 4, 2), 0); // all four
        let v4 = GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2));
        assert_eq!(group_indicator_count(&v4, 2, 2), 0); // 4 = 0 mod 2
        assert_eq!(group_indicator_count(&v4, -1, 2), 1);
    }
}
