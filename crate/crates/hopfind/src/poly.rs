//! Univariate polynomials over GF(q), minimal polynomials of matrices
//! (Krylov iteration) and of sequences (Berlekamp-Massey), and the period
//! of a recurrence.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::matrix::{DependenceTracker, FieldMatrix, Insertion};

/// Coefficients stored low-to-high with no trailing zeros; the zero
/// polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(field: PrimeField, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: vec![],
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Poly::new(field, vec![1])
    }

    /// x^p - 1 over the given field, the comparison target for pertinent
    /// indicator sequences.
    pub fn x_pow_minus_one(field: PrimeField, p: usize) -> Self {
        let mut c = vec![0u64; p + 1];
        c[0] = field.neg(1);
        c[p] = 1;
        Poly::new(field, c)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u64 {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = self.field.inv(lead);
                Poly::new(
                    self.field,
                    self.coeffs
                        .iter()
                        .map(|&c| self.field.mul(c, inv))
                        .collect(),
                )
            }
        }
    }

    pub fn eval(&self, x: u64) -> u64 {
        let f = self.field;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(f, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::new(f, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, coeffs)
    }

    /// Quotient and remainder; panics if `divisor` is zero.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let f = self.field;
        let dd = divisor.degree().unwrap();
        let lead_inv = f.inv(*divisor.coeffs.last().unwrap());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let c = f.mul(*rem.last().unwrap(), lead_inv);
            let shift = rem.len() - 1 - dd;
            if c != 0 {
                quot[shift] = c;
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] = f.sub(rem[shift + i], f.mul(c, dc));
                }
            }
            rem.pop();
        }
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    /// Evaluates the polynomial at a square matrix.
    pub fn eval_matrix(&self, m: &FieldMatrix) -> FieldMatrix {
        let n = m.rows();
        let mut acc = FieldMatrix::zero(m.field(), n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc.set(i, i, m.field().add(acc.get(i, i), c));
            }
        }
        acc
    }

    /// Checks the recurrence `sum_i f_i a_{n+i} = 0` on every full-length
    /// sub-window of the supplied values.
    pub fn annihilates(&self, window: &[u64]) -> bool {
        let Some(m) = self.degree() else {
            return window.iter().all(|&v| v == 0);
        };
        let f = self.field;
        if window.len() < m + 1 {
            return true; // vacuous
        }
        for n in 0..=window.len() - m - 1 {
            let mut acc = 0u64;
            for (i, &c) in self.coeffs.iter().enumerate() {
                acc = f.add(acc, f.mul(c, f.reduce(window[n + i])));
            }
            if acc != 0 {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            match i {
                0 => write!(out, "{c}")?,
                1 if c == 1 => write!(out, "x")?,
                1 => write!(out, "{c}x")?,
                _ if c == 1 => write!(out, "x^{i}")?,
                _ => write!(out, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic minimal polynomial of a square matrix by Krylov iteration on the
/// powers I, M, M^2, ... inside the full matrix space.
pub fn min_poly_matrix(m: &FieldMatrix) -> Poly {
    assert_eq!(
        m.rows(),
        m.cols(),
        "minimal polynomial needs a square matrix"
    );
    let f = m.field();
    let n = m.rows();
    if n == 0 {
        return Poly::one(f);
    }
    let mut tracker = DependenceTracker::new(f, n * n);
    let mut power = FieldMatrix::identity(f, n);
    loop {
        let flat: Vec<u64> = (0..n).flat_map(|i| power.row(i).to_vec()).collect();
        match tracker.insert(&flat) {
            Insertion::Independent => power = power.mul(m),
            Insertion::Dependent(combo) => {
                // M^k = sum(combo[i] M^i)  =>  x^k - sum(combo[i] x^i)
                let k = combo.len();
                let mut coeffs = vec![0u64; k + 1];
                for (i, &c) in combo.iter().enumerate() {
                    coeffs[i] = f.neg(c);
                }
                coeffs[k] = 1;
                return Poly::new(f, coeffs);
            }
        }
    }
}

/// Minimal polynomial of a sequence window by Berlekamp-Massey.
///
/// The result `f` is monic of degree `L` and satisfies
/// `f_0 a_n + ... + f_L a_{n+L} = 0` on the whole window. The window must
/// hold at least `2 * degree_bound` terms for the answer to be certified.
pub fn berlekamp_massey(field: PrimeField, window: &[u64], degree_bound: usize) -> Result<Poly> {
    if window.len() < 2 * degree_bound {
        return Err(Error::InsufficientTerms {
            window: window.len(),
            bound: degree_bound,
        });
    }
    let s: Vec<u64> = window.iter().map(|&x| field.reduce(x)).collect();
    let (connection, l) = bm_connection(field, &s);
    if l > degree_bound {
        return Err(Error::InsufficientTerms {
            window: window.len(),
            bound: degree_bound,
        });
    }
    // Reverse the connection polynomial into the recurrence form: f_j = C_{L-j}.
    let mut coeffs = vec![0u64; l + 1];
    for (j, c) in coeffs.iter_mut().enumerate() {
        *c = connection.get(l - j).copied().unwrap_or(0);
    }
    let poly = Poly::new(field, coeffs);
    debug_assert!(poly.is_monic());
    debug_assert!(poly.annihilates(&s));
    Ok(poly)
}

/// Classic Berlekamp-Massey: returns the connection polynomial C with
/// C(0) = 1 and the linear complexity L, where
/// `s_n = -sum_{i=1..L} C_i s_{n-i}` for n >= L.
fn bm_connection(f: PrimeField, s: &[u64]) -> (Vec<u64>, usize) {
    let mut c = vec![1u64];
    let mut b = vec![1u64];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bb = 1u64;
    for n in 0..s.len() {
        let mut d = s[n];
        for i in 1..=l {
            if i < c.len() {
                d = f.add(d, f.mul(c[i], s[n - i]));
            }
        }
        if d == 0 {
            m += 1;
        } else if 2 * l <= n {
            let t = c.clone();
            let coef = f.mul(d, f.inv(bb));
            if c.len() < b.len() + m {
                c.resize(b.len() + m, 0);
            }
            for (i, &bi) in b.iter().enumerate() {
                c[i + m] = f.sub(c[i + m], f.mul(coef, bi));
            }
            l = n + 1 - l;
            b = t;
            bb = d;
            m = 1;
        } else {
            let coef = f.mul(d, f.inv(bb));
            if c.len() < b.len() + m {
                c.resize(b.len() + m, 0);
            }
            for (i, &bi) in b.iter().enumerate() {
                c[i + m] = f.sub(c[i + m], f.mul(coef, bi));
            }
            m += 1;
        }
    }
    c.truncate(l + 1);
    (c, l)
}

pub const DEFAULT_PERIOD_CAP: u64 = 1_000_000;

/// Least T >= 1 with x^T = 1 mod f, by repeated multiplication by x.
/// This is the common period of all sequences with minimal polynomial f.
pub fn sequence_period(f: &Poly, cap: u64) -> Result<u64> {
    if f.constant_term() == 0 && !f.is_zero() && f.degree() != Some(0) {
        return Err(Error::ZeroConstantTerm);
    }
    let field = f.field();
    let Some(deg) = f.degree() else {
        return Err(Error::ZeroConstantTerm);
    };
    if deg == 0 {
        return Ok(1); // only the zero sequence; every T works
    }
    // g holds x^t mod f, low-to-high, length deg
    let mut g = vec![0u64; deg];
    let mut one = vec![0u64; deg];
    one[0] = 1;
    if deg == 1 {
        g[0] = field.neg(f.coeff(0)); // x = -f_0 mod (x + f_0)
    } else {
        g[1] = 1;
    }
    for t in 1..=cap {
        if g == one {
            return Ok(t);
        }
        // multiply by x mod f
        let carry = g[deg - 1];
        for i in (1..deg).rev() {
            g[i] = g[i - 1];
        }
        g[0] = 0;
        if carry != 0 {
            for (gi, fi) in g.iter_mut().zip(f.coeffs().iter()) {
                *gi = field.sub(*gi, field.mul(carry, *fi));
            }
        }
    }
    Err(Error::PeriodCap(cap))
}
