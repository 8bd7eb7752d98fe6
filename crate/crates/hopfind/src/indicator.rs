//! Sweedler power maps, the indicator sequence of a Hopf algebra, and
//! sequence-level analysis: minimal polynomial, period, pertinence.
//!
//! The n-th indicator is the trace of S composed with the (n-1)-st
//! convolution power of the identity; over GF(p) the two-sided sequence
//! is periodic and, for the algebras singled out here, follows the
//! pertinent pattern 1, ..., 1, 0 with p - 1 ones.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::hopf::{Endomorphism, HopfAlgebra};
use crate::poly::{self, Poly};

/// A window of a linearly recursive sequence over GF(q), indexed by a
/// (possibly negative) starting offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrSequence {
    field: PrimeField,
    offset: i64,
    values: Vec<u64>,
    min_poly: Option<Poly>,
    period: Option<u64>,
}

impl LrSequence {
    pub fn new(field: PrimeField, offset: i64, values: Vec<u64>) -> Self {
        let values = values.into_iter().map(|v| field.reduce(v)).collect();
        LrSequence {
            field,
            offset,
            values,
            min_poly: None,
            period: None,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn last_index(&self) -> i64 {
        self.offset + self.values.len() as i64 - 1
    }

    pub fn value_at(&self, n: i64) -> Option<u64> {
        if n < self.offset || n > self.last_index() {
            return None;
        }
        Some(self.values[(n - self.offset) as usize])
    }

    pub fn min_poly(&self) -> Option<&Poly> {
        self.min_poly.as_ref()
    }

    pub fn period(&self) -> Option<u64> {
        self.period
    }

    /// Attaches a minimal polynomial after checking it annihilates the
    /// whole window.
    pub fn with_min_poly(mut self, p: Poly) -> Result<Self> {
        if !p.annihilates(&self.values) {
            return Err(Error::Internal(
                "claimed minimal polynomial does not annihilate the window".into(),
            ));
        }
        self.min_poly = Some(p);
        Ok(self)
    }

    /// Attaches a period after checking it on the window.
    pub fn with_period(mut self, t: u64) -> Result<Self> {
        let t_us = t as usize;
        for i in 0..self.values.len().saturating_sub(t_us) {
            if self.values[i] != self.values[i + t_us] {
                return Err(Error::Internal(
                    "claimed period does not hold on the window".into(),
                ));
            }
        }
        self.period = Some(t);
        Ok(self)
    }
}

/// The m-th Sweedler power map: the m-th convolution power of the
/// identity. P^(1) = id, P^(0) = u eps, P^(-1) = S.
pub fn sweedler_power(h: &HopfAlgebra, m: i64) -> Endomorphism {
    match m {
        0 => h.unit_counit_endo(),
        1 => h.identity_endo(),
        -1 => h.antipode_endo(),
        _ => {
            let (base, e) = if m < 0 {
                (h.antipode_endo(), m.unsigned_abs())
            } else {
                (h.identity_endo(), m.unsigned_abs())
            };
            // square-and-multiply in the convolution monoid
            let mut acc = h.unit_counit_endo();
            let mut pw = base;
            let mut e = e;
            while e > 0 {
                if e & 1 == 1 {
                    acc = h.convolve(&acc, &pw);
                }
                e >>= 1;
                if e > 0 {
                    pw = h.convolve(&pw, &pw);
                }
            }
            acc
        }
    }
}

/// nu_n(H) = Tr(S compose P^(n-1)).
pub fn indicator(h: &HopfAlgebra, n: i64) -> u64 {
    let p = sweedler_power(h, n - 1);
    p.then(&h.antipode_endo()).trace()
}

/// Indicator values on a contiguous window, computed by one incremental
/// convolution per step in each direction from P^(0).
pub fn indicator_sequence(h: &HopfAlgebra, n_lo: i64, n_hi: i64) -> LrSequence {
    assert!(n_lo <= n_hi, "window must be nonempty");
    let s = h.antipode_endo();
    let id = h.identity_endo();
    let trace_of = |p: &Endomorphism| p.then(&s).trace();

    let mut values = vec![0u64; (n_hi - n_lo + 1) as usize];
    let store = |values: &mut Vec<u64>, n: i64, v: u64| {
        if n >= n_lo && n <= n_hi {
            values[(n - n_lo) as usize] = v;
        }
    };

    // exponent of the Sweedler power is n - 1
    let mut up = h.unit_counit_endo();
    let mut n = 1i64;
    store(&mut values, n, trace_of(&up));
    while n < n_hi {
        up = h.convolve(&up, &id);
        n += 1;
        store(&mut values, n, trace_of(&up));
    }
    let mut down = h.unit_counit_endo();
    let mut n = 1i64;
    while n > n_lo {
        down = h.convolve(&down, &s);
        n -= 1;
        store(&mut values, n, trace_of(&down));
    }
    LrSequence::new(h.field(), n_lo, values)
}

/// Minimal polynomial of the indicator sequence: first the minimal
/// polynomial Phi of the identity in the convolution algebra (Krylov on
/// Sweedler powers), then Berlekamp-Massey on 2 deg(Phi) indicator
/// values. The result divides Phi and has nonzero constant term.
pub fn indicator_min_poly(h: &HopfAlgebra) -> Result<Poly> {
    let phi = h.convolution_min_poly(&h.identity_endo());
    let m = phi.degree().unwrap_or(0).max(1);
    let window = indicator_sequence(h, 1, 2 * m as i64);
    let f = poly::berlekamp_massey(h.field(), window.values(), m)?;
    if !f.divides(&phi) {
        return Err(Error::Internal(format!(
            "sequence polynomial {f} does not divide the convolution polynomial {phi}"
        )));
    }
    if f.constant_term() == 0 {
        return Err(Error::Internal(
            "indicator minimal polynomial has zero constant term".into(),
        ));
    }
    Ok(f)
}

/// True iff the window reads 1 at indices prime to p and 0 at multiples
/// of p, indices taken in Z. Needs at least 2p consecutive values.
pub fn check_p_pertinent(seq: &LrSequence, p: u64) -> Result<bool> {
    let need = 2 * p as usize;
    if seq.len() < need {
        return Err(Error::WindowTooShort {
            need,
            have: seq.len(),
        });
    }
    for (i, &v) in seq.values().iter().enumerate() {
        let n = seq.offset() + i as i64;
        let expected = u64::from(n.rem_euclid(p as i64) != 0);
        if v != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Trace of the n-th matrix power of the antipode.
pub fn trace_antipode_power(h: &HopfAlgebra, n: u64) -> u64 {
    h.antipode().pow(n).trace()
}

/// The profile B_n = sum_j binom(n, j) b_j mod p with b_0 = 0,
/// b_j = (-1)^{j+1} for 1 <= j <= p-1 and b_j = 0 for j >= p, evaluated
/// for n = 1..n_hi. Binomials come from the Pascal recursion mod p.
pub fn binomial_profile(p: u64, n_hi: usize) -> Result<LrSequence> {
    let field = PrimeField::new(p)?;
    assert!(
        n_hi >= 2 * p as usize,
        "profile window must cover at least 2p terms"
    );
    let b = |j: usize| -> u64 {
        if j == 0 || j as u64 >= p {
            0
        } else if j % 2 == 1 {
            1
        } else {
            field.neg(1)
        }
    };
    let mut values = Vec::with_capacity(n_hi);
    let mut row = vec![1u64]; // binomials of the current n
    for n in 1..=n_hi {
        let mut next = vec![1u64; n + 1];
        for j in 1..n {
            next[j] = field.add(row[j - 1], row[j]);
        }
        row = next;
        let mut acc = 0u64;
        for (j, &binom) in row.iter().enumerate() {
            acc = field.add(acc, field.mul(binom, b(j)));
        }
        values.push(acc);
    }
    Ok(LrSequence::new(field, 1, values))
}

/// Full analysis of one algebra's indicators, serializable for the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct IndicatorReport {
    pub algebra: String,
    pub p: u64,
    pub window: [i64; 2],
    pub values: Vec<u64>,
    pub min_poly: Vec<u64>,
    pub period: u64,
    pub p_pertinent: bool,
}

pub fn indicator_report(
    h: &HopfAlgebra,
    name: &str,
    n_lo: i64,
    n_hi: i64,
) -> Result<IndicatorReport> {
    let p = h.field().modulus();
    let min_poly = indicator_min_poly(h)?;
    let period = poly::sequence_period(&min_poly, poly::DEFAULT_PERIOD_CAP)?;
    // attaching through the checked constructors re-verifies both
    // claims on the requested window
    let seq = indicator_sequence(h, n_lo, n_hi)
        .with_min_poly(min_poly.clone())?
        .with_period(period)?;
    let pertinent = if seq.len() >= 2 * p as usize {
        check_p_pertinent(&seq, p)?
    } else {
        // widen just for the verdict
        let wide = indicator_sequence(h, 1, 2 * p as i64);
        check_p_pertinent(&wide, p)?
    };
    Ok(IndicatorReport {
        algebra: name.to_string(),
        p,
        window: [n_lo, n_hi],
        values: seq.values().to_vec(),
        min_poly: min_poly.coeffs().to_vec(),
        period,
        p_pertinent: pertinent,
    })
}

/// Default window bound [-2p^2, 2p^2]: comfortably past twice any period
/// arising at desk scale.
pub fn default_window(p: u64) -> (i64, i64) {
    let b = 2 * (p * p) as i64;
    (-b, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{group_algebra, h_delta, GroupTable};

    #[test]
    fn sweedler_special_cases() {
        let h = group_algebra(&GroupTable::cyclic(3), 3).unwrap();
        assert_eq!(sweedler_power(&h, 0), h.unit_counit_endo());
        assert_eq!(sweedler_power(&h, 1), h.identity_endo());
        assert_eq!(sweedler_power(&h, -1), h.antipode_endo());
        // grouplike square: g -> g^2
        let p2 = sweedler_power(&h, 2);
        assert_eq!(p2.apply(&h.basis_vector(1)), h.basis_vector(2));
        // P^(-2) = S * S
        let sm2 = sweedler_power(&h, -2);
        let ss = h.convolve(&h.antipode_endo(), &h.antipode_endo());
        assert_eq!(sm2, ss);
    }

    #[test]
    fn indicators_of_kc2() {
        let h = group_algebra(&GroupTable::cyclic(2), 2).unwrap();
        let got: Vec<u64> = (1..=4).map(|n| indicator(&h, n)).collect();
        assert_eq!(got, vec![1, 0, 1, 0]);
        // negative window reads the same periodic sequence
        let seq = indicator_sequence(&h, -4, -1);
        assert_eq!(seq.values(), &[0, 1, 0, 1]);
    }

    #[test]
    fn indicator_one_is_always_one() {
        for h in [
            group_algebra(&GroupTable::cyclic(4), 2).unwrap(),
            h_delta(3, 1).unwrap(),
            h_delta(5, 0).unwrap(),
        ] {
            assert_eq!(indicator(&h, 1), 1);
            let seq = indicator_sequence(&h, 1, 1);
            assert_eq!(seq.values(), &[1]);
        }
    }

    #[test]
    fn h3_delta0_window() {
        let h = h_delta(3, 0).unwrap();
        let seq = indicator_sequence(&h, 1, 6);
        assert_eq!(seq.values(), &[1, 1, 0, 1, 1, 0]);
    }

    #[test]
    fn min_poly_examples() {
        let f3 = PrimeField::new(3).unwrap();
        let h = group_algebra(&GroupTable::cyclic(3), 3).unwrap();
        assert_eq!(
            indicator_min_poly(&h).unwrap(),
            Poly::x_pow_minus_one(f3, 3)
        );

        let f2 = PrimeField::new(2).unwrap();
        let h = h_delta(2, 1).unwrap();
        assert_eq!(
            indicator_min_poly(&h).unwrap(),
            Poly::x_pow_minus_one(f2, 2)
        );

        let c3 = group_algebra(&GroupTable::cyclic(3), 3).unwrap();
        let t = c3.tensor(&c3).unwrap();
        assert_eq!(
            indicator_min_poly(&t).unwrap(),
            Poly::x_pow_minus_one(f3, 3)
        );
    }

    #[test]
    fn pertinence_checks() {
        let f3 = PrimeField::new(3).unwrap();
        let ones = LrSequence::new(f3, 1, vec![1; 10]);
        assert!(!check_p_pertinent(&ones, 3).unwrap());
        let f2 = PrimeField::new(2).unwrap();
        let bad = LrSequence::new(f2, 1, vec![1, 1, 0, 1, 1, 0]);
        assert!(!check_p_pertinent(&bad, 2).unwrap());
        let short = LrSequence::new(f2, 1, vec![1, 0, 1]);
        assert!(matches!(
            check_p_pertinent(&short, 2),
            Err(Error::WindowTooShort { .. })
        ));
    }

    #[test]
    fn binomial_profiles() {
        let b3 = binomial_profile(3, 6).unwrap();
        assert_eq!(b3.values(), &[1, 1, 0, 1, 1, 0]);
        let b2 = binomial_profile(2, 4).unwrap();
        assert_eq!(b2.values(), &[1, 0, 1, 0]);
        for p in [2u64, 3, 5, 7] {
            let seq = binomial_profile(p, 4 * p as usize).unwrap();
            assert_eq!(seq.value_at(p as i64), Some(0));
            assert!(check_p_pertinent(&seq, p).unwrap());
        }
    }

    #[test]
    fn trivial_algebra_has_constant_indicators() {
        // dim 1: every Sweedler power is the identity, so nu_n = 1 for
        // all n and the sequence is constant, not pertinent
        let h = group_algebra(&GroupTable::cyclic(1), 3).unwrap();
        let seq = indicator_sequence(&h, -6, 6);
        assert!(seq.values().iter().all(|&v| v == 1));
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(indicator_min_poly(&h).unwrap(), Poly::new(f3, vec![2, 1])); // x - 1
        assert!(!check_p_pertinent(&seq, 3).unwrap());
    }

    #[test]
    fn sequence_attachments_are_checked() {
        let f = PrimeField::new(2).unwrap();
        let seq = LrSequence::new(f, 1, vec![1, 0, 1, 0, 1, 0]);
        let right = Poly::new(f, vec![1, 0, 1]); // x^2 + 1
        let wrong = Poly::new(f, vec![1, 1]); // x + 1
        assert!(seq.clone().with_min_poly(right).is_ok());
        assert!(seq.clone().with_min_poly(wrong).is_err());
        assert!(seq.clone().with_period(2).is_ok());
        assert!(seq.with_period(3).is_err());
    }

    #[test]
    fn antipode_power_traces() {
        // function algebra on C_3 at p = 3: parity pattern
        let h = group_algebra(&GroupTable::cyclic(3), 3).unwrap().dual();
        for n in 0..=12u64 {
            let expected = if n % 2 == 0 { 0 } else { 1 };
            assert_eq!(trace_antipode_power(&h, n), expected);
        }
        // Klein four group at p = 2: identically zero
        let v4 = GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2));
        let h = group_algebra(&v4, 2).unwrap();
        for n in 0..=8u64 {
            assert_eq!(trace_antipode_power(&h, n), 0);
        }
    }
}
