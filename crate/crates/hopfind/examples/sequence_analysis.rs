//! Sequence-level tools on their own: Berlekamp-Massey minimal
//! polynomials, recurrence periods, and the binomial profile
//! B_n = sum_j binom(n, j) b_j that reproduces the pertinent pattern.
//!
//! ```bash
//! cargo run -p hopfind --example sequence_analysis
//! ```

use hopfind::field::PrimeField;
use hopfind::indicator::binomial_profile;
use hopfind::poly::{berlekamp_massey, sequence_period, DEFAULT_PERIOD_CAP};

fn main() {
    // the pertinent pattern for p = 3, read over two different fields:
    // the minimal polynomial depends on whether char k divides p - 1
    let window = [1u64, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0];
    let f3 = PrimeField::new(3).unwrap();
    let over_gf3 = berlekamp_massey(f3, &window, 3).unwrap();
    println!("pattern 1,1,0,... over GF(3): minimal polynomial {over_gf3}");
    let f2 = PrimeField::new(2).unwrap();
    let over_gf2 = berlekamp_massey(f2, &window, 3).unwrap();
    println!("pattern 1,1,0,... over GF(2): minimal polynomial {over_gf2}");
    println!(
        "periods: {} and {}",
        sequence_period(&over_gf3, DEFAULT_PERIOD_CAP).unwrap(),
        sequence_period(&over_gf2, DEFAULT_PERIOD_CAP).unwrap()
    );

    for p in [2u64, 3, 5, 7] {
        let profile = binomial_profile(p, 4 * p as usize).unwrap();
        println!("binomial profile mod {p}: {:?}", profile.values());
    }
}
