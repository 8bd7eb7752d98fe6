//! Indicator sequences of several Hopf algebras over GF(p): values on a
//! window around zero, minimal polynomial, period, and whether the
//! sequence follows the pertinent 1,...,1,0 pattern.
//!
//! ```bash
//! cargo run -p hopfind --example indicator_table
//! ```

use hopfind::construct::{function_algebra, group_algebra, h_delta, GroupTable};
use hopfind::hopf::HopfAlgebra;
use hopfind::indicator::{check_p_pertinent, indicator_min_poly, indicator_sequence};
use hopfind::poly::{sequence_period, DEFAULT_PERIOD_CAP};

fn show(name: &str, h: &HopfAlgebra) {
    let p = h.field().modulus();
    let lo = -(2 * p as i64);
    let hi = 2 * p as i64;
    let seq = indicator_sequence(h, lo, hi);
    let min_poly = indicator_min_poly(h).unwrap();
    let period = sequence_period(&min_poly, DEFAULT_PERIOD_CAP).unwrap();
    let wide = indicator_sequence(h, 1, 2 * p as i64);
    let pertinent = check_p_pertinent(&wide, p).unwrap();
    println!("{name} (dim {}, GF({p}))", h.dim());
    print!("  nu_n for n = {lo}..{hi}:");
    for v in seq.values() {
        print!(" {v}");
    }
    println!();
    println!("  minimal polynomial {min_poly}, period {period}, p-pertinent: {pertinent}");
}

fn main() {
    show("kC4", &group_algebra(&GroupTable::cyclic(4), 2).unwrap());
    show(
        "k^C9",
        &function_algebra(&GroupTable::cyclic(9), 3).unwrap(),
    );
    show("H(0) at p=5", &h_delta(5, 0).unwrap());

    // a non-pertinent contrast: a group algebra over the wrong prime
    show(
        "kC3 over GF(2)",
        &group_algebra(&GroupTable::cyclic(3), 2).unwrap(),
    );
}
