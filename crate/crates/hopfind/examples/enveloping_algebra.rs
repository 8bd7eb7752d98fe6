//! Restricted enveloping algebras from bracket data: the Heisenberg
//! algebra at p = 2 and a non-nilpotent two-dimensional algebra, built by
//! PBW straightening and certified by the axiom validator.
//!
//! ```bash
//! cargo run -p hopfind --example enveloping_algebra
//! ```

use hopfind::construct::{restricted_enveloping, RestrictedLie};
use hopfind::field::PrimeField;
use hopfind::filtration::{coradical, is_local};
use hopfind::indicator::{check_p_pertinent, indicator_sequence};
use hopfind::matrix::FieldMatrix;
use hopfind::tensor::Tensor3;

fn main() {
    // [x, y] = z, z central, trivial p-operation
    let heis = RestrictedLie::heisenberg(2).unwrap();
    let u = restricted_enveloping(&heis).unwrap();
    println!(
        "u(heisenberg) at p=2: dim {}, labels {:?}",
        u.dim(),
        u.labels()
    );
    println!(
        "  commutative: {}, connected: {}",
        u.is_commutative(),
        coradical(&u).unwrap().dim() == 1
    );
    let seq = indicator_sequence(&u, -8, 8);
    println!("  nu on [-8,8]: {:?}", seq.values());
    println!("  2-pertinent: {}", check_p_pertinent(&seq, 2).unwrap());

    // [x, y] = y with x^[2] = x: not p-nilpotent, and u is not local,
    // yet the indicator sequence is still pertinent
    let f = PrimeField::new(2).unwrap();
    let mut bracket = Tensor3::zero(f, 2, 2, 2);
    bracket.set(0, 1, 1, 1);
    bracket.set(1, 0, 1, 1);
    let mut pmap = FieldMatrix::zero(f, 2, 2);
    pmap.set(0, 0, 1);
    let affine = RestrictedLie::new(f, bracket, pmap).unwrap();
    let ua = restricted_enveloping(&affine).unwrap();
    println!(
        "u(affine) at p=2: dim {}, local: {}",
        ua.dim(),
        is_local(&ua).unwrap()
    );
    let seq = indicator_sequence(&ua, -8, 8);
    println!("  nu on [-8,8]: {:?}", seq.values());
    println!("  2-pertinent: {}", check_p_pertinent(&seq, 2).unwrap());
}
