//! Jacobson radical, the descending radical-adic chain, the ascending
//! coradical chain, and the duality dim H_i = dim H - dim J(H*)^{i+1}
//! connecting them.
//!
//! ```bash
//! cargo run -p hopfind --example radical_filtrations
//! ```

use hopfind::construct::{
    group_algebra, h_delta, restricted_enveloping, GroupTable, RestrictedLie,
};
use hopfind::filtration::{coradical_filtration, jacobson_radical, jadic_filtration};
use hopfind::hopf::HopfAlgebra;

fn show(name: &str, h: &HopfAlgebra) {
    let j = jacobson_radical(h).unwrap();
    let jadic = jadic_filtration(h).unwrap();
    let coradical = coradical_filtration(h).unwrap();
    println!("{name} (dim {}, GF({}))", h.dim(), h.field().modulus());
    println!("  dim J = {}", j.dim());
    println!("  J-adic dims      {:?}", jadic.dims());
    println!("  coradical dims   {:?}", coradical.dims());
    // H_i is the annihilator of J(H*)^{i+1}
    let dual_jadic = jadic_filtration(&h.dual()).unwrap();
    for (i, sub) in coradical.chain.iter().enumerate() {
        let jdim = dual_jadic.chain.get(i + 1).map_or(0, |s| s.dim());
        assert_eq!(sub.dim(), h.dim() - jdim);
    }
    println!("  checks dim H_i = dim H - dim J(H*)^(i+1)");
}

fn main() {
    show("kC4", &group_algebra(&GroupTable::cyclic(4), 2).unwrap());
    show("H(0) at p=3", &h_delta(3, 0).unwrap());
    show(
        "u(heisenberg) at p=2",
        &restricted_enveloping(&RestrictedLie::heisenberg(2).unwrap()).unwrap(),
    );
}
