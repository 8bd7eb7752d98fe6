//! Structural invariances of the indicator sequence: passing to the dual
//! leaves it unchanged, tensor products multiply it pointwise, and the
//! opposite algebra and opposite coalgebra give the same sequence.
//!
//! ```bash
//! cargo run -p hopfind --example dual_tensor_invariance
//! ```

use hopfind::construct::{
    group_algebra, h_delta, restricted_enveloping, GroupTable, RestrictedLie,
};
use hopfind::indicator::indicator_sequence;

fn values(h: &hopfind::hopf::HopfAlgebra, lo: i64, hi: i64) -> Vec<u64> {
    indicator_sequence(h, lo, hi).values().to_vec()
}

fn main() {
    let kc4 = group_algebra(&GroupTable::cyclic(4), 2).unwrap();
    assert_eq!(values(&kc4, -8, 8), values(&kc4.dual(), -8, 8));
    println!("dual invariance: nu(kC4) = nu(k^C4) on [-8, 8]");

    let a = group_algebra(&GroupTable::cyclic(3), 3).unwrap();
    let b = h_delta(3, 0).unwrap();
    let t = a.tensor(&b).unwrap();
    let f = a.field();
    let (sa, sb, st) = (values(&a, -6, 6), values(&b, -6, 6), values(&t, -6, 6));
    for i in 0..st.len() {
        assert_eq!(st[i], f.mul(sa[i], sb[i]));
    }
    println!("tensor multiplicativity: nu(kC3 (x) H(0)) = nu(kC3) * nu(H(0)) pointwise");

    // a Hopf algebra that is neither commutative nor cocommutative
    let u = restricted_enveloping(&RestrictedLie::heisenberg(2).unwrap()).unwrap();
    let h = u.tensor(&u.dual()).unwrap();
    assert!(!h.is_commutative() && !h.is_cocommutative());
    let op = h.opposite().unwrap();
    let cop = h.co_opposite().unwrap();
    assert_eq!(values(&op, -8, 8), values(&cop, -8, 8));
    println!(
        "op/cop equality on u(heis) (x) u(heis)* (dim {}, noncommutative, noncocommutative)",
        h.dim()
    );
}
