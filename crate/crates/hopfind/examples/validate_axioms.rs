//! Build a few Hopf algebras and run the exhaustive axiom validator,
//! including one deliberately broken input.
//!
//! ```bash
//! cargo run -p hopfind --example validate_axioms
//! ```

use hopfind::construct::{group_algebra, h_delta, GroupTable};
use hopfind::hopf::HopfAlgebra;
use hopfind::matrix::FieldMatrix;

fn main() {
    let c4 = group_algebra(&GroupTable::cyclic(4), 2).unwrap();
    println!("kC4 over GF(2): dim {}, {}", c4.dim(), c4.validate());

    let h = h_delta(3, 1).unwrap();
    println!(
        "H(1) = GF(3)[x]/(x^3 - x): dim {}, {}",
        h.dim(),
        h.validate()
    );
    println!(
        "  commutative: {}, cocommutative: {}",
        h.is_commutative(),
        h.is_cocommutative()
    );

    // replace the antipode of kC3 by the identity map; the antipode axiom
    // must fail at the basis element g since S(g) g = g^2 != 1
    let c3 = group_algebra(&GroupTable::cyclic(3), 3).unwrap();
    let broken = HopfAlgebra::new(
        c3.field(),
        c3.labels().to_vec(),
        c3.mult().clone(),
        c3.unit().to_vec(),
        c3.comult().clone(),
        c3.counit().to_vec(),
        FieldMatrix::identity(c3.field(), 3),
    )
    .unwrap();
    let report = broken.validate();
    println!("kC3 with S := id: {report}");
    assert!(!report.is_valid());
}
