//! For a group algebra kG the n-th indicator equals #{g in G : g^n = 1}
//! mod p. This example computes both sides independently, the left by
//! trace of antipode-composed convolution powers, the right by literal
//! counting in the Cayley table.
//!
//! ```bash
//! cargo run -p hopfind --example group_counting
//! ```

use hopfind::construct::{group_algebra, GroupTable};
use hopfind::indicator::indicator_sequence;
use hopfind::oracle::group_indicator_count;

fn main() {
    let groups = [
        ("C4", GroupTable::cyclic(4), 2u64),
        (
            "C2 x C2",
            GroupTable::direct_product(&GroupTable::cyclic(2), &GroupTable::cyclic(2)),
            2,
        ),
        ("C9", GroupTable::cyclic(9), 3),
    ];
    for (name, table, p) in groups {
        let h = group_algebra(&table, p).unwrap();
        let seq = indicator_sequence(&h, -6, 6);
        println!("{name} over GF({p}):");
        println!("   n | trace | count");
        for n in -6..=6i64 {
            let trace = seq.value_at(n).unwrap();
            let count = group_indicator_count(&table, n, p);
            assert_eq!(trace, count);
            println!("  {n:>2} | {trace}     | {count}");
        }
        println!();
    }
    println!("both computations agree on every window entry");
}
