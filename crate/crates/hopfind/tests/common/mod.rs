//! Shared fixture zoo for the integration suites.

use std::sync::OnceLock;

use hopfind::construct::{
    function_algebra, group_algebra, h_delta, restricted_enveloping, GroupTable, RestrictedLie,
};
use hopfind::doc::CayleyDoc;
use hopfind::field::PrimeField;
use hopfind::hopf::HopfAlgebra;
use hopfind::matrix::FieldMatrix;
use hopfind::tensor::Tensor3;

pub struct Fixture {
    pub name: &'static str,
    pub h: HopfAlgebra,
    /// Present when the algebra is the group algebra of this table.
    pub group: Option<GroupTable>,
}

pub fn fixtures_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn load_cayley(name: &str) -> GroupTable {
    let text = std::fs::read_to_string(fixtures_dir().join(name)).expect("fixture file");
    let doc: CayleyDoc = serde_json::from_str(&text).expect("cayley json");
    doc.build().expect("valid cayley table")
}

pub fn heisenberg27() -> GroupTable {
    load_cayley("heisenberg27-cayley.json")
}

pub fn q8() -> GroupTable {
    load_cayley("q8-cayley.json")
}

/// The affine restricted Lie algebra over GF(2): [x, y] = y, x^[2] = x,
/// y^[2] = 0. Its enveloping algebra is the smallest noncommutative one.
pub fn affine_lie_p2() -> RestrictedLie {
    let f = PrimeField::new(2).unwrap();
    let mut bracket = Tensor3::zero(f, 2, 2, 2);
    bracket.set(0, 1, 1, 1);
    bracket.set(1, 0, 1, 1); // -1 = 1 over GF(2)
    let mut pmap = FieldMatrix::zero(f, 2, 2);
    pmap.set(0, 0, 1);
    RestrictedLie::new(f, bracket, pmap).unwrap()
}

/// The seven group fixtures named in the counting criterion, with their
/// exponent primes.
pub fn named_groups() -> Vec<(&'static str, GroupTable, u64)> {
    let c2 = GroupTable::cyclic(2);
    let c3 = GroupTable::cyclic(3);
    vec![
        ("C2", c2.clone(), 2),
        ("C4", GroupTable::cyclic(4), 2),
        ("C2xC2", GroupTable::direct_product(&c2, &c2), 2),
        ("C3", c3.clone(), 3),
        ("C9", GroupTable::cyclic(9), 3),
        ("C3xC3", GroupTable::direct_product(&c3, &c3), 3),
        ("Heis27", heisenberg27(), 3),
    ]
}

/// Every Hopf algebra the acceptance suite touches: the named group
/// algebras and their duals, H(delta) over GF(2), GF(3), GF(5), the
/// enveloping algebras, and tensor products of those.
pub fn zoo() -> &'static [Fixture] {
    static ZOO: OnceLock<Vec<Fixture>> = OnceLock::new();
    ZOO.get_or_init(build_zoo)
}

fn build_zoo() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = Vec::new();
    let mut push = |name: &'static str, h: HopfAlgebra, group: Option<GroupTable>| {
        out.push(Fixture { name, h, group });
    };

    let mut duals: Vec<(&'static str, HopfAlgebra)> = Vec::new();
    for (name, table, p) in named_groups() {
        let h = group_algebra(&table, p).unwrap();
        let dual_name: &'static str = match name {
            "C2" => "dual(kC2)",
            "C4" => "dual(kC4)",
            "C2xC2" => "dual(kC2xC2)",
            "C3" => "dual(kC3)",
            "C9" => "dual(kC9)",
            "C3xC3" => "dual(kC3xC3)",
            "Heis27" => "dual(kHeis27)",
            _ => unreachable!(),
        };
        duals.push((dual_name, function_algebra(&table, p).unwrap()));
        let kname: &'static str = match name {
            "C2" => "kC2",
            "C4" => "kC4",
            "C2xC2" => "kC2xC2",
            "C3" => "kC3",
            "C9" => "kC9",
            "C3xC3" => "kC3xC3",
            "Heis27" => "kHeis27",
            _ => unreachable!(),
        };
        push(kname, h, Some(table));
    }
    for (name, h) in duals {
        push(name, h, None);
    }

    push("kQ8", group_algebra(&q8(), 2).unwrap(), Some(q8()));
    push("dual(kQ8)", function_algebra(&q8(), 2).unwrap(), None);

    for (p, name0, name1) in [
        (2u64, "H(0)@2", "H(1)@2"),
        (3, "H(0)@3", "H(1)@3"),
        (5, "H(0)@5", "H(1)@5"),
    ] {
        push(name0, h_delta(p, 0).unwrap(), None);
        push(name1, h_delta(p, 1).unwrap(), None);
    }

    let u_heis2 = restricted_enveloping(&RestrictedLie::heisenberg(2).unwrap()).unwrap();
    let u_heis3 = restricted_enveloping(&RestrictedLie::heisenberg(3).unwrap()).unwrap();
    push("u(heis)@2", u_heis2.clone(), None);
    push("u(heis)@3", u_heis3.clone(), None);
    push("dual(u(heis)@2)", u_heis2.dual(), None);

    let f2 = PrimeField::new(2).unwrap();
    let f3 = PrimeField::new(3).unwrap();
    let ab3 =
        restricted_enveloping(&RestrictedLie::abelian(f2, 3, FieldMatrix::zero(f2, 3, 3)).unwrap())
            .unwrap();
    push("u(abelian3)@2", ab3, None);
    // x^[2] = y, y^[2] = 0: u is GF(2)[x]/(x^4)
    let mut chain_pmap = FieldMatrix::zero(f2, 2, 2);
    chain_pmap.set(0, 1, 1);
    let chain = restricted_enveloping(&RestrictedLie::abelian(f2, 2, chain_pmap).unwrap()).unwrap();
    push("u(chain2)@2", chain, None);
    let ab2p3 =
        restricted_enveloping(&RestrictedLie::abelian(f3, 2, FieldMatrix::zero(f3, 2, 2)).unwrap())
            .unwrap();
    push("u(abelian2)@3", ab2p3, None);

    let u_affine = restricted_enveloping(&affine_lie_p2()).unwrap();
    push("u(affine)@2", u_affine.clone(), None);

    let t1 = h_delta(2, 0)
        .unwrap()
        .tensor(&h_delta(2, 1).unwrap())
        .unwrap();
    push("H(0)(x)H(1)@2", t1, None);
    let t2 = group_algebra(&GroupTable::cyclic(3), 3)
        .unwrap()
        .tensor(&h_delta(3, 0).unwrap())
        .unwrap();
    push("kC3(x)H(0)@3", t2, None);
    // noncommutative and noncocommutative
    let t3 = u_affine.tensor(&u_affine.dual()).unwrap();
    push("u(affine)(x)dual@2", t3, None);
    let t4 = group_algebra(&GroupTable::cyclic(2), 2)
        .unwrap()
        .tensor(&group_algebra(&GroupTable::cyclic(4), 2).unwrap())
        .unwrap();
    push("kC2(x)kC4", t4, None);

    out
}

pub fn find<'a>(name: &str) -> &'a Fixture {
    zoo()
        .iter()
        .find(|f| f.name == name)
        .unwrap_or_else(|| panic!("no fixture named {name}"))
}
