//! Exact computations with finite-dimensional Hopf algebras over prime
//! fields GF(p): indicator sequences, Sweedler powers, Jacobson radicals,
//! coradical and radical-adic filtrations, and associated graded Hopf
//! algebras, all in exact modular arithmetic.
//!
//! An algebra is carried as dense structure constants on a fixed basis
//! ([`hopf::HopfAlgebra`]); constructors build validated instances from
//! Cayley tables, truncated polynomial data, or restricted Lie algebra
//! data ([`construct`]). Everything downstream is a pure function of
//! that carrier.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`validate_axioms`** - exhaustive Hopf-axiom checking, including a
//!   deliberately broken antipode
//! - **`indicator_table`** - indicator windows with minimal polynomial,
//!   period, and the pertinence verdict
//! - **`group_counting`** - indicators of group algebras vs literal
//!   counting of n-th roots of the identity
//! - **`dual_tensor_invariance`** - invariance under duals, pointwise
//!   multiplicativity under tensor products, op/cop equality
//! - **`radical_filtrations`** - radical powers, coradical chains, and
//!   the duality between them
//! - **`graded_reduction`** - the chain H, gr_J H, gr_C(gr_J H), dual,
//!   with the indicator sequence fixed at every link
//! - **`enveloping_algebra`** - restricted enveloping algebras from
//!   bracket data via PBW straightening
//! - **`sequence_analysis`** - Berlekamp-Massey, recurrence periods, and
//!   the binomial profile
//!
//! ```bash
//! cargo run -p hopfind --example indicator_table
//! ```
//!
//! A thin `hopfind` binary exposes the same operations on JSON documents;
//! see the repository README.

pub mod construct;
pub mod doc;
pub mod error;
pub mod field;
pub mod filtration;
pub mod hopf;
pub mod indicator;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod subspace;
pub mod tensor;

pub use construct::{function_algebra, group_algebra, h_delta, restricted_enveloping};
pub use construct::{GroupTable, RestrictedLie};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use hopf::{Endomorphism, HopfAlgebra, ValidationReport};
pub use matrix::FieldMatrix;
pub use poly::Poly;
pub use subspace::Subspace;
pub use tensor::Tensor3;

/// Global dimension cap for dense storage; override with HOPFIND_DIM_CAP.
pub fn dim_cap() -> usize {
    std::env::var("HOPFIND_DIM_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(512)
}
