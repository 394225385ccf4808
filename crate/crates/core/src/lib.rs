//! Exact computations with Artin braid groups and the Lie algebras of their
//! lower central series.
//!
//! The crate is organised bottom-up:
//!
//! * [`word`]: free groups, homomorphisms, the Magnus expansion and
//!   lower-central-series leading terms.
//! * [`freelie`]: free Lie algebras over the integers in the Lyndon basis.
//! * [`braid`]: crossing words, the Artin action, strand deletion and
//!   doubling, and the cabling embedding `theta: F_n -> P_{n+1}`.
//! * [`kohno`]: the graded Lie algebra of the pure braid group, presented by
//!   the infinitesimal braid relations, and the induced map of `theta`.
//! * [`simplicial`]: the simplicial groups `F[S^1]` and `AP` with their
//!   Moore cycles and boundaries.
//! * [`homology`]: Smith normal form and the integral chain complexes of the
//!   graded pieces of `F[S^1]`.

pub mod braid;
mod budget;
pub mod error;
pub mod freelie;
pub mod homology;
pub mod kohno;
pub mod simplicial;
mod text;
pub mod word;

pub use budget::Budget;
pub use error::{Error, Result};

/// Engine version embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Serializes integers as JSON numbers when they fit in `i64`, otherwise as
/// decimal strings.
pub fn serialize_bigints<S: serde::Serializer>(
    v: &[num_bigint::BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match i64::try_from(x) {
            Ok(i) => seq.serialize_element(&i)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}
