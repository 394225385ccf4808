//! Free Lie algebras over the integers in the Lyndon basis.

mod derivation;
mod element;
mod expr;
pub mod lyndon;

pub use derivation::{apply_derivation, DerivationTable};
pub(crate) use element::write_coefficient;
pub use element::{lie_bracket, lie_to_associative, LieElement, LyndonWord};
pub(crate) use expr::parse_expr;
pub use expr::{lie_normal_form, parse_lie_expr, LieExpr, LieOps};
pub use lyndon::{lyndon_basis, lyndon_words, witt_rank};
