//! Exact multivariate polynomials over a [`Field`](crate::field::Field).

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub(crate) use polynomial::same_ring;
pub use polynomial::Polynomial;
pub use ring::{MonomialOrder, Ring};
