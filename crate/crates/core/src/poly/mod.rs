//! Exact sparse multivariate polynomials over the rationals.

mod polynomial;
mod ring;
mod text;

pub use polynomial::{rat, ratio, Polynomial, Rational};
pub use ring::{Monomial, MonomialOrder, OrderKind, Ring};
pub use text::parse_polynomial;
pub use text::parse_expr;
