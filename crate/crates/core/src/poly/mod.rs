//! Exact multivariate polynomials over the rationals on the monomial basis.

mod monomial;
mod polynomial;
mod ring;

pub use monomial::{grevlex_cmp, monomials_of_degree, monomials_up_to, Monomial};
pub use polynomial::Polynomial;
pub use ring::Ring;

/// Coefficient field.
pub type Coeff = num_rational::BigRational;
