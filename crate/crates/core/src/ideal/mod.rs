//! Monomial ideals by minimal generators, and their Hilbert data.

mod hilbert;
mod monomial_ideal;

pub use hilbert::{binomial, hilbert_function, hilbert_polynomial_and_index, HilbertData};
pub use monomial_ideal::MonomialIdeal;
