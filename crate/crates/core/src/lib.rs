pub mod algebra;
pub mod error;
pub mod fan;
pub mod groebner;
pub mod ideal;
pub mod ordering;
pub mod parse;
pub mod poly;
pub mod session;

pub use error::{Error, Result};
