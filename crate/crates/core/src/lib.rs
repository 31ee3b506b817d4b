pub mod characters;
pub mod combinat;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod poly;
pub mod qt;
pub mod rings;
pub mod schubert;
pub mod tesler;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial, Rational, TermOrder};
pub use qt::QtPolynomial;
