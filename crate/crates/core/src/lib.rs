//! Computational commutative algebra for blowup algebras of prime ideals:
//! an exact Gröbner kernel, ideal and module toolkits, constructors for Rees
//! algebras and associated graded rings, and the Fitting-height criteria that
//! decide when the associated graded ring is a domain or normal.

pub mod error;
pub mod limits;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod scalar;

pub mod gb;
pub mod hilbert;
pub mod ideal;
pub mod matrix;
pub mod blowup;
pub mod module;
pub mod resolution;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::PolyRing;
pub use scalar::{Field, Scalar};
