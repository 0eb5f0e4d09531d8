//! Exact scalar arithmetic: F_p, monomials, term orders and polynomials.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{is_prime, PrimeField, DEFAULT_PRIME};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::{PolyRing, Polynomial};

pub(crate) use poly::same_ring;
