pub mod arith;
pub mod brcomplex;
pub mod cli;
pub(crate) mod combinat;
pub mod error;
pub mod groebner;
pub mod modpres;
pub mod multiplicity;
pub mod oracle;
pub mod report;

pub use error::{Error, Result};
