//! Coprime terms in arithmetic progressions over `Z` and over norm-Euclidean
//! quadratic rings of integers.

pub mod arith;
pub mod error;
pub mod crt;
pub mod decomposition;
pub mod pillai;
pub mod rings;

pub use arith::Integer;
pub use error::{Error, Result};
pub use pillai::ArithmeticProgression;
pub use rings::{Ring, RingElement};
