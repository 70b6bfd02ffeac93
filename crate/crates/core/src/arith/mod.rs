//! Exact scalar, polynomial, rational-function and matrix arithmetic.
//!
//! Every identity in this crate is checked with zero tolerance: a check
//! passes only when the numerator of a difference is the zero polynomial.

pub mod matrix;
pub mod poly;
pub mod rat;
pub mod ratfun;

pub use matrix::Matrix;
pub use poly::Poly;
pub use rat::Rat;
pub use ratfun::RatFun;
