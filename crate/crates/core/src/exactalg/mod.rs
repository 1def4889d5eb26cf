//! Exact arithmetic over the rationals: scalars, univariate polynomials,
//! binary forms, rational points of the projective line and effective divisors.

mod divisor;
mod form;
pub mod linalg;
mod point;
mod poly;
mod rat;

pub use divisor::{divisor_add, h0_dim, h1_dim, EffDivisor};
pub use form::HomForm;
pub use point::ProjPoint;
pub use poly::Poly;
pub use rat::Rat;
