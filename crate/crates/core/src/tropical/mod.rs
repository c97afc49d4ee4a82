//! The max-plus semifield, tropical Laurent polynomials and rational functions.

mod canonical;
pub mod num;
mod poly;
mod rational;

pub use num::{int, rat, Rational, TropNum};
pub use poly::{Exponent, TropPoly};
pub use rational::TropRational;
