//! Exact tropical (max-plus) polynomials, rational functions, Newton polytopes,
//! dual subdivisions and plane curves.

pub mod cli;
pub mod curve;
pub mod error;
pub mod geom;
pub mod parse;
pub mod rep;
pub mod subdiv;
pub mod tropical;

pub use error::{Error, Result};
pub use tropical::{int, rat, Exponent, Rational, TropNum, TropPoly, TropRational};
