//! Representations of tropical rational functions: volumes, univariate
//! minimal representations, division and factorization.

mod factor;
mod uni;
mod volume;

pub use factor::{
    curve_irreducible, enumerate_factorizations, fcomp, newton_irreducible, try_divide,
    Factorization, FactorizationSearch, DEFAULT_DEPTH,
};
pub use uni::{minrep_uni, uni_expand, uni_factor, uni_roots, FactoredUni, RepPair};
pub use volume::{monotonicity_check, stacked_polygon_1d, vol_pair, Monotonicity};
