//! Minimal list decoding of Reed-Solomon codes.
//!
//! Given a received word `r`, the decoders here find the exact distance
//! `L = d_H(r, C)` to the code and every message whose codeword sits at that
//! distance. Two routes are provided:
//!
//! * [`division`]: parametrize the interpolation module by its minimal
//!   Groebner basis `{g1, g2}` and search `a*g1 + b*g2` level by level,
//!   accepting the combinations whose second component divides the first.
//! * [`rational`]: at each level, fit the rational functions `a/b` through the
//!   basis' anchor points with a multiplicity-`s` bivariate interpolant, then
//!   factor it.
//!
//! [`code::ml_oracle`] is the exhaustive ground truth both are tested against.

pub mod code;
pub mod division;
pub mod error;
pub mod field;
pub mod groebner;
pub mod poly;
pub mod rational;
pub mod wire;

#[cfg(test)]
pub(crate) mod testutil;

pub use code::{DecodeOutcome, RSCode, Word};
pub use error::{Error, Result};
pub use field::{Elem, Field, FieldElement, FieldSpec};
pub use poly::Polynomial;
