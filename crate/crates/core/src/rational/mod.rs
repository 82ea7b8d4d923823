//! Decoding through rational curve fitting.
//!
//! At level `j` every message at distance `t` comes from a coprime `(a, b)`
//! with `deg a <= k1`, `deg b <= k2` such that `a/b` passes through `t` of
//! the anchors. A bivariate interpolant with multiplicity `s` at every
//! anchor then has `b z - a` as a factor.

pub mod anchor;
pub mod bivariate;
pub mod decode;
pub mod factor;
pub mod koetter;
pub mod params;

pub use anchor::{anchor_points, Anchor, ProjectivePoint};
pub use bivariate::BivariatePolynomial;
pub use decode::{
    decode_rational, decode_rational_reencoded, decode_rational_report, LevelReport, LevelRoute, RationalReport,
};
pub use factor::{rational_factorize, RationalFunction};
pub use koetter::{interpolate, koetter, satisfies_constraints};
pub use params::{
    multiplicity_trial, optimize_params, wu_params, Candidate, InterpParams, MultiplicityTrial, Surd, TrialVerdict,
    WuParams,
};
