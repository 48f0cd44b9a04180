//! Truncated graded-ring arithmetic for the blow-up correction integrals.
//!
//! Classes are polynomials in formal degree-one generators `k, h, e, f` with
//! coefficients in `ℤ[d, j]`. Each center carries its point-condition class
//! and the Chern class of its normal bundle; the correction
//! `∫ (class)^8 / c(N)` is obtained by expanding, keeping the top degree and
//! pushing forward through fixed tables until a polynomial in `d` (and `j`)
//! is left.

mod coeff;
mod graded;
mod stages;

pub use coeff::CoeffPoly;
pub use graded::{expand_truncated, ClassMonomial, Gen, GradedClass};
pub use stages::{
    correction_integral, correction_integrals, integrate, predegree_via_chow,
    predegree_via_chow_all_simple, pushforward, pushforward_table, CenterSpec, CorrectionIntegrals,
    Space, Stage,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChowError {
    #[error("denominator is not a unit (constant term must be 1)")]
    NonUnit,
    #[error("fibre power {power} on {space} exceeds the pushforward table")]
    PowerBeyondTable { power: u32, space: Space },
    #[error("nothing to push forward to from a point")]
    NothingBelow,
    #[error("polynomial has non-integral coefficients")]
    NonIntegral,
    #[error("polynomial involves symbols other than d and j")]
    ForeignSymbols,
}
