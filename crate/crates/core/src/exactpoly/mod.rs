//! Exact rational arithmetic and polynomial algebra.

mod factor;
mod forms;
pub mod multipoly;
mod resultant;
mod squarefree;
mod unipoly;
mod zpoly;

pub use factor::{factor_integer, factor_u64, format_factorization, is_probable_prime};
pub use forms::{adjugate3, det3, hessian_determinant, linear_substitute};
pub use multipoly::{xyz, Monomial, MultiPoly};
pub use resultant::{resultant, resultant_interpolated, unipoly_resultant};
pub use squarefree::{squarefree_decompose, SquarefreeDecomposition};
pub use unipoly::UniPoly;

/// Exact rational number, always stored reduced with a positive denominator.
pub type BigRat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent vector has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("degree {degree} is below the minimum {min}")]
    DegreeTooSmall { degree: u32, min: u32 },
    #[error("expected a form in 3 variables, got {0}")]
    NotTernary(usize),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division is not exact")]
    NotDivisible,
    #[error("polynomial involves more than one variable")]
    NotUnivariate,
    #[error("coordinate change matrix is singular")]
    SingularMatrix,
    #[error("cannot factor 0")]
    FactorZero,
}
