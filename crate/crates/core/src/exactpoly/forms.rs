//! Operations specific to ternary forms in `x, y, z`.

use num_bigint::BigInt;

use super::resultant::bareiss_determinant;
use super::{MultiPoly, PolyError};

/// Determinant of the matrix of second partials of a homogeneous form in
/// three variables. The result is homogeneous of degree `3(d-2)` or zero.
pub fn hessian_determinant(f: &MultiPoly) -> Result<MultiPoly, PolyError> {
    if f.nvars() != 3 {
        return Err(PolyError::NotTernary(f.nvars()));
    }
    let d = f.homogeneous_degree().ok_or(PolyError::NotHomogeneous)?;
    if d < 2 {
        return Err(PolyError::DegreeTooSmall { degree: d, min: 2 });
    }
    let first: Vec<MultiPoly> = (0..3).map(|i| f.differentiate_at(i)).collect();
    let second: Vec<Vec<MultiPoly>> = (0..3)
        .map(|i| (0..3).map(|j| first[i].differentiate_at(j)).collect())
        .collect();
    let zero = MultiPoly::zero(f.vars().to_vec());
    Ok(bareiss_determinant(second, &zero))
}

/// Determinant of a 3×3 integer matrix.
pub fn det3(m: &[[i64; 3]; 3]) -> BigInt {
    let b: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    bareiss_determinant(b, &BigInt::from(0))
}

/// `p(M·v)`: variable `i` is replaced by `Σ_j M[i][j]·var_j`. The degree is
/// preserved because `M` must be invertible.
pub fn linear_substitute(p: &MultiPoly, m: &[[i64; 3]; 3]) -> Result<MultiPoly, PolyError> {
    if p.nvars() != 3 {
        return Err(PolyError::NotTernary(p.nvars()));
    }
    if det3(m) == BigInt::from(0) {
        return Err(PolyError::SingularMatrix);
    }
    let big = m.map(|row| row.map(BigInt::from));
    Ok(p.compose_linear(&big))
}

/// Adjugate of a 3×3 integer matrix (`adj(M)·M = det(M)·I`).
pub fn adjugate3(m: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
            let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
            m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]
        })
    })
}
