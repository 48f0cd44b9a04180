use super::{BigRat, PolyError, UniPoly};

/// `f = unit · ∏ factor^multiplicity`, factors monic, squarefree, pairwise
/// coprime, listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: BigRat,
    pub factors: Vec<(u32, UniPoly)>,
}

impl SquarefreeDecomposition {
    /// Multiplies the decomposition back out.
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (i, g)| {
                &acc * &g.pow(*i)
            })
    }
}

/// Yun's squarefree decomposition over the rationals.
pub fn squarefree_decompose(f: &UniPoly) -> Result<SquarefreeDecomposition, PolyError> {
    let unit = f.leading_coeff().ok_or(PolyError::ZeroPolynomial)?.clone();
    let f = f.monic();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquarefreeDecomposition { unit, factors });
    }
    let df = f.derivative();
    let a = f.gcd(&df);
    let mut b = f.div_exact(&a)?;
    let mut c = df.div_exact(&a)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree() > Some(0) {
        let g = b.gcd(&d);
        b = b.div_exact(&g)?;
        c = d.div_exact(&g)?;
        d = &c - &b.derivative();
        if g.degree() > Some(0) {
            factors.push((i, g));
        }
        i += 1;
    }
    Ok(SquarefreeDecomposition { unit, factors })
}
