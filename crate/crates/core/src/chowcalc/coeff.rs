use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ChowError;
use crate::exactpoly::{BigRat, MultiPoly};

const D: usize = 0;
const J: usize = 1;

fn dj() -> Vec<String> {
    vec!["d".to_string(), "j".to_string()]
}

/// Polynomial with integer coefficients in the formal symbols `d` (curve
/// degree) and `j` (blow-up index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffPoly(MultiPoly);

impl CoeffPoly {
    pub fn zero() -> Self {
        CoeffPoly(MultiPoly::zero(dj()))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        CoeffPoly(MultiPoly::from_int(dj(), c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        CoeffPoly(MultiPoly::constant(dj(), BigRat::from_integer(c)))
    }

    pub fn d() -> Self {
        CoeffPoly(MultiPoly::var(dj(), "d").expect("d is a symbol"))
    }

    pub fn j() -> Self {
        CoeffPoly(MultiPoly::var(dj(), "j").expect("j is a symbol"))
    }

    /// `Σ c_i d^i`, lowest power first.
    pub fn in_d(coeffs: &[i64]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (vec![i as u32, 0], BigRat::from_integer(c.into())));
        CoeffPoly(MultiPoly::from_terms(dj(), terms).expect("two exponents"))
    }

    /// Wraps a polynomial over `[d, j]`, or over `[d]` alone; every
    /// coefficient must be an integer.
    pub fn from_multipoly(p: &MultiPoly) -> Result<Self, ChowError> {
        let vars = p.vars();
        let lift = |e: &[u32]| -> Option<Vec<u32>> {
            match vars {
                [a, b] if a == "d" && b == "j" => Some(e.to_vec()),
                [a] if a == "d" => Some(vec![e[0], 0]),
                [a] if a == "j" => Some(vec![0, e[0]]),
                [] => Some(vec![0, 0]),
                _ => None,
            }
        };
        let mut terms = Vec::new();
        for (m, c) in p.terms() {
            if !c.is_integer() {
                return Err(ChowError::NonIntegral);
            }
            let e = lift(m.exponents()).ok_or(ChowError::ForeignSymbols)?;
            terms.push((e, c.clone()));
        }
        Ok(CoeffPoly(
            MultiPoly::from_terms(dj(), terms).expect("two exponents"),
        ))
    }

    pub fn as_multipoly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0 == MultiPoly::from_int(dj(), 1)
    }

    pub fn pow(&self, e: u32) -> Self {
        CoeffPoly(self.0.pow(e))
    }

    pub fn degree_in_j(&self) -> u32 {
        self.0.degree_in(J).unwrap_or(0)
    }

    pub fn degree_in_d(&self) -> u32 {
        self.0.degree_in(D).unwrap_or(0)
    }

    /// Coefficient of `d^a j^b`.
    pub fn coefficient(&self, a: u32, b: u32) -> BigInt {
        self.0.coefficient(&[a, b]).to_integer()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.0.num_terms()
    }

    /// Substitutes an integer for `j`.
    pub fn at_j(&self, j: &BigInt) -> Self {
        CoeffPoly(self.0.evaluate_var(J, &BigRat::from_integer(j.clone())))
    }

    /// Substitutes an integer for `d`.
    pub fn at_d(&self, d: &BigInt) -> Self {
        CoeffPoly(self.0.evaluate_var(D, &BigRat::from_integer(d.clone())))
    }

    /// Full evaluation.
    pub fn eval(&self, d: &BigInt, j: &BigInt) -> BigInt {
        self.0
            .evaluate(&[
                BigRat::from_integer(d.clone()),
                BigRat::from_integer(j.clone()),
            ])
            .expect("two symbols")
            .to_integer()
    }

    /// Evaluation of a polynomial in `d` alone.
    pub fn eval_d(&self, d: &BigInt) -> BigInt {
        self.eval(d, &BigInt::zero())
    }

    /// The constant term when the polynomial involves neither symbol.
    pub fn as_constant(&self) -> Option<BigInt> {
        self.0.is_constant().then(|| self.coefficient(0, 0))
    }

    /// `S(r) = Σ_{j=2}^{r+1} p(d, j)` as a polynomial in `d` and `r`, with `r`
    /// taking the place of `j`.
    ///
    /// Built from forward differences: with `q(i) = p(d, i + 2)`,
    /// `S(r) = Σ_m Δ^m q(0) · C(r, m + 1)`.
    pub fn sum_j_from_two(&self) -> Result<Self, ChowError> {
        let k = self.degree_in_j() as i64;
        let mut diffs: Vec<MultiPoly> =
            (0..=k).map(|i| self.at_j(&BigInt::from(i + 2)).0).collect();
        let r = MultiPoly::var(dj(), "j").expect("j is a symbol");
        let mut total = MultiPoly::zero(dj());
        // binom = C(r, m + 1)
        let mut binom = r.clone();
        for m in 0..=k {
            total = &total + &(&diffs[0] * &binom);
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
            let shift = &r - &MultiPoly::from_int(dj(), m + 1);
            binom = (&binom * &shift).scale(&BigRat::new(BigInt::one(), BigInt::from(m + 2)));
        }
        CoeffPoly::from_multipoly(&total)
    }
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

macro_rules! forward_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&CoeffPoly> for &CoeffPoly {
            type Output = CoeffPoly;
            fn $method(self, rhs: &CoeffPoly) -> CoeffPoly {
                CoeffPoly(&self.0 $op &rhs.0)
            }
        }
        impl $trait<CoeffPoly> for CoeffPoly {
            type Output = CoeffPoly;
            fn $method(self, rhs: CoeffPoly) -> CoeffPoly {
                CoeffPoly(&self.0 $op &rhs.0)
            }
        }
    };
}

forward_op!(Add, add, +);
forward_op!(Sub, sub, -);
forward_op!(Mul, mul, *);

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly(-self.0.clone())
    }
}

impl Neg for CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly(-self.0)
    }
}

impl std::iter::Sum for CoeffPoly {
    fn sum<I: Iterator<Item = CoeffPoly>>(iter: I) -> CoeffPoly {
        iter.fold(CoeffPoly::zero(), |a, b| a + b)
    }
}
