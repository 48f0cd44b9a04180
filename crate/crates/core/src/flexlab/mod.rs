//! Smooth plane curves and their flexes.
//!
//! A flex of order `r` is a point where the tangent line meets the curve with
//! multiplicity `r + 2`. On a smooth curve this equals the local intersection
//! multiplicity with the Hessian curve, which is how [`flex_profile`] counts
//! them without ever computing point coordinates.

mod profile;
mod smooth;
mod unimodular;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactpoly::{BigRat, MultiPoly, PolyError, UniPoly};
use crate::polyparse::{parse_form, ParseError};

pub use profile::{analyze_flexes, flex_profile, FlexAnalysis};
pub use smooth::check_smooth;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlexError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("curve equation is not homogeneous")]
    NonHomogeneous,
    #[error("curve equation must be a form in x, y, z")]
    NotTernary,
    #[error("curve equation is zero")]
    ZeroPolynomial,
    #[error("degree {0} is below 3")]
    DegreeTooSmall(u32),
    #[error("curve is singular{}", fmt_witness(.witness))]
    SingularCurve { witness: Option<[BigInt; 3]> },
    #[error("no generic coordinate change found after {attempts} attempts")]
    GenericityFailure { attempts: u32 },
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("(0:0:0) is not a projective point")]
    ZeroPoint,
    #[error("invalid flex profile: {0}")]
    InvalidProfile(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn fmt_witness(w: &Option<[BigInt; 3]>) -> String {
    match w {
        Some([a, b, c]) => format!(" at ({a}:{b}:{c})"),
        None => String::new(),
    }
}

/// A smooth plane curve `F = 0` of degree `d ≥ 3`. Only [`check_smooth`]
/// constructs one, so holding a value is the smoothness certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCurve {
    form: MultiPoly,
    degree: u32,
}

impl PlaneCurve {
    /// Parses and certifies a curve given as text, e.g. `"x^3y+y^3z+z^3x"`.
    pub fn parse(src: &str) -> Result<PlaneCurve, FlexError> {
        let (form, _) = parse_form(src)?;
        check_smooth(&form)
    }

    /// The defining form, scaled to primitive integer coefficients.
    pub fn form(&self) -> &MultiPoly {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Always true: the type is only constructed for smooth curves.
    pub fn is_smooth(&self) -> bool {
        true
    }

    /// Whether `q` lies on the curve.
    pub fn contains(&self, q: &[BigRat; 3]) -> bool {
        self.form.evaluate(q).expect("ternary form").is_zero()
    }
}

/// Order of `q` as a flex: `(intersection multiplicity of the tangent line
/// at q) − 2`, so `0` means `q` is not a flex.
pub fn flex_order_at(curve: &PlaneCurve, q: &[BigRat; 3]) -> Result<u32, FlexError> {
    if q.iter().all(Zero::is_zero) {
        return Err(FlexError::ZeroPoint);
    }
    if !curve.contains(q) {
        return Err(FlexError::NotOnCurve);
    }
    let f = curve.form();
    let grad: Vec<BigRat> = (0..3)
        .map(|i| f.differentiate_at(i).evaluate(q).expect("ternary form"))
        .collect();
    let (a, b, c) = (&grad[0], &grad[1], &grad[2]);
    // Points of the tangent line a X + b Y + c Z = 0 other than q.
    let candidates = [
        [b.clone(), -a.clone(), BigRat::zero()],
        [c.clone(), BigRat::zero(), -a.clone()],
        [BigRat::zero(), c.clone(), -b.clone()],
    ];
    let v = candidates
        .into_iter()
        .find(|v| !v.iter().all(Zero::is_zero) && !proportional(v, q))
        .expect("the tangent line at a smooth point is a line");
    let line: Vec<UniPoly> = (0..3)
        .map(|i| UniPoly::new(vec![q[i].clone(), v[i].clone()]))
        .collect();
    let restricted = f.compose_univariate(&line)?;
    let order = restricted
        .order_at_zero()
        .expect("a smooth curve of degree at least 3 contains no line");
    Ok(order as u32 - 2)
}

fn proportional(u: &[BigRat; 3], v: &[BigRat; 3]) -> bool {
    (0..3).all(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        (&u[j] * &v[k] - &u[k] * &v[j]).is_zero()
    })
}

/// Counts of flexes by order, over the algebraic closure.
///
/// Invariants: `Σ r·count(r) = 3d(d−2)` and every order lies in `1..=d−2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlexProfile {
    degree: u32,
    counts: BTreeMap<u32, u64>,
}

impl FlexProfile {
    /// Validates a profile; zero counts are dropped.
    pub fn new(degree: u32, counts: BTreeMap<u32, u64>) -> Result<FlexProfile, FlexError> {
        if degree < 3 {
            return Err(FlexError::DegreeTooSmall(degree));
        }
        let counts: BTreeMap<u32, u64> = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        if let Some(&r) = counts.keys().find(|&&r| r == 0 || r > degree - 2) {
            return Err(FlexError::InvalidProfile(format!(
                "order {r} is outside 1..={} for degree {degree}",
                degree - 2
            )));
        }
        let weighted: u128 = counts.iter().map(|(&r, &c)| r as u128 * c as u128).sum();
        let expected = Self::weighted_total(degree);
        if weighted != expected {
            return Err(FlexError::InvalidProfile(format!(
                "weighted flex count is {weighted}, expected 3d(d-2) = {expected}"
            )));
        }
        Ok(FlexProfile { degree, counts })
    }

    /// Builds from `(order, count)` pairs; repeated orders accumulate.
    pub fn from_pairs(degree: u32, pairs: &[(u32, u64)]) -> Result<FlexProfile, FlexError> {
        let mut counts = BTreeMap::new();
        for &(r, c) in pairs {
            *counts.entry(r).or_insert(0) += c;
        }
        Self::new(degree, counts)
    }

    /// `3d(d−2)` simple flexes.
    pub fn all_simple(degree: u32) -> Result<FlexProfile, FlexError> {
        Self::from_pairs(degree, &[(1, Self::weighted_total(degree) as u64)])
    }

    /// `3d(d−2)`, the number of flexes counted with multiplicity.
    pub fn weighted_total(degree: u32) -> u128 {
        3 * degree as u128 * (degree as u128).saturating_sub(2)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn count(&self, order: u32) -> u64 {
        self.counts.get(&order).copied().unwrap_or(0)
    }

    /// Number of distinct flex points.
    pub fn num_flexes(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Every flex order with repetition, ascending.
    pub fn orders(&self) -> impl Iterator<Item = u32> + '_ {
        self.counts
            .iter()
            .flat_map(|(&r, &c)| std::iter::repeat_n(r, c as usize))
    }
}

impl fmt::Display for FlexProfile {
    /// `{1: 22, 2: 1}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (r, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}: {c}")?;
        }
        f.write_str("}")
    }
}

/// Power sums `f^(r) = Σ_q order(q)^r` over all flexes, for `r = 2..5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FlexSums {
    pub f2: u128,
    pub f3: u128,
    pub f4: u128,
    pub f5: u128,
}

pub fn f_sums(profile: &FlexProfile) -> FlexSums {
    let sum = |e: u32| -> u128 {
        profile
            .counts
            .iter()
            .map(|(&r, &c)| c as u128 * (r as u128).pow(e))
            .sum()
    };
    FlexSums {
        f2: sum(2),
        f3: sum(3),
        f4: sum(4),
        f5: sum(5),
    }
}

/// Converts integer coordinates into a rational point.
pub fn rational_point(coords: [i64; 3]) -> [BigRat; 3] {
    coords.map(|c| BigRat::from_integer(c.into()))
}
