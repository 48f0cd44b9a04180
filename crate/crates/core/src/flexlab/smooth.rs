use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::unimodular::{apply, primitive_integer_point, random_unimodular, substitute, Matrix};
use super::{FlexError, PlaneCurve};
use crate::exactpoly::{
    resultant_interpolated, squarefree_decompose, BigRat, MultiPoly, PolyError, UniPoly,
};

const SMOOTH_SEED: u64 = 0x5EED_C0DE;
const MAX_ATTEMPTS: u32 = 16;
/// Nonconstant eliminants in this many generic frames count as singular.
const SINGULAR_VOTES: u32 = 4;
const SEARCH_RADIUS: i64 = 2;

/// Certifies that `F = 0` has no singular point over the algebraic closure.
///
/// The three partials are pushed into a random frame, their pairwise
/// resultants in `y` eliminated, and the gcd inspected. Iterated resultants
/// can pick up spurious common factors, so a nonconstant gcd first triggers a
/// search for an actual singular point and then a fresh frame.
pub fn check_smooth(f: &MultiPoly) -> Result<PlaneCurve, FlexError> {
    if f.nvars() != 3 {
        return Err(FlexError::NotTernary);
    }
    if f.is_zero() {
        return Err(FlexError::ZeroPolynomial);
    }
    let degree = f.homogeneous_degree().ok_or(FlexError::NonHomogeneous)?;
    if degree < 3 {
        return Err(FlexError::DegreeTooSmall(degree));
    }
    let form = f.primitive_integer_part();
    // A form missing a variable is a cone over the point of that axis.
    if let Some(i) = (0..3).find(|&i| form.differentiate_at(i).is_zero()) {
        let mut w = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        w[i] = BigInt::one();
        return Err(FlexError::SingularCurve { witness: Some(w) });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SMOOTH_SEED);
    let mut votes = 0;
    for attempt in 0..MAX_ATTEMPTS {
        let m = random_unimodular(&mut rng, 3 + attempt as i64);
        match examine_frame(&form, &m)? {
            Frame::Degenerate => continue,
            Frame::Smooth => return Ok(PlaneCurve { form, degree }),
            Frame::Singular(witness) => {
                return Err(FlexError::SingularCurve {
                    witness: witness.or_else(|| search_small_points(&form)),
                })
            }
            Frame::Suspicious(witness) => {
                if let Some(w) = witness.or_else(|| search_small_points(&form)) {
                    return Err(FlexError::SingularCurve { witness: Some(w) });
                }
                votes += 1;
                if votes >= SINGULAR_VOTES {
                    return Err(FlexError::SingularCurve { witness: None });
                }
            }
        }
    }
    Err(FlexError::GenericityFailure {
        attempts: MAX_ATTEMPTS,
    })
}

enum Frame {
    /// Some partial vanishes at (0:1:0); pick another frame.
    Degenerate,
    Smooth,
    /// Proven singular (two partials share a component, or a common zero found).
    Singular(Option<[BigInt; 3]>),
    /// Common root of the eliminants with no verified singular point yet.
    Suspicious(Option<[BigInt; 3]>),
}

fn examine_frame(form: &MultiPoly, m: &Matrix) -> Result<Frame, FlexError> {
    let g = substitute(form, m);
    let partials: Vec<MultiPoly> = (0..3).map(|i| g.differentiate_at(i)).collect();
    let north = [BigRat::zero(), BigRat::one(), BigRat::zero()];
    for p in &partials {
        if p.evaluate(&north)?.is_zero() {
            return Ok(Frame::Degenerate);
        }
    }
    let back = |v: [BigRat; 3]| primitive_integer_point(&apply(m, &v)).ok();

    // Common zeros on the line z = 0; (0:1:0) is excluded above, so x = 1.
    let at_infinity: Vec<UniPoly> = partials
        .iter()
        .map(|p| restrict(p, &BigRat::one(), None))
        .collect::<Result<_, _>>()?;
    let g_inf = gcd_all(&at_infinity);
    if g_inf.is_zero() {
        return Ok(Frame::Singular(back([
            BigRat::one(),
            BigRat::zero(),
            BigRat::zero(),
        ])));
    }

    let affine: Vec<MultiPoly> = partials
        .iter()
        .map(|p| p.evaluate_var(2, &BigRat::one()))
        .collect();
    let mut eliminants = Vec::with_capacity(3);
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let r = resultant_interpolated(&affine[a], &affine[b], "y", false)?.to_unipoly(0)?;
        if r.is_zero() {
            return Ok(Frame::Singular(None));
        }
        eliminants.push(r);
    }
    let g_aff = gcd_all(&eliminants);
    if g_aff.degree() == Some(0) && g_inf.degree() == Some(0) {
        return Ok(Frame::Smooth);
    }

    let mut witness = None;
    for x0 in rational_roots(&g_aff)? {
        let fibre: Vec<UniPoly> = partials
            .iter()
            .map(|p| restrict(p, &x0, Some(&BigRat::one())))
            .collect::<Result<_, _>>()?;
        if let Some(y0) = rational_roots(&gcd_all(&fibre))?.into_iter().next() {
            witness = back([x0, y0, BigRat::one()]);
            break;
        }
    }
    if witness.is_none() {
        if let Some(y0) = rational_roots(&g_inf)?.into_iter().next() {
            witness = back([BigRat::one(), y0, BigRat::zero()]);
        }
    }
    Ok(match witness {
        Some(w) => Frame::Singular(Some(w)),
        None => Frame::Suspicious(None),
    })
}

/// `p(x0, y, z0)` as a polynomial in `y`; `z0 = None` means `z = 0`.
fn restrict(p: &MultiPoly, x0: &BigRat, z0: Option<&BigRat>) -> Result<UniPoly, PolyError> {
    let z0 = z0.cloned().unwrap_or_else(BigRat::zero);
    p.evaluate_var(0, x0).evaluate_var(2, &z0).to_unipoly(1)
}

fn gcd_all(polys: &[UniPoly]) -> UniPoly {
    polys.iter().fold(UniPoly::zero(), |acc, p| acc.gcd(p))
}

/// Roots of the linear squarefree factors.
fn rational_roots(p: &UniPoly) -> Result<Vec<BigRat>, PolyError> {
    if p.is_zero() || p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    Ok(squarefree_decompose(p)?
        .factors
        .iter()
        .filter(|(_, g)| g.degree() == Some(1))
        .map(|(_, g)| -g.coeff(0) / g.coeff(1))
        .collect())
}

/// A primitive integer point with coordinates in `[−2, 2]` where the form
/// and all partials vanish.
fn search_small_points(form: &MultiPoly) -> Option<[BigInt; 3]> {
    let partials: Vec<MultiPoly> = (0..3).map(|i| form.differentiate_at(i)).collect();
    let r = SEARCH_RADIUS;
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                let coords = [a, b, c];
                let first = coords.iter().find(|&&v| v != 0);
                if first.is_none_or(|&v| v < 0) {
                    continue;
                }
                let v = super::rational_point(coords);
                if !primitive(coords) {
                    continue;
                }
                let vanishes = |p: &MultiPoly| p.evaluate(&v).is_ok_and(|x| x.is_zero());
                if vanishes(form) && partials.iter().all(vanishes) {
                    return Some(coords.map(BigInt::from));
                }
            }
        }
    }
    None
}

fn primitive(c: [i64; 3]) -> bool {
    use num_integer::Integer;
    c.iter().fold(0i64, |acc, v| acc.gcd(v)) == 1
}
