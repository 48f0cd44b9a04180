use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::unimodular::{apply, random_unimodular, substitute, Matrix};
use super::{FlexError, FlexProfile, PlaneCurve};
use crate::exactpoly::{
    adjugate3, hessian_determinant, resultant_interpolated, squarefree_decompose, BigRat,
    MultiPoly, UniPoly,
};

const INITIAL_BOUND: i64 = 3;
const RETRY_BUDGET: u32 = 8;

/// The outcome of [`analyze_flexes`]: the certified profile together with
/// the coordinate change and eliminant factors that produced it.
#[derive(Debug, Clone)]
pub struct FlexAnalysis {
    profile: FlexProfile,
    change: Matrix,
    factors: Vec<(u32, UniPoly)>,
    form: MultiPoly,
    hessian: MultiPoly,
}

impl FlexAnalysis {
    pub fn profile(&self) -> &FlexProfile {
        &self.profile
    }

    /// The unimodular matrix `M` of the accepted frame (the curve was
    /// studied as `F(M·v)`).
    pub fn change_matrix(&self) -> [[i64; 3]; 3] {
        self.change
    }

    /// Squarefree factors of the eliminant in the accepted frame: a factor of
    /// degree `m` with multiplicity `i` stands for `m` flexes of order `i`.
    pub fn factors(&self) -> &[(u32, UniPoly)] {
        &self.factors
    }

    /// Order of `q` as a flex according to this analysis (0 for non-flexes),
    /// read off from the factor whose root is the frame coordinate of `q`.
    pub fn order_at_point(&self, q: &[BigRat; 3]) -> Result<u32, FlexError> {
        if q.iter().all(Zero::is_zero) {
            return Err(FlexError::ZeroPoint);
        }
        if !self.form.evaluate(q)?.is_zero() {
            return Err(FlexError::NotOnCurve);
        }
        if !self.hessian.evaluate(q)?.is_zero() {
            return Ok(0);
        }
        // adj(M) = ±M⁻¹, which is enough projectively.
        let v = apply(&adjugate3(&self.change), q);
        if v[2].is_zero() {
            return Ok(0);
        }
        let x0 = &v[0] / &v[2];
        Ok(self
            .factors
            .iter()
            .find(|(_, g)| g.eval(&x0).is_zero())
            .map(|(i, _)| *i)
            .expect("every point of C ∩ Hess(C) projects to a root of the eliminant"))
    }
}

/// Flex profile of a smooth curve; see [`analyze_flexes`].
pub fn flex_profile(curve: &PlaneCurve, seed: u64) -> Result<FlexProfile, FlexError> {
    Ok(analyze_flexes(curve, seed)?.profile)
}

/// Counts flexes by order as intersection multiplicities of the curve with
/// its Hessian.
///
/// In a random unimodular frame the resultant in `y` of the dehomogenized
/// curve and Hessian is computed; a squarefree factor of degree `m` and
/// multiplicity `i` contributes `m` flexes of order `i`. A frame counts only
/// if the resultant has full degree `3d(d−2)` and no multiplicity exceeds
/// `d − 2`; the answer is accepted once two consecutive valid frames agree.
/// Merged fibres only ever coarsen the profile, so agreement of independent
/// frames certifies it. Deterministic in `seed`.
pub fn analyze_flexes(curve: &PlaneCurve, seed: u64) -> Result<FlexAnalysis, FlexError> {
    let d = curve.degree();
    let form = curve.form().clone();
    let hessian = hessian_determinant(&form)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bound = INITIAL_BOUND;
    let mut previous: Option<FlexProfile> = None;
    let attempts = 2 + RETRY_BUDGET;
    for _ in 0..attempts {
        let m = random_unimodular(&mut rng, bound);
        match examine_frame(&form, &hessian, &m, d)? {
            Some((profile, factors)) => {
                if previous.as_ref() == Some(&profile) {
                    return Ok(FlexAnalysis {
                        profile,
                        change: m,
                        factors,
                        form,
                        hessian,
                    });
                }
                if previous.is_some() {
                    bound *= 2;
                }
                previous = Some(profile);
            }
            None => bound *= 2,
        }
    }
    Err(FlexError::GenericityFailure { attempts })
}

type FrameResult = Option<(FlexProfile, Vec<(u32, UniPoly)>)>;

fn examine_frame(
    form: &MultiPoly,
    hessian: &MultiPoly,
    m: &Matrix,
    d: u32,
) -> Result<FrameResult, FlexError> {
    let g = substitute(form, m);
    let h = substitute(hessian, m);
    let hdeg = 3 * (d - 2);
    // (0:1:0) on neither curve keeps both leading coefficients in y constant.
    if g.coefficient(&[0, d, 0]).is_zero() || h.coefficient(&[0, hdeg, 0]).is_zero() {
        return Ok(None);
    }
    let one = BigRat::from_integer(BigInt::from(1));
    let ga = g.evaluate_var(2, &one);
    let ha = h.evaluate_var(2, &one);
    let r = resultant_interpolated(&ga, &ha, "y", true)?.to_unipoly(0)?;
    if r.degree() != Some((d * hdeg) as usize) {
        return Ok(None);
    }
    let sq = squarefree_decompose(&r)?;
    let mut counts = BTreeMap::new();
    for (i, factor) in &sq.factors {
        if *i > d - 2 {
            return Ok(None);
        }
        *counts.entry(*i).or_insert(0u64) += factor.degree().unwrap_or(0) as u64;
    }
    Ok(FlexProfile::new(d, counts).ok().map(|p| (p, sq.factors)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flexlab::{flex_order_at, rational_point};

    fn profile(src: &str, seed: u64) -> FlexProfile {
        flex_profile(&PlaneCurve::parse(src).unwrap(), seed).unwrap()
    }

    #[test]
    fn cubic_has_nine_simple_flexes() {
        assert_eq!(
            profile("x^3 + y^3 + z^3", 0),
            FlexProfile::all_simple(3).unwrap()
        );
        assert_eq!(
            profile("y^2*z - x^3 + x*z^2 + z^3", 1),
            FlexProfile::all_simple(3).unwrap()
        );
    }

    #[test]
    fn klein_quartic() {
        assert_eq!(
            profile("x^3*y + y^3*z + z^3*x", 0),
            FlexProfile::all_simple(4).unwrap()
        );
    }

    #[test]
    fn fermat_quartic_hyperflexes() {
        assert_eq!(
            profile("x^4 + y^4 + z^4", 0),
            FlexProfile::from_pairs(4, &[(2, 12)]).unwrap()
        );
    }

    #[test]
    fn one_hyperflex_quartic() {
        assert_eq!(
            profile("x^4 + x*y^3 + y*z^3", 3),
            FlexProfile::from_pairs(4, &[(1, 22), (2, 1)]).unwrap()
        );
    }

    #[test]
    fn analysis_agrees_with_tangent_order() {
        let curve = PlaneCurve::parse("x^4 + x*y^3 + y*z^3").unwrap();
        let analysis = analyze_flexes(&curve, 5).unwrap();
        for (pt, order) in [([0, 0, 1], 2), ([0, 1, 0], 1)] {
            let q = rational_point(pt);
            assert_eq!(analysis.order_at_point(&q).unwrap(), order);
            assert_eq!(flex_order_at(&curve, &q).unwrap(), order);
        }
        let m = analysis.change_matrix();
        let det = crate::exactpoly::det3(&m);
        assert!(det == BigInt::from(1) || det == BigInt::from(-1));
        let total: usize = analysis
            .factors()
            .iter()
            .map(|(i, g)| *i as usize * g.degree().unwrap())
            .sum();
        assert_eq!(total, 24);
    }
}
