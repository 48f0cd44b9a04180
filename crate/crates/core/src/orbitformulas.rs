//! Closed-form predegree and degree formulas for orbit closures of smooth
//! plane curves, and the cross-checks among them.
//!
//! Numeric functions take a [`FlexProfile`] (or its power sums) directly, so
//! they can be used without any curve at hand. The `*_poly` variants return
//! elements of `ℤ[d]` as [`CoeffPoly`] so identities can be checked
//! coefficient by coefficient.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::chowcalc::{
    correction_integrals, predegree_via_chow, predegree_via_chow_all_simple, CoeffPoly,
};
use crate::exactpoly::{factor_integer, format_factorization, BigRat};
use crate::flexlab::{f_sums, FlexProfile, FlexSums};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("degree {d} is below the minimum {min}")]
    DegreeTooSmall { d: u32, min: u32 },
    #[error("automorphism order {aut} does not divide the predegree {predegree}")]
    NonDivisible { predegree: BigInt, aut: BigInt },
    #[error("automorphism order must be at least 1")]
    ZeroAutomorphismOrder,
    #[error("bad degree range {from}..={to} (need 3 <= from <= to)")]
    BadRange { from: u32, to: u32 },
    #[error("degree {0} is outside the verified range 3..=10")]
    OutsideVerifiedRange(u32),
    #[error("predegree routes disagree: {0}")]
    RouteDisagreement(String),
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn poly_d(coeffs: &[i64], d: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, &c| acc * d + c)
}

/// `d(10d−9)(14d²−33d+21)`: correction from the first center.
pub fn first_center_term(d: &BigInt) -> BigInt {
    d * poly_d(&[-9, 10], d) * poly_d(&[21, -33, 14], d)
}

/// `d(2d−3)(322d²−1257d+1233)`: correction from the second center.
pub fn second_center_term(d: &BigInt) -> BigInt {
    d * poly_d(&[-3, 2], d) * poly_d(&[1233, -1257, 322], d)
}

/// Per-flex correction of the `j`-th flex center:
/// `30j⁴ − 96(d−1)j³ + 12(d−1)(7d−11)j² + 84(d−1)²j − 7(2d−3)(22d−39)`.
/// At `j = 2` this is `196d² − 960d + 1125`.
pub fn flex_center_term(d: &BigInt, j: &BigInt) -> BigInt {
    let dm1 = d - 1;
    let j2 = j * j;
    big(30) * &j2 * &j2 - big(96) * &dm1 * &j2 * j
        + big(12) * &dm1 * poly_d(&[-11, 7], d) * &j2
        + big(84) * &dm1 * &dm1 * j
        - big(7) * poly_d(&[-3, 2], d) * poly_d(&[-39, 22], d)
}

/// The terms of the blow-up sum: `d⁸` and what each kind of center removes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corrections {
    /// `d⁸`, the self-intersection before any blow-up.
    pub leading: BigInt,
    pub first_center: BigInt,
    pub second_center: BigInt,
    /// All flex centers together: for a flex of order `r`, the terms for
    /// `j = 2, …, r + 1`.
    pub flex_centers: BigInt,
}

impl Corrections {
    pub fn of(profile: &FlexProfile) -> Corrections {
        let d = BigInt::from(profile.degree());
        let flex_centers = profile
            .counts()
            .iter()
            .map(|(&r, &count)| {
                let per_flex: BigInt = (2..=r as i64 + 1)
                    .map(|j| flex_center_term(&d, &big(j)))
                    .sum();
                per_flex * BigInt::from(count)
            })
            .sum();
        Corrections {
            leading: num_traits::pow(d.clone(), 8),
            first_center: first_center_term(&d),
            second_center: second_center_term(&d),
            flex_centers,
        }
    }

    pub fn predegree(&self) -> BigInt {
        &self.leading - &self.first_center - &self.second_center - &self.flex_centers
    }
}

/// `d⁸` minus the first two corrections minus, for every flex of order `r`,
/// the flex-center terms for `j = 2, …, r + 1`.
pub fn predegree_by_blowups(profile: &FlexProfile) -> BigInt {
    Corrections::of(profile).predegree()
}

/// The summand of the closed formula for a flex of order `r`:
/// `r(r−1)(6r³ + (75−24d)r² + (28d²−240d+393)r + 196d²−960d+1125)`.
fn flex_summand(d: &BigInt, r: &BigInt) -> BigInt {
    let inner = big(6) * r * r * r
        + poly_d(&[75, -24], d) * r * r
        + poly_d(&[393, -240, 28], d) * r
        + poly_d(&[1125, -960, 196], d);
    r * (r - 1) * inner
}

/// `d(d−2)(d⁶+2d⁵+4d⁴+8d³−1356d²+5280d−5319) − Σ_q summand(order(q))`.
pub fn predegree_closed_form(profile: &FlexProfile) -> BigInt {
    let d = BigInt::from(profile.degree());
    let lead = &d * (&d - 2) * poly_d(&[-5319, 5280, -1356, 8, 4, 2, 1], &d);
    profile.counts().iter().fold(lead, |acc, (&r, &count)| {
        acc - flex_summand(&d, &BigInt::from(r)) * BigInt::from(count)
    })
}

/// In terms of the power sums `f^(r)` of the flex orders:
/// `d⁸ − 8d(98d³−492d²+843d−486) − (168d²−720d+732)f2 − (28d²−216d+318)f3 − (69−24d)f4 − 6f5`.
pub fn predegree_from_power_sums(d: u32, sums: &FlexSums) -> BigInt {
    let d = BigInt::from(d);
    let f = |v: u128| BigInt::from(v);
    num_traits::pow(d.clone(), 8)
        - big(8) * &d * poly_d(&[-486, 843, -492, 98], &d)
        - poly_d(&[732, -720, 168], &d) * f(sums.f2)
        - poly_d(&[318, -216, 28], &d) * f(sums.f3)
        - poly_d(&[69, -24], &d) * f(sums.f4)
        - big(6) * f(sums.f5)
}

const P_COEFFS: [i64; 9] = [0, 10638, -15879, 7992, -1372, 0, 0, 0, 1];

/// `P(d) = d⁸ − 1372d⁴ + 7992d³ − 15879d² + 10638d`, the predegree when all
/// `3d(d−2)` flexes are simple.
pub fn simple_flex_predegree(d: u32) -> Result<BigInt, FormulaError> {
    if d < 3 {
        return Err(FormulaError::DegreeTooSmall { d, min: 3 });
    }
    Ok(poly_d(&P_COEFFS, &BigInt::from(d)))
}

pub fn simple_flex_predegree_poly() -> CoeffPoly {
    CoeffPoly::in_d(&P_COEFFS)
}

/// `d(d−2)(d⁶+2d⁵+4d⁴+8d³−1356d²+5280d−5319)`, the leading term of the
/// closed formula, as a polynomial.
pub fn closed_form_lead_poly() -> CoeffPoly {
    let d = CoeffPoly::d();
    &(&d * &(&d - &CoeffPoly::from_int(2))) * &CoeffPoly::in_d(&[-5319, 5280, -1356, 8, 4, 2, 1])
}

/// `f_k(d) = −k(k−1)((28k+196)d² − (24k²+240k+960)d + (6k³+75k²+393k+1125))`,
/// the change in predegree when one flex of order `k` replaces `k` simple ones.
pub fn flex_contribution(k: u32, d: &BigInt) -> BigInt {
    let k = BigInt::from(k);
    let a = big(28) * &k + 196;
    let b = big(24) * &k * &k + big(240) * &k + 960;
    let c = big(6) * &k * &k * &k + big(75) * &k * &k + big(393) * &k + 1125;
    let kk: BigInt = &k * (&k - 1);
    let quad: BigInt = a * d * d - b * d + c;
    -(kk * quad)
}

/// `f_k(d)` with `k` itself a polynomial in `d` (for instance `d − 2`).
pub fn flex_contribution_poly(k: &CoeffPoly) -> CoeffPoly {
    let n = CoeffPoly::from_int;
    let d = CoeffPoly::d();
    let a = &(&n(28) * k) + &n(196);
    let b = &(&(&n(24) * &k.pow(2)) + &(&n(240) * k)) + &n(960);
    let c = &(&(&(&n(6) * &k.pow(3)) + &(&n(75) * &k.pow(2))) + &(&n(393) * k)) + &n(1125);
    let quad = &(&(&a * &d.pow(2)) - &(&b * &d)) + &c;
    -(&(k * &(k - &n(1))) * &quad)
}

/// Predegree divided by the automorphism-group order.
pub fn orbit_degree(predegree: &BigInt, aut_order: &BigInt) -> Result<BigInt, FormulaError> {
    if !aut_order.is_positive() {
        return Err(FormulaError::ZeroAutomorphismOrder);
    }
    let (q, r) = predegree.div_rem(aut_order);
    if !r.is_zero() {
        return Err(FormulaError::NonDivisible {
            predegree: predegree.clone(),
            aut: aut_order.clone(),
        });
    }
    Ok(q)
}

const FERMAT_TAIL: [i64; 6] = [-192, 192, -7, -26, 2, 1];

/// `d²(d−2)(d⁵+2d⁴−26d³−7d²+192d−192)`: the Fermat curve, whose `3d` flexes
/// all have order `d − 2`.
pub fn fermat_predegree(d: u32) -> Result<BigInt, FormulaError> {
    if d < 3 {
        return Err(FormulaError::DegreeTooSmall { d, min: 3 });
    }
    let d = BigInt::from(d);
    Ok(&d * &d * (&d - 2) * poly_d(&FERMAT_TAIL, &d))
}

pub fn fermat_predegree_poly() -> CoeffPoly {
    let d = CoeffPoly::d();
    &(&d.pow(2) * &(&d - &CoeffPoly::from_int(2))) * &CoeffPoly::in_d(&FERMAT_TAIL)
}

/// Whether `P(d) + 3d·f_{d−2}(d)` equals the Fermat closed form in `ℤ[d]`.
pub fn fermat_identity_holds() -> bool {
    let d = CoeffPoly::d();
    let k = &d - &CoeffPoly::from_int(2);
    let lhs = &simple_flex_predegree_poly()
        + &(&(&CoeffPoly::from_int(3) * &d) * &flex_contribution_poly(&k));
    lhs == fermat_predegree_poly()
}

const CYCLIC_TAIL: [i64; 7] = [-5508, 5463, -1354, -21, 6, 3, 1];

/// Degree of the orbit closure of `x^{d−1}y + y^{d−1}z + z^{d−1}x`, whose
/// stabilizer has order `3(d²−3d+3)`: `(P(d) + 3f_{d−3}(d)) / (3(d²−3d+3))`.
pub fn cyclic_curve_degree(d: u32) -> Result<BigRat, FormulaError> {
    if d < 5 {
        return Err(FormulaError::DegreeTooSmall { d, min: 5 });
    }
    let db = BigInt::from(d);
    let numerator = simple_flex_predegree(d)? + big(3) * flex_contribution(d - 3, &db);
    let aut = big(3) * poly_d(&[3, -3, 1], &db);
    Ok(BigRat::new(numerator, aut))
}

/// `(1/3)(d⁶+3d⁵+6d⁴−21d³−1354d²+5463d−5508)`.
pub fn cyclic_curve_degree_closed(d: u32) -> BigRat {
    BigRat::new(poly_d(&CYCLIC_TAIL, &BigInt::from(d)), big(3))
}

/// Whether `P(d) + 3f_{d−3}(d) = (d²−3d+3)(d⁶+3d⁵+6d⁴−21d³−1354d²+5463d−5508)`
/// in `ℤ[d]`, i.e. the two expressions for the cyclic-curve degree agree.
pub fn cyclic_identity_holds() -> bool {
    let d = CoeffPoly::d();
    let k = &d - &CoeffPoly::from_int(3);
    let lhs =
        &simple_flex_predegree_poly() + &(&CoeffPoly::from_int(3) * &flex_contribution_poly(&k));
    let rhs = &CoeffPoly::in_d(&[3, -3, 1]) * &CoeffPoly::in_d(&CYCLIC_TAIL);
    lhs == rhs
}

fn lin_d(a: i64, b: i64) -> CoeffPoly {
    CoeffPoly::in_d(&[b, a])
}

/// [`first_center_term`] in `ℤ[d]`.
pub fn first_center_poly() -> CoeffPoly {
    &(&CoeffPoly::d() * &lin_d(10, -9)) * &CoeffPoly::in_d(&[21, -33, 14])
}

/// [`second_center_term`] in `ℤ[d]`.
pub fn second_center_poly() -> CoeffPoly {
    &(&CoeffPoly::d() * &lin_d(2, -3)) * &CoeffPoly::in_d(&[1233, -1257, 322])
}

/// [`flex_center_term`] in `ℤ[d, j]`.
pub fn flex_center_poly() -> CoeffPoly {
    let n = CoeffPoly::from_int;
    let (j, dm1) = (CoeffPoly::j(), lin_d(1, -1));
    let quartic = &(&n(30) * &j.pow(4)) - &(&(&n(96) * &dm1) * &j.pow(3));
    let quadratic = &(&(&n(12) * &dm1) * &lin_d(7, -11)) * &j.pow(2);
    let linear = &(&n(84) * &dm1.pow(2)) * &j;
    let constant = &(&n(7) * &lin_d(2, -3)) * &lin_d(22, -39);
    &(&(&quartic + &quadratic) + &linear) - &constant
}

/// The closed-formula summand for one flex of order `r`, in `ℤ[d, r]` with
/// `r` in the `j` slot.
pub fn flex_summand_poly() -> CoeffPoly {
    let n = CoeffPoly::from_int;
    let r = CoeffPoly::j();
    let inner = &(&(&(&n(6) * &r.pow(3)) + &(&lin_d(-24, 75) * &r.pow(2)))
        + &(&CoeffPoly::in_d(&[393, -240, 28]) * &r))
        + &CoeffPoly::in_d(&[1125, -960, 196]);
    &(&r * &(&r - &n(1))) * &inner
}

/// Outcome of one exact polynomial identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// The identity with the computed side filled in.
    pub statement: String,
    pub holds: bool,
}

/// Every identity tying the intersection computation to the closed formulas,
/// checked coefficient by coefficient.
pub fn chow_identity_checks() -> Vec<IdentityCheck> {
    let ci = correction_integrals();
    let n = CoeffPoly::from_int;
    let d = CoeffPoly::d();
    let mut checks = Vec::new();
    let mut push = |name, statement: String, holds| {
        checks.push(IdentityCheck {
            name,
            statement,
            holds,
        })
    };

    for (name, computed, closed, form) in [
        (
            "first center",
            &ci.b,
            first_center_poly(),
            "d(10d-9)(14d^2-33d+21)",
        ),
        (
            "second center",
            &ci.b1,
            second_center_poly(),
            "d(2d-3)(322d^2-1257d+1233)",
        ),
        (
            "flex center",
            &ci.b2,
            CoeffPoly::in_d(&[1125, -960, 196]),
            "196d^2-960d+1125",
        ),
        (
            "iterated flex center",
            &ci.bj,
            flex_center_poly(),
            "30j^4-96(d-1)j^3+12(d-1)(7d-11)j^2+84(d-1)^2j-7(2d-3)(22d-39)",
        ),
    ] {
        push(name, format!("{computed} = {form}"), *computed == closed);
    }

    // Summing the closed-form flex terms over j = 2..r+1 must give r times
    // the first one plus the closed summand, and the engine's sum must agree.
    let closed_sum = flex_center_poly().sum_j_from_two();
    let r = CoeffPoly::j();
    let summand_holds = match &closed_sum {
        Ok(sum) => *sum == ci.per_flex && (sum - &(&r * &ci.b2)) == flex_summand_poly(),
        Err(_) => false,
    };
    let flexes = &(&n(3) * &d) * &(&d - &n(2));
    let lead = &(&(&d.pow(8) - &first_center_poly()) - &second_center_poly())
        - &(&flexes * &CoeffPoly::in_d(&[1125, -960, 196]));
    push(
        "blow-up assembly",
        format!(
            "sum_(j=2)^(r+1) of the flex term = r(196d^2-960d+1125) + {}; d^8 - corrections = {lead}",
            flex_summand_poly()
        ),
        summand_holds && lead == closed_form_lead_poly(),
    );

    let simple = predegree_via_chow_all_simple();
    push(
        "simple-flex predegree",
        format!("{simple} = P(d)"),
        simple == simple_flex_predegree_poly() && closed_form_lead_poly() == simple,
    );
    push(
        "fermat",
        format!("P(d) + 3d f_(d-2)(d) = {}", fermat_predegree_poly()),
        fermat_identity_holds(),
    );
    push(
        "cyclic",
        "(P(d) + 3 f_(d-3)(d)) / (3(d^2-3d+3)) = (d^6+3d^5+6d^4-21d^3-1354d^2+5463d-5508)/3"
            .to_string(),
        cyclic_identity_holds(),
    );
    checks
}

/// One row of the table of `P(d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub d: u32,
    pub predegree: BigInt,
    pub factorization: Vec<(BigUint, u32)>,
}

impl TableRow {
    /// `2^3*3^3` style.
    pub fn factorization_string(&self) -> String {
        format_factorization(&self.factorization)
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            self.d,
            self.predegree,
            self.factorization_string()
        )
    }
}

pub fn table_rows(from: u32, to: u32) -> Result<Vec<TableRow>, FormulaError> {
    if from < 3 || from > to {
        return Err(FormulaError::BadRange { from, to });
    }
    (from..=to)
        .map(|d| {
            let predegree = simple_flex_predegree(d)?;
            let magnitude = predegree.magnitude().clone();
            let factorization = factor_integer(&magnitude).expect("P(d) > 0 for d >= 3");
            Ok(TableRow {
                d,
                predegree,
                factorization,
            })
        })
        .collect()
}

/// Primes excluded by a Hurwitz-formula argument, beyond the genus bound.
const HURWITZ_EXCLUSIONS: [(u32, u32); 3] = [(4, 5), (6, 17), (10, 59)];

/// Bound for the l.c.m. of the automorphism-group orders of smooth curves of
/// degree `d` with only simple flexes: `P(d)` with every prime power `p^a`
/// removed when `p > d² − 3d + 3` (no automorphism of such prime order
/// exists), and with the three primes ruled out individually.
pub fn aut_lcm_bound(d: u32) -> Result<BigInt, FormulaError> {
    if !(3..=10).contains(&d) {
        return Err(FormulaError::OutsideVerifiedRange(d));
    }
    let row = &table_rows(d, d)?[0];
    let limit = BigUint::from(d * d - 3 * d + 3);
    let kept = row.factorization.iter().filter(|(p, _)| {
        *p <= limit && !HURWITZ_EXCLUSIONS.contains(&(d, p.try_into().unwrap_or(0)))
    });
    let product = kept.fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
    Ok(BigInt::from_biguint(Sign::Plus, product))
}

/// Predegree of one flex profile by every route, with an optional degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredegreeReport {
    pub d: u32,
    pub profile: FlexProfile,
    pub sums: FlexSums,
    pub corrections: Corrections,
    pub blow_up_sum: BigInt,
    pub closed_form: BigInt,
    pub power_sums: BigInt,
    pub chow: BigInt,
    pub predegree: BigInt,
    pub aut_order: Option<BigInt>,
    pub degree: Option<BigInt>,
    pub factorization: Vec<(BigUint, u32)>,
}

impl PredegreeReport {
    /// Evaluates all routes; fails if they disagree or if `aut_order` does
    /// not divide the predegree.
    pub fn new(profile: &FlexProfile, aut_order: Option<BigInt>) -> Result<Self, FormulaError> {
        let d = profile.degree();
        let sums = f_sums(profile);
        let corrections = Corrections::of(profile);
        let blow_up_sum = corrections.predegree();
        let closed_form = predegree_closed_form(profile);
        let power_sums = predegree_from_power_sums(d, &sums);
        let chow = predegree_via_chow(profile);
        if !(blow_up_sum == closed_form && closed_form == power_sums && power_sums == chow) {
            return Err(FormulaError::RouteDisagreement(format!(
                "blow-up sum {blow_up_sum}, closed form {closed_form}, power sums {power_sums}, chow {chow}"
            )));
        }
        let degree = match &aut_order {
            Some(aut) => Some(orbit_degree(&blow_up_sum, aut)?),
            None => None,
        };
        let factorization = if blow_up_sum.is_zero() {
            Vec::new()
        } else {
            factor_integer(blow_up_sum.magnitude()).expect("nonzero")
        };
        Ok(PredegreeReport {
            d,
            profile: profile.clone(),
            sums,
            corrections,
            predegree: blow_up_sum.clone(),
            blow_up_sum,
            closed_form,
            power_sums,
            chow,
            aut_order,
            degree,
            factorization,
        })
    }

    pub fn factorization_string(&self) -> String {
        let body = format_factorization(&self.factorization);
        if self.predegree.is_negative() {
            format!("-{body}")
        } else {
            body
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flex_center_term_at_two() {
        for d in 3..10 {
            let d = big(d);
            assert_eq!(
                flex_center_term(&d, &big(2)),
                poly_d(&[1125, -960, 196], &d)
            );
        }
    }

    #[test]
    fn numeric_terms_match_polynomials() {
        for d in 3..12 {
            let db = big(d);
            assert_eq!(first_center_term(&db), first_center_poly().eval_d(&db));
            assert_eq!(second_center_term(&db), second_center_poly().eval_d(&db));
            for j in 2..8 {
                assert_eq!(
                    flex_center_term(&db, &big(j)),
                    flex_center_poly().eval(&db, &big(j))
                );
            }
        }
    }

    #[test]
    fn second_flex_contribution() {
        // f_2(d) = -6(84d^2 - 512d + 753)
        let expected = &CoeffPoly::from_int(-6) * &CoeffPoly::in_d(&[753, -512, 84]);
        assert_eq!(flex_contribution_poly(&CoeffPoly::from_int(2)), expected);
        assert_eq!(flex_contribution(2, &big(4)), big(-294));
        assert_eq!(flex_contribution(2, &big(5)), big(-1758));
        assert!(flex_contribution(1, &big(7)).is_zero());
    }

    #[test]
    fn orbit_degree_errors() {
        assert_eq!(orbit_degree(&big(14280), &big(168)).unwrap(), big(85));
        assert!(matches!(
            orbit_degree(&big(10752), &big(97)),
            Err(FormulaError::NonDivisible { .. })
        ));
        assert_eq!(
            orbit_degree(&big(10752), &big(0)),
            Err(FormulaError::ZeroAutomorphismOrder)
        );
    }
}
