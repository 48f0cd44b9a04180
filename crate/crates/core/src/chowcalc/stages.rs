use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;

use super::{expand_truncated, ChowError, ClassMonomial, CoeffPoly, Gen, GradedClass};
use crate::flexlab::FlexProfile;

/// The spaces that classes live on. Each blow-up center is a projective
/// bundle over the previous space, down to a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Point,
    /// The plane, with hyperplane class `k` (`k^2 = 1`).
    Plane,
    /// First center, classes `k, h` with `k^2 h = d`.
    B,
    /// Bundle over `B` with fibre class `e`.
    B1,
    /// Bundle over the plane with fibre class `e`.
    B2,
    /// Bundle over the previous flex center with fibre class `f`.
    Bj,
}

impl Space {
    pub fn dimension(self) -> u32 {
        match self {
            Space::Point => 0,
            Space::Plane => 2,
            Space::B | Space::B2 => 3,
            Space::B1 | Space::Bj => 4,
        }
    }

    /// Where [`pushforward`] lands.
    pub fn base(self) -> Option<Space> {
        match self {
            Space::Point => None,
            Space::Plane | Space::B => Some(Space::Point),
            Space::B1 => Some(Space::B),
            Space::B2 => Some(Space::Plane),
            Space::Bj => Some(Space::B2),
        }
    }

    /// The fibre class of a projective bundle.
    pub fn fibre_generator(self) -> Option<Gen> {
        match self {
            Space::B1 | Space::B2 => Some(Gen::E),
            Space::Bj => Some(Gen::F),
            _ => None,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Space::Point => "point",
            Space::Plane => "plane",
            Space::B => "B",
            Space::B1 => "B1",
            Space::B2 => "B2",
            Space::Bj => "Bj",
        };
        f.write_str(name)
    }
}

/// The four blow-up centers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    B,
    B1,
    B2,
    Bj,
}

impl Stage {
    pub const ALL: [Stage; 4] = [Stage::B, Stage::B1, Stage::B2, Stage::Bj];

    pub fn space(self) -> Space {
        match self {
            Stage::B => Space::B,
            Stage::B1 => Space::B1,
            Stage::B2 => Space::B2,
            Stage::Bj => Space::Bj,
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.space().fmt(f)
    }
}

/// Everything the blow-up formula needs about one center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterSpec {
    pub stage: Stage,
    pub dimension: u32,
    /// Pullback of the point-condition class.
    pub point_condition: GradedClass,
    /// Contribution of the exceptional divisors of earlier blow-ups.
    pub divisor: GradedClass,
    /// Total Chern class of the normal bundle.
    pub normal_chern: GradedClass,
}

fn c(v: i64) -> CoeffPoly {
    CoeffPoly::from_int(v)
}

impl CenterSpec {
    pub fn for_stage(stage: Stage) -> CenterSpec {
        let t = stage.space().dimension();
        let d = CoeffPoly::d;
        let one = GradedClass::one(t);
        let lin = |parts: &[(CoeffPoly, Gen)]| GradedClass::linear(parts, t);
        let unit = |parts: &[(CoeffPoly, Gen)]| &one + &lin(parts);
        let (point_condition, divisor, factors) = match stage {
            Stage::B => (
                lin(&[(d(), Gen::K), (d(), Gen::H)]),
                GradedClass::zero(t),
                // (1+k+h)^9 (1+dh) / ((1+k)^3 (1+h)^3)
                vec![
                    (unit(&[(c(1), Gen::K), (c(1), Gen::H)]), 9),
                    (unit(&[(d(), Gen::H)]), 1),
                    (unit(&[(c(1), Gen::K)]), -3),
                    (unit(&[(c(1), Gen::H)]), -3),
                ],
            ),
            Stage::B1 => (
                lin(&[(d(), Gen::K), (d(), Gen::H)]),
                lin(&[(c(-1), Gen::E)]),
                // (1+e)(1+k+dh-e)^3
                vec![
                    (unit(&[(c(1), Gen::E)]), 1),
                    (unit(&[(c(1), Gen::K), (d(), Gen::H), (c(-1), Gen::E)]), 3),
                ],
            ),
            Stage::B2 => (
                lin(&[(d(), Gen::K)]),
                lin(&[(c(-2), Gen::E)]),
                // (1+e)(1+k-2e)^3
                vec![
                    (unit(&[(c(1), Gen::E)]), 1),
                    (unit(&[(c(1), Gen::K), (c(-2), Gen::E)]), 3),
                ],
            ),
            Stage::Bj => {
                let j_minus_2 = &CoeffPoly::j() - &c(2);
                (
                    lin(&[(d(), Gen::K)]),
                    lin(&[(c(-2), Gen::E), (-&j_minus_2, Gen::F)]),
                    // (1+f)(1+k-2e-(j-2)f)^3
                    vec![
                        (unit(&[(c(1), Gen::F)]), 1),
                        (
                            unit(&[(c(1), Gen::K), (c(-2), Gen::E), (-j_minus_2, Gen::F)]),
                            3,
                        ),
                    ],
                )
            }
        };
        let normal_chern = expand_truncated(&factors, t).expect("all factors are units");
        CenterSpec {
            stage,
            dimension: t,
            point_condition,
            divisor,
            normal_chern,
        }
    }

    /// `point_condition + divisor`, the class raised to the eighth power.
    pub fn total_class(&self) -> GradedClass {
        &self.point_condition + &self.divisor
    }
}

/// Images of the fibre-class powers `ζ^0, ζ^1, …` under pushforward to the
/// base, where `ζ` is the fibre generator of `space`.
pub fn pushforward_table(space: Space) -> Vec<GradedClass> {
    let Some(base) = space.base() else {
        return Vec::new();
    };
    let t = base.dimension();
    let d = CoeffPoly::d;
    let mono = |m: ClassMonomial, coeff: CoeffPoly| GradedClass::monomial(m, coeff, t);
    let zero = GradedClass::zero(t);
    let minus_one = GradedClass::constant(c(-1), t);
    match space {
        Space::B1 => vec![
            zero,
            minus_one,
            // -3k + 2dh - 6h
            &mono([1, 0, 0, 0], c(-3)) + &mono([0, 1, 0, 0], CoeffPoly::in_d(&[-6, 2])),
            // -6k^2 + 9dkh - 27kh
            &mono([2, 0, 0, 0], c(-6)) + &mono([1, 1, 0, 0], CoeffPoly::in_d(&[-27, 9])),
            // 24dk^2h - 72k^2h
            mono([2, 1, 0, 0], &d() * &c(24) - c(72)),
        ],
        Space::B2 => vec![
            zero,
            minus_one,
            mono([1, 0, 0, 0], c(-3)),
            mono([2, 0, 0, 0], c(-6)),
        ],
        Space::Bj => vec![
            zero,
            minus_one,
            mono([0, 0, 1, 0], c(-1)),
            mono([0, 0, 2, 0], c(-1)),
            mono([0, 0, 3, 0], c(-1)),
        ],
        _ => Vec::new(),
    }
}

/// Pushes a class one level down, to `space.base()`.
///
/// On bundles each fibre power is replaced through [`pushforward_table`] and
/// base classes ride along by the projection formula. From `B` and the plane
/// to a point only the top-degree monomials survive: `k^2 h ↦ d` on `B`,
/// `k^2 ↦ 1` on the plane.
pub fn pushforward(c: &GradedClass, space: Space) -> Result<GradedClass, ChowError> {
    match space {
        Space::Point => Err(ChowError::NothingBelow),
        Space::B | Space::Plane => {
            let (top, value) = if space == Space::B {
                ([2, 1, 0, 0], CoeffPoly::d())
            } else {
                ([2, 0, 0, 0], CoeffPoly::one())
            };
            let total = &c.coefficient(&top) * &value;
            Ok(GradedClass::constant(total, 0))
        }
        Space::B1 | Space::B2 | Space::Bj => {
            let gen = space.fibre_generator().expect("bundle");
            let table = pushforward_table(space);
            let base_t = space.base().expect("bundle").dimension();
            let mut out = GradedClass::zero(base_t);
            for (m, coeff) in c.terms() {
                let power = m[gen as usize] as usize;
                let image = table.get(power).ok_or(ChowError::PowerBeyondTable {
                    power: power as u32,
                    space,
                })?;
                let mut base_mono = *m;
                base_mono[gen as usize] = 0;
                let base = GradedClass::monomial(base_mono, coeff.clone(), base_t);
                out = &out + &(&base * image);
            }
            Ok(out)
        }
    }
}

/// Pushes all the way down to a point.
pub fn integrate(c: &GradedClass, space: Space) -> Result<CoeffPoly, ChowError> {
    let mut class = c.clone();
    let mut here = space;
    while let Some(base) = here.base() {
        class = pushforward(&class, here)?;
        here = base;
    }
    Ok(class.constant_term())
}

/// `∫ (total class)^8 / c(N)` over the center: the top-degree part of
/// `(1 + P)^8 · c(N)^{-1}`, integrated.
pub fn correction_integral(stage: Stage) -> CoeffPoly {
    let spec = CenterSpec::for_stage(stage);
    let t = spec.dimension;
    let one_plus_p = &GradedClass::one(t) + &spec.total_class();
    let integrand = expand_truncated(&[(one_plus_p, 8), (spec.normal_chern.clone(), -1)], t)
        .expect("normal bundle classes are units");
    integrate(&integrand.homogeneous_part(t), stage.space())
        .expect("integrand stays within the pushforward tables")
}

/// The four correction integrals, computed once per process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectionIntegrals {
    pub b: CoeffPoly,
    pub b1: CoeffPoly,
    /// Per flex.
    pub b2: CoeffPoly,
    /// Per flex and per `j ≥ 2`, in `ℤ[d, j]`.
    pub bj: CoeffPoly,
    /// `Σ_{j=2}^{r+1} bj` for a flex of order `r`, with `r` in the `j` slot.
    pub per_flex: CoeffPoly,
}

pub fn correction_integrals() -> &'static CorrectionIntegrals {
    static CACHE: OnceLock<CorrectionIntegrals> = OnceLock::new();
    CACHE.get_or_init(|| {
        let bj = correction_integral(Stage::Bj);
        let per_flex = bj
            .sum_j_from_two()
            .expect("the flex correction sums to an integral polynomial");
        CorrectionIntegrals {
            b: correction_integral(Stage::B),
            b1: correction_integral(Stage::B1),
            b2: correction_integral(Stage::B2),
            bj,
            per_flex,
        }
    })
}

/// `d^8` minus every correction integral: the first two centers once each,
/// then for each flex of order `r` the centers `j = 2, …, r + 1`.
pub fn predegree_via_chow(profile: &FlexProfile) -> BigInt {
    let ci = correction_integrals();
    let d = BigInt::from(profile.degree());
    let mut total = num_traits::pow(d.clone(), 8) - ci.b.eval_d(&d) - ci.b1.eval_d(&d);
    for (&r, &count) in profile.counts() {
        total -= ci.per_flex.eval(&d, &BigInt::from(r)) * BigInt::from(count);
    }
    total
}

/// The predegree for `3d(d−2)` simple flexes, as a polynomial in `d`.
pub fn predegree_via_chow_all_simple() -> CoeffPoly {
    let ci = correction_integrals();
    let d = CoeffPoly::d();
    let flexes = &(&d * &(&d - &c(2))) * &c(3);
    &(&(&d.pow(8) - &ci.b) - &ci.b1) - &(&flexes * &ci.b2)
}
