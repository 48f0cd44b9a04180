use std::collections::BTreeMap;

use orbit_core::exactpoly::BigRat;
use orbit_core::flexlab::{
    analyze_flexes, check_smooth, f_sums, flex_order_at, flex_profile, rational_point, FlexError,
    FlexProfile, PlaneCurve,
};
use orbit_core::polyparse::parse_form;
use proptest::prelude::*;

fn curve(src: &str) -> PlaneCurve {
    PlaneCurve::parse(src).unwrap()
}

fn fermat(d: u32) -> String {
    format!("x^{d} + y^{d} + z^{d}")
}

fn cyclic(d: u32) -> String {
    let e = d - 1;
    format!("x^{e}*y + y^{e}*z + z^{e}*x")
}

#[test]
fn fermat_flexes_have_maximal_order() {
    for d in 3..=6 {
        let p = flex_profile(&curve(&fermat(d)), 0).unwrap();
        assert_eq!(
            p,
            FlexProfile::from_pairs(d, &[(d - 2, 3 * d as u64)]).unwrap(),
            "d = {d}"
        );
    }
}

#[test]
fn cyclic_curves_have_three_special_flexes() {
    for d in [5, 6] {
        let p = flex_profile(&curve(&cyclic(d)), 0).unwrap();
        assert_eq!(p.count(d - 3), 3, "d = {d}");
        let simple = 3 * (d * d - 3 * d + 3) as u64;
        assert_eq!(p.count(1), simple, "d = {d}");
        let weighted: u64 = p.counts().iter().map(|(&r, &c)| r as u64 * c).sum();
        assert_eq!(weighted, 3 * (d * (d - 2)) as u64);
        // the coordinate points are the special flexes
        let c = curve(&cyclic(d));
        for pt in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
            assert_eq!(flex_order_at(&c, &rational_point(pt)).unwrap(), d - 3);
        }
    }
}

#[test]
fn profiles_do_not_depend_on_seed() {
    for src in [
        "x^3*y + y^3*z + z^3*x",
        "x^4 + x*y^3 + y*z^3",
        "x^4 + y^4 + z^4",
    ] {
        let c = curve(src);
        let p0 = flex_profile(&c, 0).unwrap();
        for seed in [1, 2, 17, 12345] {
            assert_eq!(flex_profile(&c, seed).unwrap(), p0, "{src}, seed {seed}");
        }
    }
}

#[test]
fn sums_of_fermat_sextic() {
    let p = flex_profile(&curve(&fermat(6)), 3).unwrap();
    let s = f_sums(&p);
    assert_eq!((s.f2, s.f3, s.f4, s.f5), (288, 1152, 4608, 18432));
}

/// Every rational flex found by brute force agrees with the analysis.
#[test]
fn point_search_matches_analysis() {
    let sources = [
        "x^3 + y^3 + z^3",
        "x^4 + x*y^3 + y*z^3",
        "x^3*y + y^3*z + z^3*x",
        "x^4*y + y^4*z + z^4*x",
        "x^3 + y^3 - 2*z^3",
    ];
    for src in sources {
        let c = curve(src);
        let analysis = analyze_flexes(&c, 0).unwrap();
        let mut found = 0;
        for q in small_points(3) {
            if !c.contains(&q) {
                continue;
            }
            let order = flex_order_at(&c, &q).unwrap();
            assert_eq!(
                analysis.order_at_point(&q).unwrap(),
                order,
                "{src} at {q:?}"
            );
            if order > 0 {
                found += 1;
                assert!(analysis.profile().count(order) > 0);
            }
        }
        assert!(found > 0, "{src} has rational flexes");
    }
}

fn small_points(r: i64) -> Vec<[BigRat; 3]> {
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                let first = [a, b, c].into_iter().find(|&v| v != 0);
                if first.is_some_and(|v| v > 0) {
                    out.push(rational_point([a, b, c]));
                }
            }
        }
    }
    out
}

#[test]
fn singular_curves_are_rejected() {
    let err = PlaneCurve::parse("x^2*z - y^3").unwrap_err();
    assert!(matches!(err, FlexError::SingularCurve { witness: Some(_) }));
    assert!(matches!(
        PlaneCurve::parse("x*y*z"),
        Err(FlexError::SingularCurve { .. })
    ));
    assert!(matches!(
        PlaneCurve::parse("x^2 + y^3"),
        Err(FlexError::Parse(_))
    ));
    let (f, _) = parse_form("x^2 + y^2 + z^2").unwrap();
    assert_eq!(check_smooth(&f), Err(FlexError::DegreeTooSmall(2)));
}

fn random_form(d: u32, coeffs: &[i64]) -> String {
    let mut terms = Vec::new();
    let mut k = 0;
    for a in 0..=d {
        for b in 0..=d - a {
            let c = d - a - b;
            terms.push(format!("({})*x^{a}*y^{b}*z^{c}", coeffs[k % coeffs.len()]));
            k += 1;
        }
    }
    terms.join(" + ")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn weighted_count_and_seed_independence(
        d in 3u32..=4,
        coeffs in proptest::collection::vec(-3i64..=3, 15),
    ) {
        let (f, _) = parse_form(&random_form(d, &coeffs)).unwrap_or_else(|_| parse_form(&fermat(d)).unwrap());
        let Ok(c) = check_smooth(&f) else { return Ok(()); };
        let p = flex_profile(&c, 0).unwrap();
        let weighted: u128 = p.counts().iter().map(|(&r, &n)| r as u128 * n as u128).sum();
        prop_assert_eq!(weighted, FlexProfile::weighted_total(d));
        prop_assert!(p.counts().keys().all(|&r| r <= d - 2));
        prop_assert_eq!(flex_profile(&c, 9).unwrap(), p);
    }

    #[test]
    fn sums_are_monotone(counts in proptest::collection::btree_map(1u32..=5, 0u64..=20, 0..5)) {
        // complete an arbitrary partial profile with simple flexes in degree 7
        let d = 7;
        let mut counts: BTreeMap<u32, u64> = counts;
        counts.remove(&1);
        let used: u64 = counts.iter().map(|(&r, &c)| r as u64 * c).sum();
        let total = FlexProfile::weighted_total(d) as u64;
        prop_assume!(used <= total);
        counts.insert(1, total - used);
        let p = FlexProfile::new(d, counts).unwrap();
        let s = f_sums(&p);
        prop_assert!(s.f2 <= s.f3 && s.f3 <= s.f4 && s.f4 <= s.f5);
    }
}
