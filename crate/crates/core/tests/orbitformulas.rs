use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use orbit_core::chowcalc::CoeffPoly;
use orbit_core::exactpoly::BigRat;
use orbit_core::flexlab::{f_sums, FlexProfile, FlexSums};
use orbit_core::orbitformulas::*;
use proptest::prelude::*;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Random profile of degree `d`: flexes of random order peeled off the
/// weighted total `3d(d−2)` until it is used up.
fn random_profile(d: u32) -> impl Strategy<Value = FlexProfile> {
    proptest::collection::vec(1u32..=d - 2, 64).prop_map(move |orders| {
        let mut left = 3 * d as u64 * (d as u64 - 2);
        let mut pairs: std::collections::BTreeMap<u32, u64> = Default::default();
        for r in orders {
            if left == 0 {
                break;
            }
            let r = (r as u64).min(left) as u32;
            *pairs.entry(r).or_default() += 1;
            left -= r as u64;
        }
        *pairs.entry(1).or_default() += left;
        let pairs: Vec<(u32, u64)> = pairs.into_iter().filter(|(_, c)| *c > 0).collect();
        FlexProfile::from_pairs(d, &pairs).unwrap()
    })
}

/// Power sums computed straight from the list of flex orders.
fn sums_by_listing(p: &FlexProfile) -> FlexSums {
    let orders: Vec<u128> = p
        .counts()
        .iter()
        .flat_map(|(&r, &c)| std::iter::repeat_n(r as u128, c as usize))
        .collect();
    let s = |e: u32| orders.iter().map(|r| r.pow(e)).sum();
    FlexSums {
        f2: s(2),
        f3: s(3),
        f4: s(4),
        f5: s(5),
    }
}

proptest! {
    #[test]
    fn routes_agree(p in (3u32..=12).prop_flat_map(random_profile)) {
        let d = p.degree();
        let a = predegree_by_blowups(&p);
        prop_assert_eq!(&a, &predegree_closed_form(&p));
        prop_assert_eq!(&a, &predegree_from_power_sums(d, &sums_by_listing(&p)));
        let report = PredegreeReport::new(&p, None).unwrap();
        prop_assert_eq!(report.predegree, a);
        prop_assert_eq!(report.sums, sums_by_listing(&p));
    }

    /// Merging `k` simple flexes into one of order `k` shifts the predegree by `f_k(d)`.
    #[test]
    fn merging_flexes_costs_f_k(d in 4u32..=12, k in 2u32..=10) {
        prop_assume!(k <= d - 2);
        let n = 3 * d as u64 * (d as u64 - 2);
        let merged = FlexProfile::from_pairs(d, &[(1, n - k as u64), (k, 1)]).unwrap();
        let simple = FlexProfile::all_simple(d).unwrap();
        prop_assert_eq!(
            predegree_closed_form(&merged) - predegree_closed_form(&simple),
            flex_contribution(k, &BigInt::from(d))
        );
    }
}

#[test]
fn quartics_with_hyperflexes() {
    for n in 0..=12u64 {
        let p = FlexProfile::from_pairs(4, &[(1, 24 - 2 * n), (2, n)]).unwrap();
        let expected = big(14280) - big(294) * n;
        assert_eq!(PredegreeReport::new(&p, None).unwrap().predegree, expected);
    }
}

#[test]
fn flex_contributions_are_negative() {
    for k in 2..=20u32 {
        for d in k + 2..=40 {
            assert!(
                flex_contribution(k, &big(d as i64)).is_negative(),
                "k={k} d={d}"
            );
        }
    }
}

#[test]
fn closed_form_lead_is_the_simple_predegree() {
    assert_eq!(closed_form_lead_poly(), simple_flex_predegree_poly());
    for d in 3..=15 {
        let p = FlexProfile::all_simple(d).unwrap();
        assert_eq!(predegree_closed_form(&p), simple_flex_predegree(d).unwrap());
    }
}

#[test]
fn simple_predegree_values() {
    let expected = [
        216i64, 14280, 188340, 1119960, 4508280, 14318256, 38680740, 92790480,
    ];
    for (d, v) in (3..=10).zip(expected) {
        assert_eq!(simple_flex_predegree(d).unwrap(), big(v));
    }
    assert!(matches!(
        simple_flex_predegree(2),
        Err(FormulaError::DegreeTooSmall { d: 2, min: 3 })
    ));
}

#[test]
fn table_rows_and_factorizations() {
    let rows = table_rows(3, 10).unwrap();
    let shown: Vec<String> = rows.iter().map(|r| r.factorization_string()).collect();
    assert_eq!(
        shown,
        [
            "2^3*3^3",
            "2^3*3*5*7*17",
            "2^2*3*5*43*73",
            "2^3*3^3*5*17*61",
            "2^3*3^2*5*7*1789",
            "2^4*3*317*941",
            "2^2*3^6*5*7*379",
            "2^4*3*5*59*6553",
        ]
    );
    assert_eq!(rows[0].to_string(), "3 216 2^3*3^3");
    assert_eq!(
        table_rows(5, 4),
        Err(FormulaError::BadRange { from: 5, to: 4 })
    );
    assert_eq!(
        table_rows(2, 4),
        Err(FormulaError::BadRange { from: 2, to: 4 })
    );
}

#[test]
fn automorphism_bounds() {
    let expected = [216i64, 168, 60, 1080, 2520, 48, 102060, 240];
    for (d, v) in (3..=10).zip(expected) {
        assert_eq!(aut_lcm_bound(d).unwrap(), big(v), "d={d}");
        // the bound divides P(d)
        let p = simple_flex_predegree(d).unwrap();
        assert!((p % big(v)).is_zero());
    }
    assert_eq!(
        aut_lcm_bound(11),
        Err(FormulaError::OutsideVerifiedRange(11))
    );
    assert_eq!(aut_lcm_bound(2), Err(FormulaError::OutsideVerifiedRange(2)));
}

#[test]
fn fermat_curves() {
    assert!(fermat_identity_holds());
    assert_eq!(fermat_predegree(4).unwrap(), big(10752));
    assert_eq!(fermat_predegree(3).unwrap(), big(216));
    for d in 3..=12 {
        let p = FlexProfile::from_pairs(d, &[(d - 2, 3 * d as u64)]).unwrap();
        assert_eq!(predegree_by_blowups(&p), fermat_predegree(d).unwrap());
    }
    assert!(fermat_predegree(2).is_err());
}

#[test]
fn cyclic_curves() {
    assert!(cyclic_identity_holds());
    assert_eq!(
        cyclic_curve_degree(5).unwrap(),
        BigRat::from_integer(big(4694))
    );
    for d in 5..=20 {
        assert_eq!(
            cyclic_curve_degree(d).unwrap(),
            cyclic_curve_degree_closed(d)
        );
        // three flexes of order d-3, the rest simple
        let rest = 3 * d as u64 * (d as u64 - 2) - 3 * (d as u64 - 3);
        let p = FlexProfile::from_pairs(d, &[(1, rest), (d - 3, 3)]).unwrap();
        let aut = big(3) * big((d * d - 3 * d + 3) as i64);
        let degree = orbit_degree(&predegree_by_blowups(&p), &aut).unwrap();
        assert_eq!(
            BigRat::from_integer(degree),
            cyclic_curve_degree(d).unwrap()
        );
    }
    assert_eq!(
        cyclic_curve_degree(4),
        Err(FormulaError::DegreeTooSmall { d: 4, min: 5 })
    );
}

#[test]
fn worked_examples() {
    type Case<'a> = (&'a [(u32, u64)], u32, i64, i64);
    let cases: [Case; 6] = [
        (&[(1, 24)], 4, 168, 85),
        (&[(2, 12)], 4, 96, 112),
        (&[(1, 22), (2, 1)], 4, 9, 1554),
        (&[(1, 9)], 3, 18, 12),
        (&[(1, 9)], 3, 36, 6),
        (&[(1, 9)], 3, 54, 4),
    ];
    for (pairs, d, aut, degree) in cases {
        let p = FlexProfile::from_pairs(d, pairs).unwrap();
        let report = PredegreeReport::new(&p, Some(big(aut))).unwrap();
        assert_eq!(report.degree, Some(big(degree)), "{p}");
    }
    let fermat4 = FlexProfile::from_pairs(4, &[(2, 12)]).unwrap();
    assert!(matches!(
        PredegreeReport::new(&fermat4, Some(big(97))),
        Err(FormulaError::NonDivisible { .. })
    ));
    let report = PredegreeReport::new(&fermat4, None).unwrap();
    assert_eq!(report.factorization_string(), "2^9*3*7");
    assert_eq!(report.sums, f_sums(&fermat4));
}

#[test]
fn symbolic_flex_contribution_matches_numeric() {
    for k in 1..=8u32 {
        let poly = flex_contribution_poly(&CoeffPoly::from_int(k as i64));
        for d in 3..=12 {
            assert_eq!(poly.eval_d(&big(d)), flex_contribution(k, &big(d)));
        }
    }
}

#[test]
fn every_chow_identity_holds() {
    let checks = chow_identity_checks();
    assert_eq!(checks.len(), 8);
    for c in &checks {
        assert!(c.holds, "{}: {}", c.name, c.statement);
    }
}

#[test]
fn correction_breakdown_for_the_klein_quartic() {
    let report = PredegreeReport::new(&FlexProfile::all_simple(4).unwrap(), None).unwrap();
    let c = &report.corrections;
    assert_eq!(c.leading, big(65536));
    assert_eq!(c.first_center, big(14012));
    assert_eq!(c.second_center, big(27140));
    assert_eq!(c.flex_centers, big(24 * 421));
    assert_eq!(c.predegree(), big(14280));
}
