use num_bigint::BigUint;
use num_traits::{One, Zero};
use orbit_core::exactpoly::{
    factor_integer, resultant, resultant_interpolated, squarefree_decompose, unipoly_resultant,
    xyz, BigRat, MultiPoly, UniPoly,
};
use orbit_core::polyparse::parse_polynomial;
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = BigRat> {
    (-20i64..=20, 1i64..=4).prop_map(|(n, d)| BigRat::new(n.into(), d.into()))
}

fn multipoly(max_deg: u32) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(((0..=max_deg, 0..=max_deg, 0..=max_deg), rat()), 0..6).prop_map(
        |terms| {
            MultiPoly::from_terms(
                xyz(),
                terms.into_iter().map(|((a, b, c), k)| (vec![a, b, c], k)),
            )
            .unwrap()
        },
    )
}

fn form(d: u32) -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(((0..=d), (0..=d), rat()), 1..8).prop_map(move |terms| {
        MultiPoly::from_terms(
            xyz(),
            terms.into_iter().map(|(a, b, k)| {
                let a = a.min(d);
                let b = b.min(d - a);
                (vec![a, b, d - a - b], k)
            }),
        )
        .unwrap()
    })
}

fn unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(-9i64..=9, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c))
}

fn nonzero_unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    unipoly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(a in multipoly(3), b in multipoly(3), c in multipoly(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn euler_identity(f in form(6)) {
        let Some(deg) = f.homogeneous_degree() else { return Ok(()); };
        let vars = ["x", "y", "z"];
        let mut sum = MultiPoly::zero(xyz());
        for v in vars {
            let var = MultiPoly::var(xyz(), v).unwrap();
            sum = &sum + &(&var * &f.differentiate(v).unwrap());
        }
        prop_assert_eq!(sum, f.scale(&BigRat::from_integer(deg.into())));
    }

    #[test]
    fn resultant_is_multiplicative(f in nonzero_unipoly(4), g in nonzero_unipoly(4), h in nonzero_unipoly(3)) {
        let gh = &g * &h;
        let lhs = unipoly_resultant(&f, &g).unwrap() * unipoly_resultant(&f, &h).unwrap();
        prop_assert_eq!(lhs, unipoly_resultant(&f, &gh).unwrap());
    }

    #[test]
    fn resultant_antisymmetry(f in nonzero_unipoly(5), g in nonzero_unipoly(5)) {
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let sign = if (m * n) % 2 == 0 { BigRat::one() } else { -BigRat::one() };
        prop_assert_eq!(unipoly_resultant(&f, &g).unwrap(), sign * unipoly_resultant(&g, &f).unwrap());
    }

    #[test]
    fn resultant_vanishes_on_common_root(f in nonzero_unipoly(3), g in nonzero_unipoly(3), r in -5i64..=5) {
        let lin = UniPoly::from_ints(&[-r, 1]);
        prop_assert!(unipoly_resultant(&(&f * &lin), &(&g * &lin)).unwrap().is_zero());
    }

    #[test]
    fn interpolated_resultant_matches_bareiss(f in multipoly(2), g in multipoly(2)) {
        // restrict to x, y by setting z = 1
        let one = BigRat::one();
        let (f, g) = (f.evaluate_var(2, &one), g.evaluate_var(2, &one));
        prop_assume!(f.degree_in(1).unwrap_or(0) > 0 || g.degree_in(1).unwrap_or(0) > 0);
        prop_assume!(!f.is_zero() && !g.is_zero());
        let slow = resultant(&f, &g, "y").unwrap();
        prop_assert_eq!(resultant_interpolated(&f, &g, "y", false).unwrap(), slow.clone());
        prop_assert_eq!(resultant_interpolated(&f, &g, "y", true).unwrap(), slow);
    }

    #[test]
    fn squarefree_reconstructs(parts in proptest::collection::vec((unipoly(2), 1u32..=3), 1..4)) {
        let f = parts.iter().fold(UniPoly::one(), |acc, (p, e)| {
            if p.is_zero() { acc } else { &acc * &p.pow(*e) }
        });
        let sq = squarefree_decompose(&f).unwrap();
        prop_assert_eq!(sq.expand(), f);
        for (i, (mi, gi)) in sq.factors.iter().enumerate() {
            prop_assert_eq!(gi.gcd(&gi.derivative()).degree(), Some(0));
            for (mj, gj) in &sq.factors[i + 1..] {
                prop_assert!(mi < mj);
                prop_assert_eq!(gi.gcd(gj).degree(), Some(0));
            }
        }
    }

    #[test]
    fn factorization_multiplies_back(n in 1u64..=u64::MAX) {
        let big = BigUint::from(n);
        let factors = factor_integer(&big).unwrap();
        let product = factors.iter().fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        prop_assert_eq!(product, big);
        for w in factors.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn print_then_parse_round_trips(p in multipoly(4)) {
        prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }
}

#[test]
fn display_examples() {
    let p = parse_polynomial("(x+y)^2").unwrap();
    assert_eq!(p.to_string(), "x^2 + 2*x*y + y^2");
    assert_eq!((&p * &MultiPoly::zero(xyz())).to_string(), "0");
    let fermat = parse_polynomial("x^3+y^3+z^3").unwrap();
    assert!((&fermat + &(-fermat.clone())).is_zero());
}

#[test]
fn derivative_examples() {
    let f = parse_polynomial("x^3+y^3+z^3").unwrap();
    assert_eq!(f.differentiate("x").unwrap().to_string(), "3*x^2");
    let k = parse_polynomial("x^3*y + y^3*z + z^3*x").unwrap();
    assert_eq!(
        k.differentiate("y").unwrap(),
        parse_polynomial("x^3 + 3y^2z").unwrap()
    );
    assert!(f.differentiate("w").is_err());
}

#[test]
fn large_factorizations() {
    // 2^61 - 1 is prime; (2^31 - 1)(2^61 - 1) needs the rho step
    let m61 = (BigUint::one() << 61) - 1u32;
    let m31 = BigUint::from((1u64 << 31) - 1);
    let f = factor_integer(&(&m61 * &m31)).unwrap();
    assert_eq!(f, vec![(m31, 1), (m61, 1)]);
    assert!(factor_integer(&BigUint::zero()).is_err());
}
