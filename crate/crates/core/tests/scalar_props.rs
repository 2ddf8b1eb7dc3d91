use apla_core::scalar::{FieldMode, Scalar};
use proptest::prelude::*;

fn arb_rational() -> impl Strategy<Value = Scalar> {
    (-2000i64..2000, 1i64..200).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn arb_quadratic() -> impl Strategy<Value = Scalar> {
    (
        -50i64..50,
        1i64..10,
        -50i64..50,
        1i64..10,
        prop::sample::select(vec![2i64, 3, 5, -1, -2]),
    )
        .prop_map(|(an, ad, bn, bd, d)| Scalar::quad((an, ad), (bn, bd), d))
}

proptest! {
    #[test]
    fn rational_field_laws(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.sub(&a), Scalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv()), Scalar::one());
        }
    }

    #[test]
    fn quadratic_field_laws(a in arb_quadratic(), b in arb_quadratic(), c in arb_quadratic()) {
        // draw all three from the same extension by construction
        let fix = |s: &Scalar, d0: i64| match s {
            Scalar::Quadratic { a, b, .. } => Scalar::quadratic(a.clone(), b.clone(), d0),
            other => other.clone(),
        };
        let d0 = 2;
        let (a, b, c) = (fix(&a, d0), fix(&b, d0), fix(&c, d0));
        prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv()), Scalar::one());
        }
    }

    #[test]
    fn canonical_string_roundtrip(a in arb_rational()) {
        let s = a.canonical_string();
        let (parsed, canonical) = Scalar::parse(&s, FieldMode::Rational).unwrap();
        prop_assert!(canonical);
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn quadratic_string_roundtrip(a in arb_quadratic()) {
        let s = a.canonical_string();
        let mode = match &a {
            Scalar::Quadratic { d, .. } => FieldMode::Quadratic(*d),
            _ => FieldMode::Rational,
        };
        let (parsed, canonical) = Scalar::parse(&s, mode).unwrap();
        prop_assert!(canonical);
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn sqrt_squares_back(a in arb_rational()) {
        if let Some(r) = a.sqrt() {
            prop_assert_eq!(r.mul(&r), a);
        } else {
            // every rational has a square root in the domain
            prop_assert!(false, "rational without a domain square root");
        }
    }

    #[test]
    fn mod_field_laws(a in 0u64..7, b in 0u64..7, c in 0u64..7) {
        let p = 7;
        let (a, b, c) = (
            Scalar::mod_p(a as i64, p),
            Scalar::mod_p(b as i64, p),
            Scalar::mod_p(c as i64, p),
        );
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv()).is_one());
        }
    }
}
