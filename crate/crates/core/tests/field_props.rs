use koornwinder::paramfield::{poly_gcd, Assignment, FieldElement, HalfExponents, ParamPolynomial, NPARAMS};
use koornwinder::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn small_exponents() -> impl Strategy<Value = HalfExponents> {
    prop::array::uniform6(-2i32..=2).prop_map(HalfExponents)
}

fn small_poly() -> impl Strategy<Value = ParamPolynomial> {
    prop::collection::vec((small_exponents(), -4i64..=4), 1..4)
        .prop_map(|ts| ParamPolynomial::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn nonzero_poly() -> impl Strategy<Value = ParamPolynomial> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Polynomials in the roots proper, as `poly_gcd` expects.
fn nonneg_poly() -> impl Strategy<Value = ParamPolynomial> {
    prop::collection::vec((prop::array::uniform6(0i32..=2).prop_map(HalfExponents), -4i64..=4), 1..4)
        .prop_map(|ts| ParamPolynomial::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn element() -> impl Strategy<Value = FieldElement> {
    (small_poly(), nonzero_poly()).prop_map(|(a, b)| FieldElement::new(a, b).expect("nonzero denominator"))
}

fn odd_assignment() -> Assignment {
    Assignment::from_ints([3, 5, 7, 11, 13, 17])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gcd_divides_both(a in nonneg_poly(), b in nonneg_poly(), c in nonneg_poly()) {
        let (ac, bc) = (&a * &c, &b * &c);
        let g = poly_gcd(&ac, &bc);
        prop_assert!(ac.exact_div(&g).is_some());
        prop_assert!(bc.exact_div(&g).is_some());
        // `c` divides both, so it divides their gcd up to a monomial unit.
        let stripped = c.shift(-c.min_exponents());
        let gs = g.shift(-g.min_exponents());
        prop_assert!(gs.exact_div(&stripped).is_some(), "gcd {} misses factor {}", g, c);
    }

    #[test]
    fn field_axioms(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!((a.clone() - b.clone()) + b.clone(), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.checked_div(&b).unwrap() * b.clone(), a);
        }
    }

    #[test]
    fn shared_denominator_factors(x in small_poly(), y in small_poly(), r in nonneg_poly(), s in nonneg_poly(), u in nonneg_poly()) {
        let f = |p: &ParamPolynomial| FieldElement::from_poly(p.clone());
        let a = FieldElement::new(x.clone(), &r * &s).unwrap();
        let b = FieldElement::new(y.clone(), &r * &u).unwrap();
        let cleared = (a.clone() + b.clone()) * f(&(&(&r * &s) * &u));
        prop_assert_eq!(cleared, f(&(&(&x * &u) + &(&y * &s))));
        let prod = a * b * f(&(&(&r * &r) * &(&s * &u)));
        prop_assert_eq!(prod, f(&(&x * &y)));
    }

    #[test]
    fn involutions(a in element(), b in element()) {
        prop_assert_eq!(a.epsilon().epsilon(), a.clone());
        prop_assert_eq!(a.dagger().dagger(), a.clone());
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(a.star(), a.dagger().epsilon());
        prop_assert_eq!((a.clone() * b.clone()).epsilon(), a.epsilon() * b.epsilon());
        prop_assert_eq!((a.clone() + b.clone()).dagger(), a.dagger() + b.dagger());
    }

    #[test]
    fn specialization_is_a_ring_map(a in element(), b in element()) {
        let r = odd_assignment();
        if let (Ok(x), Ok(y), Ok(xy), Ok(sum)) =
            (a.specialize(&r), b.specialize(&r), (a.clone() * b.clone()).specialize(&r), (a.clone() + b.clone()).specialize(&r))
        {
            prop_assert_eq!(xy, &x * &y);
            prop_assert_eq!(sum, x + y);
        }
    }

    #[test]
    fn star_matches_swapped_assignment(a in element()) {
        let r = odd_assignment();
        if let (Ok(x), Ok(y)) = (a.star().specialize(&r), a.specialize(&r.star())) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn json_round_trip(a in element()) {
        prop_assert_eq!(FieldElement::from_json(&a.to_json()).unwrap(), a.clone());
        let r = a.specialize(&odd_assignment());
        if let Ok(x) = r {
            prop_assert_eq!(<BigRational as Scalar>::from_json(&Scalar::to_json(&x)).unwrap(), x);
        }
    }
}

#[test]
fn normalized_form_is_canonical() {
    let x = FieldElement::param(koornwinder::paramfield::Param::Q);
    let one = FieldElement::from_int(1);
    let a = (x.clone() * x.clone() - one.clone()).checked_div(&(x.clone() - one.clone())).unwrap();
    assert_eq!(a, x + one);
    assert_eq!(a.denom(), &ParamPolynomial::one());
    assert_eq!(NPARAMS, 6);
}
