//! Randomized invariants of the polynomial and rational-function layer.

use proptest::prelude::*;

use algdyn::exactnum::{rat_int, Rat};
use algdyn::multipoly::{gcd_multi, Monomial, MultiPoly, RatFunc};

fn small_poly(vars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (prop::collection::vec(0..=max_deg, vars), -6i64..=6);
    prop::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        let mut p = MultiPoly::zero(vars);
        for (exps, c) in terms {
            p.add_term(Monomial(exps), rat_int(c));
        }
        p
    })
}

fn nonzero_poly(vars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    small_poly(vars, max_deg, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(a in small_poly(2, 3, 4), b in small_poly(2, 3, 4), c in small_poly(2, 3, 4)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn gcd_divides_and_is_symmetric(a in nonzero_poly(2, 3, 3), b in nonzero_poly(2, 3, 3)) {
        let g = gcd_multi(&a, &b);
        prop_assert!(!g.is_zero());
        prop_assert_eq!(&g, &gcd_multi(&b, &a));
        // divisibility through the public reduction path
        let fa = RatFunc::new(a.clone(), g.clone()).unwrap();
        let fb = RatFunc::new(b.clone(), g.clone()).unwrap();
        prop_assert!(fa.is_polynomial());
        prop_assert!(fb.is_polynomial());
    }

    #[test]
    fn gcd_recovers_common_factor(a in nonzero_poly(2, 2, 3), b in nonzero_poly(2, 2, 3), w in nonzero_poly(2, 2, 3)) {
        let g = gcd_multi(&a.mul(&w), &b.mul(&w));
        // w divides the gcd
        let quot = RatFunc::new(g.clone(), w.clone()).unwrap();
        prop_assert!(quot.is_polynomial());
    }

    #[test]
    fn ratfunc_mul_inverse(p in nonzero_poly(2, 3, 3), q in nonzero_poly(2, 3, 3)) {
        let f = RatFunc::new(p, q).unwrap();
        prop_assert!(f.mul(&f.inv().unwrap()).is_one());
    }

    #[test]
    fn ratfunc_reduction_idempotent(p in small_poly(2, 3, 4), q in nonzero_poly(2, 3, 3)) {
        let f = RatFunc::new(p, q).unwrap();
        let again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
        prop_assert_eq!(&f, &again);
        // scaling numerator and denominator together changes nothing
        let c = rat_int(7);
        let scaled = RatFunc::new(f.num().scale(&c), f.den().scale(&c)).unwrap();
        prop_assert_eq!(&f, &scaled);
    }

    #[test]
    fn ratfunc_field_laws(
        p in nonzero_poly(2, 2, 3),
        q in nonzero_poly(2, 2, 3),
        r in nonzero_poly(2, 2, 3),
    ) {
        let f = RatFunc::new(p.clone(), q.clone()).unwrap();
        let g = RatFunc::new(q, r).unwrap();
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert!(f.sub(&f).is_zero());
        let one = Rat::from_integer(1.into());
        prop_assert_eq!(f.scale(&one), f);
    }
}
