mod common;

use eisenstein_descent::eisenstein::parse_element;
use eisenstein_descent::{EisensteinInt, EisensteinRational, EisensteinUnit};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn int() -> impl Strategy<Value = EisensteinInt> {
    (-10_000i64..10_000, -10_000i64..10_000).prop_map(|(a, b)| EisensteinInt::new(a, b))
}

fn nonzero_int() -> impl Strategy<Value = EisensteinInt> {
    int().prop_filter("nonzero", |x| !x.is_zero())
}

fn rational() -> impl Strategy<Value = EisensteinRational> {
    (-500i64..500, -500i64..500, 1i64..200).prop_map(|(a, b, d)| {
        EisensteinRational::new(EisensteinInt::new(a, b), BigInt::from(d)).unwrap()
    })
}

proptest! {
    #[test]
    fn norm_is_multiplicative(x in int(), y in int()) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.conj().norm(), x.norm());
    }

    #[test]
    fn conj_is_an_involutive_ring_homomorphism(x in rational(), y in rational()) {
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &x.conj()).x(), x.norm());
    }

    #[test]
    fn divmod_remainder_is_smaller(x in int(), y in nonzero_int()) {
        let (q, r) = x.divmod(&y).unwrap();
        prop_assert_eq!(&(&q * &y) + &r, x);
        prop_assert!(r.norm() < y.norm());
    }

    #[test]
    fn gcd_divides_and_contains_common_factor(x in nonzero_int(), y in nonzero_int(), c in nonzero_int()) {
        let (xc, yc) = (&x * &c, &y * &c);
        let g = xc.gcd(&yc).unwrap();
        prop_assert!(g.divides(&xc));
        prop_assert!(g.divides(&yc));
        prop_assert!(c.divides(&g));
        prop_assert_eq!(g.canonical_associate().1, g);
    }

    #[test]
    fn pi_valuation_matches_factorization(x in nonzero_int()) {
        let (v, cofactor) = x.pi_valuation().unwrap();
        prop_assert!(!cofactor.pi_divides());
        prop_assert_eq!(&EisensteinInt::pi().pow(v) * &cofactor, x.clone());
        let f = x.factor().unwrap();
        let pi_exp = f.factors.iter().find(|(p, _)| *p == EisensteinInt::pi()).map_or(0, |(_, e)| *e);
        prop_assert_eq!(pi_exp, v);
        // N(x) has 3-adic valuation exactly v
        let n = x.norm();
        let three = BigInt::from(3);
        prop_assert!((&n % three.pow(v)).is_zero());
        prop_assert!(!(&n % three.pow(v + 1)).is_zero());
    }

    #[test]
    fn field_inverse(x in rational().prop_filter("nonzero", |x| !x.is_zero())) {
        prop_assert_eq!(&x * &x.inverse().unwrap(), EisensteinRational::one());
    }

    #[test]
    fn text_round_trip(x in rational()) {
        prop_assert_eq!(parse_element(&x.to_string()).unwrap(), x);
    }
}

#[test]
fn parse_serialize_identity_on_1000_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let x = EisensteinRational::new(
            EisensteinInt::new(
                rng.gen_range(-10i64.pow(12)..10i64.pow(12)),
                rng.gen_range(-1000..1000),
            ),
            BigInt::from(rng.gen_range(1i64..10i64.pow(9))),
        )
        .unwrap();
        assert_eq!(parse_element(&x.to_string()).unwrap(), x);
    }
}

#[test]
fn factor_round_trips_on_500_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let bound = 500_000i64;
    let mut done = 0;
    while done < 500 {
        let x = EisensteinInt::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if x.is_zero() {
            continue;
        }
        assert!(x.norm() <= BigInt::from(10u64.pow(12)));
        let f = x.factor().unwrap();
        assert_eq!(f.product(), x);
        for w in f.factors.windows(2) {
            let key = |p: &EisensteinInt| (p.norm(), p.a().clone(), p.b().clone());
            assert!(key(&w[0].0) < key(&w[1].0), "factors sorted and distinct");
        }
        for (p, e) in &f.factors {
            assert!(*e > 0);
            assert_eq!(p.canonical_associate().1, *p);
        }
        done += 1;
    }
}

#[test]
fn is_cube_agrees_with_brute_force_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let omega = EisensteinRational::from(EisensteinInt::omega());
    let mut checked = 0;
    while checked < 200 {
        let beta = EisensteinRational::new(
            EisensteinInt::new(rng.gen_range(-3i64..=3), rng.gen_range(-3i64..=3)),
            BigInt::from(rng.gen_range(1i64..=3)),
        )
        .unwrap();
        if beta.is_zero() {
            continue;
        }
        let target = if checked % 2 == 0 {
            beta.pow(3)
        } else {
            &beta.pow(3) * &omega
        };
        // Cube roots of beta^3 are beta * unit; coordinates stay within 6.
        let oracle = common::brute_force_cube_root(&target, 6, 3);
        let ours = target.cube_root();
        assert_eq!(ours.is_some(), oracle.is_some(), "target {target}");
        if let Some(r) = ours {
            assert_eq!(r.pow(3), target);
        }
        checked += 1;
    }
}

#[test]
fn unit_cubes() {
    for u in EisensteinUnit::ALL {
        let x = EisensteinRational::from(u.to_int());
        let expect = matches!(u, EisensteinUnit::One | EisensteinUnit::NegOne);
        assert_eq!(x.is_cube(), expect, "{u}");
    }
}
