mod common;

use std::collections::BTreeSet;

use eisenstein_descent::eisenstein::parse_element;
use eisenstein_descent::verify::{minimal_modulus, verify_cube_closure, verify_no_solution};
use eisenstein_descent::{EisensteinInt, Lemma, ResidueRing};
use proptest::prelude::*;

fn pair(r: &eisenstein_descent::ResidueElement) -> (i64, i64) {
    (r.a() as i64, r.b() as i64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reduction_is_a_ring_homomorphism(
        k in 1u32..=19,
        a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000,
        c in -1_000_000i64..1_000_000, d in -1_000_000i64..1_000_000,
    ) {
        let ring = ResidueRing::new(k).unwrap();
        let (x, y) = (EisensteinInt::new(a, b), EisensteinInt::new(c, d));
        let (rx, ry) = (ring.reduce(&x), ring.reduce(&y));
        prop_assert_eq!(ring.reduce(&(&x + &y)), rx.add(&ry).unwrap());
        prop_assert_eq!(ring.reduce(&(&x * &y)), rx.mul(&ry).unwrap());
        prop_assert_eq!(ring.reduce(&-x.clone()), rx.neg());
        prop_assert_eq!(ring.reduce(&rx.lift()), rx);
    }

    #[test]
    fn image_is_closed_under_cubes(k in 1u32..=4, seed in any::<u64>()) {
        let ring = ResidueRing::new(k).unwrap();
        let image = ring.image_of_g().unwrap();
        let m = ring.modulus() as i64;
        let (ua, ub) = ((seed % m as u64) as i64, ((seed >> 32) % m as u64) as i64);
        let u = ring.element(ua, ub);
        let u3 = u.pow(3);
        for s in image.iter() {
            prop_assert!(image.contains(&u3.mul(&s).unwrap()));
        }
    }

    #[test]
    fn ring_products_match_oracle(k in 1u32..=6, a in 0i64..729, b in 0i64..729, c in 0i64..729, d in 0i64..729) {
        let ring = ResidueRing::new(k).unwrap();
        let m = ring.modulus() as i64;
        let p = ring.element(a, b).mul(&ring.element(c, d)).unwrap();
        prop_assert_eq!(pair(&p), common::mul_mod(m, (a % m, b % m), (c % m, d % m)));
    }
}

#[test]
fn element_count_is_nine_to_the_k() {
    for k in 1..=4 {
        let ring = ResidueRing::new(k).unwrap();
        let all: Vec<_> = ring.elements().collect();
        assert_eq!(all.len() as u64, 9u64.pow(k));
        assert_eq!(ring.size(), 9u64.pow(k));
        let distinct: BTreeSet<_> = all.iter().map(pair).collect();
        assert_eq!(distinct.len(), all.len());
    }
}

#[test]
fn image_sets_match_direct_enumeration() {
    for k in 1..=3 {
        let ring = ResidueRing::new(k).unwrap();
        let m = ring.modulus() as i64;
        let oracle: BTreeSet<_> = (0..m)
            .flat_map(|x| (0..m).map(move |y| common::g_mod(m, x, y)))
            .collect();
        let ours: BTreeSet<_> = ring
            .image_of_g()
            .unwrap()
            .iter()
            .map(|e| pair(&e))
            .collect();
        assert_eq!(ours, oracle, "k={k}");
        let cubes: BTreeSet<_> = (0..m)
            .flat_map(|a| (0..m).map(move |b| common::cube_mod(m, (a, b))))
            .collect();
        let ours: BTreeSet<_> = ring.cube_set().unwrap().iter().map(|e| pair(&e)).collect();
        assert_eq!(ours, cubes, "k={k}");
    }
}

#[test]
fn projection_maps_images_downward() {
    for k in 2..=5 {
        let ring = ResidueRing::new(k).unwrap();
        let image = ring.image_of_g().unwrap();
        for j in 1..k {
            let lower = ResidueRing::new(j).unwrap();
            let lower_image = lower.image_of_g().unwrap();
            for s in image.iter() {
                assert!(lower_image.contains(&ring.project(&s, &lower).unwrap()));
            }
        }
    }
    let r2 = ResidueRing::new(2).unwrap();
    let r3 = ResidueRing::new(3).unwrap();
    assert!(r2.project(&r2.one(), &r3).is_err());
}

#[test]
fn pinned_set_sizes_at_81() {
    let ring = ResidueRing::new(4).unwrap();
    assert_eq!(ring.image_of_g().unwrap().len(), 1519);
    assert_eq!(ring.cube_set().unwrap().len(), 171);
    assert_eq!(ring.rhs_set().unwrap().len(), 21);
}

#[test]
fn solutions_project_to_lower_levels() {
    // A solution mod 3^k reduces to a solution mod 3^j, so once the
    // no-solution check holds it holds at every larger k.
    let mut seen_hold = false;
    for k in 1..=6 {
        let holds = verify_no_solution(k).unwrap().holds;
        assert!(!seen_hold || holds, "k={k}");
        seen_hold |= holds;
    }
    for m in [3i64, 9] {
        let triples = common::naive_no_solution_triples(m);
        let lower: BTreeSet<_> = common::naive_no_solution_triples(m / 3)
            .into_iter()
            .collect();
        for (x, y, (za, zb)) in triples {
            let l = m / 3;
            if l > 1 {
                assert!(lower.contains(&(x % l, y % l, (za % l, zb % l))));
            }
        }
    }
}

#[test]
fn no_solution_verifier_matches_naive_oracle() {
    for k in 1..=3u32 {
        let m = 3i64.pow(k);
        let naive = common::naive_no_solution_triples(m);
        let report = verify_no_solution(k).unwrap();
        assert_eq!(report.holds, naive.is_empty(), "k={k}");
        assert_eq!(report.counterexample_count, naive.len() as u64, "k={k}");
        assert!(report.counterexamples.len() <= 100);
        for entry in &report.counterexamples {
            let x: i64 = entry["x"].parse().unwrap();
            let y: i64 = entry["y"].parse().unwrap();
            let z = parse_element(&entry["z"]).unwrap();
            let z = z.as_integer().unwrap();
            let z = (i64::try_from(z.a()).unwrap(), i64::try_from(z.b()).unwrap());
            assert!(naive.contains(&(x, y, z)), "{entry:?}");
        }
    }
}

#[test]
fn cube_closure_verifier_matches_naive_oracle() {
    for k in 1..=2u32 {
        let m = 3i64.pow(k);
        assert!(common::naive_cube_closure_failures(m).is_empty());
        let report = verify_cube_closure(k).unwrap();
        assert!(report.holds);
        assert_eq!(report.counterexample_count, 0);
    }
    for k in 3..=5 {
        assert!(Lemma::CubeClosure.verify(k).unwrap().holds, "k={k}");
    }
}

#[test]
fn minimal_modulus_is_monotone_threshold() {
    let found = minimal_modulus(5)
        .unwrap()
        .expect("some level holds by 3^5");
    for k in 1..found {
        assert!(!verify_no_solution(k).unwrap().holds);
    }
    assert!(verify_no_solution(found).unwrap().holds);
    assert!(minimal_modulus(0).is_err());
    assert!(minimal_modulus(9).is_err());
}

#[test]
fn set_guard_rejects_large_k() {
    assert!(ResidueRing::new(9).unwrap().image_of_g().is_err());
    assert!(ResidueRing::new(20).is_err());
    assert!(ResidueRing::new(0).is_err());
    assert!(verify_no_solution(9).is_err());
}
