use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lforge::algebra::{Integers, Ring, TruncSeries, UPoly};
use lforge::algebra::cyclotomic;
use lforge::closure::{brute_force_stable, classify_generator, is_lambda_stable, Classification, StabilityVerdict};
use lforge::f1mod::{enumerate_simple, validate_module, F1Module, SquareZeroRing};
use lforge::lambda::{adams, check_axioms, lambda_t};
use lforge::monoid::{frobenius, monoid_ring_iso, monoid_ring_iso_inv, points, Monoid, MonoidRing, MonoidRingElem};
use lforge::symmetric::UniversalLimits;
use lforge::witt::{artin_hasse, frobenius_witt, ghost, lambda_r_map, witt_add, witt_mul, WittVector};
use lforge::zeta::{euler_product, SArg, ZetaSpec};

fn c6() -> MonoidRing {
    MonoidRing::new(Monoid::Cyclic(6))
}

fn pair(ring: &MonoidRing, seed: u64) -> (MonoidRingElem, MonoidRingElem) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (ring.random_elem(&mut rng, 3, 3), ring.random_elem(&mut rng, 3, 3))
}

fn unit_series(c: Vec<i64>) -> TruncSeries<BigInt> {
    let order = c.len();
    let mut v = vec![BigInt::from(1)];
    v.extend(c.into_iter().map(BigInt::from));
    TruncSeries::new(&Integers, v, order)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lambda_series_is_additive_on_group_ring(seed in any::<u64>()) {
        let ring = c6();
        let (x, y) = pair(&ring, seed);
        let lhs = lambda_t(&ring, &ring.add(&x, &y), 8).unwrap();
        let rhs = lambda_t(&ring, &x, 8).unwrap().mul(&lambda_t(&ring, &y, 8).unwrap(), &ring);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lambda_series_is_additive_on_integers(a in -40i64..40, b in -40i64..40) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let lhs = lambda_t(&Integers, &(&a + &b), 8).unwrap();
        let rhs = lambda_t(&Integers, &a, 8).unwrap().mul(&lambda_t(&Integers, &b, 8).unwrap(), &Integers);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn artin_hasse_turns_products_into_sums(
        f in prop::collection::vec(-4i64..=4, 8),
        g in prop::collection::vec(-4i64..=4, 8),
    ) {
        let z = Integers;
        let (f, g) = (unit_series(f), unit_series(g));
        let lhs = artin_hasse(&z, &f.mul(&g, &z)).unwrap();
        let rhs = witt_add(&z, &artin_hasse(&z, &f).unwrap(), &artin_hasse(&z, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_tail_bounds_the_change(bound in 2u64..3000, s in 2u32..5) {
        let a = euler_product(&ZetaSpec::Primes, SArg::Int(s), bound, 80).unwrap();
        let b = euler_product(&ZetaSpec::Primes, SArg::Int(s), bound * 3, 80).unwrap();
        prop_assert!(b.value_f64() - a.value_f64() <= a.tail_f64());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn adams_operations_are_ring_maps(seed in any::<u64>()) {
        let ring = c6();
        let (x, y) = pair(&ring, seed);
        for k in 1..=6 {
            let (px, py) = (adams(&ring, &x, k).unwrap(), adams(&ring, &y, k).unwrap());
            prop_assert_eq!(adams(&ring, &ring.mul(&x, &y), k).unwrap(), ring.mul(&px, &py));
            prop_assert_eq!(adams(&ring, &ring.add(&x, &y), k).unwrap(), ring.add(&px, &py));
        }
    }

    #[test]
    fn adams_operations_compose(seed in any::<u64>()) {
        let ring = c6();
        let (x, _) = pair(&ring, seed);
        for k in 1..=5 {
            for l in 1..=5 {
                let inner = adams(&ring, &x, l).unwrap();
                prop_assert_eq!(adams(&ring, &inner, k).unwrap(), adams(&ring, &x, k * l).unwrap());
            }
        }
    }

    #[test]
    fn lambda_map_is_a_ring_map(seed in any::<u64>(), n in 1u64..=6) {
        let ring = MonoidRing::new(Monoid::Cyclic(n));
        let (x, y) = pair(&ring, seed);
        let (lx, ly) = (lambda_r_map(&ring, &x, 6).unwrap(), lambda_r_map(&ring, &y, 6).unwrap());
        prop_assert_eq!(lambda_r_map(&ring, &ring.add(&x, &y), 6).unwrap(), witt_add(&ring, &lx, &ly).unwrap());
        prop_assert_eq!(lambda_r_map(&ring, &ring.mul(&x, &y), 6).unwrap(), witt_mul(&ring, &lx, &ly).unwrap());
    }

    #[test]
    fn lambda_map_on_integers(a in -9i64..=9, b in -9i64..=9) {
        let z = Integers;
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let (la, lb) = (lambda_r_map(&z, &a, 6).unwrap(), lambda_r_map(&z, &b, 6).unwrap());
        prop_assert_eq!(lambda_r_map(&z, &(&a + &b), 6).unwrap(), witt_add(&z, &la, &lb).unwrap());
        prop_assert_eq!(lambda_r_map(&z, &(&a * &b), 6).unwrap(), witt_mul(&z, &la, &lb).unwrap());
    }

    #[test]
    fn frobenius_composes_on_ghosts(comps in prop::collection::vec(-9i64..=9, 8)) {
        let z = Integers;
        let a = WittVector::new(comps.into_iter().map(BigInt::from).collect());
        for n in 1..=8usize {
            for m in 1..=8 / n {
                let twice = frobenius_witt(&z, &frobenius_witt(&z, &a, m).unwrap(), n).unwrap();
                let once = frobenius_witt(&z, &a, n * m).unwrap();
                prop_assert_eq!(ghost(&z, &twice), ghost(&z, &once));
            }
        }
    }

    #[test]
    fn group_ring_iso_round_trips(seed in any::<u64>()) {
        let ring = MonoidRing::new("C3xN".parse::<Monoid>().unwrap());
        let (x, y) = pair(&ring, seed);
        let (target, px) = monoid_ring_iso(&ring, &x).unwrap();
        let (_, py) = monoid_ring_iso(&ring, &y).unwrap();
        prop_assert_eq!(monoid_ring_iso_inv(&ring, &px).unwrap(), x.clone());
        prop_assert_eq!(monoid_ring_iso(&ring, &ring.add(&x, &y)).unwrap().1, target.add(&px, &py));
        prop_assert_eq!(monoid_ring_iso(&ring, &ring.mul(&x, &y)).unwrap().1, target.mul(&px, &py));
    }

    #[test]
    fn stable_generators_divide_their_substitutions(mask in 1u32..(1 << 13)) {
        let mut f = UPoly::one();
        if mask & 1 == 1 {
            f = &f * &UPoly::x();
        }
        for d in 1..=12u64 {
            if mask >> d & 1 == 1 {
                f = &f * &cyclotomic(d);
            }
        }
        if let StabilityVerdict::Stable { .. } = is_lambda_stable(&f, 30).unwrap() {
            prop_assert!(brute_force_stable(&f, 30));
        }
    }
}

#[test]
fn frobenius_composes_on_monoids() {
    let monoids: Vec<Monoid> = ["N", "C12", "Q/Z", "C2xC3", "C4xN"].iter().map(|s| s.parse().unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for m in &monoids {
        for _ in 0..10 {
            let x = m.random_elem(&mut rng);
            for k in 1..=12 {
                for l in 1..=12 {
                    assert_eq!(frobenius(m, k, &frobenius(m, l, &x)), frobenius(m, k * l, &x));
                }
            }
        }
    }
}

#[test]
fn points_of_the_affine_line() {
    for n in 1..=30 {
        assert_eq!(points(&Monoid::FreeAdd, &Monoid::Cyclic(n), None).unwrap().len() as u64, n + 1);
    }
}

#[test]
fn simple_extensions_are_prime_cyclotomic_products() {
    for mask in 1u32..(1 << 13) {
        let mut f = UPoly::one();
        let mut indices = Vec::new();
        if mask & 1 == 1 {
            f = &f * &UPoly::x();
        }
        for d in 1..=12u64 {
            if mask >> d & 1 == 1 {
                f = &f * &cyclotomic(d);
                indices.push(d);
            }
        }
        if f.degree().unwrap_or(0) > 12 || !matches!(is_lambda_stable(&f, 30).unwrap(), StabilityVerdict::Stable { .. }) {
            continue;
        }
        let is_x_to_p_minus_one = mask & 1 == 0
            && indices.len() == 2
            && indices[0] == 1
            && lforge::algebra::numtheory::is_prime(indices[1]);
        let simple = matches!(classify_generator(&f, 30).unwrap(), Classification::SimpleExtension { .. });
        assert_eq!(simple, is_x_to_p_minus_one, "{f}");
    }
}

#[test]
fn induced_lambda_structures_satisfy_the_axioms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in [2u64, 3, 5, 7] {
        for v in enumerate_simple(p, 6).unwrap().expand() {
            let module = F1Module::from_prime_values(p, 6, &v);
            assert!(validate_module(&module).valid);
            let ring = SquareZeroRing::new(module);
            let pairs: Vec<_> = (0..30).map(|_| (ring.random_elem(&mut rng, 4), ring.random_elem(&mut rng, 4))).collect();
            let report = check_axioms(&ring, &pairs, 4, UniversalLimits::default()).unwrap();
            assert!(report.all_passed(), "C{p}, {v:?}: {report:?}");
        }
    }
}

#[test]
fn pure_module_products_vanish() {
    for p in [2u64, 3, 5, 7, 11, 13] {
        let ring = SquareZeroRing::new(F1Module::from_prime_values(p, 12, &[1, 2]));
        for a in 0..p {
            for b in 0..p {
                assert!(ring.is_zero(&ring.mul(&ring.elem(0, vec![a]), &ring.elem(0, vec![b]))));
            }
        }
    }
}
