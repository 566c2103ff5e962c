//! Fast paths against their brute-force oracles, and values frozen from
//! those oracles.

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rt_lens_core::gauss::{g_k, gauss_brute, gauss_closed};
use rt_lens_core::invariant::{weyl_q, weyl_q_alternating, Engine};
use rt_lens_core::lattice::{alcove, alcove_scan, enumerate_xn};
use rt_lens_core::{Budget, ChainLink, CycNum, LensSpec, LieType, QuadGaussSpec, RootDatum, RootOfUnitySpec, Strategy};

fn random_spec(rng: &mut StdRng, order: u32, rank: usize) -> QuadGaussSpec {
    let n = order as i64;
    let upper: Vec<Vec<i64>> = (0..rank).map(|_| (0..rank).map(|_| rng.gen_range(0..n)).collect()).collect();
    let form = (0..rank).map(|i| (0..rank).map(|j| upper[i.min(j)][i.max(j)]).collect()).collect();
    let linear = (0..rank).map(|_| rng.gen_range(0..n)).collect();
    QuadGaussSpec::new(order, form, linear, rng.gen_range(0..n)).unwrap()
}

#[test]
fn gauss_closed_matches_brute_on_random_specs() {
    let mut rng = StdRng::seed_from_u64(7);
    for &order in &[5u32, 9, 15, 21, 25, 27] {
        for rank in 1..=3 {
            for _ in 0..10 {
                let spec = random_spec(&mut rng, order, rank);
                let brute = gauss_brute(&spec, Budget::default()).unwrap();
                assert_eq!(gauss_closed(&spec), brute, "{spec:?}");
            }
        }
    }
}

#[test]
fn lattice_gauss_sums_match_brute() {
    for (t, n) in [(LieType::G2, 5u32), (LieType::G2, 13), (LieType::F4, 11)] {
        let d = RootDatum::new(t);
        for k in 0..n as i64 {
            let spec = QuadGaussSpec::lattice(&d, n, k);
            assert_eq!(gauss_closed(&spec), gauss_brute(&spec, Budget::default()).unwrap(), "{t} N={n} k={k}");
        }
    }
}

#[test]
fn gauss_magnitudes() {
    for (t, n) in [(LieType::G2, 7u32), (LieType::F4, 13), (LieType::E8, 31)] {
        let d = RootDatum::new(t);
        let g1 = g_k(&d, n, 1);
        let nr = BigInt::from(n).pow(d.rank as u32);
        assert_eq!(&g1 * &g1.galois(-1).unwrap(), CycNum::from_integer(n, nr.clone()));
        let (re, im) = g1.embed(&RootOfUnitySpec::standard(n)).unwrap();
        let nr = (n as f64).powi(d.rank as i32);
        assert!(((re * re + im * im) / nr - 1.0).abs() < 1e-9);
    }
}

#[test]
fn gauss_sum_of_squares_mod_five() {
    let spec = QuadGaussSpec::new(5, vec![vec![1]], vec![0], 1).unwrap();
    let (re, im) = gauss_closed(&spec).embed(&RootOfUnitySpec::standard(5)).unwrap();
    assert!((re - 2.23606797749979).abs() < 1e-12 && im.abs() < 1e-12);
}

#[test]
fn weyl_denominator_identity_at_random_weights() {
    let mut rng = StdRng::seed_from_u64(11);
    for (t, n, count) in [(LieType::G2, 5u32, 20), (LieType::G2, 13, 20), (LieType::F4, 11, 5), (LieType::F4, 13, 5)] {
        let d = RootDatum::new(t);
        let w = d.weyl_group().unwrap();
        for _ in 0..count {
            let mu: Vec<i64> = (0..d.rank).map(|_| rng.gen_range(-40..40)).collect();
            assert_eq!(weyl_q(&d, n, &mu), weyl_q_alternating(&d, &w, n, &mu), "{t} N={n} mu={mu:?}");
        }
    }
}

#[test]
fn alcove_against_scan() {
    for (t, n, w) in [(LieType::G2, 11u32, 11i64), (LieType::G2, 17, 17), (LieType::F4, 15, 6)] {
        let d = RootDatum::new(t);
        assert_eq!(alcove(&d, n, Budget::default()).unwrap().members, alcove_scan(&d, n, w), "{t} N={n}");
    }
}

#[test]
fn class_counts() {
    let g2 = RootDatum::new(LieType::G2);
    assert_eq!(enumerate_xn(&g2, 5, Budget::default()).unwrap().count(), 25);
    let f4 = RootDatum::new(LieType::F4);
    assert_eq!(enumerate_xn(&f4, 11, Budget::default()).unwrap().count(), 14641);
    let e8 = RootDatum::new(LieType::E8);
    assert!(enumerate_xn(&e8, 31, Budget::default()).unwrap_err().is_capacity());
}

#[test]
fn strategies_agree_on_small_chains() {
    let e = Engine::new(LieType::G2, 11, Budget::default()).unwrap();
    for spec in LensSpec::all_up_to(12) {
        let chain = ChainLink::from(&rt_lens_core::invariant::hj_expand(spec));
        if chain.len() > 3 {
            continue;
        }
        let d = e.chain_h0(&chain, Strategy::DirectMultisum).unwrap().0;
        assert_eq!(d, e.chain_h0(&chain, Strategy::RecursionDense).unwrap().0, "{spec:?}");
        assert_eq!(d, e.chain_h0(&chain, Strategy::RecursionFactored).unwrap().0, "{spec:?}");
    }
}

#[test]
fn arbitrary_framings_agree_across_strategies() {
    let e = Engine::new(LieType::G2, 7, Budget::default()).unwrap();
    for framings in [vec![0], vec![-3, 5], vec![1, 0, -1], vec![2, -2, 2]] {
        let chain = ChainLink::new(framings.clone()).unwrap();
        let d = e.chain_h0(&chain, Strategy::DirectMultisum).unwrap().0;
        assert_eq!(d, e.chain_h0(&chain, Strategy::RecursionFactored).unwrap().0, "{framings:?}");
    }
}

fn coeffs(c: &[&str]) -> Vec<String> {
    c.iter().map(|s| s.to_string()).collect()
}

/// Values computed with the literal multisum and cross-checked against an
/// independent floating-point evaluation of the same sum.
#[test]
fn frozen_g2_values_at_eleven() {
    let e = Engine::new(LieType::G2, 11, Budget::default()).unwrap();
    let f52 = e.lens_invariant(LensSpec::new(5, 2).unwrap(), Strategy::Auto).unwrap();
    assert_eq!(
        f52.f.to_coeff_strings(),
        coeffs(&["0/1", "0/1", "0/1", "0/1", "0/1", "-1/1", "-1/1", "0/1", "0/1", "0/1"])
    );
    let (re, _) = f52.f.embed(&RootOfUnitySpec::standard(11)).unwrap();
    assert!((re - 1.9189859472289674).abs() < 1e-12);
    let f72 = e.lens_invariant(LensSpec::new(7, 2).unwrap(), Strategy::Auto).unwrap();
    assert_eq!(
        f72.f.to_coeff_strings(),
        coeffs(&["0/1", "-1/1", "-1/1", "-1/1", "-1/1", "-1/1", "-1/1", "-1/1", "-1/1", "0/1"])
    );
    let (re, im) = f72.f.embed(&RootOfUnitySpec::standard(11)).unwrap();
    assert!((re - 2.25666854583299).abs() < 1e-12 && (im + 1.450272812810183).abs() < 1e-12);
    assert_eq!(
        f72.nabla.to_coeff_strings(),
        coeffs(&["1/1", "0/1", "-1/1", "-2/1", "-2/1", "-2/1", "-2/1", "-2/1", "-2/1", "-1/1"])
    );
    assert_eq!(e.z(), &CycNum::q_power(11, 7));
    assert_eq!(e.g1(), &CycNum::from_integer(11, -11));
}

#[test]
fn frozen_constants() {
    let e = Engine::new(LieType::G2, 5, Budget::default()).unwrap();
    assert_eq!(e.omega() * e.g1(), CycNum::q_power(5, 2));
    assert_eq!(e.z(), &CycNum::q_power(5, 4));
    assert!(e.q_zero().is_zero());
    let e = Engine::new(LieType::G2, 7, Budget::default()).unwrap();
    assert!(e.z().is_one());
    assert_eq!(e.q_zero(), &CycNum::from_integer(7, 7));
    let e8 = Engine::new(LieType::E8, 31, Budget::default()).unwrap();
    assert_eq!(e8.g1(), &CycNum::from_integer(31, 923521));
    assert!(e8.z().is_one());
}
