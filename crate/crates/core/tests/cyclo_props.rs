//! Field axioms and Galois structure of `Q(ζ_N)`, property-tested.

use proptest::prelude::*;
use rt_lens_core::{CycNum, RootOfUnitySpec};

fn element(order: u32) -> impl Strategy<Value = CycNum> {
    (prop::collection::vec(-6i64..=6, order as usize), 1i64..=4).prop_map(move |(c, den)| {
        let num = c.into_iter().map(Into::into).collect();
        CycNum::from_parts(order, num, den.into()).unwrap()
    })
}

fn orders() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![3u32, 5, 7, 9, 15, 21])
}

fn triple() -> impl Strategy<Value = (CycNum, CycNum, CycNum)> {
    orders().prop_flat_map(|n| (element(n), element(n), element(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-a.clone())).is_zero());
    }

    #[test]
    fn inverses((a, b, _c) in triple()) {
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(&(&b * &a) * &a.inv().unwrap(), b.clone());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn galois_is_a_ring_map((a, b, _c) in triple(), k in 1i64..40) {
        let n = a.order() as i64;
        if num_integer::Integer::gcd(&k, &n) == 1 {
            let ga = a.galois(k).unwrap();
            let gb = b.galois(k).unwrap();
            prop_assert_eq!((&a * &b).galois(k).unwrap(), &ga * &gb);
            prop_assert_eq!((&a + &b).galois(k).unwrap(), &ga + &gb);
        } else {
            prop_assert!(a.galois(k).is_err());
        }
    }

    #[test]
    fn conjugation_and_embedding((a, b, _c) in triple()) {
        let n = a.order();
        let spec = RootOfUnitySpec::standard(n);
        prop_assert_eq!(a.conj().conj(), a.clone());
        let (ar, ai) = a.embed(&spec).unwrap();
        let (cr, ci) = a.conj().embed(&spec).unwrap();
        prop_assert!((ar - cr).abs() < 1e-9 && (ai + ci).abs() < 1e-9);
        let (br, bi) = b.embed(&spec).unwrap();
        let (pr, pi) = (&a * &b).embed(&spec).unwrap();
        prop_assert!((pr - (ar * br - ai * bi)).abs() < 1e-6);
        prop_assert!((pi - (ar * bi + ai * br)).abs() < 1e-6);
        prop_assert!((&a * &a.conj()).is_real());
    }

    #[test]
    fn canonical_strings_round_trip((a, _b, _c) in triple()) {
        let s = a.to_coeff_strings();
        prop_assert_eq!(s.len() as u32, rt_lens_core::cyclo::euler_phi(a.order()));
        prop_assert_eq!(CycNum::from_coeff_strings(a.order(), &s).unwrap(), a);
    }

    #[test]
    fn q_powers_are_periodic(e in -100i64..100, f in -100i64..100, n in orders()) {
        prop_assert_eq!(CycNum::q_power(n, e) * CycNum::q_power(n, f), CycNum::q_power(n, e + f));
        prop_assert_eq!(CycNum::q_power(n, e), CycNum::q_power(n, e + n as i64));
    }
}

#[test]
fn inverse_of_one_plus_q() {
    let x = &CycNum::one(5) + &CycNum::q_power(5, 1);
    assert!((&x * &x.inv().unwrap()).is_one());
}

#[cfg(feature = "serde")]
#[test]
fn json_round_trip() {
    let x = &CycNum::from_ratio(7, 3, 2).unwrap() - &CycNum::q_power(7, 3);
    let s = serde_json::to_string(&x).unwrap();
    assert_eq!(serde_json::from_str::<CycNum>(&s).unwrap(), x);
    assert!(s.contains("\"order\":7"));
}
