//! `Q(μ) = Σ_{σ∈W} det σ · q^{2(σρ, μ+ρ)}` and its relatives.
//!
//! The main path uses the Weyl denominator product
//! `Π_{α∈Φ⁺} (q^{(α, μ+ρ)} - q^{-(α, μ+ρ)})`, which needs no Weyl group and
//! therefore works for E8. The alternating sums are kept as the reference.

use alloc::vec::Vec;

use crate::cyclo::CycNum;
use crate::ring::{self, Coeff};
use crate::rootsys::{RootDatum, WeylElement};

/// Denominator product as a group-ring vector.
pub fn weyl_q_raw<T: Coeff>(datum: &RootDatum, order: u32, mu: &[i64]) -> Vec<T> {
    let shifted: Vec<i64> = mu.iter().zip(&datum.rho).map(|(m, r)| m + r).collect();
    let g = datum.gram_apply(&shifted);
    let mut v = ring::monomial::<T>(order, 0);
    for alpha in &datum.positive_roots {
        let e: i64 = alpha.iter().zip(&g).map(|(a, b)| a * b).sum();
        ring::mul_binomial(&mut v, ring::reduce_exp(e, order));
    }
    v
}

pub fn weyl_q(datum: &RootDatum, order: u32, mu: &[i64]) -> CycNum {
    CycNum::from_group_ring(order, &weyl_q_raw::<i128>(datum, order, mu))
}

/// `Σ_σ det σ q^{2(σ(λ+ρ), μ+ρ)}`; `λ = 0` gives `Q(μ)`.
pub fn s_entry_raw(datum: &RootDatum, weyl: &[WeylElement], order: u32, lambda: &[i64], mu: &[i64]) -> Vec<i128> {
    let lr: Vec<i64> = lambda.iter().zip(&datum.rho).map(|(l, r)| l + r).collect();
    let mr: Vec<i64> = mu.iter().zip(&datum.rho).map(|(m, r)| m + r).collect();
    let g = datum.gram_apply(&mr);
    let mut v = ring::zero_vec::<i128>(order);
    for w in weyl {
        let image = w.apply(&lr);
        let e: i64 = 2 * image.iter().zip(&g).map(|(a, b)| a * b).sum::<i64>();
        v[ring::reduce_exp(e, order)] += w.det as i128;
    }
    v
}

/// `S_{λμ}` as a field element.
pub fn s_entry(datum: &RootDatum, weyl: &[WeylElement], order: u32, lambda: &[i64], mu: &[i64]) -> CycNum {
    CycNum::from_group_ring(order, &s_entry_raw(datum, weyl, order, lambda, mu))
}

/// `Q(μ)` by the `|W|`-term alternating sum.
pub fn weyl_q_alternating(datum: &RootDatum, weyl: &[WeylElement], order: u32, mu: &[i64]) -> CycNum {
    let zero: Vec<i64> = alloc::vec![0; datum.rank];
    s_entry(datum, weyl, order, &zero, mu)
}
