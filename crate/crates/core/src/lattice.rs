//! The finite quotient `X_N = X / NX` and the alcove `Λ⁺_N`.
//!
//! Classes are indexed lexicographically: the coordinate vector
//! `(c_1, …, c_r)` with `0 ≤ c_i < N` has index `Σ c_i N^{r-i}`, first
//! coordinate most significant. Tables built over `X_N` use this order.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::rootsys::{LieType, RootDatum};
use crate::{Error, Result};

/// Upper bound on the number of states an enumeration may touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(2_000_000)
    }
}

impl Budget {
    /// Errors unless `base^exp` fits the budget; returns the size otherwise.
    pub fn check(&self, what: &str, base: u64, exp: u32) -> Result<u64> {
        let size = (base as u128).checked_pow(exp).unwrap_or(u128::MAX);
        if size > self.0 as u128 {
            return Err(Error::Capacity { what: what.to_string(), base, exp, size, budget: self.0 });
        }
        Ok(size as u64)
    }
}

/// Accepts `N` iff it is odd, exceeds the dual Coxeter number, is prime to 3
/// for G2, and is prime to `det G`.
pub fn validate_order(datum: &RootDatum, n: u64) -> Result<u32> {
    let bad = |reason: &str| Err(Error::InvalidOrder { order: n, reason: reason.to_string() });
    if n.is_multiple_of(2) {
        return bad("order must be odd");
    }
    if n <= datum.dual_coxeter as u64 {
        return Err(Error::InvalidOrder {
            order: n,
            reason: format!("order must exceed the dual Coxeter number {} of {}", datum.dual_coxeter, datum.lie_type),
        });
    }
    if datum.lie_type == LieType::G2 && n.is_multiple_of(3) {
        return bad("order divisible by 3 forbidden for G2");
    }
    if n > u32::MAX as u64 {
        return bad("order too large");
    }
    if (datum.gram_det as u64).gcd(&n) != 1 {
        return Err(Error::InvalidOrder {
            order: n,
            reason: format!("order must be prime to det G = {}", datum.gram_det),
        });
    }
    Ok(n as u32)
}

/// An element of `X_N`, held by its lift in `[0, N)^r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightClass<'a> {
    pub datum: &'a RootDatum,
    pub order: u32,
    pub coords: Vec<i64>,
}

impl<'a> WeightClass<'a> {
    /// Reduce any integer lift.
    pub fn new(datum: &'a RootDatum, order: u32, lift: &[i64]) -> Result<Self> {
        if lift.len() != datum.rank {
            return Err(Error::Dimension { expected: datum.rank, got: lift.len() });
        }
        let n = order as i64;
        Ok(Self { datum, order, coords: lift.iter().map(|x| x.rem_euclid(n)).collect() })
    }

    pub fn index(&self) -> usize {
        class_index(&self.coords, self.order)
    }

    /// `((λ, λ) mod N, (λ + 2ρ, λ) mod N)`.
    pub fn quad_forms(&self) -> (u32, u32) {
        quad_forms(self.datum, self.order, &self.coords)
    }
}

/// `((λ, λ) mod N, (λ + 2ρ, λ) mod N)` from any integer lift.
pub fn quad_forms(datum: &RootDatum, order: u32, lift: &[i64]) -> (u32, u32) {
    let n = order as i64;
    let ll = datum.pairing_unchecked(lift, lift);
    let shifted: Vec<i64> = lift.iter().zip(&datum.rho).map(|(l, r)| l + 2 * r).collect();
    let lr = datum.pairing_unchecked(&shifted, lift);
    (ll.rem_euclid(n) as u32, lr.rem_euclid(n) as u32)
}

pub fn class_index(coords: &[i64], order: u32) -> usize {
    let n = order as i64;
    coords.iter().fold(0usize, |acc, &c| acc * order as usize + c.rem_euclid(n) as usize)
}

pub fn class_coords(mut index: usize, order: u32, rank: usize) -> Vec<i64> {
    let n = order as usize;
    let mut c = vec![0i64; rank];
    for slot in c.iter_mut().rev() {
        *slot = (index % n) as i64;
        index /= n;
    }
    c
}

/// Lexicographic iterator over `X_N`.
#[derive(Debug, Clone)]
pub struct XnIter<'a> {
    datum: &'a RootDatum,
    order: u32,
    next: usize,
    len: usize,
}

impl<'a> Iterator for XnIter<'a> {
    type Item = WeightClass<'a>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.len {
            return None;
        }
        let coords = class_coords(self.next, self.order, self.datum.rank);
        self.next += 1;
        Some(WeightClass { datum: self.datum, order: self.order, coords })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.len - self.next;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for XnIter<'_> {}

pub fn enumerate_xn(datum: &RootDatum, order: u32, budget: Budget) -> Result<XnIter<'_>> {
    let len = budget.check("X_N enumeration", order as u64, datum.rank as u32)? as usize;
    Ok(XnIter { datum, order, next: 0, len })
}

/// Lifts `λ̃ ∈ X` with `0 < 2(λ̃+ρ, α)/(α, α) < N` for every positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlcoveSet {
    pub order: u32,
    pub members: Vec<Vec<i64>>,
}

impl AlcoveSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn in_alcove(datum: &RootDatum, order: u32, lift: &[i64]) -> bool {
    let shifted: Vec<i64> = lift.iter().zip(&datum.rho).map(|(l, r)| l + r).collect();
    datum.positive_roots.iter().all(|a| {
        let c = datum.coroot_pairing(&shifted, a);
        c > 0 && c < order as i64
    })
}

/// The alcove, enumerated through fundamental-weight coordinates
/// `c_i = ⟨λ+ρ, α_i^∨⟩ ≥ 1` bounded by `⟨λ+ρ, θ^∨⟩ < N`.
pub fn alcove(datum: &RootDatum, order: u32, budget: Budget) -> Result<AlcoveSet> {
    budget.check("alcove enumeration", order as u64, datum.rank as u32)?;
    let r = datum.rank;
    let theta_norm = datum.pairing_unchecked(&datum.highest_root, &datum.highest_root);
    // θ^∨ = Σ m_i α_i^∨ with m_i = θ_i (α_i, α_i) / (θ, θ).
    let marks: Vec<i64> = (0..r)
        .map(|i| {
            let num = datum.highest_root[i] * datum.norms[i];
            debug_assert_eq!(num % theta_norm, 0);
            num / theta_norm
        })
        .collect();

    let mut members = Vec::new();
    let mut c = vec![1i64; r];
    collect_alcove(datum, order, &marks, &mut c, 0, 0, &mut members);
    members.sort();

    let mut seen = BTreeSet::new();
    for m in &members {
        debug_assert!(in_alcove(datum, order, m));
        let idx = class_index(m, order);
        assert!(seen.insert(idx), "alcove members must be distinct mod N");
    }
    Ok(AlcoveSet { order, members })
}

fn collect_alcove(
    datum: &RootDatum,
    order: u32,
    marks: &[i64],
    c: &mut Vec<i64>,
    depth: usize,
    partial: i64,
    out: &mut Vec<Vec<i64>>,
) {
    let r = datum.rank;
    if depth == r {
        let mut lam: Vec<i64> = datum.rho.iter().map(|x| -x).collect();
        for (ci, w) in c.iter().zip(&datum.fundamental_weights) {
            for (l, wk) in lam.iter_mut().zip(w) {
                *l += ci * wk;
            }
        }
        if in_alcove(datum, order, &lam) {
            out.push(lam);
        }
        return;
    }
    // the remaining coordinates contribute at least their marks
    let rest: i64 = marks[depth + 1..].iter().sum();
    let mut v = 1;
    while partial + v * marks[depth] + rest < order as i64 {
        c[depth] = v;
        collect_alcove(datum, order, marks, c, depth + 1, partial + v * marks[depth], out);
        v += 1;
    }
}

/// Reference scan: every lift in `[-half_width, half_width]^r` tested
/// against the defining inequalities. Independent of [`alcove`].
pub fn alcove_scan(datum: &RootDatum, order: u32, half_width: i64) -> Vec<Vec<i64>> {
    let r = datum.rank;
    let side = (2 * half_width + 1) as usize;
    let total = side.pow(r as u32);
    let mut out = Vec::new();
    for idx in 0..total {
        let mut k = idx;
        let mut lift = vec![0i64; r];
        for slot in lift.iter_mut().rev() {
            *slot = (k % side) as i64 - half_width;
            k /= side;
        }
        if in_alcove(datum, order, &lift) {
            out.push(lift);
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_validation() {
        let g2 = RootDatum::new(LieType::G2);
        let e8 = RootDatum::new(LieType::E8);
        let f4 = RootDatum::new(LieType::F4);
        assert_eq!(validate_order(&g2, 5).unwrap(), 5);
        let err = validate_order(&g2, 9).unwrap_err();
        assert!(err.to_string().contains("divisible by 3"));
        assert!(validate_order(&g2, 3).is_err());
        assert!(validate_order(&g2, 8).is_err());
        assert!(validate_order(&e8, 29).unwrap_err().to_string().contains("dual Coxeter"));
        assert_eq!(validate_order(&e8, 31).unwrap(), 31);
        assert!(validate_order(&f4, 9).is_err());
        assert_eq!(validate_order(&f4, 11).unwrap(), 11);
    }

    #[test]
    fn enumeration_counts() {
        let g2 = RootDatum::new(LieType::G2);
        let f4 = RootDatum::new(LieType::F4);
        let e8 = RootDatum::new(LieType::E8);
        assert_eq!(enumerate_xn(&g2, 5, Budget::default()).unwrap().count(), 25);
        assert_eq!(enumerate_xn(&f4, 11, Budget::default()).unwrap().len(), 14641);
        assert!(matches!(enumerate_xn(&e8, 31, Budget::default()), Err(Error::Capacity { .. })));
        let v: Vec<_> = enumerate_xn(&g2, 5, Budget::default()).unwrap().map(|w| w.coords).collect();
        assert_eq!(v[0], vec![0, 0]);
        assert_eq!(v[1], vec![0, 1]);
        assert_eq!(v[5], vec![1, 0]);
        for (i, c) in v.iter().enumerate() {
            assert_eq!(class_index(c, 5), i);
        }
    }

    #[test]
    fn quad_form_values() {
        let g2 = RootDatum::new(LieType::G2);
        assert_eq!(quad_forms(&g2, 5, &[0, 0]), (0, 0));
        assert_eq!(quad_forms(&g2, 5, &[1, 0]).0, 2);
        assert_eq!(quad_forms(&g2, 5, &[1, 0]), quad_forms(&g2, 5, &[6, 0]));
        assert_eq!(quad_forms(&g2, 5, &[3, 2]), quad_forms(&g2, 5, &[-2, 7]));
    }

    #[test]
    fn g2_alcove_at_five_is_empty() {
        let g2 = RootDatum::new(LieType::G2);
        // ⟨ρ, α^∨⟩ reaches 5 at the highest short root, so ρ sits on a wall
        let m = g2.positive_roots.iter().map(|al| g2.coroot_pairing(&g2.rho, al)).max().unwrap();
        assert_eq!(m, 5);
        assert_eq!(g2.coroot_pairing(&g2.rho, &g2.highest_root), g2.dual_coxeter - 1);
        let a = alcove(&g2, 5, Budget::default()).unwrap();
        assert!(a.is_empty());
        assert!(alcove_scan(&g2, 5, 5).is_empty());
    }

    #[test]
    fn alcove_matches_scan() {
        let g2 = RootDatum::new(LieType::G2);
        for n in [7u32, 11, 13] {
            let a = alcove(&g2, n, Budget::default()).unwrap();
            assert_eq!(a.members, alcove_scan(&g2, n, n as i64), "N = {n}");
            assert!(a.members.contains(&vec![0, 0]));
        }
        let a = alcove(&g2, 7, Budget::default()).unwrap();
        assert_eq!(a.members, vec![vec![0, 0]]);
        let f4 = RootDatum::new(LieType::F4);
        assert!(alcove(&f4, 11, Budget::default()).unwrap().is_empty());
        assert_eq!(alcove(&f4, 13, Budget::default()).unwrap().members, vec![vec![0, 0, 0, 0]]);
    }

    #[test]
    fn alcove_boundary_excluded() {
        let g2 = RootDatum::new(LieType::G2);
        let zero = vec![0, 0];
        assert!(!in_alcove(&g2, 5, &zero));
        assert!(in_alcove(&g2, 6, &zero));
        // ⟨λ+ρ, θ^∨⟩ = N puts λ on the outer wall
        let lam = vec![1, 0];
        let shifted: Vec<i64> = lam.iter().zip(&g2.rho).map(|(a, b)| a + b).collect();
        let n = g2.coroot_pairing(&shifted, &g2.highest_root);
        assert!(!in_alcove(&g2, n as u32, &lam));
    }
}
