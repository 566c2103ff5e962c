//! The h-recursion over `X_N` and the literal multisum it collapses.
//!
//! Tables hold `ĥ^{(k)} = Ω^{-k} h^{(k)}`, which has integer coefficients in
//! `Z[x]/(x^N - 1)`: `ĥ^{(0)}_μ = Q(μ)` and
//!
//! ```text
//! ĥ^{(k)}_λ = Σ_{μ ∈ X_N} q^{a_k (μ+2ρ, μ) + 2(μ+ρ, λ+ρ)} ĥ^{(k-1)}_μ
//! ```
//!
//! so every step is a sum of cyclic shifts. The dense step applies the
//! kernel pair by pair (`N^{2r}` shifts). The factored step pulls out the
//! phases that depend on only one of `μ, λ`, leaving the character
//! `q^{2(μ, λ)} = q^{μ · (2Gλ)}`, which is a product of one-dimensional
//! transforms taken one axis at a time (`r N^{r+1}` shifts).

use alloc::vec::Vec;

use crate::lattice::{class_coords, class_index};
use crate::ring::{self, Coeff};
use crate::rootsys::{RootDatum, WeylElement};

use super::weyl::weyl_q_raw;

#[cfg(feature = "parallel")]
pub(crate) fn map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}

/// Per-class data reused by every recursion step.
pub(crate) struct LatticeTables<T> {
    pub order: u32,
    pub rank: usize,
    pub len: usize,
    /// `μ + ρ` for the lift of `μ` in `[0, N)^r`.
    shifted: Vec<Vec<i64>>,
    /// `G(μ + ρ) mod N`.
    shifted_gram: Vec<Vec<i64>>,
    /// `(μ + 2ρ, μ) mod N`.
    pub phase: Vec<usize>,
    /// `2(μ, ρ) mod N`.
    rho_lin: Vec<usize>,
    /// `2(μ + ρ, ρ) mod N`.
    pub rho_shift: Vec<usize>,
    /// Index of the class `2Gλ mod N`.
    dual_index: Vec<usize>,
    /// `Q(μ)`.
    pub q: Vec<Vec<T>>,
}

impl<T: Coeff> LatticeTables<T> {
    pub fn new(datum: &RootDatum, order: u32, len: usize) -> Self {
        let r = datum.rank;
        let n = order as i64;
        let coords: Vec<Vec<i64>> = (0..len).map(|i| class_coords(i, order, r)).collect();
        let shifted: Vec<Vec<i64>> =
            coords.iter().map(|c| c.iter().zip(&datum.rho).map(|(a, b)| a + b).collect()).collect();
        let shifted_gram =
            shifted.iter().map(|s| datum.gram_apply(s).into_iter().map(|x| x.rem_euclid(n)).collect()).collect();
        let phase = coords.iter().map(|c| crate::lattice::quad_forms(datum, order, c).1 as usize).collect();
        let rho_lin =
            coords.iter().map(|c| ring::reduce_exp(2 * datum.pairing_unchecked(c, &datum.rho), order)).collect();
        let rho_shift =
            shifted.iter().map(|s| ring::reduce_exp(2 * datum.pairing_unchecked(s, &datum.rho), order)).collect();
        let dual_index = coords
            .iter()
            .map(|c| {
                let g: Vec<i64> = datum.gram_apply(c).into_iter().map(|x| 2 * x).collect();
                class_index(&g, order)
            })
            .collect();
        let q = map_indices(len, |i| weyl_q_raw::<T>(datum, order, &coords[i]));
        Self { order, rank: r, len, shifted, shifted_gram, phase, rho_lin, rho_shift, dual_index, q }
    }

    #[inline]
    fn bilinear(&self, mu: usize, lambda: usize) -> usize {
        let s: i64 = self.shifted[mu].iter().zip(&self.shifted_gram[lambda]).map(|(a, b)| a * b).sum();
        ring::reduce_exp(2 * s, self.order)
    }

    pub fn step_dense(&self, prev: &[Vec<T>], a: i64) -> Vec<Vec<T>> {
        let n = self.order;
        let diag: Vec<usize> = self.phase.iter().map(|&t| ring::reduce_exp(a * t as i64, n)).collect();
        map_indices(self.len, |lambda| {
            let mut acc = ring::zero_vec::<T>(n);
            for (mu, h) in prev.iter().enumerate() {
                let e = (diag[mu] + self.bilinear(mu, lambda)) % n as usize;
                ring::shift_add(&mut acc, h, e);
            }
            acc
        })
    }

    pub fn step_factored(&self, prev: &[Vec<T>], a: i64) -> Vec<Vec<T>> {
        let n = self.order;
        let mut cur: Vec<Vec<T>> = map_indices(self.len, |mu| {
            let e = ring::reduce_exp(a * self.phase[mu] as i64 + self.rho_lin[mu] as i64, n);
            ring::shifted(&prev[mu], e)
        });
        for axis in 0..self.rank {
            cur = self.axis_transform(&cur, axis);
        }
        map_indices(self.len, |lambda| ring::shifted(&cur[self.dual_index[lambda]], self.rho_shift[lambda]))
    }

    /// `out[.., u, ..] = Σ_c q^{c·u} in[.., c, ..]` along one coordinate.
    fn axis_transform(&self, input: &[Vec<T>], axis: usize) -> Vec<Vec<T>> {
        let n = self.order as usize;
        let stride = n.pow((self.rank - 1 - axis) as u32);
        map_indices(self.len, |idx| {
            let u = (idx / stride) % n;
            let base = idx - u * stride;
            let mut acc = ring::zero_vec::<T>(self.order);
            for c in 0..n {
                ring::shift_add(&mut acc, &input[base + c * stride], (c * u) % n);
            }
            acc
        })
    }

    /// Only the `λ = 0` cell of the next step; the same sum for every strategy.
    pub fn final_cell(&self, prev: &[Vec<T>], a: i64) -> Vec<T> {
        let n = self.order;
        let mut acc = ring::zero_vec::<T>(n);
        for (mu, h) in prev.iter().enumerate() {
            let e = ring::reduce_exp(a * self.phase[mu] as i64 + self.rho_shift[mu] as i64, n);
            ring::shift_add(&mut acc, h, e);
        }
        acc
    }

    /// `Σ_{μ_1..μ_s} Q(μ_1) q^{Σ_i a_i(μ_i+2ρ, μ_i) + 2(μ_i+ρ, μ_{i+1}+ρ)}`
    /// with `μ_{s+1} = 0`, enumerated tuple by tuple.
    pub fn direct_multisum(&self, framings: &[i64]) -> Vec<T> {
        self.direct_multisum_at(framings, 0)
    }

    /// The same multisum with `μ_{s+1}` set to the class `target`.
    pub fn direct_multisum_at(&self, framings: &[i64], target: usize) -> Vec<T> {
        let n = self.order;
        let diag: Vec<Vec<usize>> =
            framings.iter().map(|&a| self.phase.iter().map(|&t| ring::reduce_exp(a * t as i64, n)).collect()).collect();
        let partials = map_indices(self.len, |mu1| {
            let mut acc = ring::zero_vec::<T>(n);
            self.multisum_rec(&diag, target, 1, mu1, mu1, diag[0][mu1], &mut acc);
            acc
        });
        let mut total = ring::zero_vec::<T>(n);
        for p in &partials {
            ring::shift_add(&mut total, p, 0);
        }
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn multisum_rec(
        &self,
        diag: &[Vec<usize>],
        target: usize,
        depth: usize,
        first: usize,
        last: usize,
        exp: usize,
        acc: &mut [T],
    ) {
        let n = self.order as usize;
        if depth == diag.len() {
            let e = (exp + self.bilinear(last, target)) % n;
            ring::shift_add(acc, &self.q[first], e);
            return;
        }
        for mu in 0..self.len {
            let e = (exp + diag[depth][mu] + self.bilinear(last, mu)) % n;
            self.multisum_rec(diag, target, depth + 1, first, mu, e, acc);
        }
    }
}

/// Index of `σ(λ + ρ) - ρ mod N`.
pub fn weyl_shifted_index(datum: &RootDatum, order: u32, sigma: &WeylElement, index: usize) -> usize {
    let c = class_coords(index, order, datum.rank);
    let shifted: Vec<i64> = c.iter().zip(&datum.rho).map(|(a, b)| a + b).collect();
    let image = sigma.apply(&shifted);
    let back: Vec<i64> = image.iter().zip(&datum.rho).map(|(a, b)| a - b).collect();
    class_index(&back, order)
}
