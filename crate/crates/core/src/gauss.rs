//! Quadratic Gauss sums over `(Z/N)^r`:
//! `Σ_x q^{k·xᵀFx + b·x}`.
//!
//! [`gauss_brute`] sums all `N^r` terms. [`gauss_closed`] splits `N` into
//! prime powers, congruence-diagonalises `F` over each `Z/p^e` and
//! multiplies one-dimensional sums; it has no size limit and is the only
//! route to E8. Both return the exact group-ring element, so the two can be
//! compared coefficient by coefficient.

#![allow(clippy::needless_range_loop)]

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclo::CycNum;
use crate::lattice::Budget;
use crate::ring;
use crate::rootsys::RootDatum;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadGaussSpec {
    pub order: u32,
    /// Symmetric `r × r` matrix.
    pub form: Vec<Vec<i64>>,
    pub linear: Vec<i64>,
    pub scale: i64,
}

impl QuadGaussSpec {
    pub fn new(order: u32, form: Vec<Vec<i64>>, linear: Vec<i64>, scale: i64) -> Result<Self> {
        let r = form.len();
        if linear.len() != r {
            return Err(Error::Dimension { expected: r, got: linear.len() });
        }
        let n = order as i64;
        for (i, row) in form.iter().enumerate() {
            if row.len() != r {
                return Err(Error::Dimension { expected: r, got: row.len() });
            }
            for j in 0..i {
                if (form[i][j] - form[j][i]).rem_euclid(n) != 0 {
                    return Err(Error::InvalidInput(alloc::format!("form not symmetric mod {order} at ({i}, {j})")));
                }
            }
        }
        if order < 1 || order.is_multiple_of(2) {
            return Err(Error::InvalidInput(alloc::format!("Gauss sums need odd N, got {order}")));
        }
        Ok(Self { order, form, linear, scale })
    }

    /// `G_k(q; g)`: the form is the Gram matrix, no linear term.
    pub fn lattice(datum: &RootDatum, order: u32, k: i64) -> Self {
        Self { order, form: datum.gram.clone(), linear: vec![0; datum.rank], scale: k }
    }

    pub fn rank(&self) -> usize {
        self.form.len()
    }

    /// The exponent `k·xᵀFx + b·x` reduced mod `N`.
    pub fn exponent(&self, x: &[i64]) -> usize {
        let n = self.order as i128;
        let mut quad = 0i128;
        for (i, xi) in x.iter().enumerate() {
            for (j, xj) in x.iter().enumerate() {
                quad += (self.form[i][j] as i128) * (*xi as i128) * (*xj as i128);
            }
        }
        let lin: i128 = self.linear.iter().zip(x).map(|(b, v)| (*b as i128) * (*v as i128)).sum();
        ((self.scale as i128 * quad + lin).rem_euclid(n)) as usize
    }
}

/// Exponent histogram of the direct sum over all `N^r` points.
pub fn gauss_brute_raw(spec: &QuadGaussSpec, budget: Budget) -> Result<Vec<i128>> {
    let r = spec.rank();
    let total = budget.check("brute-force Gauss sum", spec.order as u64, r as u32)? as usize;
    let mut hist = vec![0i128; spec.order as usize];
    let mut x = vec![0i64; r];
    for _ in 0..total {
        hist[spec.exponent(&x)] += 1;
        for slot in x.iter_mut().rev() {
            *slot += 1;
            if *slot < spec.order as i64 {
                break;
            }
            *slot = 0;
        }
    }
    Ok(hist)
}

pub fn gauss_brute(spec: &QuadGaussSpec, budget: Budget) -> Result<CycNum> {
    Ok(CycNum::from_group_ring(spec.order, &gauss_brute_raw(spec, budget)?))
}

/// Closed-form evaluation as a group-ring element of `Z[x]/(x^N - 1)`.
pub fn gauss_closed_raw(spec: &QuadGaussSpec) -> Vec<BigInt> {
    let n = spec.order as u64;
    let mut acc = ring::monomial::<BigInt>(spec.order, 0);
    for (p, e) in factorize(n) {
        let m = p.pow(e);
        let cof = n / m;
        // CRT idempotent u = cof · c with c = cof^{-1} mod m: q^{u·f} = ζ_m^{c·f}.
        let c = if m == 1 { 0 } else { mod_inverse(cof % m, m).expect("coprime cofactor") };
        let local = local_sum(spec, p, e, c as i64);
        let mut embedded = vec![BigInt::zero(); spec.order as usize];
        for (t, count) in local.into_iter().enumerate() {
            if !count.is_zero() {
                embedded[(cof as usize * t) % spec.order as usize] += count;
            }
        }
        acc = ring::convolve(&acc, &embedded);
    }
    acc
}

pub fn gauss_closed(spec: &QuadGaussSpec) -> CycNum {
    CycNum::from_group_ring(spec.order, &gauss_closed_raw(spec))
}

/// `Σ_{x mod p^e} ζ_{p^e}^{c·f(x)}` as a histogram over `Z/p^e`.
fn local_sum(spec: &QuadGaussSpec, p: u64, e: u32, c: i64) -> Vec<BigInt> {
    let m = p.pow(e) as i64;
    let r = spec.rank();
    let a: Vec<Vec<i64>> =
        spec.form.iter().map(|row| row.iter().map(|&v| mulmod(mulmod(v, spec.scale, m), c, m)).collect()).collect();
    let b: Vec<i64> = spec.linear.iter().map(|&v| mulmod(v, c, m)).collect();
    let (diag, basis) = diagonalize_mod_prime_power(&a, p, e);
    // x = P y: linear part becomes Pᵀ b.
    let b2: Vec<i64> =
        (0..r).map(|j| (0..r).fold(0i64, |s, i| (s + mulmod(basis[i][j], b[i], m)).rem_euclid(m))).collect();
    let mut acc = vec![BigInt::zero(); m as usize];
    acc[0] = BigInt::one();
    for j in 0..r {
        let mut axis = vec![BigInt::zero(); m as usize];
        for y in 0..m {
            let t = (mulmod(mulmod(diag[j], y, m), y, m) + mulmod(b2[j], y, m)).rem_euclid(m);
            axis[t as usize] += 1;
        }
        acc = ring::convolve(&acc, &axis);
    }
    acc
}

/// Congruence diagonalisation of a symmetric matrix over `Z/p^e`, `p` odd:
/// returns `(D, P)` with `Pᵀ A P ≡ diag(D)` and `P` invertible mod `p^e`.
///
/// Pivots on an entry of minimal `p`-adic valuation; when that entry is
/// off-diagonal at `(i, j)`, the substitution `e_i ↦ e_i + e_j` moves it to
/// the diagonal (needs `2` to be a unit).
pub fn diagonalize_mod_prime_power(a: &[Vec<i64>], p: u64, e: u32) -> (Vec<i64>, Vec<Vec<i64>>) {
    let r = a.len();
    let m = p.pow(e) as i64;
    let mut a: Vec<Vec<i64>> = a.iter().map(|row| row.iter().map(|v| v.rem_euclid(m)).collect()).collect();
    let mut basis: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as i64).collect()).collect();
    let val = |x: i64| -> u32 {
        if x == 0 {
            return e;
        }
        let mut x = x;
        let mut v = 0;
        while x % p as i64 == 0 {
            x /= p as i64;
            v += 1;
        }
        v
    };

    for k in 0..r {
        // minimal valuation in the trailing block, preferring the diagonal
        let mut best: Option<(u32, usize, usize)> = None;
        for i in k..r {
            for j in k..r {
                let v = val(a[i][j]);
                if v >= e {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bv, bi, bj)) => v < bv || (v == bv && i == j && bi != bj),
                };
                if better {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((v, i, j)) = best else { break };
        let piv_row = if i == j {
            i
        } else {
            // e_i ↦ e_i + e_j
            add_col(&mut a, &mut basis, i, j, 1, m);
            i
        };
        swap_index(&mut a, &mut basis, k, piv_row);

        let pv = (p as i64).pow(v);
        let unit = a[k][k] / pv;
        let unit_inv = mod_inverse(unit.rem_euclid(m) as u64, m as u64).expect("unit pivot") as i64;
        for l in k + 1..r {
            if a[k][l] == 0 {
                continue;
            }
            debug_assert_eq!(a[k][l] % pv, 0);
            let t = mulmod(a[k][l] / pv, unit_inv, m);
            add_col(&mut a, &mut basis, l, k, (m - t) % m, m);
        }
    }

    debug_assert!({
        let mut ok = true;
        for i in 0..r {
            for j in 0..r {
                if i != j && a[i][j] != 0 {
                    ok = false;
                }
            }
        }
        ok
    });
    ((0..r).map(|i| a[i][i]).collect(), basis)
}

/// Simultaneous row/column operation `e_dst ↦ e_dst + t·e_src`.
fn add_col(a: &mut [Vec<i64>], basis: &mut [Vec<i64>], dst: usize, src: usize, t: i64, m: i64) {
    let r = a.len();
    for row in a.iter_mut() {
        row[dst] = (row[dst] + mulmod(t, row[src], m)).rem_euclid(m);
    }
    for col in 0..r {
        let add = mulmod(t, a[src][col], m);
        a[dst][col] = (a[dst][col] + add).rem_euclid(m);
    }
    for row in basis.iter_mut() {
        row[dst] = (row[dst] + mulmod(t, row[src], m)).rem_euclid(m);
    }
}

fn swap_index(a: &mut [Vec<i64>], basis: &mut [Vec<i64>], x: usize, y: usize) {
    if x == y {
        return;
    }
    a.swap(x, y);
    for row in a.iter_mut() {
        row.swap(x, y);
    }
    for row in basis.iter_mut() {
        row.swap(x, y);
    }
}

#[inline]
fn mulmod(a: i64, b: i64, m: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(m as i128)) as i64
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Prime factorisation by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `G_k(q; g) = Σ_{λ ∈ X_N} q^{k(λ, λ)}`, through the closed form.
pub fn g_k(datum: &RootDatum, order: u32, k: i64) -> CycNum {
    gauss_closed(&QuadGaussSpec::lattice(datum, order, k))
}

pub fn g_k_raw(datum: &RootDatum, order: u32, k: i64) -> Vec<BigInt> {
    gauss_closed_raw(&QuadGaussSpec::lattice(datum, order, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::LieType;
    use crate::RootOfUnitySpec;

    #[test]
    fn classical_sum_mod_five() {
        let s = QuadGaussSpec::new(5, vec![vec![1]], vec![0], 1).unwrap();
        let g = gauss_brute(&s, Budget::default()).unwrap();
        let (re, im) = g.embed(&RootOfUnitySpec::standard(5)).unwrap();
        assert!((re - 5f64.sqrt()).abs() < 1e-12 && im.abs() < 1e-12);
        assert_eq!(gauss_closed(&s), g);
    }

    #[test]
    fn trivial_forms() {
        let s = QuadGaussSpec::new(7, vec![vec![0, 0], vec![0, 0]], vec![0, 0], 1).unwrap();
        assert_eq!(gauss_brute(&s, Budget::default()).unwrap(), CycNum::from_integer(7, 49));
        assert_eq!(gauss_closed(&s), CycNum::from_integer(7, 49));
        let s = QuadGaussSpec::new(7, vec![vec![0, 0], vec![0, 0]], vec![1, 0], 1).unwrap();
        assert!(gauss_brute(&s, Budget::default()).unwrap().is_zero());
        assert!(gauss_closed(&s).is_zero());
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(QuadGaussSpec::new(6, vec![vec![1]], vec![0], 1).is_err());
        assert!(QuadGaussSpec::new(5, vec![vec![1, 2], vec![3, 1]], vec![0, 0], 1).is_err());
        assert!(QuadGaussSpec::new(5, vec![vec![1]], vec![0, 0], 1).is_err());
    }

    #[test]
    fn diagonalisation_identity() {
        // off-diagonal pivot forced: [[0, 1], [1, 0]] mod 9
        let a = vec![vec![0, 1], vec![1, 0]];
        let (d, p) = diagonalize_mod_prime_power(&a, 3, 2);
        let m = 9i64;
        for i in 0..2 {
            for j in 0..2 {
                let mut s = 0i64;
                for k in 0..2 {
                    for l in 0..2 {
                        s += p[k][i] * a[k][l] * p[l][j];
                    }
                }
                let want = if i == j { d[i] } else { 0 };
                assert_eq!(s.rem_euclid(m), want.rem_euclid(m));
            }
        }
    }

    #[test]
    fn factorisation() {
        assert_eq!(factorize(45), vec![(3, 2), (5, 1)]);
        assert_eq!(factorize(31), vec![(31, 1)]);
        assert_eq!(mod_inverse(3, 7), Some(5));
        assert_eq!(mod_inverse(3, 9), None);
    }

    #[test]
    fn g2_g1_matches_brute() {
        let d = RootDatum::new(LieType::G2);
        let brute = gauss_brute(&QuadGaussSpec::lattice(&d, 5, 1), Budget::default()).unwrap();
        assert_eq!(g_k(&d, 5, 1), brute);
        assert_eq!(g_k(&d, 5, 0), CycNum::from_integer(5, 25));
    }
}
