//! The integer group ring `Z[x]/(x^N - 1)`.
//!
//! Every sum the invariants need is a sum of roots of unity with integer
//! multiplicities, so the hot loops work on plain length-`N` coefficient
//! vectors and only the final normalisation touches [`crate::CycNum`].
//! Multiplying by `q^e` is a cyclic shift.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_traits::Zero;

/// Coefficient type for group-ring vectors.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn from_i64(v: i64) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl Coeff for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Reduce an arbitrary integer exponent into `[0, n)`.
#[inline]
pub fn reduce_exp(e: i64, n: u32) -> usize {
    e.rem_euclid(n as i64) as usize
}

pub fn zero_vec<T: Coeff>(n: u32) -> Vec<T> {
    vec![T::zero(); n as usize]
}

/// `x^e` as a group-ring vector.
pub fn monomial<T: Coeff>(n: u32, e: i64) -> Vec<T> {
    let mut v = zero_vec(n);
    v[reduce_exp(e, n)] = T::from_i64(1);
    v
}

/// `dst += x^shift · src`.
#[inline]
pub fn shift_add<T: Coeff>(dst: &mut [T], src: &[T], shift: usize) {
    let n = dst.len();
    debug_assert_eq!(n, src.len());
    let shift = shift % n;
    let (head, tail) = dst.split_at_mut(shift);
    // src[j] lands at j + shift; the last `shift` entries wrap to the front.
    for (d, s) in tail.iter_mut().zip(&src[..n - shift]) {
        *d += s;
    }
    for (d, s) in head.iter_mut().zip(&src[n - shift..]) {
        *d += s;
    }
}

/// `dst -= x^shift · src`.
#[inline]
pub fn shift_sub<T: Coeff>(dst: &mut [T], src: &[T], shift: usize) {
    let n = dst.len();
    let shift = shift % n;
    let (head, tail) = dst.split_at_mut(shift);
    for (d, s) in tail.iter_mut().zip(&src[..n - shift]) {
        *d -= s;
    }
    for (d, s) in head.iter_mut().zip(&src[n - shift..]) {
        *d -= s;
    }
}

/// `x^shift · src` as a fresh vector.
pub fn shifted<T: Coeff>(src: &[T], shift: usize) -> Vec<T> {
    let n = src.len();
    let shift = shift % n;
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&src[n - shift..]);
    out.extend_from_slice(&src[..n - shift]);
    out
}

/// Cyclic convolution: the product in `Z[x]/(x^N - 1)`.
pub fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len();
    debug_assert_eq!(n, b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let k = if i + j >= n { i + j - n } else { i + j };
            out[k] += ai * bj;
        }
    }
    out
}

/// Multiply by the binomial `x^e - x^{-e}` in place.
pub fn mul_binomial<T: Coeff>(v: &mut Vec<T>, e: usize) {
    let n = v.len();
    let mut out = shifted(v, e % n);
    shift_sub(&mut out, v, (n - e % n) % n);
    *v = out;
}

/// Sum of absolute values, as a bit count upper bound.
pub fn l1_bits<T: Coeff>(v: &[T]) -> u64 {
    let mut total = BigInt::zero();
    for c in v {
        let b = c.to_bigint();
        total += if b < BigInt::zero() { -b } else { b };
    }
    total.bits()
}

pub fn to_bigints<T: Coeff>(v: &[T]) -> Vec<BigInt> {
    v.iter().map(Coeff::to_bigint).collect()
}
