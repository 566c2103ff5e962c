//! Eigenvalue sign counts of chain-link linking matrices.
//!
//! The linking matrix of a chain with framings `(a_1, …, a_s)` is
//! tridiagonal with diagonal `a_i` and off-diagonal `1`. Its leading
//! principal minors obey the continuant recurrence, and by Sylvester's law
//! the number of negative eigenvalues equals the number of sign changes in
//! the minor sequence. Zero minors are resolved exactly by evaluating the
//! minors of `A ± εI` as polynomials in `ε` and reading off the sign of the
//! lowest-order nonzero coefficient.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SignatureCount {
    /// Eigenvalues `< 0`, from `A + εI`.
    pub negative: usize,
    /// Eigenvalues `= 0`.
    pub zero: usize,
    /// Eigenvalues `≤ 0`, from `A - εI`.
    pub nonpositive: usize,
}

/// Number of nonpositive eigenvalues of the chain's linking matrix, with the
/// strict/non-strict split.
pub fn signature_count(framings: &[i64]) -> SignatureCount {
    let negative = negative_count(framings, 1);
    let nonpositive = negative_count(framings, -1);
    SignatureCount { negative, zero: nonpositive - negative, nonpositive }
}

/// Negative eigenvalues of `A + shift·εI` for infinitesimal `ε > 0`.
fn negative_count(framings: &[i64], shift: i64) -> usize {
    // minors as polynomials in ε, constant term first
    let mut prev2: Vec<BigInt> = vec![];
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)];
    let mut changes = 0;
    let mut last_sign = Ordering::Greater;
    for &a in framings {
        let mut next = vec![BigInt::zero(); prev.len() + 1];
        for (k, c) in prev.iter().enumerate() {
            next[k] += c * a;
            next[k + 1] += c * shift;
        }
        for (k, c) in prev2.iter().enumerate() {
            next[k] -= c;
        }
        let sign = leading_sign(&next);
        if sign != last_sign {
            changes += 1;
        }
        last_sign = sign;
        prev2 = core::mem::replace(&mut prev, next);
    }
    changes
}

fn leading_sign(p: &[BigInt]) -> Ordering {
    let c = p.iter().find(|c| !c.is_zero()).expect("minor of A ± εI is a nonzero polynomial");
    if c.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Negative pivots of `A - δI` in floating point, for a small `δ`.
    fn numeric_nonpositive(framings: &[i64]) -> usize {
        let delta = 1e-7;
        let mut d_prev: Option<f64> = None;
        let mut count = 0;
        for &a in framings {
            let d = match d_prev {
                None => a as f64 - delta,
                Some(p) => a as f64 - delta - 1.0 / p,
            };
            if d < 0.0 {
                count += 1;
            }
            d_prev = Some(d);
        }
        count
    }

    #[test]
    fn examples() {
        assert_eq!(signature_count(&[4, 2]).nonpositive, 0);
        assert_eq!(signature_count(&[-1]).nonpositive, 1);
        assert_eq!(signature_count(&[-1]).negative, 1);
        let z = signature_count(&[0]);
        assert_eq!((z.negative, z.zero, z.nonpositive), (0, 1, 1));
        assert_eq!(signature_count(&[1]).nonpositive, 0);
        // [[1,1],[1,1]] has eigenvalues 0 and 2
        let s = signature_count(&[1, 1]);
        assert_eq!((s.negative, s.zero), (0, 1));
        // [[0,1],[1,0]] has eigenvalues ±1
        let s = signature_count(&[0, 0]);
        assert_eq!((s.negative, s.zero), (1, 0));
        // [[0,1,0],[1,0,1],[0,1,0]] has eigenvalues 0, ±√2
        let s = signature_count(&[0, 0, 0]);
        assert_eq!((s.negative, s.zero), (1, 1));
    }

    #[test]
    fn matches_numeric_pivots() {
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    let f = [a, b, c];
                    assert_eq!(signature_count(&f).nonpositive, numeric_nonpositive(&f), "{f:?}");
                }
            }
        }
    }
}
