use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::{Error, Result};

/// Lens space `L(m, n)` with `m ≥ 2`, `0 < n < m`, `gcd(m, n) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LensSpec {
    m: i64,
    n: i64,
}

impl LensSpec {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        let bad = |reason: &str| Err(Error::InvalidLens { m, n, reason: reason.into() });
        if m < 2 {
            return bad("m must be at least 2");
        }
        if n <= 0 || n >= m {
            return bad("need 0 < n < m");
        }
        if m.gcd(&n) != 1 {
            return Err(Error::InvalidLens { m, n, reason: format!("gcd(m, n) = {} != 1", m.gcd(&n)) });
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// All lens spaces with `2 ≤ m ≤ m_max`, ordered by `(m, n)`.
    pub fn all_up_to(m_max: i64) -> Vec<LensSpec> {
        let mut out = Vec::new();
        for m in 2..=m_max {
            for n in 1..m {
                if m.gcd(&n) == 1 {
                    out.push(LensSpec { m, n });
                }
            }
        }
        out
    }

    /// `n'` with `n n' ≡ 1 (mod m)`.
    pub fn inverse_n(&self) -> i64 {
        let e = self.n.extended_gcd(&self.m);
        e.x.rem_euclid(self.m)
    }

    /// `L(m, m - n)`: the same manifold with reversed orientation.
    pub fn reversed(&self) -> LensSpec {
        LensSpec { m: self.m, n: self.m - self.n }
    }
}

/// `m/n = a_1 - 1/(a_2 - 1/(… - 1/a_s))` with every `a_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HJExpansion {
    pub terms: Vec<i64>,
}

impl HJExpansion {
    /// The fraction the terms evaluate to, in lowest terms.
    pub fn evaluate(&self) -> (i128, i128) {
        let mut it = self.terms.iter().rev();
        let last = *it.next().expect("non-empty expansion") as i128;
        let (mut num, mut den) = (last, 1i128);
        for &a in it {
            // a - den/num
            let next = (a as i128 * num - den, num);
            num = next.0;
            den = next.1;
        }
        let g = num.gcd(&den);
        (num / g, den / g)
    }
}

pub fn hj_expand(spec: LensSpec) -> HJExpansion {
    let (mut m, mut n) = (spec.m, spec.n);
    let mut terms = Vec::new();
    while n > 0 {
        let a = Integer::div_ceil(&m, &n);
        terms.push(a);
        (m, n) = (n, a * n - m);
    }
    let out = HJExpansion { terms };
    debug_assert_eq!(out.evaluate(), (spec.m as i128, spec.n as i128));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(hj_expand(LensSpec::new(7, 1).unwrap()).terms, [7]);
        assert_eq!(hj_expand(LensSpec::new(7, 2).unwrap()).terms, [4, 2]);
        assert_eq!(hj_expand(LensSpec::new(5, 3).unwrap()).terms, [2, 3]);
        assert_eq!(hj_expand(LensSpec::new(7, 4).unwrap()).terms, [2, 4]);
        assert_eq!(hj_expand(LensSpec::new(5, 4).unwrap()).terms, [2, 2, 2, 2]);
    }

    #[test]
    fn invalid_specs() {
        assert!(LensSpec::new(1, 0).is_err());
        assert!(LensSpec::new(6, 4).is_err());
        assert!(LensSpec::new(5, 5).is_err());
        assert!(LensSpec::new(5, 0).is_err());
    }

    #[test]
    fn coprime_pairs() {
        assert_eq!(LensSpec::all_up_to(6).len(), 11);
        assert!(LensSpec::all_up_to(1).is_empty());
        assert_eq!(LensSpec::new(7, 2).unwrap().inverse_n(), 4);
    }
}
