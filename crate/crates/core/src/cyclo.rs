//! Exact arithmetic in the cyclotomic field `Q(ζ_N)`.
//!
//! A [`CycNum`] is stored as `(a_0 + a_1 q + … + a_{N-1} q^{N-1}) / d` with
//! integer `a_j` and a positive common denominator `d`, i.e. as an element
//! of `Q[x]/(x^N - 1)` mapped onto the field. Arithmetic never reduces by
//! the cyclotomic polynomial: products are cyclic convolutions. The
//! canonical form, reduction modulo `Φ_N` followed by clearing the content,
//! is computed only when comparing, serialising or embedding.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ring::{self, Coeff};
use crate::{Error, Result};

/// Which complex number `q` stands for: `q ↦ exp(2πi c / N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RootOfUnitySpec {
    pub order: u32,
    pub embedding_index: i64,
}

impl RootOfUnitySpec {
    pub fn new(order: u32, embedding_index: i64) -> Result<Self> {
        if order == 0 || embedding_index.gcd(&(order as i64)) != 1 {
            return Err(Error::InvalidAutomorphism { k: embedding_index, order });
        }
        Ok(Self { order, embedding_index })
    }

    pub fn standard(order: u32) -> Self {
        Self { order, embedding_index: 1 }
    }
}

#[derive(Clone)]
pub struct CycNum {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

/// Canonical representative: coefficients of the remainder modulo `Φ_N`
/// (length `φ(N)`) over a positive denominator coprime to their content.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Canonical {
    pub order: u32,
    pub num: Vec<BigInt>,
    pub den: BigInt,
}

impl Canonical {
    /// Each coefficient as a reduced fraction `(p, q)`, `q > 0`.
    pub fn fractions(&self) -> Vec<(BigInt, BigInt)> {
        self.num
            .iter()
            .map(|a| {
                let g = a.gcd(&self.den);
                (a / &g, &self.den / &g)
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// `Some(p/q)` when the element is rational.
    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        if self.num.iter().skip(1).all(Zero::is_zero) {
            self.fractions().into_iter().next().or(Some((BigInt::zero(), BigInt::one())))
        } else {
            None
        }
    }
}

impl CycNum {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        Self { order, num: vec![BigInt::zero(); order as usize], den: BigInt::one() }
    }

    pub fn one(order: u32) -> Self {
        Self::from_integer(order, 1)
    }

    pub fn from_integer(order: u32, v: impl Into<BigInt>) -> Self {
        let mut x = Self::zero(order);
        x.num[0] = v.into();
        x
    }

    /// `p / q` as a field element.
    pub fn from_ratio(order: u32, p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let q: BigInt = q.into();
        if q.is_zero() {
            return Err(Error::DivisionByZero(order));
        }
        let mut x = Self::from_integer(order, p);
        x.den = q;
        x.fix_sign();
        x.reduce_content();
        Ok(x)
    }

    /// `q^e` with `e` taken mod `N`.
    pub fn q_power(order: u32, e: i64) -> Self {
        let mut x = Self::zero(order);
        x.num[ring::reduce_exp(e, order)] = BigInt::one();
        x
    }

    /// Element `Σ_j v_j q^j` of a group-ring vector with integer coefficients.
    pub fn from_group_ring<T: Coeff>(order: u32, v: &[T]) -> Self {
        assert_eq!(v.len(), order as usize, "group-ring vector length must equal the order");
        Self { order, num: ring::to_bigints(v), den: BigInt::one() }
    }

    /// Build from raw numerators and a common denominator.
    pub fn from_parts(order: u32, num: Vec<BigInt>, den: BigInt) -> Result<Self> {
        if num.len() > order as usize {
            return Err(Error::Dimension { expected: order as usize, got: num.len() });
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero(order));
        }
        let mut full = num;
        full.resize(order as usize, BigInt::zero());
        let mut x = Self { order, num: full, den };
        x.fix_sign();
        x.reduce_content();
        Ok(x)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Raw numerators (not canonical).
    pub fn raw_numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn raw_denominator(&self) -> &BigInt {
        &self.den
    }

    fn fix_sign(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for a in self.num.iter_mut() {
                *a = -core::mem::take(a);
            }
        }
    }

    fn reduce_content(&mut self) {
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for a in &self.num {
            if g.is_one() {
                return;
            }
            if !a.is_zero() {
                g = g.gcd(a);
            }
        }
        if !g.is_one() {
            for a in self.num.iter_mut() {
                *a /= &g;
            }
            self.den /= &g;
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            Err(Error::OrderMismatch(self.order, other.order))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let num = if self.den == other.den {
            self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect()
        } else {
            self.num.iter().zip(&other.num).map(|(a, b)| a * &other.den + b * &self.den).collect()
        };
        let den = if self.den == other.den { self.den.clone() } else { &self.den * &other.den };
        let mut x = Self { order: self.order, num, den };
        x.reduce_content();
        Ok(x)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut x = Self { order: self.order, num: ring::convolve(&self.num, &other.num), den: &self.den * &other.den };
        x.reduce_content();
        Ok(x)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    /// Multiply by `q^e`; a cyclic shift.
    pub fn mul_q_power(&self, e: i64) -> Self {
        Self {
            order: self.order,
            num: ring::shifted(&self.num, ring::reduce_exp(e, self.order)),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, p: &BigInt, q: &BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DivisionByZero(self.order));
        }
        let mut x = Self { order: self.order, num: self.num.iter().map(|a| a * p).collect(), den: &self.den * q };
        x.fix_sign();
        x.reduce_content();
        Ok(x)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.reduced();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).reduced();
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).reduced();
            }
        }
        acc
    }

    /// Ring automorphism `q ↦ q^k`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.order as i64;
        if k.gcd(&n) != 1 {
            return Err(Error::InvalidAutomorphism { k, order: self.order });
        }
        let mut num = vec![BigInt::zero(); self.order as usize];
        for (j, a) in self.num.iter().enumerate() {
            let t = ((j as i64) * k).rem_euclid(n) as usize;
            num[t] += a;
        }
        Ok(Self { order: self.order, num, den: self.den.clone() })
    }

    /// `q ↦ q^{-1}`, complex conjugation under every embedding.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    /// Multiplicative inverse through the field norm:
    /// `x^{-1} = Π_{k≠1} σ_k(x) / N(x)`.
    pub fn inv(&self) -> Result<Self> {
        let n = self.order;
        let x = self.reduced();
        if x.is_zero() {
            return Err(Error::DivisionByZero(n));
        }
        if n <= 2 {
            // Q(ζ_1) = Q(ζ_2) = Q: the canonical form is a constant.
            let c = x.canonical();
            return CycNum::from_ratio(n, c.den.clone(), c.num[0].clone());
        }
        let mut prod = Self::one(n);
        for k in 2..n as i64 {
            if k.gcd(&(n as i64)) == 1 {
                prod = (&prod * &x.galois(k)?).reduced();
            }
        }
        let norm = (&x * &prod).canonical();
        let (p, q) = norm.as_rational().expect("field norm is rational");
        debug_assert!(!p.is_zero());
        prod.scale(&q, &p)
    }

    /// Same element with the numerator reduced modulo `Φ_N`; keeps raw
    /// vectors from drifting during long products.
    pub fn reduced(&self) -> Self {
        let c = self.canonical();
        let mut num = c.num;
        num.resize(self.order as usize, BigInt::zero());
        Self { order: self.order, num, den: c.den }
    }

    pub fn canonical(&self) -> Canonical {
        let phi = cyclotomic_polynomial(self.order);
        let deg = phi.len() - 1;
        let mut num = self.num.clone();
        for i in (deg..num.len()).rev() {
            if num[i].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut num[i]);
            for (j, p) in phi.iter().enumerate().take(deg) {
                if *p != 0 {
                    num[i - deg + j] -= &c * *p;
                }
            }
        }
        num.truncate(deg);
        let mut den = self.den.clone();
        let mut g = den.clone();
        for a in &num {
            if !a.is_zero() {
                g = g.gcd(a);
            }
        }
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        } else if !g.is_one() {
            for a in num.iter_mut() {
                *a /= &g;
            }
            den /= &g;
        }
        Canonical { order: self.order, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero) || self.canonical().is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.order)
    }

    /// Fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn as_rational(&self) -> Option<(BigInt, BigInt)> {
        self.canonical().as_rational()
    }

    /// Numeric value at `q = exp(2πi c / N)`.
    pub fn embed(&self, spec: &RootOfUnitySpec) -> Result<(f64, f64)> {
        if spec.order != self.order {
            return Err(Error::OrderMismatch(self.order, spec.order));
        }
        let c = self.canonical();
        let n = self.order as i64;
        let (mut re, mut im) = (0.0f64, 0.0f64);
        for (j, a) in c.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let v = ratio_to_f64(a, &c.den);
            let e = ((j as i64) * spec.embedding_index).rem_euclid(n) as f64;
            let t = 2.0 * core::f64::consts::PI * e / n as f64;
            re += v * libm::cos(t);
            im += v * libm::sin(t);
        }
        Ok((re, im))
    }

    /// Canonical coefficients rendered as `"p/q"` strings.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.canonical().fractions().into_iter().map(|(p, q)| format!("{p}/{q}")).collect()
    }

    /// Inverse of [`CycNum::to_coeff_strings`]; also accepts bare integers.
    pub fn from_coeff_strings<S: AsRef<str>>(order: u32, coeffs: &[S]) -> Result<Self> {
        let mut fracs = Vec::with_capacity(coeffs.len());
        for s in coeffs {
            let s = s.as_ref().trim();
            let (p, q) = match s.split_once('/') {
                Some((p, q)) => (parse_bigint(p)?, parse_bigint(q)?),
                None => (parse_bigint(s)?, BigInt::one()),
            };
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in '{s}'")));
            }
            fracs.push((p, q));
        }
        let den = fracs.iter().fold(BigInt::one(), |acc, (_, q)| acc.lcm(q));
        let num = fracs.into_iter().map(|(p, q)| p * (&den / &q)).collect();
        Self::from_parts(order, num, den)
    }
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim().parse::<BigInt>().map_err(|e| Error::Parse(format!("bad integer '{s}': {e}")))
}

fn ratio_to_f64(p: &BigInt, q: &BigInt) -> f64 {
    let bits = p.bits().max(q.bits());
    if bits < 1000 {
        return p.to_f64().unwrap_or(f64::NAN) / q.to_f64().unwrap_or(f64::NAN);
    }
    let s = bits - 900;
    let ps: BigInt = p >> s;
    let qs: BigInt = q >> s;
    ps.to_f64().unwrap_or(f64::NAN) / qs.to_f64().unwrap_or(f64::NAN)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order != other.order {
            return false;
        }
        if self.den == other.den && self.num == other.num {
            return true;
        }
        self.canonical() == other.canonical()
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

/// Polynomial rendering of the canonical form, e.g. `1/5 - 2/5*q^3`.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, (p, q)) in self.canonical().fractions().into_iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let neg = p.is_negative();
            let abs = p.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let coef = if q.is_one() { abs.to_string() } else { format!("{abs}/{q}") };
            match j {
                0 => f.write_str(&coef)?,
                _ => {
                    if !(abs.is_one() && q.is_one()) {
                        write!(f, "{coef}*")?;
                    }
                    if j == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{j}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " [N={}]", self.order)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            /// Panics when the orders differ; use the `checked_*` form to get an error.
            fn $m(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { order: self.order, num: self.num.iter().map(|a| -a).collect(), den: self.den.clone() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wire {
        order: u32,
        coeffs: Vec<String>,
    }

    impl Serialize for CycNum {
        fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
            Wire { order: self.order, coeffs: self.to_coeff_strings() }.serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for CycNum {
        fn deserialize<D: Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
            let w = Wire::deserialize(d)?;
            if w.order == 0 {
                return Err(D::Error::custom("order must be positive"));
            }
            CycNum::from_coeff_strings(w.order, &w.coeffs).map_err(D::Error::custom)
        }
    }
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients of `Φ_n`, constant term first: `x^n - 1` divided by every
/// `Φ_d` with `d | n`, `d < n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let da = a.len() - 1;
    let mut q = vec![0i64; da - db + 1];
    for i in (0..=da - db).rev() {
        let c = rem[i + db];
        q[i] = c;
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= c * bj;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u32, e: i64) -> CycNum {
        CycNum::q_power(n, e)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15), vec![1, -1, 0, 1, -1, 1, 0, -1, 1]);
        assert_eq!(cyclotomic_polynomial(105).iter().filter(|&&c| c == -2).count(), 2);
        assert_eq!(euler_phi(15), 8);
        assert_eq!(euler_phi(31), 30);
    }

    #[test]
    fn q_power_basics() {
        assert!(q(5, 0).is_one());
        assert_eq!(q(5, 7), q(5, 2));
        assert_eq!(q(5, -1), q(5, 4));
        let s = &(&q(5, 1) + &q(5, 2)) + &(&q(5, 3) + &q(5, 4));
        assert_eq!(s, CycNum::from_integer(5, -1));
        assert_eq!(&q(5, 3) * &q(5, 4), q(5, 2));
    }

    #[test]
    fn inverses() {
        assert_eq!(q(7, 3).inv().unwrap(), q(7, 4));
        let x = &CycNum::one(5) + &q(5, 1);
        assert!((&x * &x.inv().unwrap()).is_one());
        assert_eq!(CycNum::zero(5).inv(), Err(Error::DivisionByZero(5)));
        // 1 + q + ... + q^4 = 0 in Q(ζ_5), so it is not invertible
        let mut z = CycNum::zero(5);
        for e in 0..5 {
            z = &z + &q(5, e);
        }
        assert!(z.inv().is_err());
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(q(5, 1).checked_add(&q(7, 1)), Err(Error::OrderMismatch(5, 7)));
        assert_eq!(q(5, 1).checked_mul(&q(7, 1)), Err(Error::OrderMismatch(5, 7)));
    }

    #[test]
    fn galois_maps() {
        assert_eq!(q(5, 2).galois(-1).unwrap(), q(5, 3));
        let x = &q(7, 1) + &CycNum::from_integer(7, 3);
        assert_eq!(x.galois(1).unwrap(), x);
        assert_eq!(x.galois(2).unwrap().galois(3).unwrap(), x.galois(6).unwrap());
        assert!(matches!(q(9, 1).galois(3), Err(Error::InvalidAutomorphism { .. })));
    }

    #[test]
    fn embedding() {
        let s = RootOfUnitySpec::standard(5);
        assert_eq!(CycNum::one(5).embed(&s).unwrap(), (1.0, 0.0));
        let (re, im) = q(5, 1).embed(&s).unwrap();
        assert!((re - 72f64.to_radians().cos()).abs() < 1e-15);
        assert!((im - 72f64.to_radians().sin()).abs() < 1e-15);
        let mut g = CycNum::zero(5);
        for x in 0..5i64 {
            g = &g + &q(5, x * x);
        }
        let (re, im) = g.embed(&s).unwrap();
        assert!((re - 5f64.sqrt()).abs() < 1e-12 && im.abs() < 1e-12);
        assert!(RootOfUnitySpec::new(15, 5).is_err());
    }

    #[test]
    fn canonical_strings() {
        let x = CycNum::from_ratio(5, 3, 6).unwrap().mul_q_power(4);
        // q^4 = -1 - q - q^2 - q^3
        assert_eq!(x.to_coeff_strings(), vec!["-1/2", "-1/2", "-1/2", "-1/2"]);
        let back = CycNum::from_coeff_strings(5, &x.to_coeff_strings()).unwrap();
        assert_eq!(back, x);
        assert_eq!(CycNum::zero(7).to_coeff_strings(), vec!["0/1"; 6]);
        assert!(CycNum::from_coeff_strings(5, &["1/0"]).is_err());
    }

    #[test]
    fn display_form() {
        let x = &CycNum::from_integer(7, 2) - &q(7, 3);
        assert_eq!(alloc::format!("{x}"), "2 - q^3 [N=7]");
    }
}
