//! Root data for G2, F4 and E8.
//!
//! Simple roots follow Bourbaki numbering: for G2 `α1` is short, for F4
//! `α1, α2` are long and `α3, α4` short, and for E8 node 2 hangs off node 4.
//! All lattice vectors are coordinate vectors in the simple-root basis; for
//! these three algebras the weight lattice is the root lattice, so every
//! weight has integer coordinates.
//!
//! The inner product is scaled so that `(θ, θ)` is 6, 4 and 2 respectively.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum LieType {
    G2,
    F4,
    E8,
}

impl LieType {
    pub const ALL: [LieType; 3] = [LieType::G2, LieType::F4, LieType::E8];

    pub fn name(self) -> &'static str {
        match self {
            LieType::G2 => "G2",
            LieType::F4 => "F4",
            LieType::E8 => "E8",
        }
    }

    pub fn rank(self) -> usize {
        match self {
            LieType::G2 => 2,
            LieType::F4 => 4,
            LieType::E8 => 8,
        }
    }

    /// `(θ, θ)` under the normalisation used throughout the crate.
    pub fn highest_root_norm(self) -> i64 {
        match self {
            LieType::G2 => 6,
            LieType::F4 => 4,
            LieType::E8 => 2,
        }
    }

    pub fn positive_root_count(self) -> usize {
        match self {
            LieType::G2 => 6,
            LieType::F4 => 24,
            LieType::E8 => 120,
        }
    }

    pub fn weyl_order(self) -> u64 {
        match self {
            LieType::G2 => 12,
            LieType::F4 => 1152,
            LieType::E8 => 696_729_600,
        }
    }

    /// Cartan matrix with `a_ij = 2(α_i, α_j) / (α_i, α_i)`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        match self {
            LieType::G2 => vec![vec![2, -3], vec![-1, 2]],
            LieType::F4 => vec![vec![2, -1, 0, 0], vec![-1, 2, -1, 0], vec![0, -2, 2, -1], vec![0, 0, -1, 2]],
            LieType::E8 => {
                let edges = [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7), (7, 8)];
                let mut a = vec![vec![0i64; 8]; 8];
                for (i, row) in a.iter_mut().enumerate() {
                    row[i] = 2;
                }
                for (i, j) in edges {
                    a[i - 1][j - 1] = -1;
                    a[j - 1][i - 1] = -1;
                }
                a
            }
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g2" => Ok(LieType::G2),
            "f4" => Ok(LieType::F4),
            "e8" => Ok(LieType::E8),
            other => Err(Error::Parse(format!("unknown Lie type '{other}' (expected g2, f4 or e8)"))),
        }
    }
}

/// A Weyl group element acting on simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    /// Row-major `r × r` matrix.
    pub matrix: Vec<i64>,
    /// Shortest word length in the simple reflections.
    pub length: usize,
    /// `det σ = (-1)^length`.
    pub det: i64,
}

impl WeylElement {
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        mat_vec(&self.matrix, x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub lie_type: LieType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// `d_i = (α_i, α_i)`.
    pub norms: Vec<i64>,
    pub gram: Vec<Vec<i64>>,
    /// Sorted by height, then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub rho: Vec<i64>,
    pub dual_coxeter: i64,
    /// Fundamental weights `ω_i` in simple-root coordinates.
    pub fundamental_weights: Vec<Vec<i64>>,
    pub gram_det: i64,
}

impl RootDatum {
    pub fn new(lie_type: LieType) -> Self {
        build_root_datum(lie_type)
    }

    /// `xᵀ G y`.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> Result<i64> {
        for v in [x, y] {
            if v.len() != self.rank {
                return Err(Error::Dimension { expected: self.rank, got: v.len() });
            }
        }
        Ok(self.pairing_unchecked(x, y))
    }

    #[inline]
    pub fn pairing_unchecked(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0i64;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            let row = &self.gram[i];
            let mut s = 0i64;
            for (g, yj) in row.iter().zip(y) {
                s += g * yj;
            }
            acc += xi * s;
        }
        acc
    }

    /// `G x`, i.e. the vector of pairings `(α_i, x)`.
    pub fn gram_apply(&self, x: &[i64]) -> Vec<i64> {
        self.gram.iter().map(|row| row.iter().zip(x).map(|(g, v)| g * v).sum()).collect()
    }

    /// `2(x, α)/(α, α)` for a root `α`; exact because `X` is the root lattice.
    pub fn coroot_pairing(&self, x: &[i64], alpha: &[i64]) -> i64 {
        let num = 2 * self.pairing_unchecked(x, alpha);
        let den = self.pairing_unchecked(alpha, alpha);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Simple reflection `s_i(x) = x - ⟨x, α_i^∨⟩ α_i`.
    pub fn reflect(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let c: i64 = self.cartan[i].iter().zip(x).map(|(a, v)| a * v).sum();
        let mut y = x.to_vec();
        y[i] -= c;
        y
    }

    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<i64> {
        let r = self.rank;
        let mut m = identity(r);
        for j in 0..r {
            m[i * r + j] -= self.cartan[i][j];
        }
        m
    }

    /// All `|W|` elements, generated by closure under the simple reflections
    /// in breadth-first order (so `length` is the true word length).
    pub fn weyl_group(&self) -> Result<Vec<WeylElement>> {
        if self.lie_type == LieType::E8 {
            return Err(Error::WeylGroupTooLarge("E8 (order 696729600)"));
        }
        let gens: Vec<Vec<i64>> = (0..self.rank).map(|i| self.simple_reflection_matrix(i)).collect();
        let mut seen: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        let id = identity(self.rank);
        seen.insert(id.clone(), 0);
        queue.push_back((id, 0usize));
        while let Some((m, len)) = queue.pop_front() {
            for g in &gens {
                let next = mat_mul(g, &m, self.rank);
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), len + 1);
                    queue.push_back((next, len + 1));
                }
            }
            let det = if len % 2 == 0 { 1 } else { -1 };
            out.push(WeylElement { matrix: m, length: len, det });
        }
        Ok(out)
    }

    /// The element of maximal length (`τ`), picked out of an enumerated group.
    pub fn longest_element<'a>(&self, weyl: &'a [WeylElement]) -> &'a WeylElement {
        weyl.iter().max_by_key(|w| w.length).expect("Weyl group is never empty")
    }

    /// Plain-text dump of the datum.
    pub fn debug_dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "type {}  rank {}", self.lie_type, self.rank);
        let _ = writeln!(s, "cartan {:?}", self.cartan);
        let _ = writeln!(s, "gram {:?}  det {}", self.gram, self.gram_det);
        let _ = writeln!(s, "norms {:?}", self.norms);
        let _ = writeln!(s, "rho {:?}  (rho,rho) {}", self.rho, self.pairing_unchecked(&self.rho, &self.rho));
        let _ = writeln!(
            s,
            "theta {:?}  (theta,theta) {}",
            self.highest_root,
            self.pairing_unchecked(&self.highest_root, &self.highest_root)
        );
        let _ = writeln!(s, "dual coxeter {}", self.dual_coxeter);
        let _ = writeln!(s, "positive roots ({}):", self.positive_roots.len());
        for a in &self.positive_roots {
            let _ = writeln!(s, "  {:?}  norm {}", a, self.pairing_unchecked(a, a));
        }
        s
    }
}

pub fn build_root_datum(lie_type: LieType) -> RootDatum {
    let cartan = lie_type.cartan_matrix();
    let r = cartan.len();

    // Symmetrizer: d_i a_ij = d_j a_ji, propagated along the Dynkin diagram.
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; r];
    d[0] = Some(Ratio::one());
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..r {
            for j in 0..r {
                if i != j && cartan[i][j] != 0 {
                    if let (Some(di), None) = (d[i], d[j]) {
                        d[j] = Some(di * Ratio::from_integer(cartan[i][j]) / Ratio::from_integer(cartan[j][i]));
                        changed = true;
                    }
                }
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("connected Dynkin diagram")).collect();

    let roots = positive_roots(&cartan);
    let height = |v: &Vec<i64>| v.iter().sum::<i64>();
    let theta = roots.iter().max_by_key(|v| height(v)).expect("roots").clone();

    // (θ, θ) under the provisional symmetrizer, then rescale.
    let gram_q = |d: &[Ratio<i64>]| -> Vec<Vec<Ratio<i64>>> {
        (0..r)
            .map(|i| (0..r).map(|j| d[i] * Ratio::from_integer(cartan[i][j]) / Ratio::from_integer(2)).collect())
            .collect()
    };
    let g0 = gram_q(&d);
    let mut tt = Ratio::zero();
    for i in 0..r {
        for j in 0..r {
            tt += g0[i][j] * Ratio::from_integer(theta[i] * theta[j]);
        }
    }
    let scale = Ratio::from_integer(lie_type.highest_root_norm()) / tt;
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x * scale).collect();
    let gram: Vec<Vec<i64>> = gram_q(&d)
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    assert!(x.is_integer(), "Gram matrix must be integral");
                    x.to_integer()
                })
                .collect()
        })
        .collect();
    let norms: Vec<i64> = (0..r).map(|i| gram[i][i]).collect();

    let mut rho = vec![0i64; r];
    for a in &roots {
        for (x, y) in rho.iter_mut().zip(a) {
            *x += y;
        }
    }
    assert!(rho.iter().all(|x| x % 2 == 0));
    for x in rho.iter_mut() {
        *x /= 2;
    }

    let pair = |x: &[i64], y: &[i64]| -> i64 {
        let mut acc = 0;
        for i in 0..r {
            for j in 0..r {
                acc += x[i] * gram[i][j] * y[j];
            }
        }
        acc
    };
    let tt = pair(&theta, &theta);
    let dual_coxeter = 1 + 2 * pair(&rho, &theta) / tt;

    let fundamental_weights = fundamental_weights(&gram, &norms);
    let gram_det = determinant(&gram);

    RootDatum {
        lie_type,
        rank: r,
        cartan,
        norms,
        gram,
        positive_roots: roots,
        highest_root: theta,
        rho,
        dual_coxeter,
        fundamental_weights,
        gram_det,
    }
}

/// Positive roots by reflection closure of the simple roots.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let r = cartan.len();
    let reflect = |i: usize, x: &[i64]| -> Vec<i64> {
        let c: i64 = cartan[i].iter().zip(x).map(|(a, v)| a * v).sum();
        let mut y = x.to_vec();
        y[i] -= c;
        y
    };
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut e = vec![0i64; r];
        e[i] = 1;
        all.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(b) = queue.pop_front() {
        for i in 0..r {
            let c = reflect(i, &b);
            if all.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = all.into_iter().filter(|v| v.iter().all(|&x| x >= 0)).collect();
    pos.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then_with(|| a.cmp(b)));
    pos
}

/// Solve `G ω_i = (d_i / 2) e_i`, i.e. `(ω_i, α_j^∨) = δ_ij`.
fn fundamental_weights(gram: &[Vec<i64>], norms: &[i64]) -> Vec<Vec<i64>> {
    let r = gram.len();
    let inv = invert_rational(gram);
    (0..r)
        .map(|i| {
            (0..r)
                .map(|k| {
                    let x = inv[k][i] * Ratio::new(norms[i], 2);
                    assert!(x.is_integer(), "weight lattice must equal the root lattice");
                    x.to_integer()
                })
                .collect()
        })
        .collect()
}

fn invert_rational(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let r = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            v.extend((0..r).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            v
        })
        .collect();
    for col in 0..r {
        let p = (col..r).find(|&i| !a[i][col].is_zero()).expect("invertible Gram matrix");
        a.swap(col, p);
        let piv = a[col][col];
        for x in a[col].iter_mut() {
            *x /= piv;
        }
        for i in 0..r {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[i].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[r..].to_vec()).collect()
}

/// Integer determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

fn identity(r: usize) -> Vec<i64> {
    let mut m = vec![0i64; r * r];
    for i in 0..r {
        m[i * r + i] = 1;
    }
    m
}

fn mat_mul(a: &[i64], b: &[i64], r: usize) -> Vec<i64> {
    let mut c = vec![0i64; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x == 0 {
                continue;
            }
            for j in 0..r {
                c[i * r + j] += x * b[k * r + j];
            }
        }
    }
    c
}

pub(crate) fn mat_vec(m: &[i64], x: &[i64]) -> Vec<i64> {
    let r = x.len();
    (0..r).map(|i| (0..r).map(|j| m[i * r + j] * x[j]).sum()).collect()
}
