//! Lens-space invariants.
//!
//! For a chain link with framings `(a_1, …, a_s)`:
//!
//! ```text
//! Σ = h_0^{(s)} / Q(0),      F = z^{-sign} Σ,      ∇ = F · F̄
//! ```
//!
//! where `sign` counts nonpositive eigenvalues of the linking matrix. A lens
//! space `L(m, n)` is presented by the chain of its Hirzebruch–Jung terms,
//! whose linking matrix is positive definite, so there `F = Σ`.
//!
//! [`Engine`] caches the per-`(algebra, N)` constants `Ω`, `Q(0)` and `z`.

mod hj;
mod homeo;
mod signature;
mod tables;
mod weyl;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

pub use hj::{hj_expand, HJExpansion, LensSpec};
pub use homeo::{homeo_suite, HomeoCheck, HomeoKind, HomeoReport};
pub use signature::{signature_count, SignatureCount};
pub use tables::weyl_shifted_index;
pub use weyl::{s_entry, s_entry_raw, weyl_q, weyl_q_alternating, weyl_q_raw};

use tables::LatticeTables;

use crate::cyclo::CycNum;
use crate::gauss::g_k;
use crate::lattice::{alcove, quad_forms, validate_order, Budget};
use crate::ring::{self, Coeff};
use crate::rootsys::{LieType, RootDatum};
use crate::{Error, Result};

/// A framed chain link; component `i` links components `i ± 1` once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainLink {
    framings: Vec<i64>,
}

impl ChainLink {
    pub fn new(framings: Vec<i64>) -> Result<Self> {
        if framings.is_empty() {
            return Err(Error::InvalidInput("a chain link needs at least one component".into()));
        }
        Ok(Self { framings })
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn len(&self) -> usize {
        self.framings.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl From<&HJExpansion> for ChainLink {
    fn from(h: &HJExpansion) -> Self {
        ChainLink { framings: h.terms.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Strategy {
    Auto,
    DirectMultisum,
    RecursionDense,
    RecursionFactored,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::DirectMultisum => "direct-multisum",
            Strategy::RecursionDense => "recursion-dense",
            Strategy::RecursionFactored => "recursion-factored",
        }
    }

    /// Pick a concrete strategy for an `s`-component chain and check it fits.
    ///
    /// `Auto` takes the literal multisum when its `N^{rs}` terms are within a
    /// tenth of the budget, the dense recursion when its `N^{2r}` kernel
    /// applications fit the budget, and the factored recursion otherwise.
    pub fn resolve(self, order: u32, rank: usize, s: usize, budget: Budget) -> Result<Strategy> {
        let n = order as u128;
        let pow = |e: usize| n.checked_pow(e as u32).unwrap_or(u128::MAX);
        let chosen = match self {
            Strategy::Auto => {
                if pow(rank * s) <= (budget.0 / 10) as u128 {
                    Strategy::DirectMultisum
                } else if pow(2 * rank) <= budget.0 as u128 {
                    Strategy::RecursionDense
                } else {
                    Strategy::RecursionFactored
                }
            }
            other => other,
        };
        match chosen {
            Strategy::DirectMultisum => {
                budget.check("direct multisum over (X_N)^s", order as u64, (rank * s) as u32)?;
            }
            _ => {
                budget.check("h-table over X_N", order as u64, rank as u32)?;
            }
        }
        Ok(chosen)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "direct" | "direct-multisum" => Ok(Strategy::DirectMultisum),
            "dense" | "recursion-dense" => Ok(Strategy::RecursionDense),
            "factored" | "recursion-factored" => Ok(Strategy::RecursionFactored),
            other => Err(Error::Parse(alloc::format!("unknown strategy '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub framings: Vec<i64>,
    pub sigma: CycNum,
    pub f: CycNum,
    pub nabla: CycNum,
    pub sign: SignatureCount,
    pub strategy: Strategy,
}

impl InvariantResult {
    pub fn sign_count(&self) -> usize {
        self.sign.nonpositive
    }
}

/// One recursion table `ĥ^{(step)}`; the field value of a cell is
/// `Ω^{step} · cells[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HTable {
    pub order: u32,
    pub rank: usize,
    pub step: usize,
    pub cells: Vec<Vec<BigInt>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZValues {
    pub closed: CycNum,
    pub brute: Option<CycNum>,
}

/// Chain evaluations behind the sign convention: with "nonpositive
/// eigenvalues" counting, `F([+1])`, `F([-1])` should be 1 and `F([0])`
/// should equal `1/(Ω Q(0))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignConventionReport {
    pub f_plus_one: CycNum,
    pub f_minus_one: CycNum,
    pub sigma_minus_one: CycNum,
    pub f_zero_chain: CycNum,
    pub s2xs1_closed: CycNum,
    /// `k` with `F([0]) = z^k · 1/(Ω Q(0))`, searched over `|k| ≤ 2`.
    pub s2xs1_z_power: Option<i32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CoeffMode {
    Auto,
    BigInt,
}

/// Constants and evaluation entry points for one `(algebra, N)` pair.
#[derive(Debug, Clone)]
pub struct Engine {
    datum: RootDatum,
    order: u32,
    budget: Budget,
    g1: CycNum,
    g_conj: CycNum,
    omega: CycNum,
    q0: CycNum,
    q0_inv: Option<CycNum>,
    z: CycNum,
    z_inv: CycNum,
    mode: CoeffMode,
}

impl Engine {
    pub fn new(lie_type: LieType, order: u64, budget: Budget) -> Result<Self> {
        Self::from_datum(RootDatum::new(lie_type), order, budget)
    }

    pub fn from_datum(datum: RootDatum, order: u64, budget: Budget) -> Result<Self> {
        let order = validate_order(&datum, order)?;
        let sign: i64 = if datum.positive_roots.len().is_multiple_of(2) { 1 } else { -1 };
        let rr = datum.pairing_unchecked(&datum.rho, &datum.rho);
        let g1 = g_k(&datum, order, 1).reduced();
        let g_conj = g_k(&datum, order, order as i64 - 1).reduced();
        let g1_inv = g1.inv().expect("G_1 is nonzero for admissible N");
        let sign_c = CycNum::from_integer(order, sign);
        let omega = (&sign_c * &g1_inv).mul_q_power(3 * rr).reduced();
        let z = (&(&sign_c * &g_conj) * &g1_inv).mul_q_power(6 * rr).reduced();
        let z_inv = z.inv()?;
        let zero = vec![0i64; datum.rank];
        let q0 = weyl_q(&datum, order, &zero);
        let q0_inv = q0.inv().ok();
        Ok(Self { datum, order, budget, g1, g_conj, omega, q0, q0_inv, z, z_inv, mode: CoeffMode::Auto })
    }

    /// Run table arithmetic on arbitrary-precision integers even when the
    /// coefficient bound would fit in `i128`.
    pub fn force_bigint(mut self, yes: bool) -> Self {
        self.mode = if yes { CoeffMode::BigInt } else { CoeffMode::Auto };
        self
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn g1(&self) -> &CycNum {
        &self.g1
    }

    pub fn g_conj(&self) -> &CycNum {
        &self.g_conj
    }

    /// `Ω = (-1)^{|Φ⁺|} q^{3(ρ,ρ)} / G_1`.
    pub fn omega(&self) -> &CycNum {
        &self.omega
    }

    /// `Q(0)`.
    pub fn q_zero(&self) -> &CycNum {
        &self.q0
    }

    /// `z = (-1)^{|Φ⁺|} q^{6(ρ,ρ)} G_{N-1} / G_1`.
    pub fn z(&self) -> &CycNum {
        &self.z
    }

    /// True when `Q(0) = 0`, i.e. `N` divides `⟨ρ, α^∨⟩` for some positive
    /// root `α`. Then `ρ` lies on an alcove wall, `Λ⁺_N` is empty and nothing
    /// normalized by `1/Q(0)` is defined.
    pub fn is_degenerate(&self) -> bool {
        self.q0_inv.is_none()
    }

    fn q0_inv(&self) -> Result<&CycNum> {
        self.q0_inv.as_ref().ok_or_else(|| {
            let wall = self
                .datum
                .positive_roots
                .iter()
                .map(|a| self.datum.coroot_pairing(&self.datum.rho, a))
                .find(|c| c % self.order as i64 == 0)
                .unwrap_or(0);
            Error::Degenerate(alloc::format!(
                "Q(0) = 0 for {} at N = {}: <rho, alpha^v> = {} for a positive root, so 1/Q(0) is undefined",
                self.datum.lie_type,
                self.order,
                wall
            ))
        })
    }

    pub fn weyl_q(&self, mu: &[i64]) -> CycNum {
        weyl_q(&self.datum, self.order, mu)
    }

    /// `d_λ = Ω Q(λ)`.
    pub fn d_lambda(&self, lambda: &[i64]) -> CycNum {
        &self.omega * &self.weyl_q(lambda)
    }

    /// `z` from its defining sum over the alcove,
    /// `Σ_{λ∈Λ⁺_N} d_λ q^{-(λ+2ρ,λ)} Q(λ)/Q(0)`.
    pub fn z_brute(&self) -> Result<CycNum> {
        let al = alcove(&self.datum, self.order, self.budget)?;
        let mut acc = CycNum::zero(self.order);
        for lam in &al.members {
            let q = self.weyl_q(lam);
            let t = quad_forms(&self.datum, self.order, lam).1 as i64;
            acc = &acc + &(&q * &q).mul_q_power(-t);
        }
        Ok((&(&acc * &self.omega) * self.q0_inv()?).reduced())
    }

    pub fn z_values(&self) -> ZValues {
        ZValues { closed: self.z.clone(), brute: self.z_brute().ok() }
    }

    /// `F(S³) = 1`.
    pub fn s3(&self) -> CycNum {
        CycNum::one(self.order)
    }

    /// `F(S² × S¹) = 1/(Ω Q(0))`.
    pub fn s2xs1_closed(&self) -> Result<CycNum> {
        Ok((&self.omega.inv()? * self.q0_inv()?).reduced())
    }

    fn use_i128(&self, steps: usize) -> bool {
        if self.mode == CoeffMode::BigInt {
            return false;
        }
        let per_step = {
            let v = (self.order as u128).checked_pow(self.datum.rank as u32);
            v.map(|v| 128 - v.leading_zeros() as u64).unwrap_or(u64::MAX / 4)
        };
        let bits = self.datum.positive_roots.len() as u64 + (steps as u64).saturating_mul(per_step) + 2;
        bits <= 126
    }

    fn lattice_tables<T: Coeff>(&self) -> Result<LatticeTables<T>> {
        let len = self.budget.check("h-table over X_N", self.order as u64, self.datum.rank as u32)? as usize;
        Ok(LatticeTables::new(&self.datum, self.order, len))
    }

    /// The raw sum behind `h_0^{(s)}`: `Σ = Ω^s · raw / Q(0)`.
    pub fn chain_raw(&self, framings: &[i64], strategy: Strategy) -> Result<(Vec<BigInt>, Strategy)> {
        if framings.is_empty() {
            return Err(Error::InvalidInput("empty framing list".into()));
        }
        let strategy = strategy.resolve(self.order, self.datum.rank, framings.len(), self.budget)?;
        let raw = if self.use_i128(framings.len()) {
            ring::to_bigints(&self.chain_raw_typed::<i128>(framings, strategy)?)
        } else {
            self.chain_raw_typed::<BigInt>(framings, strategy)?
        };
        Ok((raw, strategy))
    }

    fn chain_raw_typed<T: Coeff>(&self, framings: &[i64], strategy: Strategy) -> Result<Vec<T>> {
        let lt = self.lattice_tables::<T>()?;
        let s = framings.len();
        Ok(match strategy {
            Strategy::DirectMultisum => lt.direct_multisum(framings),
            _ => {
                let mut cur = lt.q.clone();
                for &a in &framings[..s - 1] {
                    cur = match strategy {
                        Strategy::RecursionDense => lt.step_dense(&cur, a),
                        _ => lt.step_factored(&cur, a),
                    };
                }
                lt.final_cell(&cur, framings[s - 1])
            }
        })
    }

    /// All tables `ĥ^{(1)}, …, ĥ^{(s)}` over `X_N`.
    ///
    /// `DirectMultisum` evaluates every cell of every table as a literal sum
    /// over `(X_N)^k`, which costs `N^{r(k+1)}` per table; it exists as an
    /// oracle for the recursions.
    pub fn h_tables(&self, framings: &[i64], strategy: Strategy) -> Result<Vec<HTable>> {
        if framings.is_empty() {
            return Err(Error::InvalidInput("empty framing list".into()));
        }
        let strategy = match strategy {
            Strategy::Auto => {
                self.budget.check("h-table over X_N", self.order as u64, self.datum.rank as u32)?;
                if (self.order as u128).pow(2 * self.datum.rank as u32) <= self.budget.0 as u128 {
                    Strategy::RecursionDense
                } else {
                    Strategy::RecursionFactored
                }
            }
            other => other,
        };
        if strategy == Strategy::DirectMultisum {
            self.budget.check(
                "direct h-tables over (X_N)^(s+1)",
                self.order as u64,
                (self.datum.rank * (framings.len() + 1)) as u32,
            )?;
        }
        if self.use_i128(framings.len()) {
            self.h_tables_typed::<i128>(framings, strategy)
        } else {
            self.h_tables_typed::<BigInt>(framings, strategy)
        }
    }

    fn h_tables_typed<T: Coeff>(&self, framings: &[i64], strategy: Strategy) -> Result<Vec<HTable>> {
        let lt = self.lattice_tables::<T>()?;
        let mut cur = lt.q.clone();
        let mut out = Vec::with_capacity(framings.len());
        for (k, &a) in framings.iter().enumerate() {
            cur = match strategy {
                Strategy::DirectMultisum => {
                    let prefix = &framings[..=k];
                    (0..lt.len).map(|lam| lt.direct_multisum_at(prefix, lam)).collect()
                }
                Strategy::RecursionDense => lt.step_dense(&cur, a),
                _ => lt.step_factored(&cur, a),
            };
            out.push(HTable {
                order: self.order,
                rank: self.datum.rank,
                step: k + 1,
                cells: cur.iter().map(|c| ring::to_bigints(c)).collect(),
            });
        }
        Ok(out)
    }

    /// Field value of one table cell, `Ω^{step} ĥ`.
    pub fn h_value(&self, table: &HTable, index: usize) -> CycNum {
        let raw = CycNum::from_group_ring(self.order, &table.cells[index]);
        &self.omega.pow(table.step as u32) * &raw
    }

    /// `h_0^{(s)} = Ω^s · raw`, the chain sum before division by `Q(0)`.
    /// Defined even when `Q(0) = 0`.
    pub fn chain_h0(&self, chain: &ChainLink, strategy: Strategy) -> Result<(CycNum, Strategy)> {
        let (raw, used) = self.chain_raw(chain.framings(), strategy)?;
        let raw = CycNum::from_group_ring(self.order, &raw);
        Ok(((&self.omega.pow(chain.len() as u32) * &raw).reduced(), used))
    }

    /// `Σ` of a chain with arbitrary framings.
    pub fn chain_sigma(&self, chain: &ChainLink, strategy: Strategy) -> Result<CycNum> {
        let q0_inv = self.q0_inv()?;
        let (h0, _) = self.chain_h0(chain, strategy)?;
        Ok((&h0 * q0_inv).reduced())
    }

    /// `Σ`, `F = z^{-sign} Σ` and `∇` of a chain.
    pub fn chain_invariant(&self, chain: &ChainLink, strategy: Strategy) -> Result<InvariantResult> {
        let q0_inv = self.q0_inv()?;
        let (h0, used) = self.chain_h0(chain, strategy)?;
        let sigma = (&h0 * q0_inv).reduced();
        let sign = signature_count(chain.framings());
        let f = (&sigma * &self.z_inv.pow(sign.nonpositive as u32)).reduced();
        let nabla = (&f * &f.conj()).reduced();
        Ok(InvariantResult { framings: chain.framings().to_vec(), sigma, f, nabla, sign, strategy: used })
    }

    /// `F(L(m, n))` and `∇(L(m, n))` through the Hirzebruch–Jung chain.
    pub fn lens_invariant(&self, spec: LensSpec, strategy: Strategy) -> Result<InvariantResult> {
        let hj = hj_expand(spec);
        let res = self.chain_invariant(&ChainLink::from(&hj), strategy)?;
        debug_assert_eq!(res.sign.nonpositive, 0, "HJ linking matrices are positive definite");
        Ok(res)
    }

    pub fn sign_convention(&self) -> Result<SignConventionReport> {
        let eval = |a: i64| self.chain_invariant(&ChainLink { framings: vec![a] }, Strategy::Auto);
        let plus = eval(1)?;
        let minus = eval(-1)?;
        let zero = eval(0)?;
        let closed = self.s2xs1_closed()?;
        let mut power = None;
        for k in [0i32, -1, 1, -2, 2] {
            let zk = if k >= 0 { self.z.pow(k as u32) } else { self.z_inv.pow((-k) as u32) };
            if &zk * &closed == zero.f {
                power = Some(k);
                break;
            }
        }
        Ok(SignConventionReport {
            f_plus_one: plus.f,
            f_minus_one: minus.f,
            sigma_minus_one: minus.sigma,
            f_zero_chain: zero.f,
            s2xs1_closed: closed,
            s2xs1_z_power: power,
        })
    }
}

/// `Ω` for one `(algebra, N)`.
pub fn omega(datum: &RootDatum, order: u64) -> Result<CycNum> {
    Ok(Engine::from_datum(datum.clone(), order, Budget::default())?.omega.clone())
}

/// `z` by closed form, and by the alcove sum when it fits the budget.
pub fn z_values(datum: &RootDatum, order: u64, budget: Budget) -> Result<ZValues> {
    Ok(Engine::from_datum(datum.clone(), order, budget)?.z_values())
}

pub fn h_tables(
    datum: &RootDatum,
    order: u64,
    framings: &[i64],
    strategy: Strategy,
    budget: Budget,
) -> Result<Vec<HTable>> {
    Engine::from_datum(datum.clone(), order, budget)?.h_tables(framings, strategy)
}

pub fn lens_invariant(
    datum: &RootDatum,
    order: u64,
    spec: LensSpec,
    strategy: Strategy,
    budget: Budget,
) -> Result<InvariantResult> {
    Engine::from_datum(datum.clone(), order, budget)?.lens_invariant(spec, strategy)
}

pub fn chain_sigma(datum: &RootDatum, order: u64, chain: &ChainLink, budget: Budget) -> Result<CycNum> {
    Engine::from_datum(datum.clone(), order, budget)?.chain_sigma(chain, Strategy::Auto)
}

/// Short human-readable label such as `G2 N=5`.
pub fn label(engine: &Engine) -> String {
    alloc::format!("{} N={}", engine.datum.lie_type, engine.order)
}
